#pragma once

#include <stdexcept>
#include <string>

namespace semiord {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct inversion_of_zero : error {
  inversion_of_zero() : error("inversion of zero") {}
};

struct non_invertible : error {
  explicit non_invertible(const std::string& what) : error(what) {}
};

struct not_strictly_above_one : error {
  not_strictly_above_one() : error("element is not strictly above 1") {}
};

struct height_of_zero : error {
  height_of_zero() : error("zero has no height") {}
};

struct variable_count_mismatch : error {
  variable_count_mismatch() : error("polynomial variable counts differ") {}
};

struct dimension_mismatch : error {
  dimension_mismatch() : error("point dimension does not match variable count") {}
};

struct zero_polynomial : error {
  zero_polynomial() : error("operation undefined for the zero polynomial") {}
};

struct length_mismatch : error {
  length_mismatch() : error("jet lengths differ") {}
};

struct norm_mismatch : error {
  norm_mismatch() : error("operands evaluate differently at the base point") {}
};

struct verification_failed : error {
  explicit verification_failed(const std::string& what) : error(what) {}
};

struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace semiord
