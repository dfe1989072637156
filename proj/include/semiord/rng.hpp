#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "semiord/rational.hpp"

namespace semiord {

/// Deterministic sampler for property tests and heuristic sweeps.
/// The default seed is fixed; SEMIRING_PSS_SEED overrides it.
class SampleRng {
 public:
  static constexpr std::uint64_t kDefaultSeed = 0x5eed5eed5eedULL;

  SampleRng() : gen_(seed_from_env()) {}
  explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

  static std::uint64_t seed_from_env() {
    if (const char* env = std::getenv("SEMIRING_PSS_SEED"))
      return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
    return kDefaultSeed;
  }

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  /// Numerator and denominator drawn from [1, 100].
  Rational positive_rational() { return Rational(integer(1, 100), integer(1, 100)); }

  /// Positive with the given percentage, zero otherwise.
  Rational nonneg_rational(int positive_percent = 90) {
    if (integer(1, 100) <= positive_percent) return positive_rational();
    return Rational(0);
  }

  /// Signed rational with numerator in [-100, 100] \ {0}, denominator in [1, 100].
  Rational nonzero_signed_rational() {
    long n = integer(1, 100);
    if (integer(0, 1) == 0) n = -n;
    return Rational(n, integer(1, 100));
  }

  Rational signed_rational(int zero_percent = 10) {
    if (integer(1, 100) <= zero_percent) return Rational(0);
    return nonzero_signed_rational();
  }

  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace semiord
