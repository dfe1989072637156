#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "semiord/errors.hpp"

namespace semiord {

/// Exact arbitrary-precision fraction. Always reduced, denominator > 0.
/// Thin wrapper around GMP's mpq_class that canonicalizes on construction
/// and adds the parsing/formatting used by the file formats.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}          // NOLINT: implicit scalar promotion
  Rational(int n) : q_(n) {}           // NOLINT
  Rational(long n, long d) : q_(n, d) { normalize(); }
  explicit Rational(mpq_class q) : q_(std::move(q)) { normalize(); }
  Rational(mpz_class n, mpz_class d) : q_(std::move(n), std::move(d)) { normalize(); }

  /// Accepts "n", "n/d" and "-n/d"; decimal points are rejected.
  static Rational parse(const std::string& text) {
    if (text.empty() || text.find('.') != std::string::npos)
      throw parse_error("bad rational literal: '" + text + "'");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw parse_error("bad rational literal: '" + text + "'");
    if (q.get_den() == 0) throw parse_error("zero denominator: '" + text + "'");
    return Rational(std::move(q));
  }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw inversion_of_zero();
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational inverse() const {
    if (is_zero()) throw inversion_of_zero();
    return Rational(mpq_class(1) / q_);
  }

  /// x^e for integer e; e < 0 requires x != 0.
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), n);
    return Rational(std::move(num), std::move(den));
  }

  double to_double() const { return q_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_;
  }

 private:
  void normalize() {
    if (q_.get_den() == 0) throw parse_error("zero denominator");
    q_.canonicalize();
  }

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace semiord
