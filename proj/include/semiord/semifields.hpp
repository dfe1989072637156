#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "semiord/compare.hpp"
#include "semiord/errors.hpp"
#include "semiord/rational.hpp"

namespace semiord {

/// A concrete (pre)ordered semiring instance: carrier values plus arithmetic
/// and the instance preorder. Comparisons are four-valued (compare.hpp).
template <typename F>
concept OrderedSemiring = requires(const F f, const typename F::value_type v) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.add(v, v) } -> std::same_as<typename F::value_type>;
  { f.mul(v, v) } -> std::same_as<typename F::value_type>;
  { f.inv(v) } -> std::same_as<typename F::value_type>;
  { f.compare(v, v) } -> std::same_as<Comparison>;
  { f.is_zero(v) } -> std::same_as<bool>;
  { F::totally_preordered } -> std::convertible_to<bool>;
  { F::order_cancellative } -> std::convertible_to<bool>;
};

template <OrderedSemiring F>
typename F::value_type pow(const F& f, typename F::value_type x, unsigned long n) {
  auto acc = f.one();
  while (n > 0) {
    if (n & 1) acc = f.mul(acc, x);
    x = f.mul(x, x);
    n >>= 1;
  }
  return acc;
}

/// n as the semiring element 1 + ... + 1.
template <OrderedSemiring F>
typename F::value_type from_natural(const F& f, unsigned long n) {
  auto acc = f.zero();
  for (unsigned long i = 0; i < n; ++i) acc = f.add(acc, f.one());
  return acc;
}

/// n·x by repeated addition.
template <OrderedSemiring F>
typename F::value_type nat_mul(const F& f, unsigned long n, const typename F::value_type& x) {
  auto acc = f.zero();
  for (unsigned long i = 0; i < n; ++i) acc = f.add(acc, x);
  return acc;
}

// ---------------------------------------------------------------------------
// Scalar instances
// ---------------------------------------------------------------------------

/// The rational semifield: nonnegative rationals with the usual structure.
/// Stands in for the real semifield; every statement exercised here is
/// algebraic and survives restriction to a dense subsemifield.
struct RatPlus {
  using value_type = Rational;
  static constexpr bool totally_preordered = true;
  static constexpr bool order_cancellative = true;

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type make(Rational r) const {
    if (r.sign() < 0) throw error("RatPlus value must be nonnegative");
    return r;
  }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a.is_zero()) throw inversion_of_zero();
    return a.inverse();
  }
  Comparison compare(const value_type& a, const value_type& b) const {
    return comparison_from(a <= b, a >= b);
  }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
};

/// The naturals. Not a semifield (only 1 is invertible); still a totally
/// ordered semiring instance for the law and order tests.
struct Naturals {
  using value_type = Rational;
  static constexpr bool totally_preordered = true;
  static constexpr bool order_cancellative = true;

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type make(Rational r) const {
    if (r.sign() < 0 || !r.is_integer()) throw error("Naturals value must be a nonnegative integer");
    return r;
  }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a.is_zero()) throw inversion_of_zero();
    if (!a.is_one()) throw non_invertible("only 1 is invertible in the naturals");
    return a;
  }
  Comparison compare(const value_type& a, const value_type& b) const {
    return comparison_from(a <= b, a >= b);
  }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
};

/// The Boolean semifield {0, 1} with 1 + 1 = 1.
struct Boolean {
  using value_type = bool;
  static constexpr bool totally_preordered = true;
  static constexpr bool order_cancellative = false;

  value_type zero() const { return false; }
  value_type one() const { return true; }
  value_type add(value_type a, value_type b) const { return a || b; }
  value_type mul(value_type a, value_type b) const { return a && b; }
  value_type inv(value_type a) const {
    if (!a) throw inversion_of_zero();
    return true;
  }
  Comparison compare(value_type a, value_type b) const {
    return comparison_from(a <= b, a >= b);
  }
  bool is_zero(value_type a) const { return !a; }
};

/// Value of the tropical reals in the additive picture: a rational, or the
/// semiring zero -inf.
struct TropicalValue {
  bool neg_inf = true;
  Rational t;

  static TropicalValue zero() { return {}; }
  static TropicalValue of(Rational r) { return {false, std::move(r)}; }

  friend bool operator==(const TropicalValue& a, const TropicalValue& b) {
    if (a.neg_inf || b.neg_inf) return a.neg_inf == b.neg_inf;
    return a.t == b.t;
  }
};

/// Tropical rationals (Q ∪ {-inf}, max, +): the additive picture of the
/// tropical reals restricted to rational exponents, keeping everything exact.
struct TropicalRat {
  using value_type = TropicalValue;
  static constexpr bool totally_preordered = true;
  static constexpr bool order_cancellative = false;

  value_type zero() const { return TropicalValue::zero(); }
  value_type one() const { return TropicalValue::of(Rational(0)); }
  value_type make(Rational r) const { return TropicalValue::of(std::move(r)); }
  value_type add(const value_type& a, const value_type& b) const {
    if (a.neg_inf) return b;
    if (b.neg_inf) return a;
    return TropicalValue::of(max(a.t, b.t));
  }
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.neg_inf || b.neg_inf) return zero();
    return TropicalValue::of(a.t + b.t);
  }
  value_type inv(const value_type& a) const {
    if (a.neg_inf) throw inversion_of_zero();
    return TropicalValue::of(-a.t);
  }
  Comparison compare(const value_type& a, const value_type& b) const {
    if (a.neg_inf || b.neg_inf) return comparison_from(a.neg_inf, b.neg_inf);
    return comparison_from(a.t <= b.t, a.t >= b.t);
  }
  bool is_zero(const value_type& a) const { return a.neg_inf; }
};

/// The subsemifield (Z ∪ {-inf}, max, +) of the tropical reals.
struct TropicalInt {
  using value_type = TropicalValue;
  static constexpr bool totally_preordered = true;
  static constexpr bool order_cancellative = false;

  value_type zero() const { return TropicalValue::zero(); }
  value_type one() const { return TropicalValue::of(Rational(0)); }
  value_type make(Rational r) const {
    if (!r.is_integer()) throw error("TropicalInt value must be an integer");
    return TropicalValue::of(std::move(r));
  }
  value_type add(const value_type& a, const value_type& b) const { return inner_.add(a, b); }
  value_type mul(const value_type& a, const value_type& b) const { return inner_.mul(a, b); }
  value_type inv(const value_type& a) const { return inner_.inv(a); }
  Comparison compare(const value_type& a, const value_type& b) const { return inner_.compare(a, b); }
  bool is_zero(const value_type& a) const { return a.neg_inf; }

 private:
  TropicalRat inner_;
};

// ---------------------------------------------------------------------------
// Combinators
// ---------------------------------------------------------------------------

/// Same semiring, reversed preorder.
template <OrderedSemiring F>
struct Opposite {
  using value_type = typename F::value_type;
  static constexpr bool totally_preordered = F::totally_preordered;
  static constexpr bool order_cancellative = F::order_cancellative;

  Opposite() = default;
  explicit Opposite(F inner) : inner_(std::move(inner)) {}
  const F& inner() const { return inner_; }

  value_type zero() const { return inner_.zero(); }
  value_type one() const { return inner_.one(); }
  value_type add(const value_type& a, const value_type& b) const { return inner_.add(a, b); }
  value_type mul(const value_type& a, const value_type& b) const { return inner_.mul(a, b); }
  value_type inv(const value_type& a) const { return inner_.inv(a); }
  Comparison compare(const value_type& a, const value_type& b) const {
    return reversed(inner_.compare(a, b));
  }
  bool is_zero(const value_type& a) const { return inner_.is_zero(a); }

 private:
  F inner_;
};

/// Product of strict semifields: pairs with both components nonzero, plus
/// (0, 0). Componentwise operations and order.
template <OrderedSemiring F1, OrderedSemiring F2>
struct Product {
  using value_type = std::pair<typename F1::value_type, typename F2::value_type>;
  static constexpr bool totally_preordered = false;
  static constexpr bool order_cancellative = false;

  Product() = default;
  Product(F1 left, F2 right) : left_(std::move(left)), right_(std::move(right)) {}
  const F1& left() const { return left_; }
  const F2& right() const { return right_; }

  value_type zero() const { return {left_.zero(), right_.zero()}; }
  value_type one() const { return {left_.one(), right_.one()}; }
  value_type make(typename F1::value_type a, typename F2::value_type b) const {
    if (left_.is_zero(a) != right_.is_zero(b))
      throw error("product value must have both components zero or both nonzero");
    return {std::move(a), std::move(b)};
  }
  value_type add(const value_type& a, const value_type& b) const {
    return {left_.add(a.first, b.first), right_.add(a.second, b.second)};
  }
  value_type mul(const value_type& a, const value_type& b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    return {left_.mul(a.first, b.first), right_.mul(a.second, b.second)};
  }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw inversion_of_zero();
    return {left_.inv(a.first), right_.inv(a.second)};
  }
  Comparison compare(const value_type& a, const value_type& b) const {
    return meet(left_.compare(a.first, b.first), right_.compare(a.second, b.second));
  }
  bool is_zero(const value_type& a) const { return left_.is_zero(a.first); }

 protected:
  F1 left_;
  F2 right_;
};

/// Lexicographic product: same carrier as the product, ordered by
/// x1 < y1, or x1 ≈ y1 and x2 <= y2. The left factor must be totally
/// preordered and order cancellative for this to be a semiring preorder.
template <OrderedSemiring F1, OrderedSemiring F2>
struct Lexicographic : Product<F1, F2> {
  static_assert(F1::totally_preordered && F1::order_cancellative,
                "lexicographic left factor must be totally preordered and order cancellative");
  using Base = Product<F1, F2>;
  using value_type = typename Base::value_type;
  static constexpr bool totally_preordered = F2::totally_preordered;
  static constexpr bool order_cancellative = false;

  using Base::Base;

  Comparison compare(const value_type& a, const value_type& b) const {
    const Comparison c1 = this->left_.compare(a.first, b.first);
    if (c1 != Comparison::Equivalent) return c1;
    return this->right_.compare(a.second, b.second);
  }
};

// ---------------------------------------------------------------------------
// The leading-term semifield
// ---------------------------------------------------------------------------

/// c·X^e with c > 0, or zero: the quotient of Q_+[X, X^-1] identifying
/// elements whose largest-degree terms coincide. Addition keeps the term of
/// larger exponent and adds coefficients on ties.
struct LeadingTermElement {
  bool zero = true;
  Rational coeff;
  long exponent = 0;

  static LeadingTermElement of(Rational c, long e) {
    if (c.sign() <= 0) throw error("leading-term coefficient must be positive");
    return {false, std::move(c), e};
  }

  friend bool operator==(const LeadingTermElement& a, const LeadingTermElement& b) {
    if (a.zero || b.zero) return a.zero == b.zero;
    return a.exponent == b.exponent && a.coeff == b.coeff;
  }
};

struct LeadingTerm {
  using value_type = LeadingTermElement;
  static constexpr bool totally_preordered = true;
  static constexpr bool order_cancellative = false;

  value_type zero() const { return {}; }
  value_type one() const { return LeadingTermElement::of(Rational(1), 0); }
  value_type make(Rational c, long e) const { return LeadingTermElement::of(std::move(c), e); }
  value_type add(const value_type& a, const value_type& b) const {
    if (a.zero) return b;
    if (b.zero) return a;
    if (a.exponent > b.exponent) return a;
    if (b.exponent > a.exponent) return b;
    return LeadingTermElement::of(a.coeff + b.coeff, a.exponent);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.zero || b.zero) return {};
    return LeadingTermElement::of(a.coeff * b.coeff, a.exponent + b.exponent);
  }
  value_type inv(const value_type& a) const {
    if (a.zero) throw inversion_of_zero();
    return LeadingTermElement::of(a.coeff.inverse(), -a.exponent);
  }
  Comparison compare(const value_type& a, const value_type& b) const {
    // zero is the bottom element of this order
    if (a.zero || b.zero) return comparison_from(a.zero, b.zero);
    const bool le = a.exponent < b.exponent || (a.exponent == b.exponent && a.coeff <= b.coeff);
    const bool ge = b.exponent < a.exponent || (a.exponent == b.exponent && a.coeff >= b.coeff);
    return comparison_from(le, ge);
  }
  bool is_zero(const value_type& a) const { return a.zero; }
};

// ---------------------------------------------------------------------------
// Height
// ---------------------------------------------------------------------------

/// A natural number or infinity.
struct HeightValue {
  bool infinite = false;
  unsigned n = 0;

  static HeightValue inf() { return {true, 0}; }
  static HeightValue of(unsigned v) { return {false, v}; }

  friend bool operator==(const HeightValue& a, const HeightValue& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.n == b.n;
  }
  friend bool operator<(const HeightValue& a, const HeightValue& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.n < b.n;
  }
  friend bool operator<=(const HeightValue& a, const HeightValue& b) { return a == b || a < b; }

  std::string str() const { return infinite ? "inf" : std::to_string(n); }
};

inline HeightValue height_min(const HeightValue& a, const HeightValue& b) { return a <= b ? a : b; }

/// Height on the leading-term semifield: 0 for elements with nonzero
/// exponent (these are power universal), 1 for non-unit constants, infinite
/// for the unit.
inline HeightValue height(const LeadingTermElement& x) {
  if (x.zero) throw height_of_zero();
  if (x.exponent != 0) return HeightValue::of(0);
  if (!x.coeff.is_one()) return HeightValue::of(1);
  return HeightValue::inf();
}

/// The truncated order x <=_n y on the leading-term semifield, defined via
/// height: x ≈_{n-1} y and (height(x y^-1) > n, or = n with x <= y). With
/// zero on either side only 0 <=_0 y (0 <= 1 holds here) and 0 <=_n 0 relate.
inline bool leq_at_level(const LeadingTerm& f, const LeadingTermElement& x,
                         const LeadingTermElement& y, unsigned n) {
  if (x.zero && y.zero) return true;
  if (x.zero) return n == 0;
  if (y.zero) return false;
  const auto ratio_height = height(f.mul(x, f.inv(y)));
  if (n > 0 && ratio_height < HeightValue::of(n)) return false;  // not ≈_{n-1}
  if (HeightValue::of(n) < ratio_height) return true;
  return holds_le(f.compare(x, y));
}

// ---------------------------------------------------------------------------
// Type classification and the ambient preorder
// ---------------------------------------------------------------------------

/// The five regimes of x + x^-1 within [2x^-1, 2x] for x > 1.
enum class FiveType {
  MaxTropical,
  MaxTemperate,
  Arctic,
  MinTemperate,
  MinTropical,
};

inline std::string to_string(FiveType t) {
  switch (t) {
    case FiveType::MaxTropical: return "MaxTropical";
    case FiveType::MaxTemperate: return "MaxTemperate";
    case FiveType::Arctic: return "Arctic";
    case FiveType::MinTemperate: return "MinTemperate";
    case FiveType::MinTropical: return "MinTropical";
  }
  return "?";
}

/// Classifies x (nonzero, x > 1) by comparing x + x^-1 against 2x^-1, 2, 2x.
template <OrderedSemiring F>
FiveType type_of_element(const F& f, const typename F::value_type& x) {
  if (f.is_zero(x)) throw not_strictly_above_one();
  if (f.compare(x, f.one()) != Comparison::GreaterStrict) throw not_strictly_above_one();
  const auto xinv = f.inv(x);
  const auto s = f.add(x, xinv);
  const auto two = f.add(f.one(), f.one());
  const auto two_x = f.add(x, x);
  const auto two_xinv = f.add(xinv, xinv);
  if (f.compare(s, two_x) == Comparison::Equivalent) return FiveType::MaxTropical;
  if (f.compare(s, two) == Comparison::Equivalent) return FiveType::Arctic;
  if (f.compare(s, two_xinv) == Comparison::Equivalent) return FiveType::MinTropical;
  if (f.compare(s, two) == Comparison::GreaterStrict &&
      f.compare(s, two_x) == Comparison::LessStrict)
    return FiveType::MaxTemperate;
  if (f.compare(s, two_xinv) == Comparison::GreaterStrict &&
      f.compare(s, two) == Comparison::LessStrict)
    return FiveType::MinTemperate;
  throw error("element does not fall into one of the five types");
}

/// The ambient preorder with respect to x, y: compares a y + b x against
/// a x + b y in the instance.
template <OrderedSemiring F>
Comparison ambient_le(const F& f, const typename F::value_type& a,
                      const typename F::value_type& b, const typename F::value_type& x,
                      const typename F::value_type& y) {
  const auto lhs = f.add(f.mul(a, y), f.mul(b, x));
  const auto rhs = f.add(f.mul(a, x), f.mul(b, y));
  return f.compare(lhs, rhs);
}

/// Checks the two power-universality inequalities x <= u^k and 1 <= u^k x.
template <OrderedSemiring F>
bool is_power_universal_witness(const F& f, const typename F::value_type& u,
                                const typename F::value_type& x, unsigned long k) {
  const auto uk = pow(f, u, k);
  return holds_le(f.compare(x, uk)) && holds_le(f.compare(f.one(), f.mul(uk, x)));
}

}  // namespace semiord
