#pragma once

#include <optional>
#include <utility>

#include "semiord/compare.hpp"
#include "semiord/errors.hpp"
#include "semiord/polynomial.hpp"
#include "semiord/witness.hpp"

namespace semiord {

/// Formal fraction of nonzero elements of Q_(+)[X..]; the semifield-of-
/// fractions order x/a <= y/b holds iff x b r <= y a r for some nonzero r.
struct OrderedFraction {
  PositiveConstantPolynomial numerator;
  PositiveConstantPolynomial denominator;

  OrderedFraction(PositiveConstantPolynomial num, PositiveConstantPolynomial den)
      : numerator(std::move(num)), denominator(std::move(den)) {
    if (numerator.is_zero() || denominator.is_zero())
      throw zero_polynomial();
  }

  /// Cross-multiplication equality of formal fractions.
  friend bool operator==(const OrderedFraction& f, const OrderedFraction& g) {
    return f.numerator.poly() * g.denominator.poly() ==
           g.numerator.poly() * f.denominator.poly();
  }
};

namespace detail {

/// Searches the constructive catalytic family for r with (xb) r <= (ya) r.
inline bool frac_le_within(const Polynomial& xb, const Polynomial& ya, const Polynomial& u,
                           const SearchBudget& budget) {
  const PositiveConstantPolynomial lhs(xb), rhs(ya);
  const auto w = power_witness_search(lhs, rhs, u, budget.k_max, budget.n_max);
  if (!w) return false;
  // catalytic_from_power re-verifies r (xb) <= r (ya) exactly.
  catalytic_from_power(lhs, rhs, u, *w);
  return true;
}

}  // namespace detail

/// Semi-decision of the fraction order: searches the witness family on both
/// sides within the budget; Unknown is an honest outcome, not an error.
inline Comparison frac_leq(const OrderedFraction& f, const OrderedFraction& g,
                           const SearchBudget& budget = {}) {
  f.numerator.poly().require_same_vars(g.numerator.poly());
  const unsigned d = f.numerator.variable_count();
  const Polynomial u = power_universal(d);
  const Polynomial xb = f.numerator.poly() * g.denominator.poly();
  const Polynomial ya = g.numerator.poly() * f.denominator.poly();
  const bool le = detail::frac_le_within(xb, ya, u, budget);
  const bool ge = detail::frac_le_within(ya, xb, u, budget);
  if (!le && !ge) return Comparison::Unknown;
  return comparison_from(le, ge);
}

}  // namespace semiord
