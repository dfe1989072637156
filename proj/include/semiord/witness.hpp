#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semiord/compare.hpp"
#include "semiord/errors.hpp"
#include "semiord/polynomial.hpp"
#include "semiord/rational.hpp"

namespace semiord {

struct SearchBudget {
  unsigned k_max = 24;
  unsigned n_max = 24;
};

/// A pair (k, n) with u^k x^n <= u^k y^n coefficientwise, the asymptotic
/// form of dominance. verified_range lists every exponent actually checked.
struct PowerWitness {
  unsigned k = 0;
  unsigned n = 1;
  std::vector<unsigned> verified_range;
};

/// A nonzero multiplier a with a x <= a y coefficientwise, built from a
/// power witness by telescoping and re-verified at construction.
struct CatalyticWitness {
  Polynomial a;
  unsigned from_k = 0;
  unsigned from_n = 1;
};

/// Strassen-form certificate: x^n <= p(u) y^n with the scalar bound
/// p(r0) <= (1 + eps)^n.
struct StrassenWitness {
  Polynomial p;  // univariate, p = (2 + T)^k
  unsigned n = 1;
  Rational p_at_r0;
  Rational bound;  // (1 + eps)^n
};

/// Checks u^k x^n <= u^k y^n by exact coefficient comparison.
inline bool verify_power_inequality(const Polynomial& x, const Polynomial& y,
                                    const Polynomial& u, unsigned k, unsigned n) {
  const Polynomial uk = u.pow(k);
  return holds_le(coeffwise_leq(uk * x.pow(n), uk * y.pow(n)));
}

namespace detail {

/// Lazily grown power table p^0, p^1, ...
class PowerTable {
 public:
  explicit PowerTable(Polynomial base)
      : base_(std::move(base)) {
    table_.push_back(Polynomial::constant(base_.variable_count(), Rational(1)));
  }

  const Polynomial& operator[](unsigned e) {
    while (table_.size() <= e) table_.push_back(table_.back() * base_);
    return table_[e];
  }

 private:
  Polynomial base_;
  std::vector<Polynomial> table_;
};

}  // namespace detail

/// Scans (k, n) in [0, k_max] x [1, n_max] by increasing k + n, ties broken
/// by smaller n, so the returned witness is minimal in that order. On the
/// first hit the two following exponents are also checked and recorded when
/// they verify.
inline std::optional<PowerWitness> power_witness_search(const PositiveConstantPolynomial& x,
                                                        const PositiveConstantPolynomial& y,
                                                        const Polynomial& u, unsigned k_max,
                                                        unsigned n_max) {
  x.poly().require_same_vars(y.poly());
  if (x.is_zero() || y.is_zero()) throw zero_polynomial();
  detail::PowerTable u_pow(u), x_pow(x.poly()), y_pow(y.poly());
  const auto verifies = [&](unsigned k, unsigned n) {
    return holds_le(coeffwise_leq(u_pow[k] * x_pow[n], u_pow[k] * y_pow[n]));
  };
  for (unsigned s = 1; s <= k_max + n_max; ++s) {
    const unsigned n_lo = s > k_max ? s - k_max : 1;
    for (unsigned n = n_lo; n <= s && n <= n_max; ++n) {
      const unsigned k = s - n;
      if (!verifies(k, n)) continue;
      PowerWitness w{k, n, {n}};
      for (unsigned extra = n + 1; extra <= n + 2; ++extra)
        if (verifies(k, extra)) w.verified_range.push_back(extra);
      return w;
    }
  }
  return std::nullopt;
}

/// a := u^k · sum_{l=0}^{n-1} x^l y^{n-1-l} for the verified exponent n;
/// then a y − a x telescopes to u^k (y^n − x^n), so the verification can
/// only fail on an implementation bug.
inline CatalyticWitness catalytic_from_power(const PositiveConstantPolynomial& x,
                                             const PositiveConstantPolynomial& y,
                                             const Polynomial& u, const PowerWitness& w) {
  if (w.n < 1) throw error("power witness exponent must be at least 1");
  const unsigned d = x.variable_count();
  Polynomial sum = Polynomial::zero(d);
  for (unsigned l = 0; l < w.n; ++l)
    sum = sum + x.poly().pow(l) * y.poly().pow(w.n - 1 - l);
  Polynomial a = u.pow(w.k) * sum;
  if (a.is_zero()) throw verification_failed("catalytic multiplier is zero");
  if (!holds_le(coeffwise_leq(a * x.poly(), a * y.poly())))
    throw verification_failed("catalytic witness does not verify");
  return {std::move(a), w.k, w.n};
}

/// Strassen-form witness: p := (2 + T)^k from the power witness, then the
/// least exponent n with both u^k x^n <= u^k y^n re-verified and
/// p(r0) <= (1 + eps)^n. The certificate inequality x^n <= p(u) y^n is
/// checked directly as well.
inline std::optional<StrassenWitness> strassen_witness(const PositiveConstantPolynomial& x,
                                                       const PositiveConstantPolynomial& y,
                                                       const Polynomial& u, const Rational& r0,
                                                       const Rational& eps,
                                                       const SearchBudget& budget = {}) {
  if (r0.sign() < 0 || eps.sign() <= 0) throw error("need r0 >= 0 and eps > 0");
  const auto w = power_witness_search(x, y, u, budget.k_max, budget.n_max);
  if (!w) return std::nullopt;

  Polynomial p = Polynomial::constant(1, Rational(2)) + Polynomial::variable(1, 0);
  p = p.pow(w->k);
  const Rational p_at_r0 = point_eval(p, {r0});
  const Rational growth = Rational(1) + eps;

  for (unsigned n = w->n; n <= budget.n_max + w->n; ++n) {
    if (p_at_r0 > growth.pow(n)) continue;
    if (!verify_power_inequality(x.poly(), y.poly(), u, w->k, n)) continue;
    const Polynomial p_of_u = substitute_univariate(p, u);
    if (!holds_le(coeffwise_leq(x.poly().pow(n), p_of_u * y.poly().pow(n))))
      throw verification_failed("strassen certificate does not verify");
    return StrassenWitness{std::move(p), n, p_at_r0, growth.pow(n)};
  }
  return std::nullopt;
}

}  // namespace semiord
