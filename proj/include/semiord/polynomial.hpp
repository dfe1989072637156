#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiord/compare.hpp"
#include "semiord/errors.hpp"
#include "semiord/rational.hpp"

namespace semiord {

/// Exponent vector; length equals the ambient variable count.
using MultiIndex = std::vector<unsigned>;

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline unsigned long degree_of(const MultiIndex& m) {
  return std::accumulate(m.begin(), m.end(), 0ul);
}

/// Graded lexicographic term order; fixes the canonical serialization order.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const auto da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Sparse multivariate polynomial over the nonnegative rationals. Stored
/// coefficients are always strictly positive (absent means zero), so the
/// representation is canonical and equality is structural.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

  explicit Polynomial(unsigned variable_count) : vars_(variable_count) {}

  static Polynomial zero(unsigned vars) { return Polynomial(vars); }

  static Polynomial constant(unsigned vars, Rational c) {
    Polynomial p(vars);
    p.add_term(MultiIndex(vars, 0), std::move(c));
    return p;
  }

  static Polynomial variable(unsigned vars, unsigned index) {
    Polynomial p(vars);
    MultiIndex m(vars, 0);
    m.at(index) = 1;
    p.add_term(std::move(m), Rational(1));
    return p;
  }

  static Polynomial monomial(unsigned vars, MultiIndex exps, Rational coeff) {
    Polynomial p(vars);
    p.add_term(std::move(exps), std::move(coeff));
    return p;
  }

  unsigned variable_count() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Accumulates coeff onto the monomial; negative totals are rejected
  /// (the ambient object is a semiring).
  void add_term(MultiIndex exps, Rational coeff) {
    if (exps.size() != vars_) throw variable_count_mismatch();
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      if (coeff.sign() < 0) throw error("polynomial coefficients must be nonnegative");
      terms_.emplace(std::move(exps), std::move(coeff));
      return;
    }
    it->second += coeff;
    const int s = it->second.sign();
    if (s < 0) throw error("polynomial coefficients must be nonnegative");
    if (s == 0) terms_.erase(it);
  }

  Rational coefficient(const MultiIndex& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(MultiIndex(vars_, 0)); }

  bool is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_integer(); });
  }

  unsigned long total_degree() const {
    unsigned long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
    return d;
  }

  std::vector<MultiIndex> support() const {
    std::vector<MultiIndex> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back(m);
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.require_same_vars(b);
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_vars(b);
    Polynomial out(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
    return out;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial out(p.vars_);
    for (const auto& [m, pc] : p.terms_) out.add_term(m, c * pc);
    return out;
  }

  Polynomial pow(unsigned long n) const {
    Polynomial acc = constant(vars_, Rational(1));
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  void require_same_vars(const Polynomial& other) const {
    if (vars_ != other.vars_) throw variable_count_mismatch();
  }

 private:
  unsigned vars_;
  TermMap terms_;
};

/// Componentwise comparison of all coefficients (absent = 0). Equivalent
/// exactly when the polynomials are identical.
inline Comparison coeffwise_leq(const Polynomial& p, const Polynomial& q) {
  p.require_same_vars(q);
  bool le = true, ge = true;
  for (const auto& [m, c] : p.terms()) {
    const Rational qc = q.coefficient(m);
    if (c < qc) ge = false;
    if (c > qc) le = false;
  }
  for (const auto& [m, c] : q.terms()) {
    if (p.coefficient(m) < c) ge = false;
    if (p.coefficient(m) > c) le = false;
  }
  return comparison_from(le, ge);
}

/// The power universal element u = 2 + X_1 + ... + X_d of the
/// coefficientwise order.
inline Polynomial power_universal(unsigned d) {
  if (d < 1) throw error("power_universal requires at least one variable");
  Polynomial u = Polynomial::constant(d, Rational(2));
  for (unsigned i = 0; i < d; ++i) u = u + Polynomial::variable(d, i);
  return u;
}

/// Exact evaluation at a nonnegative rational point; a monotone semiring
/// homomorphism to Q_+ for each fixed point.
inline Rational point_eval(const Polynomial& p, const std::vector<Rational>& r) {
  if (r.size() != p.variable_count()) throw dimension_mismatch();
  Rational out(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (m[i] != 0) term *= r[i].pow(static_cast<long>(m[i]));
    out += term;
  }
  return out;
}

/// Support function of the Newton polytope in direction alpha (the additive
/// tropical picture); nullopt encodes -inf for the zero polynomial.
inline std::optional<Rational> tropical_eval(const Polynomial& p,
                                             const std::vector<Rational>& alpha) {
  if (alpha.size() != p.variable_count()) throw dimension_mismatch();
  std::optional<Rational> best;
  for (const auto& [m, c] : p.terms()) {
    Rational v(0);
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (m[i] != 0) v += Rational(static_cast<long>(m[i])) * alpha[i];
    if (!best || *best < v) best = v;
  }
  return best;
}

/// Substitutes arg for the variable of a univariate polynomial.
inline Polynomial substitute_univariate(const Polynomial& p, const Polynomial& arg) {
  if (p.variable_count() != 1) throw variable_count_mismatch();
  Polynomial out = Polynomial::zero(arg.variable_count());
  for (const auto& [m, c] : p.terms()) out = out + c * arg.pow(m[0]);
  return out;
}

/// Element of Q_(+)[X..]: nonzero constant coefficient strictly positive,
/// or the zero polynomial.
class PositiveConstantPolynomial {
 public:
  explicit PositiveConstantPolynomial(Polynomial p) : p_(std::move(p)) {
    if (!p_.is_zero() && p_.constant_term().sign() <= 0)
      throw error("nonzero element must have a strictly positive constant coefficient");
  }

  const Polynomial& poly() const { return p_; }
  unsigned variable_count() const { return p_.variable_count(); }
  bool is_zero() const { return p_.is_zero(); }

  friend bool operator==(const PositiveConstantPolynomial& a,
                         const PositiveConstantPolynomial& b) {
    return a.p_ == b.p_;
  }

 private:
  Polynomial p_;
};

}  // namespace semiord
