#pragma once

#include <mpfr.h>

#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiord/errors.hpp"
#include "semiord/newton.hpp"
#include "semiord/polynomial.hpp"
#include "semiord/rational.hpp"
#include "semiord/rng.hpp"
#include "semiord/sturm.hpp"

namespace semiord {

/// A point of the 1-test spectrum in projective form [r0 : r1 : ... : rd]:
/// r0 = 1 gives the evaluation map at a nonnegative rational point, r0 = 0 a
/// tropical direction (Newton-polytope optimization), normalized away from 0.
struct SpectrumPoint {
  enum class Kind { RealEval, TropicalDir };
  Kind kind;
  std::vector<Rational> coords;

  static SpectrumPoint real_eval(std::vector<Rational> r) {
    for (const auto& c : r)
      if (c.sign() < 0) throw error("evaluation point must be nonnegative");
    return {Kind::RealEval, std::move(r)};
  }
  static SpectrumPoint tropical_dir(std::vector<Rational> alpha) {
    bool nonzero = false;
    for (const auto& c : alpha) {
      if (c.sign() < 0) throw error("tropical direction must be nonnegative");
      nonzero |= !c.is_zero();
    }
    if (!nonzero) throw error("tropical direction must be nonzero");
    return {Kind::TropicalDir, std::move(alpha)};
  }
};

/// Certified enclosure [lo, hi] of a real number; exact means lo == hi and
/// the value is the rational itself (tropical evaluations, log 1).
struct Enclosure {
  Rational lo, hi;
  bool exact = false;

  Rational width() const { return hi - lo; }
  double midpoint() const { return ((lo + hi) / Rational(2)).to_double(); }
};

namespace detail {

/// Directed-rounding enclosure of log(P)/log(U) for rationals P > 0, U > 1.
/// Dyadic endpoints, starting at 128 bits and refined until the width is at
/// most 1e-9 (at most 4 rounds).
inline Enclosure log_ratio_enclosure(const Rational& P, const Rational& U) {
  if (P.sign() <= 0 || U <= Rational(1)) throw error("log_ratio_enclosure domain");
  if (P.is_one()) return {Rational(0), Rational(0), true};

  const Rational target(1, 1000000000);
  Enclosure out;
  mpfr_prec_t prec = 128;
  for (int round = 0; round < 4; ++round, prec *= 2) {
    mpfr_t ld, lu, a, b;
    mpfr_inits2(prec, ld, lu, a, b, static_cast<mpfr_ptr>(nullptr));

    const auto log_num = [&](mpfr_t dst, mpfr_rnd_t rnd) {
      mpfr_set_q(dst, P.raw().get_mpq_t(), rnd);
      mpfr_log(dst, dst, rnd);
    };
    const auto log_den = [&](mpfr_t dst, mpfr_rnd_t rnd) {
      mpfr_set_q(dst, U.raw().get_mpq_t(), rnd);
      mpfr_log(dst, dst, rnd);
    };

    // log U > 0; which denominator bound minimizes the quotient depends on
    // the numerator's sign.
    const bool num_pos = P > Rational(1);
    log_num(a, MPFR_RNDD);
    log_den(b, num_pos ? MPFR_RNDU : MPFR_RNDD);
    mpfr_div(ld, a, b, MPFR_RNDD);
    log_num(a, MPFR_RNDU);
    log_den(b, num_pos ? MPFR_RNDD : MPFR_RNDU);
    mpfr_div(lu, a, b, MPFR_RNDU);

    mpq_class qlo, qhi;
    mpfr_get_q(qlo.get_mpq_t(), ld);
    mpfr_get_q(qhi.get_mpq_t(), lu);
    out = {Rational(std::move(qlo)), Rational(std::move(qhi)), false};
    mpfr_clears(ld, lu, a, b, static_cast<mpfr_ptr>(nullptr));
    if (out.width() <= target) break;
  }
  return out;
}

}  // namespace detail

/// Logarithmic evaluation lev_p(φ) = log φ(p) / log φ(u). Exact rational for
/// tropical directions; a certified enclosure for evaluation maps.
inline Enclosure lev(const Polynomial& p, const SpectrumPoint& phi, const Polynomial& u) {
  if (p.is_zero()) throw zero_polynomial();
  if (phi.coords.size() != p.variable_count()) throw dimension_mismatch();
  if (phi.kind == SpectrumPoint::Kind::TropicalDir) {
    const Rational tp = *tropical_eval(p, phi.coords);
    const Rational tu = *tropical_eval(u, phi.coords);
    if (tu.sign() <= 0) throw error("power universal element must have positive tropical value");
    const Rational v = tp / tu;
    return {v, v, true};
  }
  const Rational P = point_eval(p, phi.coords);
  const Rational U = point_eval(u, phi.coords);
  if (P.sign() <= 0) throw error("evaluation of p vanishes at the point");
  return detail::log_ratio_enclosure(P, U);
}

// ---------------------------------------------------------------------------
// Maslov dequantization check
// ---------------------------------------------------------------------------

struct MaslovSample {
  Rational r;
  double log_gap;  // | log(p(e^{r a}))/r − tropical_eval(p, a) |
};

struct MaslovReport {
  Rational tropical_value;
  std::vector<MaslovSample> samples;
  bool gaps_decrease;
};

/// Evaluates (p(e^{r a_1}, ..., e^{r a_d}))^{1/r} against the tropical limit
/// for each scale r; the gaps must shrink as r grows. The gap at large r is
/// of order e^{-r delta} and underflows in double, so the log-sum-exp runs
/// in 512-bit floats; only the reported values are rounded to double.
inline MaslovReport maslov_check(const Polynomial& p, const std::vector<Rational>& alpha,
                                 const std::vector<Rational>& r_values) {
  if (p.is_zero()) throw zero_polynomial();
  if (alpha.size() != p.variable_count()) throw dimension_mismatch();
  MaslovReport report;
  report.tropical_value = *tropical_eval(p, alpha);

  const mpfr_prec_t prec = 512;
  mpfr_t gap, prev_gap, acc, term, tmp;
  mpfr_inits2(prec, gap, prev_gap, acc, term, tmp, static_cast<mpfr_ptr>(nullptr));
  report.gaps_decrease = true;

  for (std::size_t s = 0; s < r_values.size(); ++s) {
    const Rational& r = r_values[s];
    // gap = log(sum_m c_m e^{-r (T - <a, m>)}) / r  with T the tropical value
    mpfr_set_zero(acc, 1);
    for (const auto& [m, c] : p.terms()) {
      Rational dot(0);
      for (std::size_t i = 0; i < alpha.size(); ++i)
        if (m[i] != 0) dot += Rational(static_cast<long>(m[i])) * alpha[i];
      const Rational exponent = r * (dot - report.tropical_value);  // <= 0
      mpfr_set_q(term, exponent.raw().get_mpq_t(), MPFR_RNDN);
      mpfr_exp(term, term, MPFR_RNDN);
      mpfr_set_q(tmp, c.raw().get_mpq_t(), MPFR_RNDN);
      mpfr_mul(term, term, tmp, MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    mpfr_log(acc, acc, MPFR_RNDN);
    mpfr_set_q(tmp, r.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_div(gap, acc, tmp, MPFR_RNDN);
    mpfr_abs(gap, gap, MPFR_RNDN);

    report.samples.push_back({r, mpfr_get_d(gap, MPFR_RNDN)});
    if (s > 0) {
      const bool both_zero = mpfr_zero_p(gap) && mpfr_zero_p(prev_gap);
      if (!both_zero && mpfr_cmp(gap, prev_gap) >= 0) report.gaps_decrease = false;
    }
    mpfr_set(prev_gap, gap, MPFR_RNDN);
  }
  mpfr_clears(gap, prev_gap, acc, term, tmp, static_cast<mpfr_ptr>(nullptr));
  return report;
}

// ---------------------------------------------------------------------------
// Strict dominance over the whole spectrum
// ---------------------------------------------------------------------------

struct DominanceVerdict {
  enum class Kind {
    StrictEverywhere,  // φ(x) < φ(y) for every spectrum point, decided exactly
    RefutedAt,         // exact point with φ(x) > φ(y)
    TieAt,             // φ(x) = φ(y) somewhere, so strictness fails
    UnknownHeuristic,  // d >= 2: tropical part strict, real part only sampled
  };
  Kind kind;
  std::optional<SpectrumPoint> point;
  bool point_exact = true;  // false for irrational real tangency points
  Rational value_x, value_y;
  std::string note;
};

inline std::string to_string(DominanceVerdict::Kind k) {
  switch (k) {
    case DominanceVerdict::Kind::StrictEverywhere: return "StrictEverywhere";
    case DominanceVerdict::Kind::RefutedAt: return "RefutedAt";
    case DominanceVerdict::Kind::TieAt: return "TieAt";
    case DominanceVerdict::Kind::UnknownHeuristic: return "UnknownHeuristic";
  }
  return "?";
}

namespace detail {

/// Difference y − x of univariate semiring polynomials as a signed dense
/// polynomial, the object the root analysis runs on.
inline UniPoly signed_difference(const Polynomial& x, const Polynomial& y) {
  const std::size_t n = static_cast<std::size_t>(std::max(x.total_degree(), y.total_degree()));
  UniPoly g(n + 1, Rational(0));
  for (const auto& [m, c] : y.terms()) g[m[0]] += c;
  for (const auto& [m, c] : x.terms()) g[m[0]] -= c;
  uni_trim(g);
  return g;
}

}  // namespace detail

/// Decides whether φ(x) < φ(y) for every point of the 1-test spectrum.
/// The tropical part is exact in any dimension (LP over the direction
/// simplex). The real part is exact for one variable (Sturm analysis of
/// y − x on [0, ∞)); for d >= 2 it is sampled on a grid plus seeded random
/// points, where any failure is still an exact refutation.
inline DominanceVerdict strict_dominance_check(const PositiveConstantPolynomial& x,
                                               const PositiveConstantPolynomial& y,
                                               const Polynomial& u) {
  x.poly().require_same_vars(y.poly());
  // strictness of lev_x < lev_y does not depend on the normalizing element,
  // since log φ(u) > 0 for every spectrum point; u only fixes dimensions
  u.require_same_vars(x.poly());
  if (x.is_zero() || y.is_zero()) throw zero_polynomial();
  const unsigned d = x.variable_count();

  // Tropical part.
  const TropicalGap tg = tropical_gap_minimum(x.poly(), y.poly());
  std::optional<DominanceVerdict> tropical_tie;
  if (tg.gap.sign() <= 0) {
    const SpectrumPoint phi = SpectrumPoint::tropical_dir(tg.direction);
    DominanceVerdict v{tg.gap.sign() < 0 ? DominanceVerdict::Kind::RefutedAt
                                         : DominanceVerdict::Kind::TieAt,
                       phi, true, *tropical_eval(x.poly(), phi.coords),
                       *tropical_eval(y.poly(), phi.coords), "tropical direction"};
    if (tg.gap.sign() < 0) return v;
    tropical_tie = v;
  }

  // Real part.
  if (d == 1) {
    const RealLineVerdict rv = positivity_on_nonneg_axis(
        detail::signed_difference(x.poly(), y.poly()));
    if (rv.kind == RealLineVerdict::Kind::Refuted) {
      const std::vector<Rational> pt{rv.witness};
      return {DominanceVerdict::Kind::RefutedAt, SpectrumPoint::real_eval(pt), true,
              point_eval(x.poly(), pt), point_eval(y.poly(), pt), "real evaluation"};
    }
    if (rv.kind == RealLineVerdict::Kind::Tie) {
      const std::vector<Rational> pt{rv.witness};
      return {DominanceVerdict::Kind::TieAt, SpectrumPoint::real_eval(pt), rv.witness_exact,
              point_eval(x.poly(), pt), point_eval(y.poly(), pt),
              rv.witness_exact ? "real evaluation" : "isolated irrational tangency (midpoint shown)"};
    }
    if (tropical_tie) return *tropical_tie;
    return {DominanceVerdict::Kind::StrictEverywhere, std::nullopt, true, Rational(0),
            Rational(0), "univariate: Sturm analysis + tropical LP"};
  }

  // d >= 2: exact refutations can still be found by sampling.
  std::vector<std::vector<Rational>> points;
  const std::vector<Rational> grid_vals{Rational(0), Rational(1, 2), Rational(1), Rational(2),
                                        Rational(5)};
  std::vector<std::size_t> idx(d, 0);
  for (;;) {
    std::vector<Rational> pt(d);
    for (unsigned i = 0; i < d; ++i) pt[i] = grid_vals[idx[i]];
    points.push_back(std::move(pt));
    unsigned pos = 0;
    while (pos < d && ++idx[pos] == grid_vals.size()) idx[pos++] = 0;
    if (pos == d) break;
  }
  SampleRng rng;
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> pt(d);
    for (unsigned j = 0; j < d; ++j) pt[j] = rng.positive_rational();
    points.push_back(std::move(pt));
  }
  for (const auto& pt : points) {
    const Rational vx = point_eval(x.poly(), pt);
    const Rational vy = point_eval(y.poly(), pt);
    if (vx > vy)
      return {DominanceVerdict::Kind::RefutedAt, SpectrumPoint::real_eval(pt), true, vx, vy,
              "real evaluation (sampled)"};
    if (vx == vy)
      return {DominanceVerdict::Kind::TieAt, SpectrumPoint::real_eval(pt), true, vx, vy,
              "real evaluation (sampled)"};
  }
  if (tropical_tie) return *tropical_tie;
  return {DominanceVerdict::Kind::UnknownHeuristic, std::nullopt, true, Rational(0), Rational(0),
          "tropical part strict; real part passed grid + 200 random samples (not a proof)"};
}

// ---------------------------------------------------------------------------
// Derivations at an evaluation homomorphism (2-test spectrum points)
// ---------------------------------------------------------------------------

/// Monotone derivation at the evaluation homomorphism ‖·‖ = eval(base):
/// D(p) = <direction, ∇p(base)>, rescaled so that D(u) = 1. For the
/// coefficientwise order these nonnegative directional derivatives are
/// exactly the monotone derivations.
struct DerivationPoint {
  std::vector<Rational> base;
  std::vector<Rational> direction;

  DerivationPoint(std::vector<Rational> base_pt, std::vector<Rational> dir)
      : base(std::move(base_pt)), direction(std::move(dir)) {
    bool nonzero = false;
    for (const auto& b : base)
      if (b.sign() <= 0) throw error("derivation base point must be strictly positive");
    for (const auto& t : direction) {
      if (t.sign() < 0) throw error("derivation direction must be nonnegative");
      nonzero |= !t.is_zero();
    }
    if (!nonzero) throw error("derivation direction must be nonzero");
  }
};

/// Unnormalized D(p) = <direction, ∇p(base)>, exact.
inline Rational derivation_apply_raw(const Polynomial& p, const DerivationPoint& D) {
  if (p.variable_count() != D.base.size()) throw dimension_mismatch();
  Rational acc(0);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < D.base.size(); ++i) {
      if (m[i] == 0 || D.direction[i].is_zero()) continue;
      Rational part = c * Rational(static_cast<long>(m[i])) * D.direction[i];
      for (std::size_t j = 0; j < D.base.size(); ++j) {
        const unsigned e = j == i ? m[j] - 1 : m[j];
        if (e != 0) part *= D.base[j].pow(static_cast<long>(e));
      }
      acc += part;
    }
  }
  return acc;
}

/// D(y) − D(x) for x, y agreeing at the norm homomorphism, with D
/// normalized to D(u) = 1. Exact rational.
inline Rational derivation_gap(const PositiveConstantPolynomial& x,
                               const PositiveConstantPolynomial& y, const DerivationPoint& D,
                               const Polynomial& u) {
  if (point_eval(x.poly(), D.base) != point_eval(y.poly(), D.base)) throw norm_mismatch();
  const Rational du = derivation_apply_raw(u, D);
  if (du.is_zero()) throw error("derivation vanishes on the power universal element");
  return (derivation_apply_raw(y.poly(), D) - derivation_apply_raw(x.poly(), D)) / du;
}

// ---------------------------------------------------------------------------
// Spectrum sweeps
// ---------------------------------------------------------------------------

struct SweepRecord {
  std::vector<unsigned long> projective;  // reduced integer coordinates [r0 : ... : rd]
  SpectrumPoint phi;
  Enclosure lev_x, lev_y;
};

/// Deterministic sample of the projective spectrum at the given resolution:
/// all integer compositions r0 + ... + rd = resolution + 1, reduced. r0 > 0
/// rows are evaluation maps at (r1/r0, ..., rd/r0); r0 = 0 rows are tropical
/// directions.
inline std::vector<SweepRecord> enumerate_spectrum_boundary(const PositiveConstantPolynomial& x,
                                                            const PositiveConstantPolynomial& y,
                                                            const Polynomial& u,
                                                            unsigned resolution) {
  if (resolution < 1) throw error("resolution must be at least 1");
  x.poly().require_same_vars(y.poly());
  const unsigned d = x.variable_count();
  const unsigned long total = resolution + 1;

  std::vector<SweepRecord> out;
  std::vector<unsigned long> comp(d + 1, 0);
  const auto emit = [&]() {
    unsigned long g = 0;
    for (auto v : comp) g = std::gcd(g, v);
    std::vector<unsigned long> reduced(comp);
    for (auto& v : reduced) v /= g;

    SpectrumPoint phi = [&] {
      if (reduced[0] > 0) {
        std::vector<Rational> r(d);
        for (unsigned i = 0; i < d; ++i)
          r[i] = Rational(static_cast<long>(reduced[i + 1]), static_cast<long>(reduced[0]));
        return SpectrumPoint::real_eval(std::move(r));
      }
      std::vector<Rational> a(d);
      for (unsigned i = 0; i < d; ++i) a[i] = Rational(static_cast<long>(reduced[i + 1]));
      return SpectrumPoint::tropical_dir(std::move(a));
    }();
    out.push_back({std::move(reduced), phi, lev(x.poly(), phi, u), lev(y.poly(), phi, u)});
  };

  // Compositions in decreasing lexicographic order of (r0, r1, ...).
  const auto rec = [&](auto&& self, unsigned pos, unsigned long remaining) -> void {
    if (pos == d) {
      comp[d] = remaining;
      emit();
      return;
    }
    for (unsigned long v = remaining + 1; v-- > 0;) {
      comp[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace semiord
