#pragma once

#include <cstddef>
#include <vector>

#include "semiord/errors.hpp"
#include "semiord/polynomial.hpp"
#include "semiord/rational.hpp"
#include "semiord/simplex.hpp"

namespace semiord {

/// Decides v ∈ conv(points) − R_+^d by exact LP feasibility:
/// ∃ λ ≥ 0, Σλ = 1, Σ λ_j β_j ≥ v componentwise.
inline bool in_downward_hull(const MultiIndex& v, const std::vector<MultiIndex>& points) {
  const std::size_t d = v.size();
  const std::size_t s = points.size();
  // Columns: λ_1..λ_s, then d surplus variables.
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> row(s + d, Rational(0));
    for (std::size_t j = 0; j < s; ++j) row[j] = Rational(static_cast<long>(points[j][i]));
    row[s + i] = Rational(-1);
    A.push_back(std::move(row));
    b.push_back(Rational(static_cast<long>(v[i])));
  }
  std::vector<Rational> sum_row(s + d, Rational(0));
  for (std::size_t j = 0; j < s; ++j) sum_row[j] = Rational(1);
  A.push_back(std::move(sum_row));
  b.push_back(Rational(1));

  const auto res = SimplexSolver::solve(std::move(A), std::move(b),
                                        std::vector<Rational>(s + d, Rational(0)));
  return res.status == SimplexSolver::Status::Optimal;
}

/// True iff tropical_eval(p, α) ≤ tropical_eval(q, α) for all α ∈ Q_+^d:
/// every support point of p lies in the downward-closed convex hull of
/// supp(q), decided exactly per point.
inline bool newton_dominates(const Polynomial& p, const Polynomial& q) {
  p.require_same_vars(q);
  if (p.is_zero() || q.is_zero()) throw zero_polynomial();
  const auto qsupp = q.support();
  for (const auto& v : p.support())
    if (!in_downward_hull(v, qsupp)) return false;
  return true;
}

/// Minimum of h_q(α) − h_p(α) over the direction simplex {α ≥ 0, Σα = 1},
/// together with a minimizing direction. By positive homogeneity of support
/// functions this settles the sign of the gap on all of Q_+^d \ {0}.
struct TropicalGap {
  Rational gap;
  std::vector<Rational> direction;
};

inline TropicalGap tropical_gap_minimum(const Polynomial& p, const Polynomial& q) {
  p.require_same_vars(q);
  if (p.is_zero() || q.is_zero()) throw zero_polynomial();
  const std::size_t d = p.variable_count();
  const auto qsupp = q.support();
  const std::size_t m = qsupp.size();

  TropicalGap best;
  bool have = false;
  for (const auto& v : p.support()) {
    // min t − <α, v>  s.t.  <α, β_j> − t + s_j = 0,  Σα = 1,  all vars ≥ 0.
    // Columns: α_1..α_d, t, s_1..s_m.
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Rational> row(d + 1 + m, Rational(0));
      for (std::size_t i = 0; i < d; ++i) row[i] = Rational(static_cast<long>(qsupp[j][i]));
      row[d] = Rational(-1);
      row[d + 1 + j] = Rational(1);
      A.push_back(std::move(row));
      b.push_back(Rational(0));
    }
    std::vector<Rational> sum_row(d + 1 + m, Rational(0));
    for (std::size_t i = 0; i < d; ++i) sum_row[i] = Rational(1);
    A.push_back(std::move(sum_row));
    b.push_back(Rational(1));

    std::vector<Rational> c(d + 1 + m, Rational(0));
    c[d] = Rational(1);
    for (std::size_t i = 0; i < d; ++i) c[i] = -Rational(static_cast<long>(v[i]));

    const auto res = SimplexSolver::solve(std::move(A), std::move(b), std::move(c));
    if (res.status != SimplexSolver::Status::Optimal)
      throw error("tropical gap LP must have an optimum");
    if (!have || res.objective < best.gap) {
      best.gap = res.objective;
      best.direction.assign(res.x.begin(), res.x.begin() + static_cast<long>(d));
      have = true;
    }
  }
  return best;
}

/// True iff tropical_eval(p, α) < tropical_eval(q, α) for all α ∈ Q_+^d
/// with α ≠ 0 (the trivial direction α = 0 always ties and is excluded by
/// the spectrum normalization).
inline bool newton_dominates_strict(const Polynomial& p, const Polynomial& q) {
  return tropical_gap_minimum(p, q).gap.sign() > 0;
}

}  // namespace semiord
