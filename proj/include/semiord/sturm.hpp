#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "semiord/errors.hpp"
#include "semiord/rational.hpp"

namespace semiord {

/// Dense signed univariate polynomial over Q, index = degree, no trailing
/// zero coefficients. Used only for real-root analysis of differences of
/// semiring polynomials; the semiring types themselves never hold negatives.
using UniPoly = std::vector<Rational>;

inline void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline bool uni_is_zero(const UniPoly& p) { return p.empty(); }

inline long uni_degree(const UniPoly& p) { return static_cast<long>(p.size()) - 1; }

inline Rational uni_eval(const UniPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline UniPoly uni_derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
  uni_trim(d);
  return d;
}

/// Euclidean remainder of a by b (b nonzero).
inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  uni_trim(a);
  while (!a.empty() && a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    uni_trim(a);
  }
  return a;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

/// p with all multiple roots collapsed to simple ones.
inline UniPoly uni_squarefree(const UniPoly& p) {
  const UniPoly d = uni_derivative(p);
  if (uni_is_zero(d)) return p;  // constants
  const UniPoly g = uni_gcd(p, d);
  if (uni_degree(g) <= 0) return p;
  // exact division p / g
  UniPoly rem = p, q(p.size() - g.size() + 1, Rational(0));
  while (!rem.empty() && rem.size() >= g.size()) {
    const Rational f = rem.back() / g.back();
    const std::size_t shift = rem.size() - g.size();
    q[shift] = f;
    for (std::size_t i = 0; i < g.size(); ++i) rem[shift + i] -= f * g[i];
    uni_trim(rem);
  }
  uni_trim(q);
  return q;
}

inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  chain.push_back(p);
  UniPoly d = uni_derivative(p);
  if (uni_is_zero(d)) return chain;
  chain.push_back(std::move(d));
  for (;;) {
    UniPoly r = uni_rem(chain[chain.size() - 2], chain.back());
    if (uni_is_zero(r)) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int sturm_variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    const int s = uni_eval(p, x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

/// Distinct real roots of a squarefree p in the open interval (a, b);
/// requires p(a) != 0 and p(b) != 0.
inline int sturm_count_roots(const std::vector<UniPoly>& chain, const Rational& a,
                             const Rational& b) {
  return sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
}

/// One isolated real root: either an exact rational value or an open
/// interval (lo, hi) with nonvanishing endpoints containing a single root.
struct IsolatedRoot {
  bool exact;
  Rational value;  // the root when exact
  Rational lo, hi;
};

namespace detail {

inline void isolate_rec(const std::vector<UniPoly>& chain, const UniPoly& p, Rational lo,
                        Rational hi, std::vector<IsolatedRoot>& out) {
  const int n = sturm_count_roots(chain, lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({false, Rational(0), lo, hi});
    return;
  }
  Rational mid = (lo + hi) / Rational(2);
  if (uni_eval(p, mid).is_zero()) {
    // Rational root hit head-on; carve out a root-free margin around it.
    Rational delta = (hi - lo) / Rational(4);
    while (uni_eval(p, mid - delta).is_zero() || uni_eval(p, mid + delta).is_zero() ||
           sturm_count_roots(chain, mid - delta, mid + delta) != 1)
      delta /= Rational(2);
    isolate_rec(chain, p, lo, mid - delta, out);
    out.push_back({true, mid, mid - delta, mid + delta});
    isolate_rec(chain, p, mid + delta, hi, out);
    return;
  }
  isolate_rec(chain, p, lo, mid, out);
  isolate_rec(chain, p, mid, hi, out);
}

}  // namespace detail

/// Isolates all distinct roots of squarefree p in (lo, hi); endpoints must
/// not be roots. Results are ordered and pairwise disjoint.
inline std::vector<IsolatedRoot> isolate_roots(const UniPoly& p, const Rational& lo,
                                               const Rational& hi) {
  const auto chain = sturm_chain(p);
  std::vector<IsolatedRoot> out;
  detail::isolate_rec(chain, p, lo, hi, out);
  return out;
}

/// Cauchy bound: all real roots of p lie strictly inside (-B, B).
inline Rational cauchy_root_bound(const UniPoly& p) {
  Rational m(0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = max(m, abs(p[i] / p.back()));
  return Rational(1) + m;
}

/// Sign distribution of g over [0, ∞), decided exactly.
struct RealLineVerdict {
  enum class Kind {
    StrictlyPositive,   // g > 0 on all of [0, ∞)
    Refuted,            // g(witness) < 0 at the exact rational witness
    Tie,                // g ≥ 0 with g = 0 somewhere; witness marks a zero
  };
  Kind kind;
  Rational witness;
  bool witness_exact = true;  // false when the zero is irrational (tangency)
  Rational value_at_witness;
};

/// Exact positivity analysis of a signed polynomial on the half line.
/// Zeros are located by Sturm-sequence isolation on the squarefree part;
/// signs between consecutive zeros are sampled at exact rational points, so
/// a refutation always comes with an exact witness.
inline RealLineVerdict positivity_on_nonneg_axis(UniPoly g) {
  uni_trim(g);
  if (uni_is_zero(g)) return {RealLineVerdict::Kind::Tie, Rational(0), true, Rational(0)};

  const Rational at0 = g[0];
  if (at0.sign() < 0) return {RealLineVerdict::Kind::Refuted, Rational(0), true, at0};

  // Strip the X^m factor; it carries the (possible) zero at the origin and
  // does not affect signs on (0, ∞).
  std::size_t m = 0;
  while (m < g.size() && g[m].is_zero()) ++m;
  UniPoly h(g.begin() + static_cast<long>(m), g.end());
  const bool zero_at_origin = m > 0;

  std::vector<IsolatedRoot> roots;
  if (uni_degree(h) >= 1) {
    const UniPoly sf = uni_squarefree(h);
    // h(0) != 0, so sf has no root at 0 and the bound lies beyond all roots.
    roots = isolate_roots(sf, Rational(0), cauchy_root_bound(sf));

    // Narrow interval roots; intervals keep nonvanishing endpoints and
    // exactly one root, so they stay pairwise disjoint and ordered.
    const Rational width_target(1, 1000000);
    const auto chain = sturm_chain(sf);
    for (auto& r : roots) {
      while (!r.exact && (r.lo.sign() <= 0 || r.hi - r.lo > width_target)) {
        const Rational mid = (r.lo + r.hi) / Rational(2);
        if (uni_eval(sf, mid).is_zero()) {
          const Rational delta = min(mid - r.lo, r.hi - mid) / Rational(2);
          r = {true, mid, mid - delta, mid + delta};
          break;
        }
        if (sturm_count_roots(chain, r.lo, mid) == 1)
          r.hi = mid;
        else
          r.lo = mid;
      }
    }
  }

  // One sample per constant-sign region between consecutive zeros.
  std::vector<Rational> samples;
  Rational prev_right(0);
  for (const auto& r : roots) {
    samples.push_back((prev_right + r.lo) / Rational(2));
    prev_right = r.hi;
  }
  samples.push_back(prev_right + Rational(1));
  for (const auto& s : samples) {
    const Rational val = uni_eval(h, s);
    if (val.sign() < 0) return {RealLineVerdict::Kind::Refuted, s, true, val};
  }

  if (zero_at_origin) return {RealLineVerdict::Kind::Tie, Rational(0), true, Rational(0)};
  if (!roots.empty()) {
    const auto& r = roots.front();
    RealLineVerdict tie{RealLineVerdict::Kind::Tie, Rational(0), true, Rational(0)};
    tie.witness = r.exact ? r.value : (r.lo + r.hi) / Rational(2);
    tie.witness_exact = r.exact;
    tie.value_at_witness = uni_eval(h, tie.witness);
    return tie;
  }
  return {RealLineVerdict::Kind::StrictlyPositive, Rational(0), true, at0};
}

}  // namespace semiord
