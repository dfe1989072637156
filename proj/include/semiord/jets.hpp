#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiord/compare.hpp"
#include "semiord/errors.hpp"
#include "semiord/rational.hpp"
#include "semiord/rng.hpp"
#include "semiord/semifields.hpp"

namespace semiord {

/// Element of R[X]/(X^n): coefficient of X^i at index i, fixed length n.
using Jet = std::vector<Rational>;

/// Signs (+1/-1) orienting the lexicographic cone, one per coefficient.
using SignSequence = std::vector<int>;

inline void require_signs(const SignSequence& eps, std::size_t n) {
  if (eps.size() != n) throw length_mismatch();
  for (int e : eps)
    if (e != 1 && e != -1) throw error("sign sequence entries must be +1 or -1");
}

inline bool jet_is_zero(const Jet& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c.is_zero(); });
}

inline Jet jet_add(const Jet& a, const Jet& b) {
  if (a.size() != b.size()) throw length_mismatch();
  Jet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Jet jet_neg(const Jet& a) {
  Jet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

/// Truncated product: all terms of degree >= n are dropped.
inline Jet jet_mul(const Jet& a, const Jet& b) {
  if (a.size() != b.size()) throw length_mismatch();
  Jet out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Truncated power-series inverse; requires a nonzero constant coefficient.
/// jet_mul(a, jet_inv(a)) is exactly 1.
inline Jet jet_inv(const Jet& a) {
  if (a.empty() || a[0].is_zero())
    throw non_invertible("jet with zero constant coefficient has no inverse");
  Jet out(a.size(), Rational(0));
  out[0] = a[0].inverse();
  for (std::size_t k = 1; k < a.size(); ++k) {
    Rational acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * out[k - i];
    out[k] = -acc / a[0];
  }
  return out;
}

/// Strict cone membership: the first nonzero coefficient r_j satisfies
/// eps_j r_j > 0. Zero is in the cone but not strictly positive.
inline bool jet_is_positive(const Jet& a, const SignSequence& eps) {
  require_signs(eps, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_zero()) continue;
    return eps[j] * a[j].sign() > 0;
  }
  return false;
}

/// Positivator membership for the local algebra R[X]/(X^n): a preserves the
/// cone iff it does on the n cone-generating basis jets eps_j X^j, since the
/// leading coefficient of a product is the product of leading coefficients.
/// For a with nonzero constant coefficient this agrees with positivity of
/// the residue value a_0.
inline bool jet_in_positivator(const Jet& a, const SignSequence& eps) {
  require_signs(eps, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    Jet gen(a.size(), Rational(0));
    gen[j] = Rational(eps[j]);
    const Jet image = jet_mul(a, gen);
    if (!jet_is_zero(image) && !jet_is_positive(image, eps)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Coordinate algebras R^n with axis-oriented lexicographic cones
// ---------------------------------------------------------------------------

using Permutation = std::vector<std::size_t>;

inline void require_permutation(const Permutation& sigma, std::size_t n) {
  if (sigma.size() != n) throw length_mismatch();
  std::vector<bool> seen(n, false);
  for (auto i : sigma) {
    if (i >= n || seen[i]) throw error("not a permutation");
    seen[i] = true;
  }
}

inline Jet lex_mul(const Jet& a, const Jet& b) {
  if (a.size() != b.size()) throw length_mismatch();
  Jet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

/// Cone of Example-style axis-oriented lexicographic orders on R^n: the
/// first nonzero coordinate in sigma-order has the prescribed sign.
inline bool lex_is_positive(const Jet& x, const SignSequence& eps, const Permutation& sigma) {
  require_signs(eps, x.size());
  require_permutation(sigma, x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Rational& v = x[sigma[j]];
    if (v.is_zero()) continue;
    return eps[j] * v.sign() > 0;
  }
  return false;
}

/// Positivator of the axis-oriented cone: in sigma-order the components of
/// a must be strictly positive up to some index and zero afterwards (zeros
/// may not be followed by nonzeros, and no component may be negative).
inline bool lex_in_positivator(const Jet& a, const SignSequence& eps, const Permutation& sigma) {
  require_signs(eps, a.size());
  require_permutation(sigma, a.size());
  bool seen_zero = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const int s = a[sigma[j]].sign();
    if (s < 0) return false;
    if (s == 0) seen_zero = true;
    else if (seen_zero) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quasiordering axioms
// ---------------------------------------------------------------------------

/// A finite-dimensional algebra with a candidate positive cone, reduced to
/// what the axiom checker needs. The two concrete families carry an exact
/// positivator predicate; custom cones are checked by sampling only, which
/// can refute membership but never certify it.
struct TestAlgebraSpec {
  std::string name;
  std::size_t dim;
  std::function<Jet(const Jet&, const Jet&)> multiply;
  std::function<bool(const Jet&)> cone_strict;
  std::vector<Jet> spanning_family;
  std::function<std::optional<bool>(const Jet&)> exact_positivator;

  static TestAlgebraSpec jet_algebra(std::size_t n, SignSequence eps) {
    require_signs(eps, n);
    TestAlgebraSpec spec;
    spec.name = "Jet(" + std::to_string(n) + ")";
    spec.dim = n;
    spec.multiply = [](const Jet& a, const Jet& b) { return jet_mul(a, b); };
    spec.cone_strict = [eps](const Jet& a) { return jet_is_positive(a, eps); };
    for (std::size_t j = 0; j < n; ++j) {
      Jet f(n, Rational(0));
      f[0] = Rational(1);
      if (j > 0) f[j] = Rational(1);
      spec.spanning_family.push_back(std::move(f));
    }
    spec.exact_positivator = [eps](const Jet& a) -> std::optional<bool> {
      return jet_in_positivator(a, eps);
    };
    return spec;
  }

  static TestAlgebraSpec lex_algebra(std::size_t n, SignSequence eps, Permutation sigma) {
    require_signs(eps, n);
    require_permutation(sigma, n);
    TestAlgebraSpec spec;
    spec.name = "Lex(" + std::to_string(n) + ")";
    spec.dim = n;
    spec.multiply = [](const Jet& a, const Jet& b) { return lex_mul(a, b); };
    spec.cone_strict = [eps, sigma](const Jet& a) { return lex_is_positive(a, eps, sigma); };
    Jet ones(n, Rational(1));
    spec.spanning_family.push_back(ones);
    for (std::size_t j = 0; j < n; ++j) {
      Jet f = ones;
      f[j] = Rational(2);
      spec.spanning_family.push_back(std::move(f));
    }
    spec.exact_positivator = [eps, sigma](const Jet& a) -> std::optional<bool> {
      return lex_in_positivator(a, eps, sigma);
    };
    return spec;
  }
};

struct QuasiorderReport {
  bool addition_closed = false;
  bool antisymmetric = false;
  bool spanning = false;
  std::string detail;

  bool all_pass() const { return addition_closed && antisymmetric && spanning; }
};

namespace detail {

inline std::size_t rational_rank(std::vector<Jet> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline Jet sample_cone_element(const TestAlgebraSpec& spec, SampleRng& rng) {
  for (int tries = 0; tries < 1000; ++tries) {
    Jet v(spec.dim);
    for (auto& c : v) c = rng.signed_rational(25);
    if (spec.cone_strict(v)) return v;
  }
  throw error("could not sample a cone element for " + spec.name);
}

}  // namespace detail

/// Verifies the quasiordered-ring axioms for a candidate cone:
/// (a) the cone is closed under addition on sampled pairs;
/// (b) antisymmetry kernel: x ∈ C implies -x ∉ C on samples;
/// (c) spanning: the fixed family of candidate positivator elements spans
///     the algebra and every member's cone preservation is certified
///     (exactly where an exact predicate exists, otherwise only refutable
///     by sampling, so a custom cone never gets certified — conservative).
inline QuasiorderReport check_quasiorder_axioms(const TestAlgebraSpec& spec,
                                                SampleRng rng = SampleRng(),
                                                int samples = 300) {
  QuasiorderReport report;

  report.addition_closed = true;
  for (int i = 0; i < samples; ++i) {
    const Jet x = detail::sample_cone_element(spec, rng);
    const Jet y = detail::sample_cone_element(spec, rng);
    const Jet s = jet_add(x, y);
    if (!jet_is_zero(s) && !spec.cone_strict(s)) {
      report.addition_closed = false;
      report.detail += "addition closure fails; ";
      break;
    }
  }

  report.antisymmetric = true;
  for (int i = 0; i < samples; ++i) {
    const Jet x = detail::sample_cone_element(spec, rng);
    if (spec.cone_strict(jet_neg(x))) {
      report.antisymmetric = false;
      report.detail += "cone intersects its negative; ";
      break;
    }
  }

  bool family_ok = true;
  for (const auto& f : spec.spanning_family) {
    // Sampling can refute membership for any cone.
    for (int i = 0; i < samples; ++i) {
      const Jet x = detail::sample_cone_element(spec, rng);
      const Jet fx = spec.multiply(f, x);
      if (!jet_is_zero(fx) && !spec.cone_strict(fx)) {
        family_ok = false;
        report.detail += "family element maps a cone element outside; ";
        break;
      }
    }
    if (!family_ok) break;
    if (spec.exact_positivator) {
      const auto exact = spec.exact_positivator(f);
      if (!exact || !*exact) {
        family_ok = false;
        report.detail += "family element not certified in the positivator; ";
        break;
      }
    } else {
      family_ok = false;
      report.detail += "no exact positivator predicate; membership not certifiable; ";
      break;
    }
  }
  const std::size_t rank = detail::rational_rank(spec.spanning_family);
  if (rank != spec.dim) {
    family_ok = false;
    report.detail += "family does not span (rank " + std::to_string(rank) + " of " +
                     std::to_string(spec.dim) + "); ";
  }
  report.spanning = family_ok;
  return report;
}

// ---------------------------------------------------------------------------
// Classification of test algebras of dimension <= 2
// ---------------------------------------------------------------------------

/// Input: R with a sign, or R[X]/(X^2 - r) for r in {-1, 0, +1} with a sign
/// pair (r = +1 is the split algebra R^2, r = -1 the complex numbers).
struct Dim2AlgebraSpec {
  enum class Base { RealLine, SplitPair, DualNumbers, ComplexNumbers };
  Base base;
  SignSequence signs;

  static Dim2AlgebraSpec real_line(int sign) { return {Base::RealLine, {sign}}; }
  static Dim2AlgebraSpec from_quotient(const Rational& r, SignSequence signs) {
    if (r.sign() < 0) return {Base::ComplexNumbers, std::move(signs)};
    if (r.sign() == 0) return {Base::DualNumbers, std::move(signs)};
    return {Base::SplitPair, std::move(signs)};
  }
};

struct Dim2Classification {
  enum class Entry {
    NotATestAlgebra = 0,
    RealLine = 1,       // A = R, cone ±R_+
    SplitPair = 2,      // A = R^2, lexicographic cone with sign pair
    DualNumbers = 3,    // A = R[X]/(X^2), lexicographic cone with sign pair
  };
  Entry entry;
  SignSequence signs;
};

inline Dim2Classification classify_dim2(const Dim2AlgebraSpec& spec) {
  switch (spec.base) {
    case Dim2AlgebraSpec::Base::RealLine:
      require_signs(spec.signs, 1);
      return {Dim2Classification::Entry::RealLine, spec.signs};
    case Dim2AlgebraSpec::Base::SplitPair:
      require_signs(spec.signs, 2);
      return {Dim2Classification::Entry::SplitPair, spec.signs};
    case Dim2AlgebraSpec::Base::DualNumbers:
      require_signs(spec.signs, 2);
      return {Dim2Classification::Entry::DualNumbers, spec.signs};
    case Dim2AlgebraSpec::Base::ComplexNumbers:
      // The only subsemialgebra spanning C is C itself, so no nontrivial
      // quasiordering exists.
      return {Dim2Classification::Entry::NotATestAlgebra, {}};
  }
  return {Dim2Classification::Entry::NotATestAlgebra, {}};
}

// ---------------------------------------------------------------------------
// The dual-number semifield R_(+)[X]/(X^2)
// ---------------------------------------------------------------------------

/// r + sX with r > 0, or zero; (r + sX)^{-1} = r^{-2}(r - sX). Elements are
/// comparable only when the r-components agree. Arctic: x + x^{-1} = 2 for
/// every x with r = 1.
struct DualNumber {
  bool zero = true;
  Rational r, s;

  static DualNumber of(Rational real, Rational slope) {
    if (real.sign() <= 0) throw error("dual-number r-component must be positive");
    return {false, std::move(real), std::move(slope)};
  }

  friend bool operator==(const DualNumber& a, const DualNumber& b) {
    if (a.zero || b.zero) return a.zero == b.zero;
    return a.r == b.r && a.s == b.s;
  }
};

struct DualNumberSemifield {
  using value_type = DualNumber;
  static constexpr bool totally_preordered = false;
  static constexpr bool order_cancellative = false;

  value_type zero() const { return {}; }
  value_type one() const { return DualNumber::of(Rational(1), Rational(0)); }
  value_type make(Rational r, Rational s) const { return DualNumber::of(std::move(r), std::move(s)); }
  value_type add(const value_type& a, const value_type& b) const {
    if (a.zero) return b;
    if (b.zero) return a;
    return DualNumber::of(a.r + b.r, a.s + b.s);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.zero || b.zero) return {};
    return DualNumber::of(a.r * b.r, a.r * b.s + b.r * a.s);
  }
  value_type inv(const value_type& a) const {
    if (a.zero) throw inversion_of_zero();
    const Rational r2 = (a.r * a.r).inverse();
    return DualNumber::of(a.r.inverse(), -(a.s * r2));
  }
  Comparison compare(const value_type& a, const value_type& b) const {
    if (a.zero || b.zero) return a.zero == b.zero ? Comparison::Equivalent
                                                  : Comparison::Incomparable;
    if (a.r != b.r) return Comparison::Incomparable;
    return comparison_from(a.s <= b.s, a.s >= b.s);
  }
  bool is_zero(const value_type& a) const { return a.zero; }
};

inline Comparison dual_compare(const DualNumber& a, const DualNumber& b) {
  return DualNumberSemifield{}.compare(a, b);
}

inline DualNumber dual_inv(const DualNumber& a) { return DualNumberSemifield{}.inv(a); }

// ---------------------------------------------------------------------------
// Lexicographically ordered positive jets R_(+)[X]/(X^n)
// ---------------------------------------------------------------------------

/// Truncated power series with strictly positive constant coefficient (or
/// zero), totally preordered lexicographically with highest precedence on
/// the constant term. This is the truncation-at-height-n semifield; height
/// of a nonzero element is the first coefficient where it differs from 1.
struct LexJetSemifield {
  explicit LexJetSemifield(std::size_t n) : n_(n) {
    if (n < 1) throw error("need at least one coefficient");
  }

  struct Value {
    bool zero = true;
    Jet c;

    friend bool operator==(const Value& a, const Value& b) {
      if (a.zero || b.zero) return a.zero == b.zero;
      return a.c == b.c;
    }
  };
  using value_type = Value;
  static constexpr bool totally_preordered = true;
  static constexpr bool order_cancellative = false;

  std::size_t length() const { return n_; }

  value_type zero() const { return {}; }
  value_type one() const {
    Jet c(n_, Rational(0));
    c[0] = Rational(1);
    return {false, std::move(c)};
  }
  value_type make(Jet c) const {
    if (c.size() != n_) throw length_mismatch();
    if (c[0].sign() <= 0) throw error("constant coefficient must be positive");
    return {false, std::move(c)};
  }
  value_type add(const value_type& a, const value_type& b) const {
    if (a.zero) return b;
    if (b.zero) return a;
    return {false, jet_add(a.c, b.c)};
  }
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.zero || b.zero) return {};
    return {false, jet_mul(a.c, b.c)};
  }
  value_type inv(const value_type& a) const {
    if (a.zero) throw inversion_of_zero();
    return {false, jet_inv(a.c)};
  }
  Comparison compare(const value_type& a, const value_type& b) const {
    // zero is the bottom element
    if (a.zero || b.zero) return comparison_from(a.zero, b.zero);
    for (std::size_t i = 0; i < n_; ++i) {
      if (a.c[i] == b.c[i]) continue;
      return a.c[i] < b.c[i] ? Comparison::LessStrict : Comparison::GreaterStrict;
    }
    return Comparison::Equivalent;
  }
  bool is_zero(const value_type& a) const { return a.zero; }

 private:
  std::size_t n_;
};

inline HeightValue height(const LexJetSemifield& f, const LexJetSemifield::Value& x) {
  if (f.is_zero(x)) throw height_of_zero();
  const auto unit = f.one();
  for (std::size_t i = 0; i < x.c.size(); ++i)
    if (x.c[i] != unit.c[i]) return HeightValue::of(static_cast<unsigned>(i));
  return HeightValue::inf();
}

/// The truncated order x <=_n y on the lex jets, via heights. With zero on
/// either side only 0 <=_0 y (here 0 <= 1 holds) and 0 <=_n 0 relate.
inline bool leq_at_level(const LexJetSemifield& f, const LexJetSemifield::Value& x,
                         const LexJetSemifield::Value& y, unsigned n) {
  if (f.is_zero(x) && f.is_zero(y)) return true;
  if (f.is_zero(x)) return n == 0;
  if (f.is_zero(y)) return false;
  const auto ratio_height = height(f, f.mul(x, f.inv(y)));
  if (n > 0 && ratio_height < HeightValue::of(n)) return false;
  if (HeightValue::of(n) < ratio_height) return true;
  return holds_le(f.compare(x, y));
}

}  // namespace semiord
