#pragma once

#include <cstddef>

#include "semiord/polynomial.hpp"

namespace semiord {

/// Symbolic verification of the two-sided identity in N[A_0..A_n, B_0..B_n, X, Y]
/// whose sides differ only by X <-> Y in their first factors. The shared
/// normal form equals sum_{i,j} A_i B_j sum_{l+m=i+j-1} X^l Y^m.
struct CuriousIdentityReport {
  bool equal;
  bool matches_closed_form;
  Polynomial normal_form;
  std::size_t grouped_terms;  // (i, j) pairs with a nonempty inner sum
  std::size_t monomials;      // monomial count of the normal form
};

inline CuriousIdentityReport verify_curious_identity(unsigned n) {
  const unsigned d = 2 * n + 4;
  const unsigned a_base = 0, b_base = n + 1, x_var = 2 * n + 2, y_var = 2 * n + 3;

  const auto A = [&](unsigned i) { return Polynomial::variable(d, a_base + i); };
  const auto B = [&](unsigned i) { return Polynomial::variable(d, b_base + i); };
  const auto xy_monomial = [&](unsigned xe, unsigned ye) {
    MultiIndex m(d, 0);
    m[x_var] = xe;
    m[y_var] = ye;
    return Polynomial::monomial(d, std::move(m), Rational(1));
  };

  Polynomial sum_B_Y = Polynomial::zero(d), sum_A_X = Polynomial::zero(d);
  Polynomial sum_B_X = Polynomial::zero(d), sum_A_Y = Polynomial::zero(d);
  for (unsigned j = 0; j <= n; ++j) {
    sum_B_Y = sum_B_Y + B(j) * xy_monomial(0, j);
    sum_A_X = sum_A_X + A(j) * xy_monomial(j, 0);
    sum_B_X = sum_B_X + B(j) * xy_monomial(j, 0);
    sum_A_Y = sum_A_Y + A(j) * xy_monomial(0, j);
  }

  Polynomial lhs = Polynomial::zero(d), rhs = Polynomial::zero(d);
  for (unsigned i = 0; i <= n; ++i) {
    Polynomial second = Polynomial::zero(d);
    for (unsigned k = 1; k <= i; ++k) second = second + xy_monomial(i - k, k - 1);
    lhs = lhs + (A(i) * sum_B_Y + B(i) * sum_A_X) * second;
    rhs = rhs + (A(i) * sum_B_X + B(i) * sum_A_Y) * second;
  }

  Polynomial closed = Polynomial::zero(d);
  std::size_t grouped = 0;
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) {
      if (i + j == 0) continue;
      ++grouped;
      Polynomial inner = Polynomial::zero(d);
      for (unsigned l = 0; l + 1 <= i + j; ++l) inner = inner + xy_monomial(l, i + j - 1 - l);
      closed = closed + A(i) * B(j) * inner;
    }

  CuriousIdentityReport report{lhs == rhs, lhs == closed, lhs, grouped, lhs.term_count()};
  return report;
}

}  // namespace semiord
