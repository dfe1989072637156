#include <catch2/catch_amalgamated.hpp>

#include "semiord/io.hpp"
#include "semiord/jets.hpp"
#include "semiord/semifields.hpp"
#include "support/test_support.hpp"

using namespace semiord;
using namespace testsupport;

namespace {

Jet J(std::vector<long> coeffs) {
  Jet out;
  for (long c : coeffs) out.push_back(Rational(c));
  return out;
}

std::vector<SignSequence> all_sign_sequences(std::size_t n) {
  std::vector<SignSequence> out;
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    SignSequence eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = (mask >> i) & 1 ? -1 : 1;
    out.push_back(std::move(eps));
  }
  return out;
}

}  // namespace

TEST_CASE("truncated ring arithmetic") {
  CHECK(jet_mul(J({1, 1}), J({1, -1})) == J({1, 0}));
  CHECK(jet_mul(J({1, 1, 0}), J({1, 1, 0})) == J({1, 2, 1}));
  CHECK(jet_mul(J({0, 1}), J({0, 1})) == J({0, 0}));
  CHECK_THROWS_AS(jet_add(J({1}), J({1, 2})), length_mismatch);
}

TEST_CASE("jet inversion") {
  // (2 + 3X)^{-1} = 1/2 - 3/4 X
  const Jet inv2 = jet_inv(Jet{Rational(2), Rational(3)});
  CHECK(inv2[0] == Rational(1, 2));
  CHECK(inv2[1] == Rational(-3, 4));

  // geometric series truncation
  CHECK(jet_inv(J({1, 1, 0})) == J({1, -1, 1}));
  CHECK(jet_inv(J({1})) == J({1}));
  CHECK_THROWS_AS(jet_inv(J({0, 1})), non_invertible);

  SECTION("500 random invertible jets per length") {
    SampleRng rng(51);
    for (std::size_t n : {2u, 3u, 5u}) {
      Jet one(n, Rational(0));
      one[0] = Rational(1);
      for (int i = 0; i < 500; ++i) {
        Jet a = random_jet(rng, n);
        if (a[0].is_zero()) a[0] = rng.positive_rational();
        REQUIRE(jet_mul(a, jet_inv(a)) == one);
      }
    }
  }
}

TEST_CASE("cone membership") {
  const SignSequence pp{1, 1}, pm{1, -1};
  CHECK(jet_is_positive(J({0, 1}), pp));
  CHECK_FALSE(jet_is_positive(J({0, 1}), pm));
  CHECK(jet_is_positive(J({0, -1}), pm));
  CHECK_FALSE(jet_is_positive(J({0, 0}), pp));
  CHECK(jet_is_positive(J({3, -7}), pp));
}

TEST_CASE("positivator membership") {
  const SignSequence pp{1, 1};
  CHECK(jet_in_positivator(J({1, -5}), pp));
  CHECK_FALSE(jet_in_positivator(J({-1, 0}), pp));
  CHECK(jet_in_positivator(J({1, 0}), pp));
  CHECK(jet_in_positivator(J({0, 0}), pp));

  // boundary: residue value 0 decided by the action on cone generators
  CHECK(jet_in_positivator(J({0, 1}), pp));
  CHECK_FALSE(jet_in_positivator(J({0, 1}), SignSequence{1, -1}));
  CHECK_FALSE(jet_in_positivator(J({0, -1}), pp));

  SECTION("strict residue test agrees with the basis-action route") {
    SampleRng rng(52);
    for (std::size_t n : {2u, 3u, 4u}) {
      for (const auto& eps : all_sign_sequences(n)) {
        for (int i = 0; i < 100; ++i) {
          Jet a = random_jet(rng, n);
          if (a[0].is_zero()) continue;
          CHECK(jet_in_positivator(a, eps) == (a[0].sign() > 0));
        }
      }
    }
  }

  SECTION("positivator is multiplicative and preserves the cone") {
    SampleRng rng(53);
    const std::size_t n = 3;
    for (const auto& eps : all_sign_sequences(n)) {
      int seen = 0;
      while (seen < 150) {
        Jet a = random_jet(rng, n), b = random_jet(rng, n);
        if (!jet_in_positivator(a, eps) || !jet_in_positivator(b, eps)) continue;
        ++seen;
        CHECK(jet_in_positivator(jet_mul(a, b), eps));
        Jet x = random_jet(rng, n);
        if (jet_is_positive(x, eps)) {
          const Jet ax = jet_mul(a, x);
          CHECK((jet_is_zero(ax) || jet_is_positive(ax, eps)));
        }
      }
    }
  }

  SECTION("every jet enters the positivator after adding a scalar") {
    SampleRng rng(58);
    for (std::size_t n : {2u, 3u, 4u}) {
      const SignSequence eps(n, 1);
      for (int i = 0; i < 200; ++i) {
        const Jet a = random_jet(rng, n);
        bool found = false;
        for (long k = 0; k <= 200 && !found; ++k) {
          Jet shifted = a;
          shifted[0] += Rational(k);
          found = jet_in_positivator(shifted, eps);
        }
        CHECK(found);
      }
    }
  }

  SECTION("invertible positivator elements have positivator inverses") {
    SampleRng rng(54);
    for (std::size_t n : {2u, 3u, 5u}) {
      const SignSequence eps(n, 1);
      int seen = 0;
      while (seen < 200) {
        Jet a = random_jet(rng, n);
        if (a[0].sign() <= 0) continue;  // invertible + positivator
        ++seen;
        REQUIRE(jet_in_positivator(a, eps));
        CHECK(jet_in_positivator(jet_inv(a), eps));
      }
    }
  }
}

TEST_CASE("quasiordering axioms") {
  SECTION("jet algebras, every orientation up to n = 4") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& eps : all_sign_sequences(n)) {
        const auto report = check_quasiorder_axioms(TestAlgebraSpec::jet_algebra(n, eps));
        INFO("n = " << n);
        CHECK(report.all_pass());
      }
  }

  SECTION("coordinate algebras, all sign/permutation combinations at n = 2") {
    for (const auto& eps : all_sign_sequences(2))
      for (const Permutation& sigma : {Permutation{0, 1}, Permutation{1, 0}}) {
        const auto report = check_quasiorder_axioms(TestAlgebraSpec::lex_algebra(2, eps, sigma));
        CHECK(report.all_pass());
      }
  }

  SECTION("a rotated cone cannot be certified") {
    // C = {x1 + x2 > 0} plus the half-line {x1 + x2 = 0, x1 > 0}: a total
    // order cone on R^2 that is not axis-oriented.
    TestAlgebraSpec rotated;
    rotated.name = "Rotated45";
    rotated.dim = 2;
    rotated.multiply = [](const Jet& a, const Jet& b) { return lex_mul(a, b); };
    rotated.cone_strict = [](const Jet& v) {
      const Rational s = v[0] + v[1];
      if (s.sign() != 0) return s.sign() > 0;
      return v[0].sign() > 0;
    };
    rotated.spanning_family = {J({1, 1}), J({2, 1}), J({1, 2})};
    rotated.exact_positivator = nullptr;
    const auto report = check_quasiorder_axioms(rotated);
    CHECK(report.addition_closed);
    CHECK(report.antisymmetric);
    CHECK_FALSE(report.spanning);
  }
}

TEST_CASE("classification in dimension at most two") {
  const auto e1 = classify_dim2(Dim2AlgebraSpec::real_line(1));
  CHECK(e1.entry == Dim2Classification::Entry::RealLine);
  CHECK(e1.signs == SignSequence{1});

  const auto e2 = classify_dim2(Dim2AlgebraSpec::from_quotient(Rational(1), {1, -1}));
  CHECK(e2.entry == Dim2Classification::Entry::SplitPair);

  const auto e3 = classify_dim2(Dim2AlgebraSpec::from_quotient(Rational(0), {1, -1}));
  CHECK(e3.entry == Dim2Classification::Entry::DualNumbers);
  CHECK(e3.signs == SignSequence{1, -1});

  const auto c = classify_dim2(Dim2AlgebraSpec::from_quotient(Rational(-1), {1, 1}));
  CHECK(c.entry == Dim2Classification::Entry::NotATestAlgebra);

  // every sign choice lands in the table
  for (int s1 : {1, -1}) {
    CHECK(classify_dim2(Dim2AlgebraSpec::real_line(s1)).entry ==
          Dim2Classification::Entry::RealLine);
    for (int s2 : {1, -1}) {
      CHECK(classify_dim2(Dim2AlgebraSpec::from_quotient(Rational(1), {s1, s2})).entry ==
            Dim2Classification::Entry::SplitPair);
      CHECK(classify_dim2(Dim2AlgebraSpec::from_quotient(Rational(0), {s1, s2})).entry ==
            Dim2Classification::Entry::DualNumbers);
    }
  }
}

TEST_CASE("dual-number semifield") {
  DualNumberSemifield D;
  CHECK(dual_compare(D.make(Rational(1), Rational(2)), D.make(Rational(1), Rational(5))) ==
        Comparison::LessStrict);
  CHECK(dual_compare(D.make(Rational(1), Rational(2)), D.make(Rational(2), Rational(0))) ==
        Comparison::Incomparable);
  const DualNumber inv = dual_inv(D.make(Rational(2), Rational(3)));
  CHECK(inv.r == Rational(1, 2));
  CHECK(inv.s == Rational(-3, 4));
  CHECK_THROWS_AS(dual_inv(DualNumber{}), inversion_of_zero);

  SECTION("x + x^{-1} = 2 on the unit fiber") {
    SampleRng rng(55);
    for (int i = 0; i < 300; ++i) {
      const auto x = D.make(Rational(1), rng.signed_rational(10));
      CHECK(D.add(x, D.inv(x)) == from_natural(D, 2));
    }
  }
}

TEST_CASE("lexicographic positive jets") {
  LexJetSemifield F(3);
  const auto x = F.make(Jet{Rational(2), Rational(0), Rational(0)});
  const auto y = F.make(Jet{Rational(1), Rational(5), Rational(0)});
  const auto z = F.make(Jet{Rational(1), Rational(0), Rational(3)});

  SECTION("heights") {
    CHECK(height(F, x) == HeightValue::of(0));
    CHECK(height(F, y) == HeightValue::of(1));
    CHECK(height(F, z) == HeightValue::of(2));
    CHECK(height(F, F.one()) == HeightValue::inf());
    CHECK_THROWS_AS(height(F, F.zero()), height_of_zero);
  }

  SECTION("height laws on samples") {
    SampleRng rng(56);
    const auto gen = [&](SampleRng& r) {
      Jet c(3);
      c[0] = r.positive_rational();
      c[1] = r.signed_rational(40);
      c[2] = r.signed_rational(40);
      return F.make(std::move(c));
    };
    for (int i = 0; i < 400; ++i) {
      const auto a = gen(rng), b = gen(rng);
      const auto ha = height(F, a), hb = height(F, b), hab = height(F, F.mul(a, b));
      if (!(ha == hb)) {
        CHECK(hab == height_min(ha, hb));
      } else {
        CHECK(ha <= hab);
      }
      // add_height on the semifield of fractions:
      // height((a + c)/(b + c)) >= height(a/b)
      const auto c = gen(rng);
      const auto lhs = F.mul(F.add(a, c), F.inv(F.add(b, c)));
      CHECK(height(F, F.mul(a, F.inv(b))) <= height(F, lhs));
    }
  }

  SECTION("truncated orders") {
    // ratio of x (height 0) against 1: order decides at level 0
    CHECK(leq_at_level(F, F.one(), x, 0));
    CHECK_FALSE(leq_at_level(F, x, F.one(), 0));
    // y differs from 1 first at X: equivalent at level 0, ordered at level 1
    CHECK(leq_at_level(F, y, F.one(), 0));
    CHECK(leq_at_level(F, F.one(), y, 0));
    CHECK(leq_at_level(F, F.one(), y, 1));
    CHECK_FALSE(leq_at_level(F, y, F.one(), 1));
    // z separates only at level 2
    CHECK(leq_at_level(F, F.one(), z, 1));
    CHECK(leq_at_level(F, z, F.one(), 1));
    CHECK(leq_at_level(F, F.one(), z, 2));
    CHECK_FALSE(leq_at_level(F, z, F.one(), 2));
  }

  SECTION("total preorder and laws") {
    SampleRng rng(57);
    const auto gen = [&](SampleRng& r) -> LexJetSemifield::value_type {
      if (r.integer(1, 10) == 1) return F.zero();
      Jet c(3);
      c[0] = r.positive_rational();
      c[1] = r.signed_rational(30);
      c[2] = r.signed_rational(30);
      return F.make(std::move(c));
    };
    for (int i = 0; i < 300; ++i) {
      const auto a = gen(rng), b = gen(rng);
      CHECK(F.compare(a, b) != Comparison::Incomparable);
      if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
    }
  }
}
