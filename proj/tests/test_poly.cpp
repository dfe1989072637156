#include <catch2/catch_amalgamated.hpp>

#include "semiord/curious.hpp"
#include "semiord/fractions.hpp"
#include "semiord/io.hpp"
#include "semiord/polynomial.hpp"
#include "support/test_support.hpp"

using namespace semiord;
using namespace testsupport;

namespace {

Polynomial P(const std::string& literal) { return parse_univariate_literal(literal); }

}  // namespace

TEST_CASE("sparse arithmetic") {
  CHECK(P("1+X") * P("1+X") == P("1+2X+X^2"));
  CHECK(P("2+X").pow(0) == P("1"));

  const Polynomial a = Polynomial::constant(2, Rational(2)) + Polynomial::variable(2, 0);
  const Polynomial b = Polynomial::constant(2, Rational(3)) + Polynomial::variable(2, 1);
  Polynomial expect(2);
  expect.add_term({0, 0}, Rational(6));
  expect.add_term({0, 1}, Rational(2));
  expect.add_term({1, 0}, Rational(3));
  expect.add_term({1, 1}, Rational(1));
  CHECK(a * b == expect);

  CHECK_THROWS_AS(a + P("1+X"), variable_count_mismatch);
  CHECK_THROWS_AS(Polynomial(1).add_term({0}, Rational(-1)), error);
}

TEST_CASE("coefficientwise order") {
  CHECK(coeffwise_leq(P("1+X"), P("2+X")) == Comparison::LessStrict);
  CHECK(coeffwise_leq(P("1+2X"), P("2+X")) == Comparison::Incomparable);
  CHECK(coeffwise_leq(P("5+X^3"), P("5+X^3")) == Comparison::Equivalent);
  CHECK(coeffwise_leq(P("2+X"), P("1+X")) == Comparison::GreaterStrict);
}

TEST_CASE("power universal element") {
  CHECK(power_universal(1) == P("2+X"));
  Polynomial u2(2);
  u2.add_term({0, 0}, Rational(2));
  u2.add_term({1, 0}, Rational(1));
  u2.add_term({0, 1}, Rational(1));
  CHECK(power_universal(2) == u2);
  CHECK(power_universal(3).term_count() == 4);
  CHECK_THROWS_AS(power_universal(0), error);
}

TEST_CASE("evaluation maps") {
  CHECK(point_eval(P("2+X"), {Rational(3)}) == Rational(5));
  CHECK(point_eval(P("1+4X+X^2"), {Rational(1)}) == Rational(6));
  CHECK(point_eval(P("7+2X+9X^5"), {Rational(0)}) == Rational(7));
  CHECK_THROWS_AS(point_eval(P("1+X"), {Rational(1), Rational(1)}), dimension_mismatch);

  SECTION("a monotone homomorphism at each fixed point") {
    SampleRng rng(21);
    for (int i = 0; i < 200; ++i) {
      const Polynomial p = random_polynomial(rng, 2, 5, 4);
      const Polynomial q = random_polynomial(rng, 2, 5, 4);
      const std::vector<Rational> r{rng.nonneg_rational(), rng.nonneg_rational()};
      CHECK(point_eval(p + q, r) == point_eval(p, r) + point_eval(q, r));
      CHECK(point_eval(p * q, r) == point_eval(p, r) * point_eval(q, r));
      if (holds_le(coeffwise_leq(p, q))) CHECK(point_eval(p, r) <= point_eval(q, r));
    }
  }
}

TEST_CASE("tropical evaluation is the Newton support function") {
  Polynomial p(2);
  p.add_term({0, 0}, Rational(2));
  p.add_term({1, 0}, Rational(1));
  p.add_term({1, 1}, Rational(1));
  CHECK(*tropical_eval(p, {Rational(1), Rational(1)}) == Rational(2));
  CHECK(*tropical_eval(p, {Rational(0), Rational(0)}) == Rational(0));
  CHECK_FALSE(tropical_eval(Polynomial::zero(2), {Rational(1), Rational(1)}).has_value());

  SECTION("max-plus homomorphism") {
    SampleRng rng(22);
    for (int i = 0; i < 300; ++i) {
      const Polynomial a = random_polynomial(rng, 2, 5, 5);
      const Polynomial b = random_polynomial(rng, 2, 5, 5);
      const std::vector<Rational> alpha{rng.nonneg_rational(), rng.nonneg_rational()};
      CHECK(*tropical_eval(a * b, alpha) == *tropical_eval(a, alpha) + *tropical_eval(b, alpha));
      CHECK(*tropical_eval(a + b, alpha) ==
            max(*tropical_eval(a, alpha), *tropical_eval(b, alpha)));
    }
  }
}

TEST_CASE("chaining: a + x <= a + y gives a + nx <= a + ny") {
  SampleRng rng(23);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = random_polynomial(rng, 1, 4, 5);
    const Polynomial x = random_polynomial(rng, 1, 4, 5);
    const Polynomial y = x + random_polynomial(rng, 1, 3, 5);
    REQUIRE(holds_le(coeffwise_leq(a + x, a + y)));
    for (unsigned long n = 2; n <= 10; ++n) {
      const Rational nn(static_cast<long>(n));
      CHECK(holds_le(coeffwise_leq(a + nn * x, a + nn * y)));
    }
  }
}

TEST_CASE("add_to_mult: x + 1 <= y + 1 gives p(x) <= p(y)") {
  SampleRng rng(24);
  for (int i = 0; i < 100; ++i) {
    const Polynomial x = random_polynomial(rng, 1, 3, 3);
    const Polynomial y = x + random_polynomial(rng, 1, 2, 3);
    // p over N with all coefficients >= 1 up to its degree
    Polynomial p(1);
    const unsigned deg = static_cast<unsigned>(rng.integer(1, 4));
    for (unsigned j = 0; j <= deg; ++j) p.add_term({j}, Rational(rng.integer(1, 5)));
    CHECK(holds_le(coeffwise_leq(substitute_univariate(p, x), substitute_univariate(p, y))));
  }
}

TEST_CASE("curious polynomial identity") {
  SECTION("n = 0: both sides empty") {
    const auto rep = verify_curious_identity(0);
    CHECK(rep.equal);
    CHECK(rep.matches_closed_form);
    CHECK(rep.normal_form.is_zero());
    CHECK(rep.grouped_terms == 0);
    CHECK(rep.monomials == 0);
  }

  SECTION("n = 1: frozen normal form") {
    const auto rep = verify_curious_identity(1);
    CHECK(rep.equal);
    CHECK(rep.matches_closed_form);
    // A0 B1 + A1 B0 + A1 B1 X + A1 B1 Y in variables (A0, A1, B0, B1, X, Y)
    Polynomial expect(6);
    expect.add_term({1, 0, 0, 1, 0, 0}, Rational(1));
    expect.add_term({0, 1, 1, 0, 0, 0}, Rational(1));
    expect.add_term({0, 1, 0, 1, 1, 0}, Rational(1));
    expect.add_term({0, 1, 0, 1, 0, 1}, Rational(1));
    CHECK(rep.normal_form == expect);
    CHECK(rep.grouped_terms == 3);
    CHECK(rep.monomials == 4);
  }

  SECTION("equal and matching the closed form for n up to 6") {
    for (unsigned n = 0; n <= 6; ++n) {
      const auto rep = verify_curious_identity(n);
      INFO("n = " << n);
      CHECK(rep.equal);
      CHECK(rep.matches_closed_form);
      CHECK(rep.grouped_terms == (n + 1) * (n + 1) - 1);
    }
  }
}

TEST_CASE("ordered fractions") {
  const auto one = PositiveConstantPolynomial(P("1"));
  const OrderedFraction f{PositiveConstantPolynomial(P("1+X")), one};
  const OrderedFraction g{PositiveConstantPolynomial(P("2+X")), one};
  CHECK(frac_leq(f, g) == Comparison::LessStrict);
  CHECK(frac_leq(f, f) == Comparison::Equivalent);

  const OrderedFraction h{PositiveConstantPolynomial(P("1+2X")), one};
  const OrderedFraction k{PositiveConstantPolynomial(P("2+X+X^2")), one};
  CHECK(frac_leq(h, k) == Comparison::LessStrict);

  // equal fractions with different representatives
  const OrderedFraction f2{PositiveConstantPolynomial(P("2+2X")),
                           PositiveConstantPolynomial(P("2"))};
  CHECK(f == f2);
  CHECK(frac_leq(f, f2) == Comparison::Equivalent);

  // a genuinely incomparable-looking pair exhausts the budget
  const OrderedFraction p{PositiveConstantPolynomial(P("2+X")), one};
  const OrderedFraction q{PositiveConstantPolynomial(P("1+3X")), one};
  CHECK(frac_leq(p, q, SearchBudget{4, 4}) == Comparison::Unknown);

  // transitivity along a decided chain, including nontrivial denominators
  const OrderedFraction a{PositiveConstantPolynomial(P("1+2X")),
                          PositiveConstantPolynomial(P("2+X"))};
  const OrderedFraction b{PositiveConstantPolynomial(P("2+X+X^2")),
                          PositiveConstantPolynomial(P("2+X"))};
  const OrderedFraction cfr{PositiveConstantPolynomial(P("4+2X+2X^2")),
                            PositiveConstantPolynomial(P("2+X"))};
  const SearchBudget chain_budget{8, 8};
  CHECK(frac_leq(a, b, chain_budget) == Comparison::LessStrict);
  CHECK(frac_leq(b, cfr, chain_budget) == Comparison::LessStrict);
  CHECK(frac_leq(a, cfr, chain_budget) == Comparison::LessStrict);

  CHECK_THROWS_AS(OrderedFraction(PositiveConstantPolynomial(Polynomial::zero(1)), one),
                  zero_polynomial);
}

TEST_CASE("positive constant subsemiring") {
  CHECK_NOTHROW(PositiveConstantPolynomial(P("1+X")));
  CHECK_NOTHROW(PositiveConstantPolynomial(Polynomial::zero(1)));
  Polynomial no_const(1);
  no_const.add_term({1}, Rational(1));
  CHECK_THROWS_AS(PositiveConstantPolynomial(no_const), error);

  CHECK(P("1+2X").is_integral());
  Polynomial frac(1);
  frac.add_term({0}, Rational(1, 2));
  CHECK_FALSE(frac.is_integral());
}

TEST_CASE("polynomial JSON round trip and canonical order") {
  SampleRng rng(25);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = random_polynomial(rng, static_cast<unsigned>(rng.integer(1, 3)), 6, 5);
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  }

  // input term order is irrelevant, output is graded-lex
  const auto j = Json::parse(
      R"({"vars": 1, "terms": [{"exp": [2], "coeff": "1"}, {"exp": [0], "coeff": "3/2"}]})");
  const Polynomial p = polynomial_from_json(j);
  CHECK(polynomial_to_json(p)["terms"][0]["exp"][0] == 0);
  CHECK(polynomial_to_json(p)["terms"][1]["exp"][0] == 2);
  CHECK(p.coefficient({0}) == Rational(3, 2));
}

TEST_CASE("univariate literals") {
  CHECK(P("1+2X+X^2").term_count() == 3);
  CHECK(P("3/2") == Polynomial::constant(1, Rational(3, 2)));
  CHECK(P("2*X^3").coefficient({3}) == Rational(2));
  CHECK(P("X") == Polynomial::variable(1, 0));
  CHECK_THROWS_AS(P("1-X"), parse_error);
  CHECK_THROWS_AS(P("1.5"), parse_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
}
