#include <doctest.h>

#include "qshuffle/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

LaurentPoly P(const char *text) { return LaurentPoly::parse(text); }

} // namespace

TEST_CASE("ring operations") {
  const LaurentPoly a = LaurentPoly::q(1) + LaurentPoly::q(-1);
  CHECK(a + LaurentPoly() == a);
  CHECK(a * (LaurentPoly::q(1) - LaurentPoly::q(-1)) == LaurentPoly::q(2) - LaurentPoly::q(-2));
  CHECK((LaurentPoly::q(2) + 1).shifted(-2) == LaurentPoly(1) + LaurentPoly::q(-2));
  CHECK((a - a).is_zero());
  CHECK((-a).coefficient(1) == -1);
  CHECK(LaurentPoly::from_terms({{1, 2}, {1, -2}, {0, 0}}).is_zero());
}

TEST_CASE("normal form has no zero coefficients") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly p = random_poly(rng) * random_poly(rng) + random_poly(rng);
    for (const auto &term : p.terms())
      CHECK(term.coeff != 0);
    for (std::size_t k = 1; k < p.term_count(); ++k)
      CHECK(p.terms()[k - 1].exp < p.terms()[k].exp);
  }
}

TEST_CASE("bar involution") {
  CHECK((LaurentPoly::q(2) + LaurentPoly::q(1)).bar() == LaurentPoly::q(-2) + LaurentPoly::q(-1));
  CHECK(qi(2).bar() == qi(2));
  CHECK(LaurentPoly().bar().is_zero());
  CHECK(qi(2).is_bar_symmetric());
  CHECK_FALSE(LaurentPoly::q(1).is_bar_symmetric());
  CHECK(P("q^2 + 1 + q^-2").is_bar_symmetric());
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly p = random_poly(rng);
    CHECK(p.bar().bar() == p);
  }
}

TEST_CASE("q-integers, factorials and binomials") {
  CHECK(qi(2) == P("q + q^-1"));
  CHECK(qi(3) == P("q^2 + 1 + q^-2"));
  CHECK(qi(0).is_zero());
  CHECK(qi(2, 3) == P("q^3 + q^-3"));
  CHECK(q_binom(2, 1) == qi(2));
  CHECK(q_binom(4, 2) == P("q^4 + q^2 + 2 + q^-2 + q^-4"));
  CHECK(q_factorial(3) == qi(3) * qi(2));
  for (int d = 1; d <= 3; ++d)
    for (int k = 0; k <= 12; ++k) {
      CHECK(q_int(k, d).is_bar_symmetric());
      CHECK(q_int(k, d).eval_at_one() == k);
    }
  // Pascal rule [m,k] = q^k [m-1,k] + q^{k-m} [m-1,k-1]
  for (int m = 1; m <= 8; ++m)
    for (int k = 1; k < m; ++k)
      CHECK(q_binom(m, k) == q_binom(m - 1, k).shifted(k) + q_binom(m - 1, k - 1).shifted(k - m));
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("1 - q^4"), P("1 - q^2")) == P("1 + q^2"));
  CHECK(exact_div(P("q^2 + 2 + q^-2"), qi(2)) == qi(2));
  CHECK_THROWS_AS(exact_div(P("q + 1"), P("q - 1")), inexact_division);
  CHECK_THROWS_AS(exact_div(P("q"), LaurentPoly()), inexact_division);
  CHECK(exact_div(LaurentPoly(), qi(2)).is_zero());
  std::mt19937 rng(2);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly p = random_poly(rng), d = random_nonzero_poly(rng);
    CHECK(exact_div(p * d, d) == p);
  }
}

TEST_CASE("exact square roots") {
  CHECK(sqrt_exact(P("q^2 + 2 + q^-2")) == qi(2));
  CHECK(sqrt_exact(LaurentPoly(1)) == LaurentPoly(1));
  // [2][3] multiplied out by hand: (q + q^-1)(q^2 + 1 + q^-2)
  const LaurentPoly s = P("q^3 + 2*q + 2*q^-1 + q^-3");
  CHECK(sqrt_exact(s * s) == s);
  CHECK(sqrt_exact((qi(2) * qi(3)).pow(2)) == s);
  CHECK_THROWS_AS(sqrt_exact(P("q^2 + 1")), not_a_perfect_square);
  CHECK_THROWS_AS(sqrt_exact(P("2")), not_a_perfect_square);
  CHECK_THROWS_AS(sqrt_exact(P("q")), not_a_perfect_square);
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly r = random_nonzero_poly(rng);
    LaurentPoly root = sqrt_exact(r * r);
    CHECK((root == r || root == -r));
    CHECK(root.leading_coefficient() > 0);
  }
}

TEST_CASE("positive part") {
  CHECK(P("q^2 + 1 + q^-2").positive_part() == P("q^2"));
  CHECK(P("q^-1").positive_part().is_zero());
  CHECK(P("q^3 + q").positive_part() == P("q^3 + q"));
  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly p = random_poly(rng);
    CHECK(p.positive_part() + p.bar().positive_part().bar() + LaurentPoly(p.coefficient(0)) == p);
  }
}

TEST_CASE("text round trip") {
  CHECK(P("q^3 + 2*q + 2*q^-1 + q^-3").to_string() == "q^3 + 2*q + 2*q^-1 + q^-3");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly::q(1).to_string() == "q");
  CHECK((-LaurentPoly::q(1)).to_string() == "-q");
  CHECK(P("-3*q^-2 - 1").to_string() == "-1 - 3*q^-2");
  CHECK_THROWS_AS(P("q^"), parse_error);
  CHECK_THROWS_AS(P("2**q"), parse_error);
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly p = random_poly(rng, 6, 6, 1000);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("big coefficients") {
  LaurentPoly p = (LaurentPoly::q(1) + 1).pow(200);
  CHECK(p.coefficient(100) > Integer("1000000000000000000000000000000"));
  CHECK(exact_div(p, (LaurentPoly::q(1) + 1).pow(199)) == LaurentPoly::q(1) + 1);
  CHECK(p.eval_at_one() == Integer(1) << 200);
}
