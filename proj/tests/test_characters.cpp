#include <doctest.h>

#include "qshuffle/characters.hpp"
#include "qshuffle/errors.hpp"
#include "support.hpp"

#include <numeric>
#include <set>

using namespace testing;

namespace {

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k)
    f *= k;
  return f;
}

// Hook length formula for a straight shape.
Integer hook_count(const std::vector<int> &lambda) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  Integer prod = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      int below = 0;
      for (std::size_t k = r + 1; k < lambda.size() && lambda[k] > c; ++k)
        ++below;
      prod *= lambda[r] - c + below;
    }
  return factorial(n) / prod;
}

// n! / prod lambda_i! * prod_{i<j} (lambda_i - lambda_j) / (lambda_i + lambda_j)
Integer shifted_count(const std::vector<int> &lambda) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  mpq_class v(factorial(n));
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    v /= mpq_class(factorial(lambda[i]));
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
      v *= mpq_class(lambda[i] - lambda[j], lambda[i] + lambda[j]);
  }
  v.canonicalize();
  REQUIRE(v.get_den() == 1);
  return v.get_num();
}

std::vector<int> trimmed(std::vector<int> p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
  return p;
}

int cell_count(const std::vector<int> &lambda, const std::vector<int> &mu) {
  return std::accumulate(lambda.begin(), lambda.end(), 0) - std::accumulate(mu.begin(), mu.end(), 0);
}

} // namespace

TEST_CASE("multisegments") {
  auto m = make_multisegment({{2, 3}, {1, 2}});
  CHECK(m == MultiSegment{{1, 2}, {2, 3}});
  CHECK(multisegment_to_good_word(m) == Word{2, 3, 1, 2});
  CHECK(multisegment_to_good_word(MultiSegment{{2, 4}}) == Word{2, 3, 4});
  CHECK(good_word_to_multisegment(Word{2, 3, 1, 2}) == m);
  CHECK_THROWS_AS(make_multisegment({{3, 2}}), usage_error);
  CHECK_THROWS_AS(good_word_to_multisegment(Word{1, 3}), usage_error);
  CHECK(standard_module_character(MultiSegment{{1, 1}, {2, 2}}) ==
        std::map<Word, Integer>{{Word{1, 2}, 1}, {Word{2, 1}, 1}});
  CHECK(standard_module_character(MultiSegment{{1, 3}}) == std::map<Word, Integer>{{Word{1, 2, 3}, 1}});
  CHECK(standard_module_character(MultiSegment{{1, 1}, {1, 1}}) == std::map<Word, Integer>{{Word{1, 1}, 2}});

  auto a3 = datum("A3");
  GoodLyndonTable table(a3);
  for (const auto &nu : weights_up_to_height(3, 6))
    for (const auto &g : good_words_of_weight(table, nu)) {
      auto ms = good_word_to_multisegment(g.word);
      CHECK(std::is_sorted(ms.begin(), ms.end()));
      CHECK(multisegment_to_good_word(ms) == g.word);
    }

  auto a2 = datum("A2");
  DualBasis basis(a2);
  for (const auto &nu : weights_up_to_height(2, 4))
    for (const auto &g : good_words_of_weight(basis.table(), nu))
      CHECK(standard_module_character(good_word_to_multisegment(g.word)) ==
            specialize_q1(basis.dual_pbw(g.word).elt));
}

TEST_CASE("shape parsing and constraints") {
  auto s = parse_skew_shape("5,5,3/3,1+3");
  CHECK(s.lambda == std::vector<int>{5, 5, 3});
  CHECK(s.mu == std::vector<int>{3, 1});
  CHECK(s.shift == 3);
  CHECK(to_string(s) == "5,5,3/3,1+3");
  CHECK(parse_skew_shape("2,1/0").mu.empty());
  CHECK(parse_skew_shape("2,1").mu.empty());
  auto t = parse_shifted_shape("5,3,2");
  CHECK(t.lambda == std::vector<int>{5, 3, 2});
  CHECK_THROWS_AS(parse_shifted_shape("3,1+2"), parse_error);
  CHECK_THROWS_AS(parse_skew_shape("3,x"), parse_error);

  auto a3 = datum("A3");
  SkewShape ok{{2, 1}, {}, 2};
  CHECK_NOTHROW(check_shape(ok, *a3));
  CHECK_THROWS_AS(check_shape(SkewShape{{2, 1}, {}, 1}, *a3), shape_constraint_violated);
  CHECK_THROWS_AS(check_shape(SkewShape{{2, 1}, {}, 3}, *a3), shape_constraint_violated);
  CHECK_THROWS_AS(check_shape(SkewShape{{1, 2}, {}, 2}, *a3), shape_constraint_violated);
  CHECK_THROWS_AS(check_shape(SkewShape{{2, 1}, {3}, 2}, *a3), shape_constraint_violated);
  CHECK_THROWS_AS(check_shape(SkewShape{{2, 1}, {}, 2}, *datum("B3")), shape_constraint_violated);
  auto b3 = datum("B3");
  CHECK_NOTHROW(check_shape(ShiftedShape{{3, 1}, {1}}, *b3));
  CHECK_THROWS_AS(check_shape(ShiftedShape{{2, 2}, {}}, *b3), shape_constraint_violated);
  CHECK_THROWS_AS(check_shape(ShiftedShape{{4}, {}}, *b3), shape_constraint_violated);
  CHECK_THROWS_AS(check_shape(ShiftedShape{{2}, {2}}, *b3), shape_constraint_violated);
  CHECK_THROWS_AS(check_shape(ShiftedShape{{2}, {}}, *a3), shape_constraint_violated);
}

TEST_CASE("tableau words of the two pictured tableaux") {
  auto skew = tableau_words(SkewShape{{5, 5, 3}, {3, 1}, 3});
  CHECK(std::find(skew.begin(), skew.end(), Word{3, 4, 6, 1, 7, 5, 2, 3, 6}) != skew.end());
  auto shifted = tableau_words(ShiftedShape{{5, 3, 2}, {}});
  CHECK(std::find(shifted.begin(), shifted.end(), Word{1, 2, 3, 1, 2, 4, 1, 3, 2, 5}) != shifted.end());
  CHECK(shape_good_word(ShiftedShape{{5, 3, 2}, {}}) == Word{1, 2, 3, 4, 5, 1, 2, 3, 1, 2});
}

TEST_CASE("tableau counts") {
  for (int n = 1; n <= 7; ++n)
    for (const auto &s : all_skew_shapes(7, n)) {
      if (!s.mu.empty() || cell_count(s.lambda, s.mu) != n)
        continue;
      CHECK(Integer(tableau_words(s).size()) == hook_count(s.lambda));
    }
  for (const auto &s : all_shifted_shapes(6, 8))
    if (s.mu.empty())
      CHECK(Integer(tableau_words(s).size()) == shifted_count(s.lambda));
  CHECK(tableau_words(SkewShape{{3}, {}, 1}) == std::vector<Word>{Word{1, 2, 3}});
  CHECK(tableau_words(ShiftedShape{{4}, {}}) == std::vector<Word>{Word{1, 2, 3, 4}});
  // two disconnected cells
  CHECK(tableau_words(SkewShape{{2, 1}, {1}, 2}).size() == 2);
}

TEST_CASE("tableau words are distinct and share a weight") {
  for (const auto &s : all_skew_shapes(4, 6)) {
    auto words = tableau_words(s);
    std::set<Word> distinct(words.begin(), words.end());
    CHECK(distinct.size() == words.size());
    const Weight nu = shape_good_word(s).weight(4);
    for (const auto &w : words)
      CHECK(w.weight(4) == nu);
    CHECK(*distinct.rbegin() == shape_good_word(s));
  }
  for (const auto &s : all_shifted_shapes(3, 6)) {
    auto words = tableau_words(s);
    std::set<Word> distinct(words.begin(), words.end());
    CHECK(distinct.size() == words.size());
    CHECK(*distinct.rbegin() == shape_good_word(s));
  }
}

TEST_CASE("small characters equal dual canonical vectors") {
  auto a3 = datum("A3");
  DualBasis a(a3);
  auto c = skew_tableau_character(a3, SkewShape{{2, 1}, {}, 2});
  CHECK(c.g == Word{2, 3, 1});
  CHECK(c.tableaux == 2);
  CHECK(c.sum == elt(a3, {{Word{2, 3, 1}, 1}, {Word{2, 1, 3}, 1}}));
  for (const auto &s : all_skew_shapes(3, 4)) {
    auto ch = skew_tableau_character(a3, s);
    CHECK(ch.sum == a.dual_canonical(ch.g).elt);
  }
  auto b2 = datum("B2");
  auto one = shifted_tableau_character(b2, ShiftedShape{{2, 1}, {}});
  CHECK(one.sum == elt(b2, {{Word{1, 2, 1}, 1}}));
  auto b3 = datum("B3");
  DualBasis b(b3);
  for (const auto &s : all_shifted_shapes(3, 4)) {
    auto ch = shifted_tableau_character(b3, s);
    CHECK(ch.sum == b.dual_canonical(ch.g).elt);
  }
}

TEST_CASE("removing a first cell") {
  auto b3 = datum("B3");
  for (const auto &s : all_shifted_shapes(3, 6)) {
    if (cell_count(s.lambda, s.mu) < 2)
      continue;
    const ShuffleElt sum = shifted_tableau_character(b3, s).sum;
    for (int i = 1; i <= 3; ++i) {
      if (sum.weight()[i] == 0)
        continue;
      ShuffleElt expect(b3, sum.weight() - Weight::simple(3, i));
      for (std::size_t k = 0; k < s.lambda.size(); ++k) {
        std::vector<int> mu = s.mu;
        mu.resize(s.lambda.size(), 0);
        if (mu[k] + 1 != i || mu[k] >= s.lambda[k])
          continue;
        mu[k] += 1;
        mu = trimmed(mu);
        bool strict = true;
        for (std::size_t r = 1; r < mu.size(); ++r)
          strict = strict && mu[r] < mu[r - 1] && mu[r] > 0;
        if (!strict || std::count(mu.begin(), mu.end(), 0))
          continue;
        expect += shifted_tableau_character(b3, ShiftedShape{s.lambda, mu}).sum;
      }
      CHECK(e_prime_dag(sum, i) == expect);
    }
  }
  auto a4 = datum("A4");
  for (const auto &s : all_skew_shapes(4, 6)) {
    if (cell_count(s.lambda, s.mu) < 2)
      continue;
    const ShuffleElt sum = skew_tableau_character(a4, s).sum;
    for (int i = 1; i <= 4; ++i) {
      if (sum.weight()[i] == 0)
        continue;
      ShuffleElt expect(a4, sum.weight() - Weight::simple(4, i));
      for (std::size_t k = 0; k < s.lambda.size(); ++k) {
        std::vector<int> mu = s.mu;
        mu.resize(s.lambda.size(), 0);
        const int row = static_cast<int>(k) + 1;
        if (mu[k] + 1 - row + s.shift != i || mu[k] >= s.lambda[k])
          continue;
        if (k > 0 && mu[k - 1] < mu[k] + 1)
          continue;
        mu[k] += 1;
        expect += skew_tableau_character(a4, SkewShape{s.lambda, trimmed(mu), s.shift}).sum;
      }
      CHECK(e_prime_dag(sum, i) == expect);
    }
  }
}
