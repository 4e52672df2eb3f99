#pragma once

#include "qshuffle/basis.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/shuffle.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

namespace qshuffle {

inline std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << p.to_string(); }
inline std::ostream &operator<<(std::ostream &os, const Word &w) { return os << w.to_string(); }
inline std::ostream &operator<<(std::ostream &os, const Weight &w) { return os << w.to_string(); }
inline std::ostream &operator<<(std::ostream &os, const ShuffleElt &f) { return os << f.to_inline(); }

} // namespace qshuffle

namespace testing {

using namespace qshuffle;

inline DatumPtr datum(const char *name) { return make_datum(CartanDatum::parse(name)); }

inline LaurentPoly qi(int k, int d = 1) { return q_int(k, d); }

inline ShuffleElt elt(const DatumPtr &d, std::vector<std::pair<Word, LaurentPoly>> terms) {
  ShuffleElt f(d, terms.front().first.weight(d->rank()));
  for (auto &[w, c] : terms)
    f.add_term(w, c);
  return f;
}

inline LaurentPoly random_poly(std::mt19937 &rng, int span = 4, int max_terms = 4, int bound = 5) {
  std::uniform_int_distribution<int> exp(-span, span), coef(-bound, bound), count(0, max_terms);
  std::vector<LaurentPoly::Term> terms;
  const int n = count(rng);
  for (int k = 0; k < n; ++k)
    terms.push_back({exp(rng), Integer(coef(rng))});
  return LaurentPoly::from_terms(std::move(terms));
}

inline LaurentPoly random_nonzero_poly(std::mt19937 &rng) {
  for (;;) {
    LaurentPoly p = random_poly(rng);
    if (!p.is_zero())
      return p;
  }
}

inline Word random_word(std::mt19937 &rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(1, rank);
  Word w;
  const int n = len(rng);
  for (int k = 0; k < n; ++k)
    w.push_back(letter(rng));
  return w;
}

inline Word random_word_of_weight(std::mt19937 &rng, const Weight &nu) {
  std::vector<int> letters;
  for (int i = 1; i <= nu.rank(); ++i)
    for (int c = 0; c < nu[i]; ++c)
      letters.push_back(i);
  std::shuffle(letters.begin(), letters.end(), rng);
  return Word(letters);
}

/// Homogeneous element with a few random words of weight nu.
inline ShuffleElt random_elt(std::mt19937 &rng, const DatumPtr &d, const Weight &nu, int terms = 3) {
  ShuffleElt f(d, nu);
  for (int k = 0; k < terms; ++k)
    f.add_term(random_word_of_weight(rng, nu), random_nonzero_poly(rng));
  return f;
}

inline Weight random_weight(std::mt19937 &rng, int rank, int max_height) {
  std::uniform_int_distribution<int> letter(1, rank), h(1, max_height);
  Weight w = Weight::zero(rank);
  const int n = h(rng);
  for (int k = 0; k < n; ++k)
    w[letter(rng)] += 1;
  return w;
}

} // namespace testing
