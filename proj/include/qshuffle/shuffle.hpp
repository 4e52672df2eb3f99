#pragma once

#include "qshuffle/cartan.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qshuffle {

/**
 * Homogeneous element of the shuffle algebra: a weight together with a
 * sparse map from words of that weight to nonzero Laurent coefficients.
 */
class ShuffleElt {
public:
  using Terms = std::map<Word, LaurentPoly>;

  ShuffleElt(DatumPtr datum, Weight weight);

  /// coef * w
  static ShuffleElt word(DatumPtr datum, const Word &w, const LaurentPoly &coef = 1);
  /// The empty word, unit of both products.
  static ShuffleElt unit(DatumPtr datum);

  const DatumPtr &datum() const { return datum_; }
  const CartanDatum &cartan() const { return *datum_; }
  const Weight &weight() const { return weight_; }
  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly coefficient(const Word &w) const;
  /// Largest word of the support. Throws zero_element on zero.
  const Word &max_word() const;
  const LaurentPoly &leading_coefficient() const;

  /// this += c * q^shift * w
  void add_term(const Word &w, const LaurentPoly &c, int shift = 0);
  /// this += c * q^shift * o
  void add_scaled(const ShuffleElt &o, const LaurentPoly &c = 1, int shift = 0);

  ShuffleElt &operator+=(const ShuffleElt &o);
  ShuffleElt &operator-=(const ShuffleElt &o);
  friend ShuffleElt operator+(ShuffleElt a, const ShuffleElt &b) { return a += b; }
  friend ShuffleElt operator-(ShuffleElt a, const ShuffleElt &b) { return a -= b; }
  ShuffleElt operator-() const;
  friend ShuffleElt operator*(const LaurentPoly &c, const ShuffleElt &f);
  ShuffleElt shifted(int k) const;

  bool operator==(const ShuffleElt &o) const;

  /// One "coef · w[..]" line per term, largest word first.
  std::string to_text() const;
  /// Single-line sum, largest word first; coefficients with several terms
  /// are parenthesised.
  std::string to_inline() const;

private:
  DatumPtr datum_;
  Weight weight_;
  Terms terms_;
};

/// Shuffle product of two words, by the prefix recursion.
ShuffleElt qshuffle_words(const DatumPtr &datum, const Word &u, const Word &v);
ShuffleElt qshuffle(const ShuffleElt &f, const ShuffleElt &g);
/// f * f * ... * f (k factors); the unit for k = 0.
ShuffleElt shuffle_power(const ShuffleElt &f, int k);

ShuffleElt concat(const ShuffleElt &f, const ShuffleElt &g);
ShuffleElt prepend_letter(int i, const ShuffleElt &f);
ShuffleElt append_letter(const ShuffleElt &f, int i);

/// f * g - q^{(|f|,|g|)} g * f
ShuffleElt shuffle_bracket(const ShuffleElt &f, const ShuffleElt &g);

/// Deletes a final (resp. initial) letter i, dropping other words.
ShuffleElt e_prime(const ShuffleElt &f, int i);
ShuffleElt e_prime_dag(const ShuffleElt &f, int i);

ShuffleElt tau(const ShuffleElt &f);
ShuffleElt bar_elt(const ShuffleElt &f);
ShuffleElt sigma(const ShuffleElt &f);

/// A violated relation of the membership test.
struct SerreWitness {
  int i, j;
  Word z, t;
  LaurentPoly value;
  std::string to_string(const CartanDatum &datum) const;
};

/// nullopt when f lies in the subalgebra generated by the letters,
/// otherwise the smallest violated relation.
std::optional<SerreWitness> serre_witness(const ShuffleElt &f);
bool is_in_U(const ShuffleElt &f);

/// Coefficients at q = 1, zero values dropped.
std::map<Word, Integer> specialize_q1(const ShuffleElt &f);

/// Largest word whose coefficient is not bar symmetric, if any.
std::optional<Word> largest_asymmetric_word(const ShuffleElt &f);

} // namespace qshuffle
