#pragma once

#include "qshuffle/cartan.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/shuffle.hpp"
#include "qshuffle/words.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qshuffle {

/// Bijection between positive roots and good Lyndon words for the letter
/// order of a datum, and the convex order it induces on roots.
class GoodLyndonTable {
public:
  explicit GoodLyndonTable(DatumPtr datum);

  const DatumPtr &datum() const { return datum_; }
  const CartanDatum &cartan() const { return *datum_; }

  /// l(beta). Throws usage_error if beta is not a positive root.
  const Word &lyndon_of(const Weight &beta) const;
  bool is_good_lyndon(const Word &w) const;
  /// True iff every Lyndon factor of w is good.
  bool is_good(const Word &w) const;

  /// Positive roots sorted by increasing l(beta).
  const std::vector<Weight> &convex_order() const { return convex_; }
  /// Good Lyndon words in increasing order.
  std::vector<Word> words() const;

private:
  DatumPtr datum_;
  std::map<Weight, Word> entries_;
  std::map<Word, Weight> inverse_;
  std::vector<Weight> convex_;
};

struct GoodWord {
  Word word;
  /// Distinct good Lyndon factors, largest first, with multiplicities.
  std::vector<std::pair<Word, int>> factors;
};

/// Throws not_in_u unless w is good for the table.
GoodWord factor_good_word(const GoodLyndonTable &table, const Word &w);

/// One good word per Kostant partition of nu, increasing.
std::vector<GoodWord> good_words_of_weight(const GoodLyndonTable &table, const Weight &nu);

struct DualPBWVector {
  GoodWord g;
  ShuffleElt elt;
  LaurentPoly kappa;
};

struct DualCanonicalVector {
  GoodWord g;
  ShuffleElt elt;
  LaurentPoly kappa;
};

struct PositivityViolation {
  Word g;
  Word w;
  LaurentPoly coef;
};

struct RealityResult {
  bool real = false;
  /// s = q^shift b*_partner when real.
  Word partner;
  int shift = 0;
};

/**
 * Dual PBW and dual canonical vectors for one table. Results are memoized;
 * the caches are guarded so one instance may serve several threads.
 */
class DualBasis {
public:
  explicit DualBasis(DatumPtr datum);

  const GoodLyndonTable &table() const { return table_; }
  const DatumPtr &datum() const { return table_.datum(); }

  /// Iterated q-bracket along co-standard factorizations.
  ShuffleElt r_of_lyndon(const Word &l);
  DualPBWVector dual_root_vector(const Word &l);
  DualPBWVector dual_pbw(const Word &g);
  /// b*_g for every good word of weight nu, in increasing order of g.
  std::vector<DualCanonicalVector> dual_canonical_weight(const Weight &nu);
  DualCanonicalVector dual_canonical(const Word &g);

  /// Coefficients of f on the dual PBW basis.
  std::map<Word, LaurentPoly> expand_in_dual_pbw(const ShuffleElt &f);

  std::vector<PositivityViolation> positivity_report(const Weight &nu);
  RealityResult is_real(const DualCanonicalVector &b);

private:
  GoodLyndonTable table_;
  std::recursive_mutex mu_;
  std::map<Word, ShuffleElt> r_cache_;
  std::map<Word, DualPBWVector> root_cache_;
  std::map<Word, DualPBWVector> pbw_cache_;
  std::map<Weight, std::vector<DualCanonicalVector>> canonical_cache_;
};

/// Closed formula for b*_{l(beta)} in types A, B, C, D with the default
/// numbering.
ShuffleElt closed_form_root_vector(const DatumPtr &datum, const Weight &beta);

/// Sum of the commutation class of l, simply-laced types only.
ShuffleElt commutation_class_root_vector(const GoodLyndonTable &table, const Word &l);

} // namespace qshuffle
