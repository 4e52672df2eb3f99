#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qshuffle {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// Element of the positive root lattice, stored as coefficients on the
/// simple roots (index 0 holds the coefficient of alpha_1).
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<int> coeffs) : c_(std::move(coeffs)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }
  static Weight simple(int rank, int i);

  int rank() const { return static_cast<int>(c_.size()); }
  /// Coefficient of alpha_i, 1-based.
  int operator[](int i) const { return c_[static_cast<std::size_t>(i - 1)]; }
  int &operator[](int i) { return c_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> coeffs() const { return c_; }

  int height() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  /// every coefficient of *this is <= the matching one of o
  bool fits_in(const Weight &o) const;

  Weight &operator+=(const Weight &o);
  Weight &operator-=(const Weight &o);
  friend Weight operator+(Weight a, const Weight &b) { return a += b; }
  friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (auto &x : a.c_)
      x *= k;
    return a;
  }

  auto operator<=>(const Weight &) const = default;
  bool operator==(const Weight &) const = default;

  /// "c1,c2,...,cr"
  std::string to_string() const;
  static Weight parse(std::string_view text, int rank);

private:
  std::vector<int> c_;
};

/**
 * Finite type root datum with fixed node numbering.
 *
 *  A_r  1 - 2 - ... - r
 *  B_r  1 => 2 - ... - r        node 1 short
 *  C_r  1 <= 2 - ... - r        node 1 long
 *  D_r  1 and 2 both attached to 3, then 3 - 4 - ... - r
 *  E_r  1 - 3 - 4 - 5 - ... - r, node 2 attached to 4
 *  F_4  1 - 2 => 3 - 4          nodes 1, 2 long
 *  G_2  1 => 2                  node 1 short
 *
 * A datum may be relabelled so that letter k stands for the original node
 * labels()[k-1]; the natural order on letters is then the requested total
 * order on simple roots. Rendering and parsing go through the labels.
 */
class CartanDatum {
public:
  static CartanDatum build(Family family, int rank);
  /// "A3", "G2", ...
  static CartanDatum parse(std::string_view name);

  /// order lists the original nodes from smallest to largest.
  CartanDatum with_order(std::span<const int> order) const;

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// 1-based entries.
  int cartan(int i, int j) const { return a_[idx(i, j)]; }
  int d(int i) const { return d_[static_cast<std::size_t>(i - 1)]; }
  int form(int i, int j) const { return d(i) * cartan(i, j); }
  bool is_simply_laced() const;

  int bilinear(const Weight &x, const Weight &y) const;
  /// N(nu) = ((nu,nu) - sum c_i (alpha_i,alpha_i)) / 2
  int n_of(const Weight &nu) const;

  /// Positive roots sorted by height, then by coefficient vector.
  const std::vector<Weight> &positive_roots() const { return roots_; }
  bool is_root(const Weight &w) const;

  /// Original node number of letter k.
  int label(int k) const { return labels_[static_cast<std::size_t>(k - 1)]; }
  /// Letter standing for original node n.
  int letter_of_label(int n) const;
  std::span<const int> labels() const { return labels_; }
  bool has_default_order() const;

  /// Weight written in original node numbering, and its inverse.
  std::string render_weight(const Weight &w) const;
  Weight parse_weight(std::string_view text) const;

  bool operator==(const CartanDatum &o) const {
    return family_ == o.family_ && rank_ == o.rank_ && a_ == o.a_ && d_ == o.d_ &&
           labels_ == o.labels_;
  }

private:
  CartanDatum() = default;
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * rank_ + (j - 1));
  }
  void compute_roots();

  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<int> a_;
  std::vector<int> d_;
  std::vector<int> labels_;
  std::vector<Weight> roots_;
};

using DatumPtr = std::shared_ptr<const CartanDatum>;

inline DatumPtr make_datum(CartanDatum d) {
  return std::make_shared<const CartanDatum>(std::move(d));
}

/// One entry of a Kostant partition: a root and how many times it occurs.
struct RootMultiplicity {
  Weight root;
  int count;
  bool operator==(const RootMultiplicity &) const = default;
};
using KostantPartition = std::vector<RootMultiplicity>;

/// Every multiset of positive roots summing to nu, each once.
std::vector<KostantPartition> kostant_partitions(const Weight &nu, const CartanDatum &datum);

/// All nonzero weights of height <= max_height, sorted by height then
/// coefficients.
std::vector<Weight> weights_up_to_height(int rank, int max_height);

} // namespace qshuffle
