#pragma once

#include "qshuffle/cartan.hpp"

#include <compare>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qshuffle {

/// Word in the letters 1..r. Ordered lexicographically, a proper prefix
/// being smaller.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(const std::vector<int> &letters);

  static Word letter(int i) { return Word{i}; }

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  int operator[](std::size_t k) const { return static_cast<unsigned char>(s_[k]); }
  int front() const { return (*this)[0]; }
  int back() const { return (*this)[s_.size() - 1]; }

  std::vector<int> letters() const;
  Word sub(std::size_t pos, std::size_t len = std::string::npos) const;
  Word reversed() const;
  Weight weight(int rank) const;
  int max_letter() const;

  Word &operator+=(const Word &o) {
    s_ += o.s_;
    return *this;
  }
  Word &push_back(int letter) {
    s_.push_back(static_cast<char>(letter));
    return *this;
  }
  friend Word operator+(Word a, const Word &b) { return a += b; }
  Word pow(int k) const;

  std::strong_ordering operator<=>(const Word &o) const {
    int c = s_.compare(o.s_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  bool operator==(const Word &) const = default;

  /// "w[1,1,2]"; letters above 9 are written in full.
  std::string to_string() const;
  /// Accepts "w[1,2]", "[1,2]", "1,2" and "w[]".
  static Word parse(std::string_view text);

  const std::string &key() const { return s_; }

private:
  std::string s_;
};

struct WordHash {
  std::size_t operator()(const Word &w) const { return std::hash<std::string>{}(w.key()); }
};

bool is_lyndon(const Word &w);

/// Non-increasing Lyndon factors (Duval).
std::vector<Word> lyndon_factorization(const Word &w);

/// l = l1 l2 with l1 the longest proper Lyndon left factor.
std::pair<Word, Word> costandard_factorization(const Word &l);

/// l = l1 l2 with l2 the longest proper Lyndon right factor.
std::pair<Word, Word> standard_factorization(const Word &l);

/// Word with each letter replaced by the original node it stands for.
std::string render_word(const Word &w, const CartanDatum &datum);
/// Inverse of render_word; checks the alphabet bound.
Word parse_word(std::string_view text, const CartanDatum &datum);

/// Closure of {w} under swapping adjacent letters i, j with a_ij = 0.
std::set<Word> commutation_class(const Word &w, const CartanDatum &datum);

} // namespace qshuffle
