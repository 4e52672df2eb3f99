#include "qshuffle/words.hpp"

#include "qshuffle/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

namespace qshuffle {

Word::Word(std::initializer_list<int> letters) {
  for (int x : letters)
    push_back(x);
}

Word::Word(const std::vector<int> &letters) {
  for (int x : letters)
    push_back(x);
}

std::vector<int> Word::letters() const {
  std::vector<int> out;
  out.reserve(s_.size());
  for (std::size_t k = 0; k < s_.size(); ++k)
    out.push_back((*this)[k]);
  return out;
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  Word w;
  w.s_ = s_.substr(pos, len);
  return w;
}

Word Word::reversed() const {
  Word w;
  w.s_.assign(s_.rbegin(), s_.rend());
  return w;
}

Weight Word::weight(int rank) const {
  Weight w = Weight::zero(rank);
  for (std::size_t k = 0; k < s_.size(); ++k)
    w[(*this)[k]] += 1;
  return w;
}

int Word::max_letter() const {
  int m = 0;
  for (std::size_t k = 0; k < s_.size(); ++k)
    m = std::max(m, (*this)[k]);
  return m;
}

Word Word::pow(int k) const {
  Word w;
  for (int i = 0; i < k; ++i)
    w += *this;
  return w;
}

std::string Word::to_string() const {
  std::string out = "w[";
  for (std::size_t k = 0; k < s_.size(); ++k) {
    if (k)
      out += ',';
    out += std::to_string((*this)[k]);
  }
  return out + "]";
}

Word Word::parse(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && body.front() == ' ')
    body.remove_prefix(1);
  while (!body.empty() && body.back() == ' ')
    body.remove_suffix(1);
  if (!body.empty() && body.front() == 'w')
    body.remove_prefix(1);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']')
      throw parse_error("malformed word '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  Word w;
  if (body.empty())
    return w;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string_view::npos)
      end = body.size();
    std::string_view item = body.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ')
      item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ')
      item.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v < 1 || v > 127)
      throw parse_error("malformed word '" + std::string(text) + "'");
    w.push_back(v);
    pos = end + 1;
  }
  return w;
}

std::string render_word(const Word &w, const CartanDatum &datum) {
  if (datum.has_default_order())
    return w.to_string();
  Word out;
  for (std::size_t k = 0; k < w.size(); ++k)
    out.push_back(datum.label(w[k]));
  return out.to_string();
}

Word parse_word(std::string_view text, const CartanDatum &datum) {
  Word raw = Word::parse(text);
  Word w;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] > datum.rank())
      throw parse_error("letter " + std::to_string(raw[k]) + " outside alphabet of " + datum.name());
    w.push_back(datum.letter_of_label(raw[k]));
  }
  return w;
}

bool is_lyndon(const Word &w) {
  if (w.empty())
    throw empty_word("the empty word is not Lyndon");
  for (std::size_t k = 1; k < w.size(); ++k)
    if (!(w < w.sub(k)))
      return false;
  return true;
}

std::vector<Word> lyndon_factorization(const Word &w) {
  std::vector<Word> out;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      k = (w[k] < w[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.sub(i, j - k));
      i += j - k;
    }
  }
  return out;
}

namespace {

void require_factorizable(const Word &l) {
  if (!is_lyndon(l))
    throw not_lyndon(l.to_string() + " is not a Lyndon word");
  if (l.size() < 2)
    throw too_short(l.to_string() + " is a single letter");
}

} // namespace

std::pair<Word, Word> costandard_factorization(const Word &l) {
  require_factorizable(l);
  for (std::size_t len = l.size() - 1; len >= 1; --len) {
    Word left = l.sub(0, len);
    if (is_lyndon(left))
      return {left, l.sub(len)};
  }
  return {l.sub(0, 1), l.sub(1)};
}

std::pair<Word, Word> standard_factorization(const Word &l) {
  require_factorizable(l);
  for (std::size_t start = 1; start < l.size(); ++start) {
    Word right = l.sub(start);
    if (is_lyndon(right))
      return {l.sub(0, start), right};
  }
  return {l.sub(0, l.size() - 1), l.sub(l.size() - 1)};
}

std::set<Word> commutation_class(const Word &w, const CartanDatum &datum) {
  std::set<Word> seen{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    Word cur = todo.front();
    todo.pop_front();
    std::vector<int> letters = cur.letters();
    for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
      if (letters[k] == letters[k + 1] || datum.cartan(letters[k], letters[k + 1]) != 0)
        continue;
      std::swap(letters[k], letters[k + 1]);
      Word next(letters);
      if (seen.insert(next).second)
        todo.push_back(next);
      std::swap(letters[k], letters[k + 1]);
    }
  }
  return seen;
}

} // namespace qshuffle
