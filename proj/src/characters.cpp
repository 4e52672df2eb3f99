#include "qshuffle/characters.hpp"

#include "qshuffle/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>

namespace qshuffle {

MultiSegment make_multisegment(std::vector<Segment> segments) {
  for (const auto &s : segments)
    if (s.i < 1 || s.j < s.i)
      throw usage_error("bad segment [" + std::to_string(s.i) + "," + std::to_string(s.j) + "]");
  std::sort(segments.begin(), segments.end());
  return segments;
}

Word multisegment_to_good_word(const MultiSegment &m) {
  Word w;
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    for (int a = it->i; a <= it->j; ++a)
      w.push_back(a);
  return w;
}

MultiSegment good_word_to_multisegment(const Word &g) {
  std::vector<Segment> segs;
  for (const Word &f : lyndon_factorization(g)) {
    for (std::size_t k = 1; k < f.size(); ++k)
      if (f[k] != f[k - 1] + 1)
        throw usage_error(f.to_string() + " is not a segment");
    segs.push_back({f.front(), f.back()});
  }
  return make_multisegment(std::move(segs));
}

std::string multisegment_to_string(const MultiSegment &m) {
  std::string out = "(";
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k)
      out += ",";
    out += "[" + std::to_string(m[k].i) + "," + std::to_string(m[k].j) + "]";
  }
  return out + ")";
}

namespace {

using IntChar = std::map<Word, Integer>;

IntChar classical_shuffle(const IntChar &f, const Word &v) {
  IntChar out;
  for (const auto &[u, c] : f) {
    // positions of v inside a word of length |u|+|v|
    const std::size_t n = u.size() + v.size();
    std::vector<bool> mask(n, false);
    std::fill(mask.begin() + static_cast<std::ptrdiff_t>(u.size()), mask.end(), true);
    do {
      Word w;
      std::size_t a = 0, b = 0;
      for (std::size_t k = 0; k < n; ++k)
        w.push_back(mask[k] ? v[b++] : u[a++]);
      out[w] += c;
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  return out;
}

} // namespace

std::map<Word, Integer> standard_module_character(const MultiSegment &m) {
  IntChar acc{{Word{}, Integer(1)}};
  for (const auto &s : m) {
    Word seg;
    for (int a = s.i; a <= s.j; ++a)
      seg.push_back(a);
    acc = classical_shuffle(acc, seg);
  }
  return acc;
}

namespace {

std::vector<int> parse_parts(std::string_view text, const std::string &full) {
  std::vector<int> out;
  if (text.empty() || text == "0")
    return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v < 0)
      throw parse_error("malformed shape '" + full + "'");
    out.push_back(v);
    pos = end + 1;
  }
  while (!out.empty() && out.back() == 0)
    out.pop_back();
  return out;
}

struct ShapeText {
  std::vector<int> lambda, mu;
  std::optional<int> shift;
};

ShapeText split_shape(std::string_view text) {
  const std::string full(text);
  ShapeText st;
  std::string_view body = text;
  if (auto plus = body.find('+'); plus != std::string_view::npos) {
    std::string_view s = body.substr(plus + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw parse_error("malformed shift in '" + full + "'");
    st.shift = v;
    body = body.substr(0, plus);
  }
  std::string_view lam = body, mu;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    lam = body.substr(0, slash);
    mu = body.substr(slash + 1);
  }
  st.lambda = parse_parts(lam, full);
  st.mu = parse_parts(mu, full);
  if (st.lambda.empty())
    throw parse_error("empty shape '" + full + "'");
  return st;
}

std::string parts_to_string(const std::vector<int> &p) {
  if (p.empty())
    return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k)
      out += ",";
    out += std::to_string(p[k]);
  }
  return out;
}

int mu_at(const std::vector<int> &mu, std::size_t row) { return row < mu.size() ? mu[row] : 0; }

struct Cell {
  int row, col, content;
};

std::vector<Cell> skew_cells(const SkewShape &s) {
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < s.lambda.size(); ++r) {
    const int row = static_cast<int>(r) + 1;
    for (int col = mu_at(s.mu, r) + 1; col <= s.lambda[r]; ++col)
      cells.push_back({row, col, col - row});
  }
  return cells;
}

std::vector<Cell> shifted_cells(const ShiftedShape &s) {
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < s.lambda.size(); ++r) {
    const int row = static_cast<int>(r) + 1;
    for (int col = row + mu_at(s.mu, r); col <= row + s.lambda[r] - 1; ++col)
      cells.push_back({row, col, col - row + 1});
  }
  return cells;
}

// Linear extensions of the cell poset (left and upper neighbours first),
// each reported as the sequence of contents plus offset.
std::vector<Word> enumerate(const std::vector<Cell> &cells, int offset) {
  const std::size_t m = cells.size();
  std::vector<int> left(m, -1), up(m, -1);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (cells[b].row == cells[a].row && cells[b].col == cells[a].col - 1)
        left[a] = static_cast<int>(b);
      if (cells[b].row == cells[a].row - 1 && cells[b].col == cells[a].col)
        up[a] = static_cast<int>(b);
    }
  std::vector<Word> out;
  std::vector<bool> filled(m, false);
  Word current;
  std::function<void()> rec = [&] {
    if (current.size() == m) {
      out.push_back(current);
      return;
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (filled[a])
        continue;
      if (left[a] >= 0 && !filled[static_cast<std::size_t>(left[a])])
        continue;
      if (up[a] >= 0 && !filled[static_cast<std::size_t>(up[a])])
        continue;
      filled[a] = true;
      current.push_back(cells[a].content + offset);
      rec();
      current = current.sub(0, current.size() - 1);
      filled[a] = false;
    }
  };
  rec();
  return out;
}

Word relabel(const Word &w, const CartanDatum &datum) {
  Word out;
  for (std::size_t k = 0; k < w.size(); ++k)
    out.push_back(datum.letter_of_label(w[k]));
  return out;
}

} // namespace

SkewShape parse_skew_shape(std::string_view text) {
  ShapeText st = split_shape(text);
  return {st.lambda, st.mu, st.shift.value_or(0)};
}

ShiftedShape parse_shifted_shape(std::string_view text) {
  ShapeText st = split_shape(text);
  if (st.shift)
    throw parse_error("shifted shapes take no shift: '" + std::string(text) + "'");
  return {st.lambda, st.mu};
}

std::string to_string(const SkewShape &shape) {
  return parts_to_string(shape.lambda) + "/" + parts_to_string(shape.mu) + "+" +
         std::to_string(shape.shift);
}

std::string to_string(const ShiftedShape &shape) {
  return parts_to_string(shape.lambda) + "/" + parts_to_string(shape.mu);
}

void check_shape(const SkewShape &s, const CartanDatum &datum) {
  auto fail = [&](const std::string &why) {
    throw shape_constraint_violated("skew shape " + to_string(s) + ": " + why);
  };
  if (datum.family() != Family::A)
    fail("skew shapes need a datum of type A");
  if (s.lambda.empty() || s.lambda.back() <= 0)
    fail("lambda must have positive parts");
  for (std::size_t k = 1; k < s.lambda.size(); ++k)
    if (s.lambda[k] > s.lambda[k - 1])
      fail("lambda is not a partition");
  if (s.mu.size() > s.lambda.size())
    fail("mu has more rows than lambda");
  for (std::size_t k = 0; k < s.mu.size(); ++k) {
    if (s.mu[k] > s.lambda[k])
      fail("mu is not contained in lambda");
    if (k && s.mu[k] > s.mu[k - 1])
      fail("mu is not a partition");
  }
  if (skew_cells(s).empty())
    fail("no cells");
  const int j = static_cast<int>(s.lambda.size());
  const int top = 1 - s.lambda[0] + datum.rank();
  if (top < j)
    fail("too large for " + datum.name());
  if (s.shift < j || s.shift > top)
    fail("shift must lie in [" + std::to_string(j) + "," + std::to_string(top) + "]");
}

void check_shape(const ShiftedShape &s, const CartanDatum &datum) {
  auto fail = [&](const std::string &why) {
    throw shape_constraint_violated("shifted shape " + to_string(s) + ": " + why);
  };
  if (datum.family() != Family::B)
    fail("shifted shapes need a datum of type B");
  if (s.lambda.empty() || s.lambda.back() <= 0)
    fail("lambda must have positive parts");
  for (std::size_t k = 1; k < s.lambda.size(); ++k)
    if (s.lambda[k] >= s.lambda[k - 1])
      fail("lambda is not strict");
  if (s.lambda[0] > datum.rank())
    fail("first part exceeds the rank of " + datum.name());
  if (s.mu.size() > s.lambda.size())
    fail("mu has more rows than lambda");
  for (std::size_t k = 0; k < s.mu.size(); ++k) {
    if (s.mu[k] > s.lambda[k])
      fail("mu is not contained in lambda");
    if (k && s.mu[k] >= s.mu[k - 1])
      fail("mu is not strict");
  }
  if (shifted_cells(s).empty())
    fail("no cells");
}

std::vector<Word> tableau_words(const SkewShape &shape) {
  return enumerate(skew_cells(shape), shape.shift);
}

std::vector<Word> tableau_words(const ShiftedShape &shape) {
  return enumerate(shifted_cells(shape), 0);
}

Word shape_good_word(const SkewShape &shape) {
  Word w;
  for (const Cell &c : skew_cells(shape))
    w.push_back(c.content + shape.shift);
  return w;
}

Word shape_good_word(const ShiftedShape &shape) {
  Word w;
  for (const Cell &c : shifted_cells(shape))
    w.push_back(c.content);
  return w;
}

namespace {

template <class Shape>
TableauCharacter character(const DatumPtr &datum, const Shape &shape) {
  check_shape(shape, *datum);
  const Word g = relabel(shape_good_word(shape), *datum);
  TableauCharacter out{g, ShuffleElt(datum, g.weight(datum->rank())), 0};
  for (const Word &w : tableau_words(shape)) {
    out.sum.add_term(relabel(w, *datum), 1);
    ++out.tableaux;
  }
  return out;
}

void partitions_into(int max_part, int max_rows, std::vector<int> &cur,
                     std::vector<std::vector<int>> &out, bool strict) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_rows)
    return;
  const int top = cur.empty() ? max_part : (strict ? cur.back() - 1 : cur.back());
  for (int p = 1; p <= top; ++p) {
    cur.push_back(p);
    partitions_into(max_part, max_rows, cur, out, strict);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int max_part, int max_rows, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_into(max_part, max_rows, cur, out, strict);
  return out;
}

bool contains(const std::vector<int> &lambda, const std::vector<int> &mu) {
  if (mu.size() > lambda.size())
    return false;
  for (std::size_t k = 0; k < mu.size(); ++k)
    if (mu[k] > lambda[k])
      return false;
  return true;
}

int total(const std::vector<int> &p) {
  int s = 0;
  for (int x : p)
    s += x;
  return s;
}

} // namespace

TableauCharacter skew_tableau_character(const DatumPtr &datum, const SkewShape &shape) {
  return character(datum, shape);
}

TableauCharacter shifted_tableau_character(const DatumPtr &datum, const ShiftedShape &shape) {
  return character(datum, shape);
}

std::vector<SkewShape> all_skew_shapes(int rank, int max_cells) {
  std::vector<SkewShape> out;
  for (const auto &lambda : partitions(rank, rank, false)) {
    if (lambda.empty())
      continue;
    const int j = static_cast<int>(lambda.size());
    const int top = 1 - lambda[0] + rank;
    if (top < j)
      continue;
    for (const auto &mu : partitions(lambda[0], j, false)) {
      if (!contains(lambda, mu))
        continue;
      const int cells = total(lambda) - total(mu);
      if (cells < 1 || cells > max_cells)
        continue;
      for (int s = j; s <= top; ++s)
        out.push_back({lambda, mu, s});
    }
  }
  return out;
}

std::vector<ShiftedShape> all_shifted_shapes(int rank, int max_cells) {
  std::vector<ShiftedShape> out;
  for (const auto &lambda : partitions(rank, rank, true)) {
    if (lambda.empty())
      continue;
    for (const auto &mu : partitions(lambda[0], static_cast<int>(lambda.size()), true)) {
      if (!contains(lambda, mu))
        continue;
      const int cells = total(lambda) - total(mu);
      if (cells >= 1 && cells <= max_cells)
        out.push_back({lambda, mu});
    }
  }
  return out;
}

} // namespace qshuffle
