#include "qshuffle/cartan.hpp"

#include "qshuffle/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>

namespace qshuffle {

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

Weight Weight::simple(int rank, int i) {
  Weight w = zero(rank);
  w[i] = 1;
  return w;
}

int Weight::height() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool Weight::is_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

bool Weight::fits_in(const Weight &o) const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] > o.c_[i])
      return false;
  return true;
}

Weight &Weight::operator+=(const Weight &o) {
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] += o.c_[i];
  return *this;
}

Weight &Weight::operator-=(const Weight &o) {
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] -= o.c_[i];
  return *this;
}

std::string Weight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, const char *what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ')
      item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ')
      item.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw parse_error(std::string("malformed ") + what + ": '" + std::string(text) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

} // namespace

Weight Weight::parse(std::string_view text, int rank) {
  Weight w(parse_int_list(text, "weight"));
  if (w.rank() != rank)
    throw parse_error("weight '" + std::string(text) + "' needs " + std::to_string(rank) +
                      " coefficients");
  if (!w.is_nonnegative())
    throw parse_error("weight '" + std::string(text) + "' has a negative coefficient");
  return w;
}

namespace {

struct Edge {
  int i, j, form; // (alpha_i, alpha_j) for i != j
};

// Dynkin data: symmetrizers and the off-diagonal entries of the form.
void layout(Family f, int r, std::vector<int> &d, std::vector<Edge> &edges) {
  d.assign(static_cast<std::size_t>(r), 1);
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i)
      edges.push_back({i, i + 1, -1});
  };
  switch (f) {
  case Family::A:
    chain(1, r);
    break;
  case Family::B:
    for (int i = 2; i <= r; ++i)
      d[static_cast<std::size_t>(i - 1)] = 2;
    edges.push_back({1, 2, -2});
    for (int i = 2; i < r; ++i)
      edges.push_back({i, i + 1, -2});
    break;
  case Family::C:
    d[0] = 2;
    edges.push_back({1, 2, -2});
    chain(2, r);
    break;
  case Family::D:
    edges.push_back({1, 3, -1});
    edges.push_back({2, 3, -1});
    chain(3, r);
    break;
  case Family::E:
    // Bourbaki numbering.
    edges.push_back({1, 3, -1});
    edges.push_back({2, 4, -1});
    chain(3, r);
    break;
  case Family::F:
    d = {2, 2, 1, 1};
    edges.push_back({1, 2, -2});
    edges.push_back({2, 3, -2});
    edges.push_back({3, 4, -1});
    break;
  case Family::G:
    d = {1, 3};
    edges.push_back({1, 2, -3});
    break;
  }
}

void check_rank(Family f, int r) {
  bool ok = false;
  switch (f) {
  case Family::A:
    ok = r >= 1;
    break;
  case Family::B:
  case Family::C:
    ok = r >= 2;
    break;
  case Family::D:
    ok = r >= 3;
    break;
  case Family::E:
    ok = r >= 6 && r <= 8;
    break;
  case Family::F:
    ok = r == 4;
    break;
  case Family::G:
    ok = r == 2;
    break;
  }
  if (!ok)
    throw unsupported_rank(std::string("no root system ") + family_letter(f) + std::to_string(r));
}

} // namespace

CartanDatum CartanDatum::build(Family family, int rank) {
  check_rank(family, rank);
  CartanDatum c;
  c.family_ = family;
  c.rank_ = rank;
  std::vector<Edge> edges;
  layout(family, rank, c.d_, edges);
  std::vector<int> form(static_cast<std::size_t>(rank * rank), 0);
  for (int i = 1; i <= rank; ++i)
    form[c.idx(i, i)] = 2 * c.d(i);
  for (const auto &e : edges) {
    form[c.idx(e.i, e.j)] = e.form;
    form[c.idx(e.j, e.i)] = e.form;
  }
  c.a_.resize(form.size());
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j)
      c.a_[c.idx(i, j)] = form[c.idx(i, j)] / c.d(i);
  c.labels_.resize(static_cast<std::size_t>(rank));
  std::iota(c.labels_.begin(), c.labels_.end(), 1);
  c.compute_roots();
  return c;
}

CartanDatum CartanDatum::parse(std::string_view name) {
  if (name.size() < 2)
    throw parse_error("malformed root system name '" + std::string(name) + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (f < 'A' || f > 'G')
    throw parse_error("unknown root system family in '" + std::string(name) + "'");
  int r = 0;
  auto tail = name.substr(1);
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), r);
  if (ec != std::errc() || ptr != tail.data() + tail.size())
    throw parse_error("malformed rank in '" + std::string(name) + "'");
  return build(static_cast<Family>(f - 'A'), r);
}

CartanDatum CartanDatum::with_order(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != rank_)
    throw usage_error("order must list all " + std::to_string(rank_) + " simple roots");
  std::vector<int> seen(order.begin(), order.end());
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < rank_; ++i)
    if (seen[static_cast<std::size_t>(i)] != i + 1)
      throw usage_error("order must be a permutation of 1.." + std::to_string(rank_));
  CartanDatum c = *this;
  for (int k = 1; k <= rank_; ++k) {
    const int ok = letter_of_label(order[static_cast<std::size_t>(k - 1)]);
    c.d_[static_cast<std::size_t>(k - 1)] = d(ok);
    c.labels_[static_cast<std::size_t>(k - 1)] = label(ok);
    for (int l = 1; l <= rank_; ++l)
      c.a_[c.idx(k, l)] = cartan(ok, letter_of_label(order[static_cast<std::size_t>(l - 1)]));
  }
  c.compute_roots();
  return c;
}

std::string CartanDatum::name() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

bool CartanDatum::is_simply_laced() const {
  return std::all_of(d_.begin(), d_.end(), [](int x) { return x == 1; });
}

int CartanDatum::bilinear(const Weight &x, const Weight &y) const {
  int s = 0;
  for (int i = 1; i <= rank_; ++i) {
    if (x[i] == 0)
      continue;
    for (int j = 1; j <= rank_; ++j)
      s += x[i] * y[j] * form(i, j);
  }
  return s;
}

int CartanDatum::n_of(const Weight &nu) const {
  int s = bilinear(nu, nu);
  for (int i = 1; i <= rank_; ++i)
    s -= nu[i] * 2 * d(i);
  return s / 2;
}

void CartanDatum::compute_roots() {
  // Breadth-first closure by height using alpha_i-strings:
  // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0 where p is the
  // length of the string below beta.
  std::set<Weight> known;
  std::vector<Weight> layer;
  for (int i = 1; i <= rank_; ++i) {
    layer.push_back(Weight::simple(rank_, i));
    known.insert(layer.back());
  }
  roots_ = layer;
  while (!layer.empty()) {
    std::set<Weight> next;
    for (const auto &beta : layer) {
      for (int i = 1; i <= rank_; ++i) {
        const Weight ai = Weight::simple(rank_, i);
        if (beta == ai)
          continue;
        int p = 0;
        Weight down = beta;
        for (;;) {
          down -= ai;
          if (!down.is_nonnegative() || !known.count(down))
            break;
          ++p;
        }
        const int pairing = bilinear(beta, ai) / d(i);
        if (p - pairing > 0)
          next.insert(beta + ai);
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto &w : layer) {
      known.insert(w);
      roots_.push_back(w);
    }
  }
  std::stable_sort(roots_.begin(), roots_.end(), [](const Weight &x, const Weight &y) {
    if (x.height() != y.height())
      return x.height() < y.height();
    return x < y;
  });
}

bool CartanDatum::is_root(const Weight &w) const {
  return std::find(roots_.begin(), roots_.end(), w) != roots_.end();
}

int CartanDatum::letter_of_label(int n) const {
  for (int k = 1; k <= rank_; ++k)
    if (label(k) == n)
      return k;
  throw usage_error("node " + std::to_string(n) + " does not exist in " + name());
}

bool CartanDatum::has_default_order() const {
  for (int k = 1; k <= rank_; ++k)
    if (label(k) != k)
      return false;
  return true;
}

std::string CartanDatum::render_weight(const Weight &w) const {
  Weight orig = Weight::zero(rank_);
  for (int k = 1; k <= rank_; ++k)
    orig[label(k)] = w[k];
  return orig.to_string();
}

Weight CartanDatum::parse_weight(std::string_view text) const {
  Weight orig = Weight::parse(text, rank_);
  Weight w = Weight::zero(rank_);
  for (int k = 1; k <= rank_; ++k)
    w[k] = orig[label(k)];
  return w;
}

std::vector<KostantPartition> kostant_partitions(const Weight &nu, const CartanDatum &datum) {
  const auto &roots = datum.positive_roots();
  std::vector<KostantPartition> out;
  KostantPartition current;
  std::function<void(std::size_t, const Weight &)> rec = [&](std::size_t idx, const Weight &rest) {
    if (rest.is_zero()) {
      out.push_back(current);
      return;
    }
    if (idx == roots.size())
      return;
    const Weight &beta = roots[idx];
    int max_count = 0;
    Weight acc = Weight::zero(nu.rank());
    while ((acc + beta).fits_in(rest)) {
      acc += beta;
      ++max_count;
    }
    for (int k = max_count; k >= 0; --k) {
      if (k > 0)
        current.push_back({beta, k});
      rec(idx + 1, rest - k * beta);
      if (k > 0)
        current.pop_back();
    }
  };
  if (nu.is_nonnegative() && nu.rank() == datum.rank())
    rec(0, nu);
  return out;
}

std::vector<Weight> weights_up_to_height(int rank, int max_height) {
  std::vector<Weight> out;
  Weight w = Weight::zero(rank);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos > rank) {
      if (!w.is_zero())
        out.push_back(w);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      w[pos] = c;
      rec(pos + 1, left - c);
    }
    w[pos] = 0;
  };
  rec(1, max_height);
  std::sort(out.begin(), out.end(), [](const Weight &x, const Weight &y) {
    if (x.height() != y.height())
      return x.height() < y.height();
    return x < y;
  });
  return out;
}

} // namespace qshuffle
