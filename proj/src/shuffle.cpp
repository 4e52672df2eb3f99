#include "qshuffle/shuffle.hpp"

#include "qshuffle/errors.hpp"

#include <set>
#include <tuple>

namespace qshuffle {

namespace {

void same_datum(const ShuffleElt &f, const ShuffleElt &g) {
  if (f.datum() != g.datum() && !(f.cartan() == g.cartan()))
    throw datum_mismatch("elements belong to different root data (" + f.cartan().name() + ", " +
                         g.cartan().name() + ")");
}

void same_weight(const ShuffleElt &f, const ShuffleElt &g) {
  same_datum(f, g);
  if (f.weight() != g.weight())
    throw usage_error("cannot add elements of weights " + f.weight().to_string() + " and " +
                      g.weight().to_string());
}

std::string coef_prefix(const LaurentPoly &c, bool parens_for_sum) {
  std::string s = c.to_string();
  if (parens_for_sum && c.term_count() > 1)
    return "(" + s + ")";
  return s;
}

} // namespace

ShuffleElt::ShuffleElt(DatumPtr datum, Weight weight)
    : datum_(std::move(datum)), weight_(std::move(weight)) {
  if (!datum_)
    throw usage_error("element without root datum");
  if (weight_.rank() != datum_->rank())
    throw usage_error("weight " + weight_.to_string() + " does not fit " + datum_->name());
}

ShuffleElt ShuffleElt::word(DatumPtr datum, const Word &w, const LaurentPoly &coef) {
  const int r = datum->rank();
  if (w.max_letter() > r)
    throw usage_error("word " + w.to_string() + " uses letters outside " + datum->name());
  ShuffleElt f(std::move(datum), w.weight(r));
  if (!coef.is_zero())
    f.terms_.emplace(w, coef);
  return f;
}

ShuffleElt ShuffleElt::unit(DatumPtr datum) { return word(std::move(datum), Word{}); }

LaurentPoly ShuffleElt::coefficient(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

const Word &ShuffleElt::max_word() const {
  if (terms_.empty())
    throw zero_element("the zero element has no largest word");
  return terms_.rbegin()->first;
}

const LaurentPoly &ShuffleElt::leading_coefficient() const {
  if (terms_.empty())
    throw zero_element("the zero element has no leading coefficient");
  return terms_.rbegin()->second;
}

void ShuffleElt::add_term(const Word &w, const LaurentPoly &c, int shift) {
  if (c.is_zero())
    return;
  if (w.weight(weight_.rank()) != weight_)
    throw usage_error("word " + w.to_string() + " does not have weight " + weight_.to_string());
  auto [it, inserted] = terms_.try_emplace(w);
  it->second.add_scaled(c, shift);
  if (it->second.is_zero())
    terms_.erase(it);
}

void ShuffleElt::add_scaled(const ShuffleElt &o, const LaurentPoly &c, int shift) {
  same_weight(*this, o);
  if (c.is_zero())
    return;
  for (const auto &[w, p] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(w);
    if (c.is_monomial())
      it->second.add_scaled(p, shift + c.min_exp(), c.terms()[0].coeff);
    else
      it->second.add_scaled(c * p, shift);
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

ShuffleElt &ShuffleElt::operator+=(const ShuffleElt &o) {
  add_scaled(o);
  return *this;
}

ShuffleElt &ShuffleElt::operator-=(const ShuffleElt &o) {
  add_scaled(o, -1);
  return *this;
}

ShuffleElt ShuffleElt::operator-() const {
  ShuffleElt out = *this;
  for (auto &[w, p] : out.terms_)
    p = -p;
  return out;
}

ShuffleElt operator*(const LaurentPoly &c, const ShuffleElt &f) {
  ShuffleElt out(f.datum(), f.weight());
  out.add_scaled(f, c);
  return out;
}

ShuffleElt ShuffleElt::shifted(int k) const {
  ShuffleElt out = *this;
  for (auto &[w, p] : out.terms_)
    p = p.shifted(k);
  return out;
}

bool ShuffleElt::operator==(const ShuffleElt &o) const {
  return weight_ == o.weight_ && terms_ == o.terms_ && cartan() == o.cartan();
}

std::string ShuffleElt::to_text() const {
  if (terms_.empty())
    return "0\n";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out += coef_prefix(it->second, true) + " \xC2\xB7 " + render_word(it->first, cartan()) + "\n";
  return out;
}

std::string ShuffleElt::to_inline() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it != terms_.rbegin())
      out += " + ";
    const LaurentPoly &c = it->second;
    if (c != LaurentPoly(1))
      out += coef_prefix(c, true) + "\xC2\xB7";
    out += render_word(it->first, cartan());
  }
  return out;
}

ShuffleElt qshuffle_words(const DatumPtr &datum, const Word &u, const Word &v) {
  const CartanDatum &c = *datum;
  const int r = c.rank();
  const std::size_t m = u.size(), n = v.size();
  // pair[i][j] = (|u[0..i)|, alpha_{v_j})
  std::vector<std::vector<int>> pair(m + 1, std::vector<int>(n, 0));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      pair[i][j] = pair[i - 1][j] + c.form(u[i - 1], v[j]);

  // row[j] holds u[0..i) * v[0..j)
  using Cell = std::map<Word, LaurentPoly>;
  std::vector<Cell> row(n + 1);
  row[0].emplace(Word{}, LaurentPoly(1));
  for (std::size_t j = 1; j <= n; ++j)
    row[j].emplace(v.sub(0, j), LaurentPoly(1));
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<Cell> next(n + 1);
    next[0].emplace(u.sub(0, i), LaurentPoly(1));
    for (std::size_t j = 1; j <= n; ++j) {
      Cell &cell = next[j];
      const int a = u[i - 1], b = v[j - 1];
      for (const auto &[w, p] : row[j]) {
        Word x = w;
        x.push_back(a);
        cell[x] += p;
      }
      const int e = -pair[i][j - 1];
      for (const auto &[w, p] : next[j - 1]) {
        Word x = w;
        x.push_back(b);
        cell[x].add_scaled(p, e);
      }
    }
    row = std::move(next);
  }
  ShuffleElt out(datum, u.weight(r) + v.weight(r));
  for (auto &[w, p] : row[n])
    out.add_term(w, p);
  return out;
}

ShuffleElt qshuffle(const ShuffleElt &f, const ShuffleElt &g) {
  same_datum(f, g);
  ShuffleElt out(f.datum(), f.weight() + g.weight());
  for (const auto &[u, cu] : f.terms()) {
    for (const auto &[v, cv] : g.terms()) {
      const LaurentPoly c = cu * cv;
      const ShuffleElt uv = qshuffle_words(f.datum(), u, v);
      out.add_scaled(uv, c);
    }
  }
  return out;
}

ShuffleElt shuffle_power(const ShuffleElt &f, int k) {
  ShuffleElt out = ShuffleElt::unit(f.datum());
  for (int i = 0; i < k; ++i)
    out = qshuffle(out, f);
  return out;
}

ShuffleElt concat(const ShuffleElt &f, const ShuffleElt &g) {
  same_datum(f, g);
  ShuffleElt out(f.datum(), f.weight() + g.weight());
  for (const auto &[u, cu] : f.terms())
    for (const auto &[v, cv] : g.terms())
      out.add_term(u + v, cu * cv);
  return out;
}

ShuffleElt prepend_letter(int i, const ShuffleElt &f) {
  return concat(ShuffleElt::word(f.datum(), Word::letter(i)), f);
}

ShuffleElt append_letter(const ShuffleElt &f, int i) {
  return concat(f, ShuffleElt::word(f.datum(), Word::letter(i)));
}

ShuffleElt shuffle_bracket(const ShuffleElt &f, const ShuffleElt &g) {
  ShuffleElt out = qshuffle(f, g);
  out.add_scaled(qshuffle(g, f), -1, f.cartan().bilinear(f.weight(), g.weight()));
  return out;
}

ShuffleElt e_prime(const ShuffleElt &f, int i) {
  ShuffleElt out(f.datum(), f.weight() - Weight::simple(f.cartan().rank(), i));
  for (const auto &[w, p] : f.terms())
    if (!w.empty() && w.back() == i)
      out.add_term(w.sub(0, w.size() - 1), p);
  return out;
}

ShuffleElt e_prime_dag(const ShuffleElt &f, int i) {
  ShuffleElt out(f.datum(), f.weight() - Weight::simple(f.cartan().rank(), i));
  for (const auto &[w, p] : f.terms())
    if (!w.empty() && w.front() == i)
      out.add_term(w.sub(1), p);
  return out;
}

ShuffleElt tau(const ShuffleElt &f) {
  ShuffleElt out(f.datum(), f.weight());
  for (const auto &[w, p] : f.terms())
    out.add_term(w.reversed(), p);
  return out;
}

ShuffleElt bar_elt(const ShuffleElt &f) {
  // Every word of f has the same weight, so the twist is the constant N(|f|).
  const int n = f.cartan().n_of(f.weight());
  ShuffleElt out(f.datum(), f.weight());
  for (const auto &[w, p] : f.terms())
    out.add_term(w.reversed(), p.bar(), -n);
  return out;
}

ShuffleElt sigma(const ShuffleElt &f) {
  const int n = f.cartan().n_of(f.weight());
  ShuffleElt out(f.datum(), f.weight());
  for (const auto &[w, p] : f.terms())
    out.add_term(w, p.bar(), -n);
  return out;
}

std::string SerreWitness::to_string(const CartanDatum &datum) const {
  return "i=" + std::to_string(datum.label(i)) + " j=" + std::to_string(datum.label(j)) +
         " z=" + render_word(z, datum) + " t=" + render_word(t, datum) +
         " value=" + value.to_string();
}

std::optional<SerreWitness> serre_witness(const ShuffleElt &f) {
  const CartanDatum &c = f.cartan();
  const int r = c.rank();
  using Key = std::tuple<int, int, Word, Word>;
  std::set<Key> keys;
  for (const auto &[w, p] : f.terms()) {
    for (int i = 1; i <= r; ++i) {
      for (int j = 1; j <= r; ++j) {
        if (i == j)
          continue;
        const std::size_t n = static_cast<std::size_t>(1 - c.cartan(i, j));
        if (w.size() < n + 1)
          continue;
        for (std::size_t pos = 0; pos + n + 1 <= w.size(); ++pos) {
          int ni = 0, nj = 0;
          for (std::size_t k = pos; k <= pos + n; ++k) {
            if (w[k] == i)
              ++ni;
            else if (w[k] == j)
              ++nj;
          }
          if (nj == 1 && ni == static_cast<int>(n))
            keys.emplace(i, j, w.sub(0, pos), w.sub(pos + n + 1));
        }
      }
    }
  }
  for (const auto &[i, j, z, t] : keys) {
    const int n = 1 - c.cartan(i, j);
    LaurentPoly total;
    for (int k = 0; k <= n; ++k) {
      Word w = z + Word::letter(i).pow(k) + Word::letter(j) + Word::letter(i).pow(n - k) + t;
      LaurentPoly g = f.coefficient(w);
      if (g.is_zero())
        continue;
      LaurentPoly term = q_binom(n, k, c.d(i)) * g;
      if (k % 2)
        total -= term;
      else
        total += term;
    }
    if (!total.is_zero())
      return SerreWitness{i, j, z, t, total};
  }
  return std::nullopt;
}

bool is_in_U(const ShuffleElt &f) { return !serre_witness(f).has_value(); }

std::map<Word, Integer> specialize_q1(const ShuffleElt &f) {
  std::map<Word, Integer> out;
  for (const auto &[w, p] : f.terms()) {
    Integer v = p.eval_at_one();
    if (v != 0)
      out.emplace(w, v);
  }
  return out;
}

std::optional<Word> largest_asymmetric_word(const ShuffleElt &f) {
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    if (!it->second.is_bar_symmetric())
      return it->first;
  return std::nullopt;
}

} // namespace qshuffle
