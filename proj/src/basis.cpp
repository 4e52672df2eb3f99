#include "qshuffle/basis.hpp"

#include "qshuffle/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qshuffle {

GoodLyndonTable::GoodLyndonTable(DatumPtr datum) : datum_(std::move(datum)) {
  const CartanDatum &c = *datum_;
  const int r = c.rank();
  // positive_roots() is sorted by height, so both halves of a
  // decomposition are known when beta is reached.
  for (const Weight &beta : c.positive_roots()) {
    if (beta.height() == 1) {
      for (int i = 1; i <= r; ++i)
        if (beta[i] == 1)
          entries_.emplace(beta, Word::letter(i));
      continue;
    }
    std::optional<Word> best;
    for (const auto &[b1, l1] : entries_) {
      if (!b1.fits_in(beta))
        continue;
      const Weight b2 = beta - b1;
      auto it = entries_.find(b2);
      if (it == entries_.end() || !(l1 < it->second))
        continue;
      Word cand = l1 + it->second;
      if (!best || *best < cand)
        best = cand;
    }
    if (!best || !is_lyndon(*best))
      throw theory_violation("no good Lyndon word for root " + beta.to_string());
    entries_.emplace(beta, *best);
  }
  for (const auto &[beta, l] : entries_) {
    inverse_.emplace(l, beta);
    convex_.push_back(beta);
  }
  std::sort(convex_.begin(), convex_.end(),
            [this](const Weight &x, const Weight &y) { return entries_.at(x) < entries_.at(y); });
}

const Word &GoodLyndonTable::lyndon_of(const Weight &beta) const {
  auto it = entries_.find(beta);
  if (it == entries_.end())
    throw usage_error(cartan().render_weight(beta) + " is not a positive root of " + cartan().name());
  return it->second;
}

bool GoodLyndonTable::is_good_lyndon(const Word &w) const { return inverse_.count(w) > 0; }

bool GoodLyndonTable::is_good(const Word &w) const {
  for (const Word &f : lyndon_factorization(w))
    if (!is_good_lyndon(f))
      return false;
  return true;
}

std::vector<Word> GoodLyndonTable::words() const {
  std::vector<Word> out;
  for (const auto &[l, beta] : inverse_)
    out.push_back(l);
  return out;
}

GoodWord factor_good_word(const GoodLyndonTable &table, const Word &w) {
  GoodWord g{w, {}};
  for (const Word &f : lyndon_factorization(w)) {
    if (!table.is_good_lyndon(f))
      throw not_in_u(render_word(w, table.cartan()) + " is not a good word");
    if (!g.factors.empty() && g.factors.back().first == f)
      ++g.factors.back().second;
    else
      g.factors.emplace_back(f, 1);
  }
  return g;
}

std::vector<GoodWord> good_words_of_weight(const GoodLyndonTable &table, const Weight &nu) {
  std::vector<GoodWord> out;
  for (const auto &partition : kostant_partitions(nu, table.cartan())) {
    std::vector<std::pair<Word, int>> factors;
    for (const auto &[beta, count] : partition)
      factors.emplace_back(table.lyndon_of(beta), count);
    std::sort(factors.begin(), factors.end(),
              [](const auto &x, const auto &y) { return y.first < x.first; });
    Word w;
    for (const auto &[l, a] : factors)
      w += l.pow(a);
    out.push_back({w, std::move(factors)});
  }
  std::sort(out.begin(), out.end(),
            [](const GoodWord &x, const GoodWord &y) { return x.word < y.word; });
  return out;
}

namespace {

int half_norm(const CartanDatum &c, const Word &l) {
  const Weight beta = l.weight(c.rank());
  return c.bilinear(beta, beta) / 2;
}

ShuffleElt divide_elt(const ShuffleElt &f, const LaurentPoly &d) {
  ShuffleElt out(f.datum(), f.weight());
  for (const auto &[w, p] : f.terms())
    out.add_term(w, exact_div(p, d));
  return out;
}

} // namespace

DualBasis::DualBasis(DatumPtr datum) : table_(std::move(datum)) {}

ShuffleElt DualBasis::r_of_lyndon(const Word &l) {
  std::lock_guard lock(mu_);
  if (!table_.is_good_lyndon(l))
    throw not_good_lyndon(render_word(l, table_.cartan()) + " is not a good Lyndon word");
  if (auto it = r_cache_.find(l); it != r_cache_.end())
    return it->second;
  ShuffleElt r = ShuffleElt::word(datum(), l);
  if (l.size() > 1) {
    auto [l1, l2] = costandard_factorization(l);
    r = shuffle_bracket(r_of_lyndon(l1), r_of_lyndon(l2));
  }
  r_cache_.emplace(l, r);
  return r;
}

DualPBWVector DualBasis::dual_root_vector(const Word &l) {
  std::lock_guard lock(mu_);
  if (auto it = root_cache_.find(l); it != root_cache_.end())
    return it->second;
  const ShuffleElt r = r_of_lyndon(l);
  const CartanDatum &c = table_.cartan();
  const Weight beta = r.weight();
  // (-1)^{len-1} q^{-N(beta)} / (E_l, E_l)
  LaurentPoly num = LaurentPoly(1) - LaurentPoly::q(c.bilinear(beta, beta));
  num = num.shifted(-c.n_of(beta));
  if (l.size() % 2 == 0)
    num = -num;
  LaurentPoly den(1);
  for (int i = 1; i <= c.rank(); ++i)
    den *= (LaurentPoly(1) - LaurentPoly::q(2 * c.d(i))).pow(static_cast<unsigned>(beta[i]));
  ShuffleElt scaled(datum(), beta);
  for (const auto &[w, p] : r.terms())
    scaled.add_term(w, exact_div(p * num, den));
  const LaurentPoly kappa = sqrt_exact(scaled.coefficient(l));
  DualPBWVector v{GoodWord{l, {{l, 1}}}, divide_elt(scaled, kappa), kappa};
  root_cache_.emplace(l, v);
  return v;
}

DualPBWVector DualBasis::dual_pbw(const Word &word) {
  std::lock_guard lock(mu_);
  if (auto it = pbw_cache_.find(word); it != pbw_cache_.end())
    return it->second;
  GoodWord g = factor_good_word(table_, word);
  DualPBWVector v{g, ShuffleElt::unit(datum()), LaurentPoly(1)};
  if (g.factors.size() == 1 && g.factors[0].second == 1) {
    v = dual_root_vector(word);
  } else {
    int c_g = 0;
    for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) {
      const auto &[l, a] = *it;
      const DualPBWVector root = dual_root_vector(l);
      const int d_l = half_norm(table_.cartan(), l);
      c_g += a * (a - 1) / 2 * d_l;
      v.elt = qshuffle(v.elt, shuffle_power(root.elt, a));
      v.kappa *= root.kappa.pow(static_cast<unsigned>(a)) * q_factorial(a, d_l);
    }
    v.elt = v.elt.shifted(c_g);
  }
  pbw_cache_.emplace(word, v);
  return v;
}

std::vector<DualCanonicalVector> DualBasis::dual_canonical_weight(const Weight &nu) {
  std::lock_guard lock(mu_);
  if (auto it = canonical_cache_.find(nu); it != canonical_cache_.end())
    return it->second;
  const CartanDatum &c = table_.cartan();
  const std::vector<GoodWord> goods = good_words_of_weight(table_, nu);
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < goods.size(); ++k)
    index.emplace(goods[k].word, k);

  std::vector<DualCanonicalVector> out;
  for (std::size_t t = 0; t < goods.size(); ++t) {
    const DualPBWVector e = dual_pbw(goods[t].word);
    ShuffleElt f = e.elt;
    std::size_t last_pivot = t;
    for (;;) {
      std::optional<std::size_t> pivot;
      bool asymmetric = false;
      for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (it->second.is_bar_symmetric())
          continue;
        asymmetric = true;
        if (auto found = index.find(it->first); found != index.end()) {
          pivot = found->second;
          break;
        }
      }
      if (!asymmetric)
        break;
      if (!pivot)
        throw straightening_failure("no good word carries an asymmetric coefficient while "
                                    "straightening " + render_word(goods[t].word, c));
      if (*pivot >= last_pivot)
        throw straightening_failure("pivot did not decrease while straightening " +
                                    render_word(goods[t].word, c));
      last_pivot = *pivot;
      const DualCanonicalVector &b = out[*pivot];
      const LaurentPoly alpha = f.coefficient(b.g.word);
      const LaurentPoly delta = exact_div(alpha - alpha.bar(), b.kappa);
      if (delta.bar() != -delta)
        throw straightening_failure("correction is not antisymmetric at " +
                                    render_word(b.g.word, c));
      const LaurentPoly gamma = delta.positive_part();
      if (gamma.is_zero())
        throw straightening_failure("empty correction at " + render_word(b.g.word, c));
      f.add_scaled(b.elt, -gamma);
    }
    if (f.is_zero() || f.max_word() != goods[t].word || f.leading_coefficient() != e.kappa)
      throw straightening_failure("leading term of b* differs from kappa at " +
                                  render_word(goods[t].word, c));
    out.push_back({goods[t], std::move(f), e.kappa});
  }
  canonical_cache_.emplace(nu, out);
  return out;
}

DualCanonicalVector DualBasis::dual_canonical(const Word &g) {
  factor_good_word(table_, g);
  for (auto &b : dual_canonical_weight(g.weight(table_.cartan().rank())))
    if (b.g.word == g)
      return b;
  throw theory_violation("good word missing from its weight space");
}

std::map<Word, LaurentPoly> DualBasis::expand_in_dual_pbw(const ShuffleElt &f) {
  if (!(f.cartan() == table_.cartan()))
    throw datum_mismatch("element and table use different root data");
  std::map<Word, LaurentPoly> out;
  ShuffleElt residual = f;
  while (!residual.is_zero()) {
    const Word h = residual.max_word();
    if (!table_.is_good(h))
      throw not_in_u("largest word " + render_word(h, table_.cartan()) + " is not good");
    const DualPBWVector e = dual_pbw(h);
    const LaurentPoly coef = exact_div(residual.leading_coefficient(), e.kappa);
    residual.add_scaled(e.elt, -coef);
    out.emplace(h, coef);
  }
  return out;
}

std::vector<PositivityViolation> DualBasis::positivity_report(const Weight &nu) {
  std::vector<PositivityViolation> out;
  for (const auto &b : dual_canonical_weight(nu))
    for (const auto &[w, p] : b.elt.terms())
      if (!p.is_nonnegative())
        out.push_back({b.g.word, w, p});
  return out;
}

RealityResult DualBasis::is_real(const DualCanonicalVector &b) {
  const ShuffleElt s = qshuffle(b.elt, b.elt);
  RealityResult res;
  const Word h = s.max_word();
  res.partner = h;
  if (!table_.is_good(h))
    throw theory_violation("square has a largest word that is not good");
  const DualCanonicalVector partner = dual_canonical(h);
  res.shift = s.leading_coefficient().max_exp() - partner.elt.leading_coefficient().max_exp();
  res.real = s == partner.elt.shifted(res.shift);
  return res;
}

namespace {

Word segment(int a, int b) {
  Word w;
  for (int i = a; i <= b; ++i)
    w.push_back(i);
  return w;
}

} // namespace

ShuffleElt closed_form_root_vector(const DatumPtr &datum, const Weight &beta) {
  const CartanDatum &c = *datum;
  const int r = c.rank();
  if (!c.has_default_order())
    throw usage_error("closed formulas assume the default order of simple roots");
  auto word = [&](const Word &w) { return ShuffleElt::word(datum, w); };
  auto shuf = [&](const Word &u, const Word &v) { return qshuffle_words(datum, u, v); };
  std::vector<std::pair<Word, std::function<ShuffleElt()>>> forms;
  auto plain = [&](const Word &w) { forms.emplace_back(w, [&word, w] { return word(w); }); };

  switch (c.family()) {
  case Family::A:
    for (int i = 1; i <= r; ++i)
      for (int j = i; j <= r; ++j)
        plain(segment(i, j));
    break;
  case Family::B:
    for (int i = 1; i <= r; ++i)
      for (int j = i; j <= r; ++j)
        plain(segment(i, j));
    for (int j = 1; j <= r; ++j)
      for (int k = j + 1; k <= r; ++k)
        forms.emplace_back(segment(1, j) + segment(1, k), [&, j, k] {
          return q_int(2, 1) * prepend_letter(1, shuf(segment(2, j), segment(1, k)));
        });
    break;
  case Family::C:
    for (int i = 1; i <= r; ++i)
      for (int j = i; j <= r; ++j)
        plain(segment(i, j));
    for (int j = 2; j <= r; ++j)
      for (int k = j; k <= r; ++k)
        forms.emplace_back(segment(1, k) + segment(2, j), [&, j, k] {
          // a square of one word needs the extra q to be bar symmetric
          return prepend_letter(1, shuf(segment(2, j), segment(2, k))).shifted(j == k ? 1 : 0);
        });
    break;
  case Family::D:
    plain(Word{1});
    for (int i = 3; i <= r; ++i)
      plain(Word{1} + segment(3, i));
    for (int i = 2; i <= r; ++i)
      for (int j = i; j <= r; ++j)
        plain(segment(i, j));
    for (int j = 2; j <= r; ++j)
      for (int k = j + 1; k <= r; ++k)
        forms.emplace_back(Word{1} + segment(3, k) + segment(2, j), [&, j, k] {
          ShuffleElt u = shuf(segment(2, j), segment(3, k));
          u.add_scaled(shuf(segment(2, k), segment(3, j)), -LaurentPoly::q(1));
          return prepend_letter(1, u);
        });
    break;
  default:
    throw unsupported_family("no closed formula for type " + c.name());
  }
  for (const auto &[w, make] : forms)
    if (w.weight(r) == beta)
      return make();
  throw usage_error(c.render_weight(beta) + " is not a positive root of " + c.name());
}

ShuffleElt commutation_class_root_vector(const GoodLyndonTable &table, const Word &l) {
  const CartanDatum &c = table.cartan();
  if (!c.is_simply_laced())
    throw not_simply_laced(c.name() + " is not simply laced");
  if (!table.is_good_lyndon(l))
    throw not_good_lyndon(render_word(l, c) + " is not a good Lyndon word");
  ShuffleElt out(table.datum(), l.weight(c.rank()));
  for (const Word &w : commutation_class(l, c))
    out.add_term(w, 1);
  return out;
}

} // namespace qshuffle
