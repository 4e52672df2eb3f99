#include "qshuffle/laurent.hpp"

#include "qshuffle/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace qshuffle {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0)
    terms_.push_back({0, Integer(constant)});
}

LaurentPoly::LaurentPoly(const Integer &constant) {
  if (constant != 0)
    terms_.push_back({0, constant});
}

LaurentPoly LaurentPoly::monomial(const Integer &c, int e) {
  LaurentPoly p;
  if (c != 0)
    p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term &a, const Term &b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto &t : terms_) {
    if (!out.empty() && out.back().exp == t.exp)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (out.back().coeff == 0)
      out.pop_back();
  }
  terms_ = std::move(out);
}

Integer LaurentPoly::coefficient(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term &t, int x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e)
    return it->coeff;
  return 0;
}

Integer LaurentPoly::leading_coefficient() const {
  return terms_.empty() ? Integer(0) : terms_.back().coeff;
}

void LaurentPoly::add_scaled(const LaurentPoly &o, int shift, const Integer &c) {
  if (o.is_zero() || c == 0)
    return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp + shift)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->exp + shift < a->exp) {
      out.push_back({b->exp + shift, b->coeff * c});
      ++b;
    } else {
      Integer s = a->coeff + b->coeff * c;
      if (s != 0)
        out.push_back({a->exp, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  add_scaled(o, 0, 1);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
  add_scaled(o, 0, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  if (a.is_monomial()) {
    LaurentPoly r = b.shifted(a.terms_[0].exp);
    for (auto &t : r.terms_)
      t.coeff *= a.terms_[0].coeff;
    return r;
  }
  const int lo = a.min_exp() + b.min_exp();
  const int hi = a.max_exp() + b.max_exp();
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto &x : a.terms_)
    for (const auto &y : b.terms_) {
      auto &slot = dense[static_cast<std::size_t>(x.exp + y.exp - lo)];
      mpz_addmul(slot.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    }
  LaurentPoly r;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0)
      r.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
  return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto &t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto &t : r.terms_)
    t.exp += k;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.push_back({-it->exp, it->coeff});
  return r;
}

bool LaurentPoly::is_bar_symmetric() const {
  const std::size_t n = terms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto &a = terms_[i];
    const auto &b = terms_[n - 1 - i];
    if (a.exp != -b.exp || a.coeff != b.coeff)
      return false;
  }
  return true;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly r;
  for (const auto &t : terms_)
    if (t.exp > 0)
      r.terms_.push_back(t);
  return r;
}

bool LaurentPoly::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term &t) { return t.coeff > 0; });
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto &t : terms_)
    s += t.coeff;
  return s;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r(1);
  for (unsigned i = 0; i < k; ++i)
    r *= *this;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool first = it == terms_.rbegin();
    Integer c = it->coeff;
    if (!first) {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0 && it->exp != 0 && c == -1) {
      out += "-";
      c = 1;
    }
    if (it->exp == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1)
      out += c.get_str() + "*";
    out += "q";
    if (it->exp != 1)
      out += "^" + std::to_string(it->exp);
  }
  return out;
}

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly run() {
    std::vector<LaurentPoly::Term> terms;
    skip();
    if (eat('0') && (skip(), done()))
      return {};
    pos_ = 0;
    skip();
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    for (;;) {
      skip();
      terms.push_back(term(negative));
      skip();
      if (done())
        break;
      if (eat('+'))
        negative = false;
      else if (eat('-'))
        negative = true;
      else
        fail();
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

private:
  LaurentPoly::Term term(bool negative) {
    Integer c = 1;
    int e = 0;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      c = Integer(std::string(s_.substr(start, pos_ - start)));
      skip();
      if (!eat('*'))
        return {0, negative ? Integer(-c) : c};
      skip();
    }
    if (!eat('q'))
      fail();
    e = 1;
    skip();
    if (eat('^')) {
      skip();
      bool neg_exp = eat('-');
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (start == pos_)
        fail();
      int v = 0;
      std::from_chars(s_.data() + start, s_.data() + pos_, v);
      e = neg_exp ? -v : v;
    }
    return {e, negative ? Integer(-c) : c};
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char ch) {
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool done() const { return pos_ >= s_.size(); }
  [[noreturn]] void fail() const {
    throw parse_error("cannot parse Laurent polynomial: '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).run(); }

LaurentPoly q_int(int k, int d) {
  std::vector<LaurentPoly::Term> terms;
  for (int i = 0; i < k; ++i)
    terms.push_back({d * (k - 1 - 2 * i), 1});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly q_factorial(int k, int d) {
  LaurentPoly r(1);
  for (int i = 2; i <= k; ++i)
    r *= q_int(i, d);
  return r;
}

LaurentPoly q_binom(int m, int k, int d) {
  if (k < 0 || k > m)
    return {};
  LaurentPoly num(1);
  for (int i = 0; i < k; ++i)
    num *= q_int(m - i, d);
  return exact_div(num, q_factorial(k, d));
}

LaurentPoly exact_div(const LaurentPoly &p, const LaurentPoly &d) {
  if (d.is_zero())
    throw inexact_division("division by the zero polynomial");
  if (p.is_zero())
    return {};
  // Work with ordinary polynomials P, D having nonzero constant terms.
  const int p_shift = p.min_exp();
  const int d_shift = d.min_exp();
  std::vector<Integer> rem(static_cast<std::size_t>(p.max_exp() - p_shift + 1));
  for (const auto &t : p.terms())
    rem[static_cast<std::size_t>(t.exp - p_shift)] = t.coeff;
  std::vector<Integer> div(static_cast<std::size_t>(d.max_exp() - d_shift + 1));
  for (const auto &t : d.terms())
    div[static_cast<std::size_t>(t.exp - d_shift)] = t.coeff;

  const std::size_t n = rem.size();
  const std::size_t m = div.size();
  if (m > n)
    throw inexact_division("(" + p.to_string() + ") / (" + d.to_string() + ")");
  const Integer &lead = div.back();
  std::vector<LaurentPoly::Term> quotient;
  for (std::size_t top = n; top >= m; --top) {
    Integer &c = rem[top - 1];
    if (c == 0)
      continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
      throw inexact_division("(" + p.to_string() + ") / (" + d.to_string() + ")");
    Integer f;
    mpz_divexact(f.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    const std::size_t offset = top - m;
    for (std::size_t j = 0; j < m; ++j)
      if (div[j] != 0)
        mpz_submul(rem[offset + j].get_mpz_t(), f.get_mpz_t(), div[j].get_mpz_t());
    quotient.push_back({static_cast<int>(offset) + p_shift - d_shift, std::move(f)});
  }
  for (const auto &c : rem)
    if (c != 0)
      throw inexact_division("(" + p.to_string() + ") / (" + d.to_string() + ")");
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly sqrt_exact(const LaurentPoly &p) {
  if (p.is_zero())
    return {};
  auto fail = [&] { throw not_a_perfect_square(p.to_string() + " is not a perfect square"); };
  const int shift = p.min_exp();
  const int span = p.max_exp() - shift;
  if (shift % 2 != 0 || span % 2 != 0)
    fail();
  std::vector<Integer> a(static_cast<std::size_t>(span + 1));
  for (const auto &t : p.terms())
    a[static_cast<std::size_t>(t.exp - shift)] = t.coeff;
  if (a[0] < 0 || !mpz_perfect_square_p(a[0].get_mpz_t()))
    fail();
  const std::size_t half = static_cast<std::size_t>(span / 2);
  std::vector<Integer> s(half + 1);
  s[0] = sqrt(a[0]);
  const Integer twice = 2 * s[0];
  for (std::size_t k = 1; k <= half; ++k) {
    Integer acc = a[k];
    for (std::size_t i = 1; i < k; ++i)
      acc -= s[i] * s[k - i];
    if (!mpz_divisible_p(acc.get_mpz_t(), twice.get_mpz_t()))
      fail();
    mpz_divexact(s[k].get_mpz_t(), acc.get_mpz_t(), twice.get_mpz_t());
  }
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i <= half; ++i)
    terms.push_back({static_cast<int>(i) + shift / 2, s[i]});
  LaurentPoly root = LaurentPoly::from_terms(std::move(terms));
  if (root * root != p)
    fail();
  if (root.leading_coefficient() < 0)
    root = -root;
  return root;
}

} // namespace qshuffle
