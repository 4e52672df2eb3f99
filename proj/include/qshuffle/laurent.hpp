#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qshuffle {

/// Arbitrary precision integer used for every coefficient.
using Integer = mpz_class;

/**
 * Integer Laurent polynomial in one variable q.
 *
 * Stored as a list of (exponent, coefficient) terms sorted by increasing
 * exponent. No stored coefficient is zero, so the zero polynomial is the
 * empty list and equality is term-wise.
 */
class LaurentPoly {
public:
  struct Term {
    int exp;
    Integer coeff;

    bool operator==(const Term &) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long constant);
  LaurentPoly(const Integer &constant);

  /// c * q^e
  static LaurentPoly monomial(const Integer &c, int e);
  /// q^e
  static LaurentPoly q(int e = 1) { return monomial(1, e); }
  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates add up.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Smallest / largest exponent. Undefined for zero.
  int min_exp() const { return terms_.front().exp; }
  int max_exp() const { return terms_.back().exp; }

  Integer coefficient(int e) const;
  /// Coefficient of the highest power of q. Zero for the zero polynomial.
  Integer leading_coefficient() const;

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const {
    return is_zero() || (terms_.size() == 1 && terms_[0].exp == 0);
  }

  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  LaurentPoly &operator*=(const LaurentPoly &o);
  /// this += c * q^shift * o, without materialising the product.
  void add_scaled(const LaurentPoly &o, int shift, const Integer &c = 1);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  LaurentPoly operator-() const;

  /// q^k * p
  LaurentPoly shifted(int k) const;
  /// q -> q^{-1}
  LaurentPoly bar() const;
  bool is_bar_symmetric() const;
  /// Restriction to strictly positive exponents.
  LaurentPoly positive_part() const;
  /// true iff every coefficient is >= 0
  bool is_nonnegative() const;
  /// Value at q = 1.
  Integer eval_at_one() const;
  LaurentPoly pow(unsigned k) const;

  bool operator==(const LaurentPoly &) const = default;

  /// Descending exponents, e.g. "q^3 + 2*q + 2*q^-1 + q^-3".
  std::string to_string() const;
  /// Inverse of to_string. Accepts "+"/"-" separated terms of the form
  /// c, c*q, q^e, c*q^e, -q^e and so on.
  static LaurentPoly parse(std::string_view text);

private:
  void normalize();

  std::vector<Term> terms_;
};

/// Quantum integer [k]_d = (q^{dk} - q^{-dk}) / (q^d - q^{-d}).
LaurentPoly q_int(int k, int d = 1);
/// [k]_d [k-1]_d ... [1]_d
LaurentPoly q_factorial(int k, int d = 1);
/// Gaussian binomial [m choose k]_d.
LaurentPoly q_binom(int m, int k, int d = 1);

/// u with u * d == p. Throws inexact_division when no such u exists.
LaurentPoly exact_div(const LaurentPoly &p, const LaurentPoly &d);
/// s with s * s == p and positive leading coefficient. Throws
/// not_a_perfect_square otherwise.
LaurentPoly sqrt_exact(const LaurentPoly &p);

} // namespace qshuffle
