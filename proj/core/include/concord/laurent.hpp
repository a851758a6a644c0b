#pragma once

#include <map>
#include <string>
#include <utility>

#include "concord/bigint.hpp"

namespace concord {

// Integer Laurent polynomial in one variable t. Terms are kept in a sparse
// exponent -> coefficient map with no zero coefficients stored.
class LaurentPoly1 {
 public:
  LaurentPoly1() = default;  // zero
  static LaurentPoly1 constant(Int c);
  static LaurentPoly1 term(long long exp, Int coeff);
  static LaurentPoly1 one() { return constant(1); }
  static LaurentPoly1 variable() { return term(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<long long, Int>& terms() const { return terms_; }
  Int coeff(long long exp) const;
  long long min_exp() const;  // pre: !is_zero()
  long long max_exp() const;  // pre: !is_zero()

  LaurentPoly1& operator+=(const LaurentPoly1& o);
  LaurentPoly1& operator-=(const LaurentPoly1& o);
  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
  friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);
  LaurentPoly1 operator-() const;
  bool operator==(const LaurentPoly1& o) const = default;

  LaurentPoly1 shifted(long long k) const;      // multiply by t^k
  LaurentPoly1 inverted_variable() const;       // t -> t^-1
  Int eval_at_one() const;
  Int eval_at_minus_one() const;

  // "0", "1 - t + t^2", "2*t^-1 + 3*t^4"; terms in ascending exponent order.
  std::string str() const;

 private:
  void set(long long exp, Int c);
  std::map<long long, Int> terms_;
};

// Integer Laurent polynomial in two variables x, y; exponent pairs ordered
// lexicographically.
class LaurentPoly2 {
 public:
  using Exp = std::pair<long long, long long>;

  LaurentPoly2() = default;  // zero
  static LaurentPoly2 constant(Int c);
  static LaurentPoly2 term(long long xexp, long long yexp, Int coeff);
  static LaurentPoly2 one() { return constant(1); }
  static LaurentPoly2 x() { return term(1, 0, 1); }
  static LaurentPoly2 y() { return term(0, 1, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp, Int>& terms() const { return terms_; }
  Int coeff(long long xexp, long long yexp) const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  LaurentPoly2 operator-() const;
  bool operator==(const LaurentPoly2& o) const = default;

  LaurentPoly2 shifted(long long xk, long long yk) const;  // multiply by x^xk y^yk
  LaurentPoly2 inverted_variables() const;                 // (x,y) -> (x^-1,y^-1)

  // Substitute y = 1 and rename x to t.
  LaurentPoly1 eval_at_y_one() const;
  // Substitute x = 1 (collapses onto the y exponents, reported in t).
  LaurentPoly1 eval_at_x_one() const;

  // "0", "1 + x*y", "x^-1*y - 2*x^2"; terms in lexicographic exponent order.
  std::string str() const;

 private:
  void set(Exp e, Int c);
  std::map<Exp, Int> terms_;
};

// Canonical representative of the unit-multiple class {+-t^k p}: lowest
// exponent shifted to 0 and constant term made positive. Zero maps to zero.
LaurentPoly1 normalize_units_1(const LaurentPoly1& p);

// Canonical representative of {+-x^i y^j p}: lowest x-exponent 0, lowest
// y-exponent 0, lexicographically first term positive. Zero maps to zero.
LaurentPoly2 normalize_units_2(const LaurentPoly2& p);

bool unit_equal(const LaurentPoly1& a, const LaurentPoly1& b);
bool unit_equal(const LaurentPoly2& a, const LaurentPoly2& b);

// Exact division in the Laurent ring; throws std::domain_error when the
// divisor does not divide the dividend (or is zero).
LaurentPoly1 exact_divide(const LaurentPoly1& num, const LaurentPoly1& den);
LaurentPoly2 exact_divide(const LaurentPoly2& num, const LaurentPoly2& den);

// Parsers for the textual rendering above (used for golden files and JSON
// payloads). Throw std::invalid_argument with an offset-tagged message.
LaurentPoly1 parse_laurent1(const std::string& text);
LaurentPoly2 parse_laurent2(const std::string& text);

}  // namespace concord
