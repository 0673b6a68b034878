#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adolg/ring/integer.hpp"

namespace adolg {

// Laurent polynomial over Z in s0, s1, where s0^2 = t0 and s1^2 = t1.
//
// Terms are kept sorted by (power of s0, power of s1) lexicographically with
// no zero coefficients.
class LaurentPoly2 {
public:
  struct Term {
    int e0;
    int e1;
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly2() = default;
  LaurentPoly2(Integer c) {  // NOLINT(implicit)
    if (!c.is_zero()) terms_.push_back({0, 0, std::move(c)});
  }
  LaurentPoly2(std::int64_t c) : LaurentPoly2(Integer(c)) {}  // NOLINT(implicit)

  static LaurentPoly2 monomial(Integer c, int e0, int e1);
  static LaurentPoly2 s0(int k = 1) { return monomial(1, k, 0); }
  static LaurentPoly2 s1(int k = 1) { return monomial(1, 0, k); }
  static LaurentPoly2 t0(int k = 1) { return monomial(1, 2 * k, 0); }
  static LaurentPoly2 t1(int k = 1) { return monomial(1, 0, 2 * k); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].e0 == 0 && terms_[0].e1 == 0 && terms_[0].coeff.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_unit() const;
  LaurentPoly2 inverse() const;  // throws std::domain_error for non-units
  Integer coeff(int e0, int e1) const;

  // True iff every exponent pair is even, i.e. the element lies in Z[t0^+-1, t1^+-1].
  bool all_exponents_even() const;

  LaurentPoly2 operator-() const;
  LaurentPoly2& operator+=(const LaurentPoly2& rhs);
  LaurentPoly2& operator-=(const LaurentPoly2& rhs);
  LaurentPoly2& operator*=(const LaurentPoly2& rhs) { return *this = *this * rhs; }
  void add_product(const LaurentPoly2& a, const LaurentPoly2& b) { *this += a * b; }

  friend LaurentPoly2 operator+(LaurentPoly2 x, const LaurentPoly2& y) { return x += y; }
  friend LaurentPoly2 operator-(LaurentPoly2 x, const LaurentPoly2& y) { return x -= y; }
  friend LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y);
  friend bool operator==(const LaurentPoly2& x, const LaurentPoly2& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const LaurentPoly2& x, const LaurentPoly2& y) { return !(x == y); }

  // Text in the square-root variables: "(c)*s0^i*s1^j + ...".
  std::string to_string() const;
  // Text in t0 = s0^2, t1 = s1^2; requires all_exponents_even().
  std::string to_string_t() const;
  // Accepts s0, s1, t0, t1 as variables.
  static LaurentPoly2 parse(std::string_view text);

private:
  static LaurentPoly2 from_unsorted(std::vector<Term> terms);

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p);

}  // namespace adolg
