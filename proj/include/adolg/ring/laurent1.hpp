#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "adolg/ring/cyclotomic.hpp"

namespace adolg {

// Laurent polynomial in t over Z[w].
//
// Stored densely: coeffs_[k] is the coefficient of t^(low_ + k). The
// representation is canonical: the zero polynomial has no coefficients and
// otherwise both the first and last stored coefficients are nonzero.
// Iteration through for_each_term() visits only nonzero terms.
class LaurentPoly1 {
public:
  LaurentPoly1() = default;
  LaurentPoly1(CycScalar c) {  // NOLINT(implicit)
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  LaurentPoly1(std::int64_t c) : LaurentPoly1(CycScalar(c)) {}  // NOLINT(implicit)

  static LaurentPoly1 monomial(CycScalar c, int exponent);
  static LaurentPoly1 t(int exponent = 1) { return monomial(CycScalar(1), exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  // Units of Z[w][t, 1/t] are exactly +-w^k t^m.
  bool is_unit() const { return is_monomial() && coeffs_[0].is_unit(); }
  LaurentPoly1 inverse() const;  // throws std::domain_error for non-units

  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;
  CycScalar coeff(int exponent) const;

  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) f(low_ + static_cast<int>(i), coeffs_[i]);
    }
  }

  LaurentPoly1 operator-() const;
  LaurentPoly1& operator+=(const LaurentPoly1& rhs);
  LaurentPoly1& operator-=(const LaurentPoly1& rhs);
  LaurentPoly1& operator*=(const LaurentPoly1& rhs) { return *this = *this * rhs; }
  // this += a * b without materializing the product when either side is a monomial.
  void add_product(const LaurentPoly1& a, const LaurentPoly1& b);

  friend LaurentPoly1 operator+(LaurentPoly1 x, const LaurentPoly1& y) { return x += y; }
  friend LaurentPoly1 operator-(LaurentPoly1 x, const LaurentPoly1& y) { return x -= y; }
  friend LaurentPoly1 operator*(const LaurentPoly1& x, const LaurentPoly1& y);
  friend bool operator==(const LaurentPoly1& x, const LaurentPoly1& y) {
    return x.low_ == y.low_ && x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const LaurentPoly1& x, const LaurentPoly1& y) { return !(x == y); }

  // Multiply by t^k.
  LaurentPoly1 shifted(int k) const;
  // Substitute t := v for a unit v of Z[w].
  CycScalar evaluate_at(const CycScalar& v) const;
  // Substitute t := c * t^e where c is a unit (e = +-1 typical).
  LaurentPoly1 substitute(const CycScalar& c, int e) const;

  // "(a+b*w)*t^k + ..." in ascending exponent order; "(0)" for zero.
  std::string to_string() const;
  static LaurentPoly1 parse(std::string_view text);

private:
  void trim();
  void ensure_range(int lo, int hi);

  int low_ = 0;
  std::vector<CycScalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly1& p);

}  // namespace adolg
