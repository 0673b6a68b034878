#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "adolg/ring/integer.hpp"

namespace adolg {

// a + b*w in Z[w], w = exp(i*pi/3) a primitive sixth root of unity.
// Arithmetic uses the minimal polynomial w^2 = w - 1.
class CycScalar {
public:
  CycScalar() = default;
  CycScalar(Integer a) : a_(std::move(a)) {}  // NOLINT(implicit)
  CycScalar(std::int64_t a) : a_(a) {}        // NOLINT(implicit)
  CycScalar(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}

  static CycScalar omega() { return {0, 1}; }
  // w^k for any integer k (w^6 = 1).
  static CycScalar omega_pow(int k);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }

  // Field norm a^2 + ab + b^2; units are exactly the elements of norm 1.
  Integer norm() const;
  // Complex conjugate: w -> w^-1 = 1 - w.
  CycScalar conj() const { return {a_ + b_, -b_}; }
  // If this is a unit (+-w^k), the exponent k in [0, 6).
  std::optional<int> unit_exponent() const;
  bool is_unit() const { return unit_exponent().has_value(); }
  CycScalar inverse() const;  // throws std::domain_error for non-units
  // Exact quotient in Z[w]; throws std::domain_error if `d` does not divide.
  CycScalar divide_exact(const CycScalar& d) const;

  CycScalar operator-() const { return {-a_, -b_}; }
  CycScalar& operator+=(const CycScalar& rhs) {
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
  }
  CycScalar& operator-=(const CycScalar& rhs) {
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
  }
  CycScalar& operator*=(const CycScalar& rhs);

  friend CycScalar operator+(CycScalar x, const CycScalar& y) { return x += y; }
  friend CycScalar operator-(CycScalar x, const CycScalar& y) { return x -= y; }
  friend CycScalar operator*(CycScalar x, const CycScalar& y) { return x *= y; }
  friend bool operator==(const CycScalar& x, const CycScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const CycScalar& x, const CycScalar& y) { return !(x == y); }

  // Diagnostic complex embedding a + b(1 + i*sqrt(3))/2.
  std::complex<double> to_complex() const;

  // Text form "a+b*w" with zero parts elided ("0" for zero).
  std::string to_string() const;
  static CycScalar parse(std::string_view text);

private:
  Integer a_;
  Integer b_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& v);

}  // namespace adolg
