#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "adolg/ring/laurent1.hpp"
#include "adolg/ring/laurent2.hpp"

namespace adolg {

// even + odd*Y with Y^2 = modulus, over a Laurent polynomial ring Base.
//
// Zero-initialized values carry no modulus and combine with any other value;
// two values that both carry a modulus must carry the same one.
template <class Base>
class ExtScalar {
public:
  using Modulus = std::shared_ptr<const Base>;

  ExtScalar() = default;
  ExtScalar(Base even, Base odd, Modulus modulus)
      : even_(std::move(even)), odd_(std::move(odd)), modulus_(std::move(modulus)) {}

  static ExtScalar constant(Base even, Modulus modulus) { return {std::move(even), Base(), std::move(modulus)}; }
  static ExtScalar y(Modulus modulus) { return {Base(), Base(1), std::move(modulus)}; }

  const Base& even() const { return even_; }
  const Base& odd() const { return odd_; }
  const Modulus& modulus() const { return modulus_; }

  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
  bool is_one() const { return even_.is_one() && odd_.is_zero(); }
  bool is_unit() const { return odd_.is_zero() && even_.is_unit(); }
  ExtScalar inverse() const {
    if (!is_unit()) throw std::domain_error("only Y-free units are invertible: " + to_string());
    return {even_.inverse(), Base(), modulus_};
  }

  // The automorphism Y -> -Y.
  ExtScalar conj() const { return {even_, -odd_, modulus_}; }

  ExtScalar operator-() const { return {-even_, -odd_, modulus_}; }
  ExtScalar& operator+=(const ExtScalar& rhs) {
    adopt(rhs);
    even_ += rhs.even_;
    odd_ += rhs.odd_;
    return *this;
  }
  ExtScalar& operator-=(const ExtScalar& rhs) {
    adopt(rhs);
    even_ -= rhs.even_;
    odd_ -= rhs.odd_;
    return *this;
  }
  ExtScalar& operator*=(const ExtScalar& rhs) { return *this = *this * rhs; }

  // this += a * b, reduced by Y^2 = p.
  void add_product(const ExtScalar& a, const ExtScalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (&a == this || &b == this) {
      ExtScalar copy = *this;
      copy.add_product(a, b);
      *this = std::move(copy);
      return;
    }
    adopt(a);
    adopt(b);
    even_.add_product(a.even_, b.even_);
    if (!a.odd_.is_zero() && !b.odd_.is_zero()) {
      if (!modulus_) throw std::invalid_argument("Y*Y requires a modulus");
      even_.add_product(a.odd_ * b.odd_, *modulus_);
    }
    odd_.add_product(a.even_, b.odd_);
    odd_.add_product(a.odd_, b.even_);
  }

  friend ExtScalar operator+(ExtScalar x, const ExtScalar& y) { return x += y; }
  friend ExtScalar operator-(ExtScalar x, const ExtScalar& y) { return x -= y; }
  friend ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
    ExtScalar r;
    r.add_product(x, y);
    return r;
  }
  friend bool operator==(const ExtScalar& x, const ExtScalar& y) { return x.even_ == y.even_ && x.odd_ == y.odd_; }
  friend bool operator!=(const ExtScalar& x, const ExtScalar& y) { return !(x == y); }

  std::string to_string() const {
    if (odd_.is_zero()) return even_.to_string();
    std::string s = "[" + even_.to_string() + "] + Y*[" + odd_.to_string() + "]";
    return s;
  }

private:
  void adopt(const ExtScalar& other) {
    if (!other.modulus_ || modulus_ == other.modulus_) return;
    if (!modulus_) {
      modulus_ = other.modulus_;
      return;
    }
    if (*modulus_ != *other.modulus_) throw std::invalid_argument("ExtScalar modulus mismatch");
  }

  Base even_;
  Base odd_;
  Modulus modulus_;
};

using GenericScalar = ExtScalar<LaurentPoly2>;
using SpecScalar = ExtScalar<LaurentPoly1>;

// Y^2 = (t0 - 1)(1 - t1) = (s0^2 - 1)(1 - s1^2).
const GenericScalar::Modulus& generic_modulus();
// The same expression under t0 = t^2, t1 = w^2 t^-2.
const SpecScalar::Modulus& specialized_modulus();

// Ring homomorphism s0 -> t, s1 -> w/t (so t0 -> t^2, t1 -> w^2/t^2).
LaurentPoly1 specialize(const LaurentPoly2& p);
// Also maps Y -> Y and the generic modulus to the specialized one.
SpecScalar specialize(const GenericScalar& x);

}  // namespace adolg
