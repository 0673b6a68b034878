#include "adolg/ring/laurent1.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "adolg/ring/text.hpp"

namespace adolg {

LaurentPoly1 LaurentPoly1::monomial(CycScalar c, int exponent) {
  LaurentPoly1 p;
  if (!c.is_zero()) {
    p.low_ = exponent;
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

void LaurentPoly1::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1].is_zero()) --last;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

void LaurentPoly1::ensure_range(int lo, int hi) {
  if (coeffs_.empty()) {
    low_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    return;
  }
  int cur_hi = high();
  if (hi > cur_hi) coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(hi - cur_hi));
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), CycScalar());
    low_ = lo;
  }
}

std::size_t LaurentPoly1::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const CycScalar& c) { return !c.is_zero(); }));
}

CycScalar LaurentPoly1::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high()) return {};
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly1 LaurentPoly1::inverse() const {
  if (!is_unit()) throw std::domain_error("not a unit of Z[w][t,1/t]: " + to_string());
  return monomial(coeffs_[0].inverse(), -low_);
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& rhs) {
  if (rhs.is_zero()) return *this;
  ensure_range(rhs.low_, rhs.high());
  std::size_t off = static_cast<std::size_t>(rhs.low_ - low_);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[off + i] += rhs.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& rhs) {
  if (rhs.is_zero()) return *this;
  ensure_range(rhs.low_, rhs.high());
  std::size_t off = static_cast<std::size_t>(rhs.low_ - low_);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[off + i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly1 operator*(const LaurentPoly1& x, const LaurentPoly1& y) {
  LaurentPoly1 r;
  r.add_product(x, y);
  return r;
}

void LaurentPoly1::add_product(const LaurentPoly1& a, const LaurentPoly1& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (&a == this || &b == this) {
    LaurentPoly1 copy = *this;
    copy.add_product(a, b);
    *this = std::move(copy);
    return;
  }
  // Iterate the shorter operand in the outer loop.
  const LaurentPoly1& outer = a.coeffs_.size() <= b.coeffs_.size() ? a : b;
  const LaurentPoly1& inner = &outer == &a ? b : a;
  ensure_range(a.low_ + b.low_, a.high() + b.high());
  CycScalar tmp;
  for (std::size_t i = 0; i < outer.coeffs_.size(); ++i) {
    const CycScalar& c = outer.coeffs_[i];
    if (c.is_zero()) continue;
    std::size_t base = static_cast<std::size_t>(outer.low_ + static_cast<int>(i) + inner.low_ - low_);
    if (c.is_one()) {
      for (std::size_t j = 0; j < inner.coeffs_.size(); ++j) coeffs_[base + j] += inner.coeffs_[j];
    } else {
      for (std::size_t j = 0; j < inner.coeffs_.size(); ++j) {
        if (inner.coeffs_[j].is_zero()) continue;
        tmp = c;
        tmp *= inner.coeffs_[j];
        coeffs_[base + j] += tmp;
      }
    }
  }
  trim();
}

LaurentPoly1 LaurentPoly1::shifted(int k) const {
  LaurentPoly1 r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

CycScalar LaurentPoly1::evaluate_at(const CycScalar& v) const {
  if (!v.is_unit()) throw std::domain_error("evaluation point must be a unit of Z[w]: " + v.to_string());
  CycScalar sum;
  for_each_term([&](int e, const CycScalar& c) {
    sum += c * CycScalar::omega_pow(*v.unit_exponent() * e);
  });
  return sum;
}

LaurentPoly1 LaurentPoly1::substitute(const CycScalar& c, int e) const {
  auto k = c.unit_exponent();
  if (!k) throw std::domain_error("substitution factor must be a unit of Z[w]: " + c.to_string());
  LaurentPoly1 r;
  for_each_term([&](int exp, const CycScalar& coef) {
    r += monomial(coef * CycScalar::omega_pow(*k * exp), e * exp);
  });
  return r;
}

std::string LaurentPoly1::to_string() const {
  if (is_zero()) return "(0)";
  std::string out;
  for_each_term([&](int e, const CycScalar& c) {
    if (!out.empty()) out += " + ";
    out += '(';
    out += c.to_string();
    out += ')';
    if (e != 0) {
      out += "*t^";
      out += std::to_string(e);
    }
  });
  return out;
}

LaurentPoly1 LaurentPoly1::parse(std::string_view text) {
  LaurentPoly1 r;
  for (const auto& term : text::split_terms(text)) {
    auto [coef, powers] = text::split_coefficient(term);
    int e = 0;
    for (const auto& [var, exp] : powers) {
      if (var != "t") throw std::invalid_argument("unknown variable '" + var + "' in " + std::string(text));
      e += exp;
    }
    r += monomial(CycScalar::parse(coef), e);
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly1& p) { return os << p.to_string(); }

}  // namespace adolg
