#include "adolg/ring/cyclotomic.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace adolg {

namespace {

// w^k for k = 0..5 as (a, b).
constexpr int kOmegaPowers[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};

}  // namespace

CycScalar CycScalar::omega_pow(int k) {
  int r = ((k % 6) + 6) % 6;
  return {kOmegaPowers[r][0], kOmegaPowers[r][1]};
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
  // (a + bw)(c + dw) = (ac - bd) + (ad + bc + bd)w
  if (b_.is_zero() && rhs.b_.is_zero()) {
    a_ *= rhs.a_;
    return *this;
  }
  Integer bd = b_ * rhs.b_;
  Integer na = a_ * rhs.a_ - bd;
  Integer nb = a_ * rhs.b_ + b_ * rhs.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Integer CycScalar::norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

std::optional<int> CycScalar::unit_exponent() const {
  if (!a_.is_small() || !b_.is_small()) return std::nullopt;
  std::int64_t a = a_.small_value(), b = b_.small_value();
  for (int k = 0; k < 6; ++k) {
    if (a == kOmegaPowers[k][0] && b == kOmegaPowers[k][1]) return k;
  }
  return std::nullopt;
}

CycScalar CycScalar::inverse() const {
  auto k = unit_exponent();
  if (!k) throw std::domain_error("not a unit of Z[w]: " + to_string());
  return omega_pow(-*k);
}

CycScalar CycScalar::divide_exact(const CycScalar& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero in Z[w]");
  // x / d = x * conj(d) / N(d)
  CycScalar num = *this * d.conj();
  Integer n = d.norm();
  if (!num.a_.divisible_by(n) || !num.b_.divisible_by(n)) {
    throw std::domain_error(to_string() + " is not divisible by " + d.to_string() + " in Z[w]");
  }
  return {num.a_.divide_exact(n), num.b_.divide_exact(n)};
}

std::complex<double> CycScalar::to_complex() const {
  double a = a_.to_mpz().get_d();
  double b = b_.to_mpz().get_d();
  return {a + b * 0.5, b * std::sqrt(3.0) * 0.5};
}

std::string CycScalar::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string out;
  if (!a_.is_zero()) {
    out = a_.to_string();
    if (b_.sign() > 0) out += '+';
  }
  out += b_.to_string();
  out += "*w";
  return out;
}

CycScalar CycScalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty Z[w] literal");
  const std::string suffix = "*w";
  bool has_w = s.size() >= suffix.size() && s.compare(s.size() - 2, 2, suffix) == 0;
  if (!has_w) return CycScalar(Integer::parse(s));
  std::string body = s.substr(0, s.size() - 2);
  // Split at the last sign that is not the leading character.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {Integer(0), Integer::parse(body)};
  return {Integer::parse(body.substr(0, split)), Integer::parse(body.substr(split))};
}

std::ostream& operator<<(std::ostream& os, const CycScalar& v) { return os << v.to_string(); }

}  // namespace adolg
