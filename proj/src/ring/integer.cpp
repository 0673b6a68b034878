#include "adolg/ring/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace adolg {

namespace {

bool fits_int64(const mpz_class& v) {
  // mpz_fits_slong_p is exact for LP64 targets where long is 64 bits.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

}  // namespace

void Integer::assign_big(const mpz_class& v) {
  if (fits_int64(v)) {
    small_ = v.get_si();
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(v);
  }
}

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(mpz_class(s, 10));
}

int Integer::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

std::string Integer::to_string() const {
  return big_ ? big_->get_str(10) : std::to_string(small_);
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_mpz() + rhs.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_mpz() - rhs.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_mpz() * rhs.to_mpz());
  return *this;
}

bool operator==(const Integer& a, const Integer& b) {
  // Canonical storage: a value is big only if it does not fit in int64.
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ < b.small_;
  return a.to_mpz() < b.to_mpz();
}

bool Integer::divisible_by(const Integer& divisor) const {
  if (divisor.is_zero()) return is_zero();
  if (!big_ && !divisor.big_ && divisor.small_ != -1) return small_ % divisor.small_ == 0;
  return mpz_divisible_p(to_mpz().get_mpz_t(), divisor.to_mpz().get_mpz_t()) != 0;
}

Integer Integer::divide_exact(const Integer& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  if (!divisible_by(divisor)) {
    throw std::domain_error(to_string() + " is not divisible by " + divisor.to_string());
  }
  if (!big_ && !divisor.big_ && divisor.small_ != -1) return Integer(small_ / divisor.small_);
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), to_mpz().get_mpz_t(), divisor.to_mpz().get_mpz_t());
  return Integer(q);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace adolg
