#include "adolg/ring/laurent2.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "adolg/ring/text.hpp"

namespace adolg {

namespace {

bool term_less(const LaurentPoly2::Term& a, const LaurentPoly2::Term& b) {
  return a.e0 != b.e0 ? a.e0 < b.e0 : a.e1 < b.e1;
}

bool same_key(const LaurentPoly2::Term& a, const LaurentPoly2::Term& b) { return a.e0 == b.e0 && a.e1 == b.e1; }

template <bool Subtract>
std::vector<LaurentPoly2::Term> merge(const std::vector<LaurentPoly2::Term>& x,
                                      const std::vector<LaurentPoly2::Term>& y) {
  std::vector<LaurentPoly2::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && term_less(x[i], y[j]))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || term_less(y[j], x[i])) {
      out.push_back(y[j++]);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
    } else {
      Integer c = x[i].coeff;
      if constexpr (Subtract) {
        c -= y[j].coeff;
      } else {
        c += y[j].coeff;
      }
      if (!c.is_zero()) out.push_back({x[i].e0, x[i].e1, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string var_power(const char* name, int e) {
  std::string s = "*";
  s += name;
  s += '^';
  s += std::to_string(e);
  return s;
}

}  // namespace

LaurentPoly2 LaurentPoly2::monomial(Integer c, int e0, int e1) {
  LaurentPoly2 p;
  if (!c.is_zero()) p.terms_.push_back({e0, e1, std::move(c)});
  return p;
}

LaurentPoly2 LaurentPoly2::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  LaurentPoly2 p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && same_key(p.terms_.back(), t)) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly2::is_unit() const {
  if (terms_.size() != 1) return false;
  const Integer& c = terms_[0].coeff;
  return c.is_one() || (-c).is_one();
}

LaurentPoly2 LaurentPoly2::inverse() const {
  if (!is_unit()) throw std::domain_error("not a unit of Z[s0^+-1, s1^+-1]: " + to_string());
  return monomial(terms_[0].coeff, -terms_[0].e0, -terms_[0].e1);
}

Integer LaurentPoly2::coeff(int e0, int e1) const {
  Term key{e0, e1, {}};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
  if (it != terms_.end() && same_key(*it, key)) return it->coeff;
  return {};
}

bool LaurentPoly2::all_exponents_even() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.e0 % 2 == 0 && t.e1 % 2 == 0; });
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  terms_ = merge<false>(terms_, rhs.terms_);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge<true>(terms_, rhs.terms_);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const LaurentPoly2& small = x.terms_.size() <= y.terms_.size() ? x : y;
  const LaurentPoly2& large = &small == &x ? y : x;
  if (small.is_monomial()) {
    // Shifting by a monomial preserves the sort order.
    const auto& m = small.terms_[0];
    LaurentPoly2 r;
    r.terms_.reserve(large.terms_.size());
    for (const auto& t : large.terms_) r.terms_.push_back({t.e0 + m.e0, t.e1 + m.e1, t.coeff * m.coeff});
    return r;
  }
  std::vector<LaurentPoly2::Term> prod;
  prod.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& a : small.terms_) {
    for (const auto& b : large.terms_) prod.push_back({a.e0 + b.e0, a.e1 + b.e1, a.coeff * b.coeff});
  }
  return LaurentPoly2::from_unsorted(std::move(prod));
}

std::string LaurentPoly2::to_string() const {
  if (is_zero()) return "(0)";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += '(' + t.coeff.to_string() + ')';
    if (t.e0 != 0) out += var_power("s0", t.e0);
    if (t.e1 != 0) out += var_power("s1", t.e1);
  }
  return out;
}

std::string LaurentPoly2::to_string_t() const {
  if (!all_exponents_even()) throw std::domain_error("polynomial has half-integer powers of t0/t1: " + to_string());
  if (is_zero()) return "(0)";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += '(' + t.coeff.to_string() + ')';
    if (t.e0 != 0) out += var_power("t0", t.e0 / 2);
    if (t.e1 != 0) out += var_power("t1", t.e1 / 2);
  }
  return out;
}

LaurentPoly2 LaurentPoly2::parse(std::string_view text) {
  std::vector<Term> terms;
  for (const auto& term : text::split_terms(text)) {
    auto [coef, powers] = text::split_coefficient(term);
    int e0 = 0, e1 = 0;
    for (const auto& [var, exp] : powers) {
      if (var == "s0") {
        e0 += exp;
      } else if (var == "s1") {
        e1 += exp;
      } else if (var == "t0") {
        e0 += 2 * exp;
      } else if (var == "t1") {
        e1 += 2 * exp;
      } else {
        throw std::invalid_argument("unknown variable '" + var + "' in " + std::string(text));
      }
    }
    terms.push_back({e0, e1, Integer::parse(coef)});
  }
  return from_unsorted(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p) { return os << p.to_string(); }

}  // namespace adolg
