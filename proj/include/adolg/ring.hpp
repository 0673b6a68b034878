#pragma once

// Exact coefficient rings: Z[w], Laurent polynomials over Z[w] (in t) and over
// Z (in s0, s1), and the quadratic extension adjoining Y.

#include "adolg/ring/cyclotomic.hpp"
#include "adolg/ring/ext.hpp"
#include "adolg/ring/integer.hpp"
#include "adolg/ring/laurent1.hpp"
#include "adolg/ring/laurent2.hpp"

namespace adolg {

inline std::string to_text(const LaurentPoly1& p) { return p.to_string(); }
inline std::string to_text(const LaurentPoly2& p) { return p.to_string(); }
template <class Base>
std::string to_text(const ExtScalar<Base>& x) {
  return x.to_string();
}

}  // namespace adolg
