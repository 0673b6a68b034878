#include "adolg/ring/ext.hpp"

namespace adolg {

const GenericScalar::Modulus& generic_modulus() {
  static const GenericScalar::Modulus p =
      std::make_shared<const LaurentPoly2>((LaurentPoly2::t0() - 1) * (LaurentPoly2(1) - LaurentPoly2::t1()));
  return p;
}

const SpecScalar::Modulus& specialized_modulus() {
  static const SpecScalar::Modulus p = std::make_shared<const LaurentPoly1>(specialize(*generic_modulus()));
  return p;
}

LaurentPoly1 specialize(const LaurentPoly2& p) {
  LaurentPoly1 r;
  for (const auto& term : p.terms()) {
    r += LaurentPoly1::monomial(CycScalar(term.coeff) * CycScalar::omega_pow(term.e1), term.e0 - term.e1);
  }
  return r;
}

SpecScalar specialize(const GenericScalar& x) {
  SpecScalar::Modulus m;
  if (x.modulus()) {
    m = x.modulus() == generic_modulus() || *x.modulus() == *generic_modulus()
            ? specialized_modulus()
            : std::make_shared<const LaurentPoly1>(specialize(*x.modulus()));
  }
  return {specialize(x.even()), specialize(x.odd()), std::move(m)};
}

}  // namespace adolg
