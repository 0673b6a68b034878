#include "adolg/rep.hpp"

namespace adolg {

namespace {

constexpr int kAdoDim = 3;
constexpr int kLgDim = 4;

// {a} = w^a - w^-a, or {lambda + a} = t w^a - t^-1 w^-a.
LaurentPoly1 q_number(int a, bool with_lambda) {
  int e = with_lambda ? 1 : 0;
  return LaurentPoly1::monomial(CycScalar::omega_pow(a), e) - LaurentPoly1::monomial(CycScalar::omega_pow(-a), -e);
}

GenericScalar even(LaurentPoly2 p) { return GenericScalar::constant(std::move(p), generic_modulus()); }
GenericScalar odd(LaurentPoly2 p) { return {LaurentPoly2(), std::move(p), generic_modulus()}; }

}  // namespace

LaurentPoly1 q_pochhammer(int shift, bool with_lambda, int n) {
  if (n < 0) throw std::invalid_argument("q-Pochhammer length must be nonnegative");
  LaurentPoly1 out(1);
  for (int k = 0; k < n; ++k) out = out * q_number(shift - k, with_lambda);
  return out;
}

LocalOperator<LaurentPoly1> build_ado3_r() {
  // R(v_i (x) v_j) = t^{(N-1)-(i+j)} sum_n w^{2(i+n)(j-n) + n(n-1)/2}
  //                  {i+n; n}{lambda-j+n; n} / {n; n}  v_{j-n} (x) v_{i+n}
  constexpr int N = kAdoDim;
  std::vector<LocalOperator<LaurentPoly1>::Entry> entries;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      for (int n = 0; j - n >= 0 && i + n <= N - 1; ++n) {
        // The ratio {i+n; n}/{n; n} is a constant of Z[w]; divide exactly.
        CycScalar num = q_pochhammer(i + n, false, n).coeff(0);
        CycScalar den = q_pochhammer(n, false, n).coeff(0);
        CycScalar ratio = num.divide_exact(den);
        int w_exp = 2 * (i + n) * (j - n) + n * (n - 1) / 2;
        LaurentPoly1 coef = LaurentPoly1::monomial(ratio * CycScalar::omega_pow(w_exp), (N - 1) - (i + j)) *
                            q_pochhammer(n - j, true, n);
        if (coef.is_zero()) continue;
        entries.push_back({(j - n) * N + (i + n), i * N + j, std::move(coef)});
      }
    }
  }
  return {N, std::move(entries)};
}

DiagonalOperator<LaurentPoly1> build_ado3_h() {
  // cup(1) = sum_i w^{(N-1) lambda + 2i} v_i (x) v_i^*, i.e. h = diag(t^2 w^{2i}).
  DiagonalOperator<LaurentPoly1> h;
  for (int i = 0; i < kAdoDim; ++i) h.values.push_back(LaurentPoly1::monomial(CycScalar::omega_pow(2 * i), kAdoDim - 1));
  return h;
}

CubicRelation<LaurentPoly1> ado3_cubic() {
  LaurentPoly1 w2_over_t2 = LaurentPoly1::monomial(CycScalar::omega_pow(2), -2);
  LaurentPoly1 t2 = LaurentPoly1::t(2);
  LaurentPoly1 w2 = CycScalar::omega_pow(2);
  return {w2_over_t2 - 1 + t2, w2_over_t2 - w2 + t2, -w2};
}

LocalOperator<GenericScalar> build_lg_r() {
  using P = LaurentPoly2;
  const P t0 = P::t0(), t1 = P::t1();
  const P s0 = P::s0(), s1 = P::s1(), s0s1 = P::s0() * P::s1();
  std::vector<LocalOperator<GenericScalar>::Entry> e = {
      {0, 0, even(t0)},
      {1, 4, even(s0)},
      {2, 8, even(s0)},
      {3, 12, even(1)},
      {4, 1, even(s0)},
      {4, 4, even(t0 - 1)},
      {5, 5, even(-1)},
      {6, 6, even(t0 * t1 - 1)},
      {6, 9, even(-s0s1)},
      {6, 12, odd(-s0s1)},
      {7, 13, even(s1)},
      {8, 2, even(s0)},
      {8, 8, even(t0 - 1)},
      {9, 6, even(-s0s1)},
      {9, 12, odd(1)},
      {10, 10, even(-1)},
      {11, 14, even(s1)},
      {12, 3, even(1)},
      {12, 6, odd(-s0s1)},
      {12, 9, odd(1)},
      {12, 12, even(*generic_modulus())},  // Y^2
      {13, 7, even(s1)},
      {13, 13, even(t1 - 1)},
      {14, 11, even(s1)},
      {14, 14, even(t1 - 1)},
      {15, 15, even(t1)},
  };
  return {kLgDim, std::move(e)};
}

DiagonalOperator<GenericScalar> build_lg_h() {
  using P = LaurentPoly2;
  return {{even(P::t0(-1)), even(-P::t1()), even(-P::t0(-1)), even(P::t1())}};
}

CubicRelation<GenericScalar> lg_cubic() {
  using P = LaurentPoly2;
  const P t0 = P::t0(), t1 = P::t1();
  return {even(t0 + t1 - 1), even(t0 + t1 - t0 * t1), even(-(t0 * t1))};
}

LocalOperator<SpecScalar> specialize(const LocalOperator<GenericScalar>& op) {
  std::vector<LocalOperator<SpecScalar>::Entry> entries;
  for (const auto& e : op.entries()) entries.push_back({e.row, e.col, specialize(e.value)});
  return {op.dim(), std::move(entries)};
}

DiagonalOperator<SpecScalar> specialize(const DiagonalOperator<GenericScalar>& h) {
  DiagonalOperator<SpecScalar> out;
  for (const auto& v : h.values) out.values.push_back(specialize(v));
  return out;
}

CubicRelation<SpecScalar> specialize(const CubicRelation<GenericScalar>& c) {
  return {specialize(c.c2), specialize(c.c1), specialize(c.c0)};
}

const Representation<LaurentPoly1>& ado3_representation() {
  static const Representation<LaurentPoly1> rep = [] {
    auto r = build_ado3_r();
    auto r_inv = invert_r(r, ado3_cubic());
    return Representation<LaurentPoly1>{std::move(r), std::move(r_inv), build_ado3_h()};
  }();
  return rep;
}

const Representation<GenericScalar>& lg_representation() {
  static const Representation<GenericScalar> rep = [] {
    auto r = build_lg_r();
    auto r_inv = invert_r(r, lg_cubic());
    return Representation<GenericScalar>{std::move(r), std::move(r_inv), build_lg_h()};
  }();
  return rep;
}

const Representation<SpecScalar>& lg_specialized_representation() {
  static const Representation<SpecScalar> rep = [] {
    const auto& g = lg_representation();
    return Representation<SpecScalar>{specialize(g.r), specialize(g.r_inv), specialize(g.h)};
  }();
  return rep;
}

}  // namespace adolg
