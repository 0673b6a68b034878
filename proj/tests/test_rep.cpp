#include <gtest/gtest.h>

#include <algorithm>

#include "adolg/rep.hpp"
#include "adolg/verify.hpp"
#include "support/printed.hpp"

using namespace adolg;

namespace {

const CycScalar w = CycScalar::omega();
const LaurentPoly1 one1(1);

LaurentPoly1 t(int k = 1) { return LaurentPoly1::t(k); }
LaurentPoly1 c(const CycScalar& x) { return LaurentPoly1(x); }

using printed::printed_ado3;

GenericScalar g(const LaurentPoly2& p) { return GenericScalar::constant(p, generic_modulus()); }
GenericScalar gy(const LaurentPoly2& p) { return {LaurentPoly2(), p, generic_modulus()}; }

// The printed 16x16 matrix, transcribed with s0 = sqrt(t0), s1 = sqrt(t1).
std::vector<std::tuple<int, int, GenericScalar>> printed_lg() {
  const auto s0 = LaurentPoly2::s0(), s1 = LaurentPoly2::s1();
  const auto t0 = LaurentPoly2::t0(), t1 = LaurentPoly2::t1();
  const LaurentPoly2 one(1);
  const auto s0s1 = s0 * s1;
  const auto y2 = (t0 - one) * (one - t1);
  return {
      {0, 0, g(t0)},          {1, 4, g(s0)},          {2, 8, g(s0)},           {3, 12, g(one)},
      {4, 1, g(s0)},          {4, 4, g(t0 - one)},    {5, 5, g(-one)},         {6, 6, g(t0 * t1 - one)},
      {6, 9, g(-s0s1)},       {6, 12, gy(-s0s1)},     {7, 13, g(s1)},          {8, 2, g(s0)},
      {8, 8, g(t0 - one)},    {9, 6, g(-s0s1)},       {9, 12, gy(one)},        {10, 10, g(-one)},
      {11, 14, g(s1)},        {12, 3, g(one)},        {12, 6, gy(-s0s1)},      {12, 9, gy(one)},
      {12, 12, g(y2)},        {13, 7, g(s1)},         {13, 13, g(t1 - one)},   {14, 11, g(s1)},
      {14, 14, g(t1 - one)},  {15, 15, g(t1)},
  };
}

}  // namespace

TEST(QPochhammer, Examples) {
  EXPECT_EQ(q_pochhammer(5, false, 0), one1);
  EXPECT_EQ(q_pochhammer(2, true, 0), one1);
  EXPECT_EQ(q_pochhammer(1, false, 1), c(CycScalar(-1, 2)));
  EXPECT_EQ(q_pochhammer(0, true, 1), t() - t(-1));
  EXPECT_EQ(q_pochhammer(2, false, 2), c(CycScalar(-3)));
  EXPECT_THROW(q_pochhammer(1, false, -1), std::invalid_argument);
}

TEST(AdoR, MatchesPrintedMatrixEntryByEntry) {
  const auto r = build_ado3_r().to_matrix();
  SquareMatrix<LaurentPoly1> expected(9);
  std::size_t compared = 0;
  for (const auto& e : printed_ado3()) {
    // Entry * denominator must equal the printed numerator.
    EXPECT_EQ(r(e.row, e.col) * e.denominator, e.numerator) << "entry (" << e.row << "," << e.col << ")";
    expected(e.row, e.col) = r(e.row, e.col);
  }
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      EXPECT_EQ(r(i, j), expected(i, j)) << "entry (" << i << "," << j << ")";
      ++compared;
    }
  }
  EXPECT_EQ(compared, 81u);
  EXPECT_EQ(r.nonzeros(), 14u);
}

TEST(AdoR, NamedEntries) {
  const auto r = build_ado3_r().to_matrix();
  EXPECT_EQ(r(0, 0), t(2));
  EXPECT_EQ(r(1, 3), t());
  EXPECT_EQ(r(8, 8), LaurentPoly1::monomial(CycScalar(-1, 1), -2));
  EXPECT_EQ(r(2, 2), t(2) - c(w) + LaurentPoly1::monomial(CycScalar(-1, 1), -2));
}

TEST(AdoH, Values) {
  const auto h = build_ado3_h();
  ASSERT_EQ(h.dim(), 3);
  EXPECT_EQ(h.values[0], t(2));
  EXPECT_EQ(h.values[1], LaurentPoly1::monomial(CycScalar(-1, 1), 2));
  EXPECT_EQ(h.values[2], LaurentPoly1::monomial(CycScalar(0, -1), 2));
  for (const auto& v : h.values) EXPECT_TRUE(v.is_unit());
}

TEST(AdoCubic, Coefficients) {
  const auto cub = ado3_cubic();
  const auto w2_t2 = LaurentPoly1::monomial(CycScalar::omega_pow(2), -2);
  EXPECT_EQ(cub.c2, w2_t2 - one1 + t(2));
  EXPECT_EQ(cub.c1, w2_t2 - c(CycScalar::omega_pow(2)) + t(2));
  EXPECT_EQ(cub.c0, -c(CycScalar::omega_pow(2)));
}

TEST(LgR, MatchesPrintedMatrix) {
  const auto r = build_lg_r().to_matrix();
  SquareMatrix<GenericScalar> expected(16);
  for (const auto& [row, col, v] : printed_lg()) expected(row, col) = v;
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) EXPECT_EQ(r(i, j), expected(i, j)) << "entry (" << i << "," << j << ")";
  }
  EXPECT_EQ(r.nonzeros(), 26u);
}

TEST(LgR, NamedEntries) {
  const auto r = build_lg_r().to_matrix();
  EXPECT_EQ(r(0, 0).even(), LaurentPoly2::s0(2));
  EXPECT_EQ(r(12, 12).even(), *generic_modulus());
  EXPECT_TRUE(r(12, 12).odd().is_zero());
  EXPECT_EQ(r(6, 9).even(), -(LaurentPoly2::s0() * LaurentPoly2::s1()));
}

TEST(LgH, Values) {
  const auto h = build_lg_h();
  ASSERT_EQ(h.dim(), 4);
  EXPECT_EQ(h.values[0].even(), LaurentPoly2::s0(-2));
  EXPECT_EQ(h.values[1].even(), -LaurentPoly2::s1(2));
  EXPECT_EQ(h.values[2].even(), -LaurentPoly2::s0(-2));
  EXPECT_EQ(h.values[3].even(), LaurentPoly2::s1(2));
  for (const auto& v : h.values) EXPECT_TRUE(v.is_unit());
}

TEST(InvertR, BothRepresentations) {
  const auto& ado = ado3_representation();
  auto id9 = SquareMatrix<LaurentPoly1>::identity(9);
  EXPECT_EQ(ado.r.to_matrix() * ado.r_inv.to_matrix(), id9);
  EXPECT_EQ(ado.r_inv.to_matrix() * ado.r.to_matrix(), id9);
  const auto& lg = lg_representation();
  auto id16 = SquareMatrix<GenericScalar>::identity(16);
  EXPECT_EQ(lg.r.to_matrix() * lg.r_inv.to_matrix(), id16);
  EXPECT_EQ(lg.r_inv.to_matrix() * lg.r.to_matrix(), id16);
}

TEST(InvertR, LgInverseFromRearrangedSkein) {
  // R^-1 = -(t0 t1)^-1 (R^2 + (1 - t0 - t1) R + (t0 t1 - t0 - t1) Id)
  const auto r = build_lg_r().to_matrix();
  const auto one = g(LaurentPoly2(1)), t0 = g(LaurentPoly2::t0()), t1 = g(LaurentPoly2::t1());
  auto inv = (-(t0 * t1).inverse()) *
             (r * r + (one - t0 - t1) * r + (t0 * t1 - t0 - t1) * SquareMatrix<GenericScalar>::identity(16));
  EXPECT_EQ(inv, lg_representation().r_inv.to_matrix());
}

TEST(InvertR, DiagonalSanityCase) {
  // diag(1, -1, 1) satisfies (x - 1)^2 (x + 1) = 0, i.e. x^3 = x^2 + x - 1.
  LocalOperator<LaurentPoly1> d(2, {{0, 0, one1}, {1, 1, -one1}, {2, 2, one1}, {3, 3, -one1}});
  auto inv = invert_r(d, CubicRelation<LaurentPoly1>{one1, one1, -one1});
  EXPECT_EQ(inv.to_matrix(), d.to_matrix());
}

TEST(InvertR, Errors) {
  const auto r = build_ado3_r();
  EXPECT_THROW(invert_r(r, CubicRelation<LaurentPoly1>{one1, one1, c(2)}), std::domain_error);
  auto wrong = ado3_cubic();
  wrong.c1 += one1;
  EXPECT_THROW(invert_r(r, wrong), std::logic_error);
}

TEST(LocalOperator, Validation) {
  using Op = LocalOperator<LaurentPoly1>;
  EXPECT_THROW(Op(3, {{9, 0, one1}}), std::out_of_range);
  EXPECT_THROW(Op(3, {{0, 0, one1}, {0, 0, one1}}), std::invalid_argument);
  Op op(3, {{0, 0, one1}, {1, 1, LaurentPoly1()}});
  EXPECT_EQ(op.entries().size(), 1u);
}

TEST(LocalOperator, DumpIsRowMajorCanonicalText) {
  auto text = build_ado3_r().dump();
  auto first_line = text.substr(0, text.find('\n'));
  EXPECT_EQ(first_line.substr(0, first_line.find(" | ")), "(1)*t^2");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 9);
}

TEST(QOperators, IdentityInput) {
  const LaurentPoly1 t0 = t(2), t1 = LaurentPoly1::monomial(CycScalar::omega_pow(2), -2);
  LocalOperator<LaurentPoly1> id(3, [] {
    std::vector<LocalOperator<LaurentPoly1>::Entry> e;
    for (int i = 0; i < 9; ++i) e.push_back({i, i, LaurentPoly1(1)});
    return e;
  }());
  auto q = build_q_operators(id, id, t0, t1);
  auto expected = (t0 + t0 * (one1 - t1) - t0 * t1) * SquareMatrix<LaurentPoly1>::identity(9);
  EXPECT_EQ(q.q0.to_matrix(), expected);
  EXPECT_EQ(q.q0_denominator, t0 - t1);
  EXPECT_EQ(q.q1_denominator, t1 - t0);
}

TEST(QOperators, GenericCoefficients) {
  const auto& lg = lg_representation();
  const auto t0 = g(LaurentPoly2::t0()), t1 = g(LaurentPoly2::t1()), one = g(LaurentPoly2(1));
  auto q = build_q_operators(lg.r, lg.r_inv, t0, t1);
  auto r = lg.r.to_matrix(), ri = lg.r_inv.to_matrix();
  auto id = SquareMatrix<GenericScalar>::identity(16);
  EXPECT_EQ(q.q1.to_matrix(), t1 * r + (t1 * (one - t0)) * id - (t0 * t1) * ri);
}

TEST(Relations, Cubic) {
  EXPECT_TRUE(check_cubic_ado().passed);
  EXPECT_TRUE(check_skein_lg().passed);
  EXPECT_TRUE(check_skein_lg_specialized().passed);
  EXPECT_TRUE(check_cubic_coefficients_match().passed);
}

TEST(Relations, CubicNegativeControls) {
  auto r = build_ado3_r().to_matrix();
  r(0, 0) += one1;
  EXPECT_GT(cubic_residual(r, ado3_cubic()).nonzeros(), 0u);
  auto lg = build_lg_r().to_matrix();
  lg(5, 5) = g(LaurentPoly2(1));
  EXPECT_GT(cubic_residual(lg, lg_cubic()).nonzeros(), 0u);
  // 1 = 1 + 1 - 1 for the identity matrix.
  auto id = SquareMatrix<LaurentPoly1>::identity(4);
  EXPECT_TRUE(cubic_residual(id, CubicRelation<LaurentPoly1>{one1, one1, -one1}).is_zero());
}

TEST(Relations, YangBaxter) {
  EXPECT_TRUE(check_yang_baxter_ado().passed);
  EXPECT_TRUE(check_yang_baxter_lg().passed);
  auto m = build_ado3_r().to_matrix();
  m(2, 6) = c(2);
  EXPECT_GT(yang_baxter_residual(LocalOperator<LaurentPoly1>::from_matrix(3, m)).nonzeros(), 0u);
}

TEST(Relations, Ishii) {
  EXPECT_TRUE(check_ishii_generic().passed);
  EXPECT_TRUE(check_ishii_ado().passed);
  EXPECT_FALSE(check_ishii_generic(true).passed);
  EXPECT_FALSE(check_ishii_ado(true).passed);
}

TEST(Relations, AllListed) {
  auto all = check_relations();
  EXPECT_EQ(all.size(), 8u);
  for (const auto& r : all) EXPECT_TRUE(r.passed) << r.name;
}

TEST(SpecializedLg, EntriesAndInverse) {
  const auto& rep = lg_specialized_representation();
  auto id = SquareMatrix<SpecScalar>::identity(16);
  EXPECT_EQ(rep.r.to_matrix() * rep.r_inv.to_matrix(), id);
  for (const auto& e : rep.r.entries()) EXPECT_EQ(e.value.modulus(), specialized_modulus());
  EXPECT_EQ(rep.h.values[0].even(), t(-2));
}
