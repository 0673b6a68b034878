#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "adolg/ring.hpp"
#include "support/generators.hpp"

using namespace adolg;

namespace {

const CycScalar w = CycScalar::omega();

LaurentPoly1 t(int k = 1) { return LaurentPoly1::t(k); }

}  // namespace

// ---------------------------------------------------------------------------
// Integer

TEST(Integer, PromotesOnOverflowAndDemotesBack) {
  Integer big(std::numeric_limits<std::int64_t>::max());
  big += Integer(1);
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.to_string(), "9223372036854775808");
  big -= Integer(1);
  EXPECT_TRUE(big.is_small());
  EXPECT_EQ(big.small_value(), std::numeric_limits<std::int64_t>::max());
}

TEST(Integer, MultiplicationAgreesWithGmp) {
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Integer a = gen::wide_integer(rng), b = gen::wide_integer(rng);
    EXPECT_EQ((a * b).to_mpz(), a.to_mpz() * b.to_mpz());
    EXPECT_EQ((a + b).to_mpz(), a.to_mpz() + b.to_mpz());
    EXPECT_EQ((a - b).to_mpz(), a.to_mpz() - b.to_mpz());
  }
}

TEST(Integer, MinInt64EdgeCases) {
  Integer m(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ((-m).to_string(), "9223372036854775808");
  EXPECT_EQ((m * Integer(-1)).to_string(), "9223372036854775808");
  EXPECT_EQ((-(-m)), m);
}

TEST(Integer, ParseAndExactDivision) {
  auto x = Integer::parse("-123456789012345678901234567890");
  EXPECT_EQ(x.to_string(), "-123456789012345678901234567890");
  EXPECT_EQ(x.divide_exact(Integer(10)).to_string(), "-12345678901234567890123456789");
  EXPECT_THROW(Integer(7).divide_exact(Integer(2)), std::domain_error);
  EXPECT_THROW(Integer::parse("12a"), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// CycScalar

TEST(CycScalar, MinimalPolynomial) {
  EXPECT_EQ(w * w, CycScalar(-1, 1));
  EXPECT_EQ(w * w * w, CycScalar(-1));
  EXPECT_EQ(w * w - w + CycScalar(1), CycScalar(0));
  CycScalar p(1);
  for (int i = 0; i < 6; ++i) p *= w;
  EXPECT_EQ(p, CycScalar(1));
}

TEST(CycScalar, ISqrt3Squared) {
  CycScalar i_sqrt3 = CycScalar(2) * w - CycScalar(1);
  EXPECT_EQ(i_sqrt3 * i_sqrt3, CycScalar(-3));
}

TEST(CycScalar, OmegaPowersAndInverses) {
  for (int k = -12; k <= 12; ++k) {
    auto u = CycScalar::omega_pow(k);
    EXPECT_TRUE(u.is_unit());
    EXPECT_EQ(u * u.inverse(), CycScalar(1));
    EXPECT_EQ(*u.unit_exponent(), ((k % 6) + 6) % 6);
  }
  EXPECT_EQ(w.inverse(), CycScalar(1, -1));
  EXPECT_FALSE(CycScalar(2).is_unit());
  EXPECT_THROW(CycScalar(-3).inverse(), std::domain_error);
}

TEST(CycScalar, ExactDivision) {
  CycScalar a(5, -2), b(-3, 7);
  EXPECT_EQ((a * b).divide_exact(b), a);
  EXPECT_EQ(CycScalar(-3).divide_exact(CycScalar(2) * w - CycScalar(1)), CycScalar(2) * w - CycScalar(1));
  EXPECT_THROW(CycScalar(1).divide_exact(CycScalar(2)), std::domain_error);
}

TEST(CycScalar, RingAxiomsOnRandomTriples) {
  gen::Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    auto a = gen::cyc(rng, i % 4 == 0), b = gen::cyc(rng), c = gen::cyc(rng, i % 7 == 0);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) - b, a);
  }
}

TEST(CycScalar, ComplexEmbeddingIsMultiplicative) {
  gen::Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    auto a = gen::cyc(rng), b = gen::cyc(rng);
    auto z = a.to_complex() * b.to_complex();
    auto p = (a * b).to_complex();
    EXPECT_NEAR(std::abs(z - p), 0.0, 1e-12 * (1 + std::abs(z)));
  }
}

TEST(CycScalar, TextRoundTrip) {
  EXPECT_EQ(CycScalar(-1, 1).to_string(), "-1+1*w");
  EXPECT_EQ(CycScalar(0, -1).to_string(), "-1*w");
  EXPECT_EQ(CycScalar(0).to_string(), "0");
  gen::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto a = gen::cyc(rng, true);
    EXPECT_EQ(CycScalar::parse(a.to_string()), a);
  }
}

// ---------------------------------------------------------------------------
// LaurentPoly1

TEST(LaurentPoly1, UnitProducts) {
  EXPECT_EQ(t() * t(-1), LaurentPoly1(1));
  for (int k = 0; k < 6; ++k) {
    for (int e = -3; e <= 3; ++e) {
      auto u = LaurentPoly1::monomial(CycScalar::omega_pow(k), e);
      EXPECT_TRUE((u * u.inverse()).is_one());
    }
  }
  EXPECT_THROW((t() + LaurentPoly1(1)).inverse(), std::domain_error);
}

TEST(LaurentPoly1, ProductFromTheRMatrix) {
  // (t^2 - 1)(t^2 - w^2) = t^4 - w t^2 + (w - 1)
  auto p = (t(2) - LaurentPoly1(1)) * (t(2) - LaurentPoly1(w * w));
  auto expected = t(4) - LaurentPoly1::monomial(w, 2) + LaurentPoly1(CycScalar(-1, 1));
  EXPECT_EQ(p, expected);
}

TEST(LaurentPoly1, CanonicalAfterCancellation) {
  auto p = t(3) + t(-2) - t(3) - t(-2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p, LaurentPoly1());
  EXPECT_EQ(p.to_string(), "(0)");
  auto q = (t(2) + t(5)) - t(5);
  EXPECT_EQ(q.low(), 2);
  EXPECT_EQ(q.high(), 2);
}

TEST(LaurentPoly1, RandomPairs) {
  gen::Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    auto p = gen::laurent1(rng), q = gen::laurent1(rng), r = gen::laurent1(rng);
    auto pq = p * q;
    if (!p.is_zero() && !q.is_zero()) {
      // Z[w] is a domain: extreme coefficients multiply without cancellation.
      ASSERT_EQ(pq.low(), p.low() + q.low());
      ASSERT_EQ(pq.high(), p.high() + q.high());
    } else {
      ASSERT_TRUE(pq.is_zero());
    }
    ASSERT_EQ(pq, q * p);
    ASSERT_EQ((p + q) * r, p * r + q * r);
    ASSERT_EQ((p * q) * r, p * (q * r));
    ASSERT_EQ(LaurentPoly1::parse(pq.to_string()), pq);
    ASSERT_EQ(LaurentPoly1::parse(pq.to_string()).to_string(), pq.to_string());
    LaurentPoly1 acc = r;
    acc.add_product(p, q);
    ASSERT_EQ(acc, r + pq);
    acc = p;
    acc.add_product(acc, acc);
    ASSERT_EQ(acc, p + p * p);
  }
}

TEST(LaurentPoly1, TextFormat) {
  auto p = t(-2) + LaurentPoly1::monomial(CycScalar(-1, 1), 2);
  EXPECT_EQ(p.to_string(), "(1)*t^-2 + (-1+1*w)*t^2");
  EXPECT_EQ(LaurentPoly1::parse("(1)*t^-2 + (-1+1*w)*t^2"), p);
  EXPECT_EQ(LaurentPoly1(CycScalar(3)).to_string(), "(3)");
  EXPECT_EQ(LaurentPoly1::parse("(2)*t"), LaurentPoly1::monomial(CycScalar(2), 1));
  EXPECT_THROW(LaurentPoly1::parse("(1)*x^2"), std::invalid_argument);
  EXPECT_THROW(LaurentPoly1::parse("(1)*t^"), std::invalid_argument);
}

TEST(LaurentPoly1, EvaluateAt) {
  EXPECT_EQ((t(2) + t(-2)).evaluate_at(CycScalar(1)), CycScalar(2));
  EXPECT_EQ(t(2).evaluate_at(w), CycScalar(-1, 1));
  EXPECT_EQ(t(-1).evaluate_at(w), CycScalar(1, -1));
  EXPECT_THROW(t(-1).evaluate_at(CycScalar(2)), std::domain_error);
}

TEST(LaurentPoly1, EvaluationIsAHomomorphism) {
  gen::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto p = gen::laurent1(rng), q = gen::laurent1(rng);
    for (const auto& v : {CycScalar(1), w}) {
      ASSERT_EQ((p * q).evaluate_at(v), p.evaluate_at(v) * q.evaluate_at(v));
      ASSERT_EQ((p + q).evaluate_at(v), p.evaluate_at(v) + q.evaluate_at(v));
    }
  }
}

TEST(LaurentPoly1, SubstituteOmegaOverT) {
  // t^2 + t^-2 -> w^2 t^-2 + w^-2 t^2
  auto p = t(2) + t(-2);
  auto image = LaurentPoly1::monomial(CycScalar::omega_pow(2), -2) + LaurentPoly1::monomial(CycScalar::omega_pow(-2), 2);
  EXPECT_EQ(p.substitute(w, -1), image);
  EXPECT_NE(p.substitute(w, -1), p);
  EXPECT_EQ(LaurentPoly1(1).substitute(w, -1), LaurentPoly1(1));
  gen::Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    auto q = gen::laurent1(rng);
    EXPECT_EQ(q.substitute(w, -1).substitute(w, -1), q);
  }
}

// ---------------------------------------------------------------------------
// LaurentPoly2

TEST(LaurentPoly2, GenericModulusExpansion) {
  auto p = (LaurentPoly2::s0(2) - LaurentPoly2(1)) * (LaurentPoly2(1) - LaurentPoly2::s1(2));
  auto expected = LaurentPoly2::s0(2) - LaurentPoly2::monomial(1, 2, 2) - LaurentPoly2(1) + LaurentPoly2::s1(2);
  EXPECT_EQ(p, expected);
  EXPECT_EQ(*generic_modulus(), expected);
  EXPECT_TRUE(p.all_exponents_even());
  EXPECT_FALSE(LaurentPoly2::s0().all_exponents_even());
}

TEST(LaurentPoly2, TextForms) {
  auto p = LaurentPoly2::t0() * LaurentPoly2::t1(-1) - LaurentPoly2(2);
  EXPECT_EQ(LaurentPoly2::parse(p.to_string()), p);
  EXPECT_EQ(LaurentPoly2::parse(p.to_string_t()), p);
  EXPECT_EQ(p.to_string_t(), "(-2) + (1)*t0^1*t1^-1");
  EXPECT_THROW(LaurentPoly2::s0().to_string_t(), std::logic_error);
}

TEST(LaurentPoly2, RingAxioms) {
  gen::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    auto a = gen::laurent2(rng), b = gen::laurent2(rng), c = gen::laurent2(rng);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(LaurentPoly2::parse(a.to_string()), a);
  }
}

// ---------------------------------------------------------------------------
// ExtScalar and specialization

TEST(ExtScalar, YSquaredIsTheModulus) {
  auto y = GenericScalar::y(generic_modulus());
  auto yy = y * y;
  EXPECT_EQ(yy.even(), *generic_modulus());
  EXPECT_TRUE(yy.odd().is_zero());
  auto one = GenericScalar::constant(1, generic_modulus());
  auto prod = (one + y) * (one - y);
  EXPECT_EQ(prod.even(), LaurentPoly2(1) - *generic_modulus());
  EXPECT_TRUE(prod.odd().is_zero());
}

TEST(ExtScalar, SpecializedModulus) {
  // t^2 - w + (w - 1) t^-2
  auto expected = t(2) - LaurentPoly1(w) + LaurentPoly1::monomial(CycScalar(-1, 1), -2);
  EXPECT_EQ(*specialized_modulus(), expected);
  auto y = SpecScalar::y(specialized_modulus());
  EXPECT_EQ((y * y).even(), expected);
}

TEST(ExtScalar, ModulusMismatchIsAnError) {
  auto other = std::make_shared<const LaurentPoly2>(LaurentPoly2(5));
  auto a = GenericScalar::y(generic_modulus());
  auto b = GenericScalar::y(other);
  EXPECT_THROW(a * b, std::invalid_argument);
  EXPECT_THROW(a + b, std::invalid_argument);
}

TEST(ExtScalar, ConjugationIsAnAutomorphism) {
  gen::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    auto x = gen::generic(rng), y = gen::generic(rng);
    ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
    ASSERT_EQ((x + y).conj(), x.conj() + y.conj());
    auto u = gen::specialized(rng), v = gen::specialized(rng);
    ASSERT_EQ((u * v).conj(), u.conj() * v.conj());
  }
}

TEST(ExtScalar, RingAxioms) {
  gen::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    auto a = gen::generic(rng), b = gen::generic(rng), c = gen::generic(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
  }
}

TEST(Specialize, Variables) {
  EXPECT_EQ(specialize(LaurentPoly2::t0()), t(2));
  EXPECT_EQ(specialize(LaurentPoly2::t1()), LaurentPoly1::monomial(CycScalar(-1, 1), -2));
  EXPECT_EQ(specialize(LaurentPoly2::s0() * LaurentPoly2::s1()), LaurentPoly1(w));
  EXPECT_EQ(specialize(*generic_modulus()), *specialized_modulus());
}

TEST(Specialize, IsAHomomorphism) {
  gen::Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    auto x = gen::generic(rng), y = gen::generic(rng);
    ASSERT_EQ(specialize(x * y), specialize(x) * specialize(y));
    ASSERT_EQ(specialize(x + y), specialize(x) + specialize(y));
  }
}
