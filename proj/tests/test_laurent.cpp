#include <gtest/gtest.h>

#include "skein/field.hpp"
#include "skein/laurent.hpp"
#include "support.hpp"

using skein::LaurentPoly;
using namespace testing_support;

namespace {

LaurentPoly A(int e) { return LaurentPoly::power(e); }

}  // namespace

TEST(Laurent, AdditiveInverse) { EXPECT_TRUE((A(1) + -A(1)).is_zero()); }

TEST(Laurent, SumCollectsTerms) { EXPECT_EQ((A(1) + A(-1)) + (A(1) - A(-1)), LaurentPoly::monomial(2, 1)); }

TEST(Laurent, AntisymmetricUnitPlusMirrorIsZero) {
    LaurentPoly g = skein::antisymmetric_unit(3);
    EXPECT_TRUE((g + skein::mirror(g)).is_zero());
}

TEST(Laurent, Products) {
    EXPECT_EQ((A(1) - A(-1)) * (A(1) + A(-1)), A(2) - A(-2));
    EXPECT_EQ((-A(1) + A(-1)) * (A(-1) + A(1)), -A(2) + A(-2));
}

TEST(Laurent, TelescopingSumTimesUnitDifference) {
    // Oracle: expand (-A + A^-1) * sum_{i=0}^{k+1} A^{-k-1+2i} term by term.
    const int k = 3;
    LaurentPoly sum;
    for (int i = 0; i <= k + 1; ++i) {
        sum += A(-k - 1 + 2 * i);
    }
    LaurentPoly expected;
    for (int i = 0; i <= k + 1; ++i) {
        expected += -A(-k + 2 * i);
        expected += A(-k - 2 + 2 * i);
    }
    EXPECT_EQ((-A(1) + A(-1)) * sum, expected);
    EXPECT_EQ(expected, -A(k + 2) + A(-k - 2));
}

TEST(Laurent, CanonicalForm) {
    LaurentPoly p{{3, 0}, {-2, 5}, {4, 1}, {4, -1}};
    EXPECT_EQ(p.term_count(), 1u);
    EXPECT_EQ(p.min_exponent(), -2);
    EXPECT_EQ(p.max_exponent(), -2);
    EXPECT_TRUE(LaurentPoly{}.is_zero());
    EXPECT_TRUE(LaurentPoly(0L).is_zero());
    EXPECT_EQ(LaurentPoly{}, (A(5) - A(5)));
}

TEST(Laurent, MirrorExamples) {
    EXPECT_EQ(skein::mirror(-A(3) + A(-3)), -A(-3) + A(3));
    LaurentPoly p = 1 - A(6);
    EXPECT_EQ(skein::mirror(skein::mirror(p)), p);
}

TEST(Laurent, Breadth) {
    EXPECT_EQ(skein::breadth(-A(4) + A(-4)), 8);
    EXPECT_EQ(skein::breadth(skein::antisymmetric_unit(2 * 2 + 2)), 12);
    LaurentPoly f = -A(2) + A(-2);
    LaurentPoly p = A(1) + 1 + A(-1);
    EXPECT_EQ(skein::breadth(f * p), 6);
    EXPECT_EQ(skein::breadth(f * p), skein::breadth(f) + skein::breadth(p));
    EXPECT_THROW(skein::breadth(LaurentPoly{}), std::domain_error);
}

TEST(Laurent, EvaluateAtUnits) {
    for (int k = -7; k <= 7; ++k) {
        EXPECT_EQ(skein::evaluate_at_unit(skein::antisymmetric_unit(k), 1), 0);
        EXPECT_EQ(skein::evaluate_at_unit(skein::antisymmetric_unit(k), -1), 0);
    }
    LaurentPoly s;
    const int m = 1, n = 1;
    for (int i = 0; i <= m + n + 1; ++i) {
        s += A(-m - n - 1 + 2 * i);
    }
    EXPECT_EQ(skein::evaluate_at_unit(s, 1), 4);
}

TEST(Laurent, EvaluateInFields) {
    skein::RationalField Q;
    LaurentPoly p = 3 * A(2) - A(-1) + 5;
    EXPECT_EQ(skein::evaluate(p, mpq_class(2), Q), mpq_class(12) - mpq_class(1, 2) + 5);
    skein::PrimeField F(101);
    // 3*4 - 51 + 5 mod 101, with 2^-1 = 51
    EXPECT_EQ(skein::evaluate(p, 2ULL, F), (12 + 101 - 51 + 5) % 101);
    EXPECT_THROW(skein::evaluate(p, mpq_class(0), Q), std::domain_error);
    EXPECT_THROW(skein::evaluate(p, 0ULL, F), std::domain_error);
    EXPECT_THROW(skein::PrimeField(100), std::invalid_argument);
}

TEST(Laurent, DivideExact) {
    EXPECT_EQ(*skein::divide_exact(A(2) - A(-2), A(1) - A(-1)), A(1) + A(-1));
    auto q = skein::divide_exact(1 - A(6), -A(3) + A(-3));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, A(3));
    EXPECT_EQ(*q * (-A(3) + A(-3)), 1 - A(6));
    EXPECT_FALSE(skein::divide_exact(A(2) + 1, A(1) + 1));
    EXPECT_FALSE(skein::divide_exact(LaurentPoly(3), LaurentPoly(2)));
    EXPECT_THROW(skein::divide_exact(A(1), LaurentPoly{}), std::domain_error);
}

TEST(LaurentProperty, RingAxioms) {
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly a = random_laurent(), b = random_laurent(), c = random_laurent();
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ((a - b) + b, a);
    }
}

TEST(LaurentProperty, IntegralDomain) {
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly a = random_nonzero_laurent(), b = random_nonzero_laurent();
        ASSERT_FALSE((a * b).is_zero());
        ASSERT_TRUE((a * LaurentPoly{}).is_zero());
    }
}

TEST(LaurentProperty, MirrorIsRingInvolution) {
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly a = random_laurent(), b = random_laurent();
        ASSERT_EQ(skein::mirror(a * b), skein::mirror(a) * skein::mirror(b));
        ASSERT_EQ(skein::mirror(a + b), skein::mirror(a) + skein::mirror(b));
        ASSERT_EQ(skein::mirror(skein::mirror(a)), a);
    }
}

TEST(LaurentProperty, BreadthAdditive) {
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly a = random_nonzero_laurent(), b = random_nonzero_laurent();
        ASSERT_EQ(skein::breadth(a * b), skein::breadth(a) + skein::breadth(b));
    }
}

TEST(LaurentProperty, DivisionUndoesMultiplication) {
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly a = random_laurent(), b = random_nonzero_laurent();
        auto q = skein::divide_exact(a * b, b);
        ASSERT_TRUE(q) << a << " / " << b;
        ASSERT_EQ(*q, a);
    }
}

TEST(LaurentProperty, EvaluationIsHomomorphism) {
    skein::PrimeField F(65537);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_laurent(), b = random_laurent();
        std::uint64_t x = static_cast<std::uint64_t>(uniform(1, 65536));
        ASSERT_EQ(skein::evaluate(a * b, x, F), F.mul(skein::evaluate(a, x, F), skein::evaluate(b, x, F)));
        mpq_class y(uniform(1, 7), uniform(1, 7));
        y.canonicalize();
        ASSERT_EQ(skein::evaluate(a, y, skein::RationalField{}), laurent_at(a, y));
    }
}
