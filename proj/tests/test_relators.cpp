#include <gtest/gtest.h>

#include "skein/relators.hpp"
#include "skein/verify.hpp"
#include "support.hpp"

using skein::Basis;
using skein::LaurentPoly;
using skein::SequenceCache;
using skein::SkeinElement;
using namespace testing_support;

namespace {

LaurentPoly A(int e) { return LaurentPoly::power(e); }
LaurentPoly g(int k) { return skein::antisymmetric_unit(k); }

SkeinElement cheb(int i, int j, int k, const LaurentPoly& c = 1) {
    return SkeinElement::basis_element({i, j, k}, c, Basis::chebyshev);
}
SkeinElement mono(int i, int j, int k, const LaurentPoly& c = 1) {
    return SkeinElement::basis_element({i, j, k}, c, Basis::monomial);
}

}  // namespace

TEST(Sequences, InitialValues) {
    SequenceCache s;
    EXPECT_EQ(s.p_seq(1, 1), mono(1, 0, 1, A(1)) + mono(0, 1, 0, A(-1)));
    EXPECT_EQ(s.p_seq(0, 0), mono(0, 0, 0, A(-1) + A(-5)));
    EXPECT_EQ(s.p_seq(0, 0), mono(0, 0, 0, -A(-3) * (-A(2) - A(-2))));
    EXPECT_EQ(s.q_seq(1, 1), mono(0, 1, 0, -A(-1)));
    EXPECT_EQ(s.pp_seq(1, 1), mono(1, 0, 1));
}

TEST(Sequences, FirstRecurrenceSteps) {
    SequenceCache s;
    // One application of the m >= 2 rule.
    EXPECT_EQ(s.p_seq(2, 0), mono(2, 0, 0, A(1)) - mono(0, 0, 0, A(1) + A(-3)));
    EXPECT_EQ(s.q_seq(2, 0), mono(0, 0, 0, A(-3)));
    EXPECT_EQ(s.q_seq(3, 1), A(3 + 1 - 5) * s.pp_seq(1, 1));
    EXPECT_EQ(s.pp_seq(4, 0), skein::chebyshev_term(4, 0, 0));
    EXPECT_TRUE(s.pp_seq(1, -1).is_zero());
    EXPECT_EQ(s.p_seq(1, -1), mono(0, 1, 0));
    EXPECT_EQ(s.q_seq(1, -1), mono(0, 1, 0, -1));
}

TEST(Sequences, DomainErrors) {
    SequenceCache s;
    EXPECT_THROW(s.p_seq(-1, 0), std::out_of_range);
    EXPECT_THROW(s.p_seq(0, -1), std::out_of_range);
    EXPECT_THROW(s.q_seq(0, -3), std::out_of_range);
    EXPECT_THROW(s.pp_seq(-2, 1), std::out_of_range);
}

TEST(Sequences, CacheMatchesFreshComputation) {
    SequenceCache warm;
    for (int m = 0; m <= 6; ++m) {
        for (int n = -6; n <= 6; ++n) {
            if (n >= 0 || m >= 1) {
                (void)warm.p_seq(m, n);
            }
        }
    }
    for (int trial = 0; trial < 20; ++trial) {
        int m = uniform(1, 6), n = uniform(-6, 6);
        SequenceCache fresh;
        ASSERT_EQ(warm.p_seq(m, n), fresh.p_seq(m, n));
        ASSERT_EQ(warm.pp_seq(m, n), fresh.pp_seq(m, n));
    }
}

TEST(ClosedForm, SpotValues) {
    EXPECT_TRUE(skein::c_closed(0, 0).is_zero());
    EXPECT_EQ(skein::c_closed(1, 1), cheb(1, 0, 1, -A(4) + A(-4)) + cheb(0, 1, 0, -A(2) + A(-2)));
    EXPECT_EQ(skein::c_closed(-2, -1), -skein::c_closed(2, 1));
    EXPECT_TRUE(skein::c_closed(1, -1).is_zero());
    EXPECT_EQ(skein::cbar_closed(1, 0), cheb(0, 1, 0, -A(3) + A(-3)));
    EXPECT_EQ(skein::cbar_closed(2, 0), cheb(0, 2, 0, -A(4) + A(-4)));
    EXPECT_TRUE(skein::cbar_closed(0, 0).is_zero());
}

TEST(ClosedForm, MatchesNumericOracle) {
    for (int trial = 0; trial < 200; ++trial) {
        int m = uniform(0, 8), n = uniform(-8, 8), q = uniform(0, 5);
        Point p = random_point();
        ASSERT_EQ(value_at(skein::relator(m, n, q).element, p), relator_formula_at(m, n, q, p))
            << m << "," << n << "," << q;
        // Cbar(q,n)S_m(a1) is the same formula with x1 and x2 exchanged.
        Point sw{p.A, p.x2, p.x1, p.x3};
        ASSERT_EQ(value_at(skein::relator_bar(q, n, m).element, p), relator_formula_at(q, n, m, sw));
    }
}

TEST(ClosedForm, SeparateCaseFormulas) {
    // The first-quadrant and (m,-n) case formulas follow from the unified one.
    for (int m = 0; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
            SkeinElement expected = skein::chebyshev_term(m, 0, -n, g(m - n + 2)) +
                                    skein::chebyshev_term(m - 1, 1, -n - 1, g(m - n)) +
                                    skein::chebyshev_term(m - 2, 0, -n - 2, g(m - n - 2));
            ASSERT_EQ(skein::c_closed(m, -n), expected);
            // Leading displayed term: -g(m-n+2) S_m(a1) S_{n-2}(a3).
            if (n >= 2) {
                ASSERT_EQ(skein::c_closed(m, -n).coefficient({m, 0, n - 2}), -g(m - n + 2));
            }
        }
    }
}

TEST(Recurrence, MatchesClosedFormSmallBox) {
    SequenceCache s;
    for (int m = -6; m <= 6; ++m) {
        for (int n = -6; n <= 6; ++n) {
            ASSERT_EQ(s.c_via_recurrence(m, n), skein::c_closed(m, n)) << m << "," << n;
        }
    }
    EXPECT_TRUE(s.c_via_recurrence(0, 0).is_zero());
    EXPECT_EQ(s.p_seq(1, -1) - s.n_seq(1, -1), SkeinElement(Basis::monomial));
}

TEST(Recurrence, KinkRemovalCoefficientsForC21) {
    SequenceCache s;
    EXPECT_EQ(s.n_seq(2, 1).shifted(-3) - s.p_seq(2, 1).shifted(3), skein::c_closed(2, 1));
}

TEST(Recurrence, OnlyKinkFormMatchesForNegativeColumn) {
    auto reports = skein::compare_minus_one_rules(4, 4);
    ASSERT_EQ(reports.size(), 3u);
    for (const auto& r : reports) {
        if (r.rule == skein::MinusOneRule::kink_form) {
            EXPECT_TRUE(r.matches());
        } else {
            EXPECT_FALSE(r.matches()) << skein::to_string(r.rule);
        }
    }
}

TEST(Relator, ClosedFormTimesA2EqualsExpansion) {
    EXPECT_EQ(skein::relator(1, 1, 2).element, skein::c_closed(1, 1) * skein::chebyshev_term(0, 2, 0));
    for (int trial = 0; trial < 100; ++trial) {
        int m = uniform(0, 7), n = uniform(-7, 7), q = uniform(0, 6);
        ASSERT_EQ(skein::relator(m, n, q).element, skein::c_closed(m, n) * skein::chebyshev_term(0, q, 0));
        ASSERT_EQ(skein::relator_bar(q, n, m).element, skein::cbar_closed(q, n) * skein::chebyshev_term(m, 0, 0));
    }
}

TEST(Relator, SmallExamples) {
    EXPECT_EQ(skein::relator(1, 0, 0).element, cheb(1, 0, 0, -A(3) + A(-3)));
    EXPECT_EQ(skein::relator(3, 0, 0).element, cheb(3, 0, 0, -A(5) + A(-5)) - cheb(1, 0, 0, -A(1) + A(-1)));
    EXPECT_EQ(skein::relator(2, 0, 0).element, cheb(2, 0, 0, g(4)));
    EXPECT_THROW(skein::relator(-1, 0, 0), std::invalid_argument);
    EXPECT_THROW(skein::relator_bar(0, 0, -1), std::invalid_argument);
}

TEST(Relator, Leading) {
    auto r = skein::relator(2, 1, 0);
    ASSERT_TRUE(r.leading);
    EXPECT_EQ(r.leading->monomial, (skein::MonomialIndex{2, 0, 1}));
    EXPECT_EQ(r.leading->coefficient, -A(5) + A(-5));
    EXPECT_FALSE(skein::relator(1, -1, 0).leading);
    EXPECT_FALSE(skein::relator(2, -2, 0).leading);
    // relator(3,-1,2) = -g(2) (S_2(a1)S_3(a2) + S_2(a1)S_1(a2)); the lead is the a2-heavier term.
    auto r2 = skein::relator(3, -1, 2);
    EXPECT_EQ(r2.element, cheb(2, 3, 0, -g(2)) + cheb(2, 1, 0, -g(2)));
    ASSERT_TRUE(r2.leading);
    EXPECT_EQ(r2.leading->monomial, (skein::MonomialIndex{2, 3, 0}));
    EXPECT_EQ(r2.leading->coefficient, A(2) - A(-2));
}

TEST(RelatorProperty, Invariants) {
    for (int trial = 0; trial < 300; ++trial) {
        int m = uniform(0, 10), n = uniform(-10, 10), q = uniform(0, 10);
        for (const auto& r : {skein::relator(m, n, q), skein::relator_bar(q, n, m)}) {
            ASSERT_LE(r.element.size(), 4u);
            ASSERT_TRUE(skein::evaluate_at_unit(r.element, 1).empty());
            ASSERT_TRUE(skein::evaluate_at_unit(r.element, -1).empty());
            if (n >= 0 && m + n > 0 && r.family == skein::Family::C) {
                ASSERT_TRUE(r.leading);
                ASSERT_EQ(r.leading->monomial, (skein::MonomialIndex{m, q, n}));
                ASSERT_EQ(r.leading->coefficient, g(m + n + 2));
            }
            for (const auto& [idx, c] : r.element.terms()) {
                if (r.leading) {
                    ASSERT_FALSE(skein::MonomialOrder{}.less(r.leading->monomial, idx));
                }
            }
        }
    }
}

TEST(Suites, SmallRangesPass) {
    EXPECT_TRUE(skein::verify_appendix(5, 5).passed());
    EXPECT_TRUE(skein::verify_mirror(5, 5).passed());
    EXPECT_TRUE(skein::verify_antisymmetry(5, 5, 2).passed());
}
