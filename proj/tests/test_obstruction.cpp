#include <gtest/gtest.h>

#include "skein/obstruction.hpp"
#include "skein/torsion.hpp"
#include "support.hpp"

using skein::Basis;
using skein::LaurentPoly;
using skein::MonomialIndex;
using skein::SkeinElement;

namespace {

LaurentPoly g(int k) { return skein::antisymmetric_unit(k); }

SkeinElement cheb(int i, int j, int k, const LaurentPoly& c = 1) {
    return SkeinElement::basis_element({i, j, k}, c, Basis::chebyshev);
}

}  // namespace

TEST(Alpha, IndexAndName) {
    // alpha_{n1,n3,n2}: a1 degree, a3 degree, a2 degree.
    EXPECT_EQ(skein::alpha_index(1, 2, 3), (MonomialIndex{1, 3, 2}));
    EXPECT_EQ(skein::alpha_name({1, 3, 2}), "alpha_{1,2,3}");
}

TEST(ExtractConstraint, AxisRelator) {
    auto c = skein::extract_constraint(skein::relator_bar(1, 0, 0));
    ASSERT_EQ(c.terms.size(), 1u);
    EXPECT_EQ(c.terms.at(skein::alpha_index(0, 0, 1)), g(3));
    auto c3 = skein::extract_constraint(skein::relator_bar(3, 0, 0));
    EXPECT_EQ(c3.terms.at(skein::alpha_index(0, 0, 3)), g(5));
    EXPECT_EQ(c3.terms.at(skein::alpha_index(0, 0, 1)), -g(1));
    EXPECT_TRUE(skein::extract_constraint(skein::relator_bar(0, 0, 0)).terms.empty());
    EXPECT_EQ(skein::extract_constraint(skein::relator_bar(0, 0, 0)).to_string(), "0 = 0");
}

TEST(ExtractConstraint, DiagonalRelator) {
    auto c = skein::extract_constraint(skein::relator(1, 1, 2));
    skein::AlphaConstraint expected;
    expected.add(skein::alpha_index(1, 1, 2), g(4));
    expected.add(skein::alpha_index(0, 0, 3), g(2));
    expected.add(skein::alpha_index(0, 0, 1), g(2));
    EXPECT_EQ(c, expected);
}

TEST(Descent, DepthOne) {
    auto cert = skein::verify_descent(1);
    EXPECT_EQ(cert.depth, 1);
    EXPECT_EQ(cert.base.a_value, 1);
    EXPECT_EQ(cert.base.value, 1);
    ASSERT_EQ(cert.steps.size(), 3u);
    EXPECT_EQ(cert.steps[0].tag, "axis-a2-vanishing");
    EXPECT_EQ(cert.steps[0].fact, "alpha_{0,0,1} = 0");
    EXPECT_EQ(cert.steps[1].fact, "alpha_{0,0,2} = 0");
    const auto& link = cert.steps[2];
    EXPECT_EQ(link.tag, "diagonal-recurrence");
    EXPECT_EQ(link.multiplier, g(4));
    EXPECT_EQ(link.partner, g(2));
    EXPECT_EQ(link.justification, skein::Justification::breadth);
    ASSERT_EQ(cert.breadth_chain.size(), 1u);
    EXPECT_EQ(cert.breadth_chain[0].breadth_u, 8);
    EXPECT_EQ(cert.breadth_chain[0].breadth_v, 4);
}

TEST(Descent, DepthTwoUsesOneDiagonalFact) {
    auto cert = skein::verify_descent(2);
    EXPECT_EQ(cert.steps.size(), 7u);
    bool saw = false;
    for (const auto& s : cert.steps) {
        // The links only demand alpha_{m,m,k} with k - m even.
        EXPECT_NE(s.fact, "alpha_{1,1,2} = 0");
        if (s.fact == "alpha_{1,1,3} = 0") {
            EXPECT_EQ(s.tag, "a1a3-diagonal-vanishing");
            EXPECT_EQ(s.t, 5);
            EXPECT_EQ(s.multiplier, g(4));
            saw = true;
        }
    }
    EXPECT_TRUE(saw);
}

TEST(Descent, DepthTenChainAndOrdering) {
    auto cert = skein::verify_descent(10);
    ASSERT_EQ(cert.breadth_chain.size(), 10u);
    for (const auto& l : cert.breadth_chain) {
        EXPECT_EQ(l.decrement(), 4);
        EXPECT_EQ(l.breadth_u, 4 * l.n + 4);
    }
    int last_t = -1;
    for (const auto& s : cert.steps) {
        if (s.t >= 0) {
            EXPECT_GE(s.t, last_t);
            last_t = s.t;
            // Diagonal facts only substitute facts proved earlier.
            EXPECT_EQ(s.reduced.terms.size(), 1u);
        }
    }
}

TEST(Descent, FullRangeFlagsTightEdges) {
    auto cert = skein::verify_descent(3, true);
    ASSERT_EQ(cert.tight_edges.size(), 2u);
    EXPECT_NE(cert.tight_edges[0].find("t=4"), std::string::npos);
    EXPECT_NE(cert.tight_edges[1].find("alpha_{1,1,2}"), std::string::npos);
    EXPECT_TRUE(skein::verify_descent(3).tight_edges.size() <= 1u);
    EXPECT_THROW(skein::verify_descent(0), std::invalid_argument);
}

TEST(NonzeroWitness, Examples) {
    auto w = skein::certify_nonzero_mod_relations(cheb(0, 0, 0));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->a_value, 1);
    EXPECT_EQ(w->value, 1);
    // 1 + A vanishes at A = -1 only, so A = 1 is found first.
    auto w2 = skein::certify_nonzero_mod_relations(cheb(1, 0, 0, LaurentPoly{{0, 1}, {1, 1}}));
    ASSERT_TRUE(w2);
    EXPECT_EQ(w2->a_value, 1);
    EXPECT_EQ(w2->value, 2);
    // 1 - A survives only at A = -1.
    auto w3 = skein::certify_nonzero_mod_relations(cheb(1, 0, 0, LaurentPoly{{0, 1}, {1, -1}}));
    ASSERT_TRUE(w3);
    EXPECT_EQ(w3->a_value, -1);
    EXPECT_EQ(w3->value, 2);
    EXPECT_FALSE(skein::certify_nonzero_mod_relations(skein::relator(2, 1, 1).element));
    // The top monomial is reported first.
    auto w4 = skein::certify_nonzero_mod_relations(cheb(0, 0, 0) + cheb(2, 0, 1, 3));
    ASSERT_TRUE(w4);
    EXPECT_EQ(w4->monomial, (MonomialIndex{2, 0, 1}));
}
