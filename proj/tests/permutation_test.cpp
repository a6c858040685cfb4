#include "pavings/permutation.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace pavings;

TEST(Permutation, ConstructionValidatesBijection) {
    EXPECT_NO_THROW(Permutation({1, 0, 2}));
    EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
    EXPECT_THROW(Permutation({1, 2}), std::invalid_argument);
    EXPECT_THROW(Permutation({-1, 0}), std::invalid_argument);
    EXPECT_EQ(Permutation::identity(0).size(), 0);
}

TEST(Permutation, FromCycles) {
    const Permutation p = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
    EXPECT_EQ(p(0), 1);
    EXPECT_EQ(p(1), 0);
    EXPECT_EQ(p(2), 3);
    EXPECT_EQ(p(3), 2);
    const Permutation q = Permutation::from_cycles(3, {{0, 1, 2}});
    EXPECT_EQ(q(0), 1);
    EXPECT_EQ(q(2), 0);
    // overlapping cycles can't form a bijection
    EXPECT_THROW(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_cycles(2, {{0, 5}}), std::out_of_range);
}

TEST(Permutation, ComposeAppliesRightFactorFirst) {
    const Permutation p = Permutation::from_cycles(3, {{0, 1}});
    const Permutation q = Permutation::from_cycles(3, {{1, 2}});
    // (p∘q)(1) = p(q(1)) = p(2) = 2
    EXPECT_EQ(compose(p, q)(1), 2);
    // (q∘p)(1) = q(p(1)) = q(0) = 0
    EXPECT_EQ(compose(q, p)(1), 0);
}

TEST(Permutation, InverseAndConjugate) {
    const Permutation c = Permutation::from_cycles(4, {{0, 1, 2, 3}});
    EXPECT_EQ(compose(c, inverse(c)), Permutation::identity(4));
    const Permutation by = Permutation::from_cycles(4, {{0, 1}});
    const Permutation conj = conjugate(c, by);
    EXPECT_EQ(cycle_type(conj), cycle_type(c)); // conjugation preserves cycle type
}

TEST(Permutation, InvolutionPredicates) {
    const Permutation fpf = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
    const Permutation fixed = Permutation::from_cycles(4, {{0, 1}});
    EXPECT_TRUE(is_involution(fpf));
    EXPECT_TRUE(is_fpf_involution(fpf));
    EXPECT_TRUE(is_involution(fixed));
    EXPECT_FALSE(is_fpf_involution(fixed));
    EXPECT_FALSE(is_involution(Permutation::from_cycles(3, {{0, 1, 2}})));
    EXPECT_TRUE(is_involution(Permutation::identity(0)));
}

TEST(Permutation, CycleType) {
    const Permutation p = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
    const CycleType t = cycle_type(p);
    // counts[k] = cycles of length k+1: one 1-cycle, one 2-cycle, one 3-cycle
    EXPECT_EQ(t.counts, (std::vector<long long>{1, 1, 1, 0, 0, 0}));
}

TEST(Permutation, OrbitCountAndTransitivity) {
    const Permutation a = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
    const Permutation b = Permutation::from_cycles(4, {{1, 2}});
    EXPECT_EQ(orbit_count({a}, 4), 2);
    EXPECT_EQ(orbit_count({a, b}, 4), 1);
    EXPECT_TRUE(is_transitive({a, b}, 4));
    EXPECT_FALSE(is_transitive({a}, 4));
    EXPECT_FALSE(is_transitive({}, 0)); // empty action: not transitive by convention
    EXPECT_TRUE(is_transitive({}, 1));  // single point, one orbit
    EXPECT_EQ(orbit_count({}, 3), 3);
}

TEST(Permutation, FpfInvolutionGeneration) {
    EXPECT_EQ(fpf_involutions(0).size(), 1u); // the empty involution
    EXPECT_TRUE(fpf_involutions(3).empty());  // odd: none
    EXPECT_EQ(fpf_involutions(2).size(), 1u);
    EXPECT_EQ(fpf_involutions(4).size(), 3u);
    EXPECT_EQ(fpf_involutions(6).size(), 15u);
    EXPECT_EQ(fpf_involutions(8).size(), 105u); // (n-1)!!

    // pinned enumeration order: first pairs smallest unmatched dart upward
    const auto v4 = fpf_involutions(4);
    EXPECT_EQ(v4[0], Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
    EXPECT_EQ(v4[1], Permutation::from_cycles(4, {{0, 2}, {1, 3}}));
    EXPECT_EQ(v4[2], Permutation::from_cycles(4, {{0, 3}, {1, 2}}));

    std::set<Permutation> distinct;
    for (const auto& p : fpf_involutions(6)) {
        EXPECT_TRUE(is_fpf_involution(p));
        distinct.insert(p);
    }
    EXPECT_EQ(distinct.size(), 15u);
}
