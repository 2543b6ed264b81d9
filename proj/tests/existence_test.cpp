#include <gtest/gtest.h>

#include "support.hpp"

using namespace ncroots;
using namespace ncroots::testing;

namespace {

template <class F>
bool annihilates(const CriterionReport<F>& r, const Matrix<F>& x1, const Matrix<F>& x2) {
    const auto p = r.polynomial();
    return p && evaluate_right(*p, x1).is_zero() && evaluate_right(*p, x2).is_zero();
}

// Random pair whose difference is singular (rank one) most of the time.
std::pair<QMatrix, QMatrix> singular_difference_pair(Random& rng, std::size_t k) {
    const auto x1 = rng.rational_matrix(k, 2);
    auto d = rng.rectangular(k, 1, 2) * rng.rectangular(1, k, 2);
    if (d.is_zero()) d(0, 0) = Rational(1);
    return {x1, x1 - d};
}

}  // namespace

TEST(QuadraticExistence, NilpotentPairHasAContinuum) {
    const auto [x1, x2] = nilpotent_pair();
    const auto r = quadratic_existence(x1, x2);
    EXPECT_TRUE(r.exists);
    EXPECT_EQ(r.rank_difference_matrix, 1u);
    EXPECT_EQ(r.rank_augmented, 1u);
    EXPECT_EQ(r.coefficients->front(), QMatrix(2, 2, Q));
    EXPECT_EQ(*r.a0, QMatrix(2, 2, Q));
    EXPECT_EQ(r.solution_space_dim, 2u);
    EXPECT_TRUE(annihilates(r, x1, x2));

    for (long c : {1, -3, 7}) {
        const auto alt = quadratic_from_a1(x1, x2, qm({{0, 0}, {0, c}}));
        EXPECT_TRUE(alt.a0->is_zero());
        EXPECT_TRUE(annihilates(alt, x1, x2));
    }
}

TEST(QuadraticExistence, IdentityAndSwap) {
    const auto [x1, x2] = identity_swap_pair();
    const auto r = quadratic_existence(x1, x2);
    EXPECT_TRUE(r.exists);
    EXPECT_EQ(r.rank_difference_matrix, 1u);
    EXPECT_EQ(r.rank_augmented, 1u);

    const auto chosen = quadratic_from_a1(x1, x2, QMatrix(2, 2, Q));
    EXPECT_EQ(*chosen.a0, qm({{-1, 0}, {0, -1}}));

    // Any a1 with equal entries in each row works.
    const auto other = quadratic_from_a1(x1, x2, qm({{3, 3}, {-2, -2}}));
    EXPECT_TRUE(annihilates(other, x1, x2));
    EXPECT_THROW(quadratic_from_a1(x1, x2, qm({{1, 0}, {0, 0}})), std::invalid_argument);
}

TEST(QuadraticExistence, SingularGapPairHasNoQuadratic) {
    const auto [x1, x2] = singular_gap_pair();
    const auto r = quadratic_existence(x1, x2);
    EXPECT_FALSE(r.exists);
    EXPECT_EQ(r.rank_difference_matrix, 1u);
    EXPECT_EQ(r.rank_augmented, 2u);
    EXPECT_FALSE(r.coefficients.has_value());
    EXPECT_FALSE(r.a0.has_value());
    EXPECT_FALSE(r.polynomial().has_value());
}

TEST(QuadraticExistence, RejectsEqualOrMismatchedRoots) {
    const auto x = qm({{1, 2}, {3, 4}});
    EXPECT_THROW(quadratic_existence(x, x), equal_roots);
    EXPECT_THROW(quadratic_existence(x, QMatrix::identity(3, Q)), ring_mismatch);
}

TEST(DegreeNExistence, SingularGapPairHasACubic) {
    const auto [x1, x2] = singular_gap_pair();
    const auto r = degree_n_existence(x1, x2, 3);
    ASSERT_TRUE(r.exists);
    EXPECT_EQ((*r.coefficients)[0], qm({{0, 0}, {0, -1}}));
    EXPECT_TRUE((*r.coefficients)[1].is_zero());
    EXPECT_TRUE(r.a0->is_zero());
    EXPECT_TRUE(annihilates(r, x1, x2));

    const std::vector<QMatrix> stated_choice{qm({{1, 0}, {-1, -1}}), QMatrix(2, 2, Q)};
    EXPECT_TRUE(compute_a0(stated_choice, x1, x2, 3).is_zero());
}

TEST(DegreeNExistence, CubicObstruction) {
    const auto [x1, x2] = cubic_obstruction_pair();
    const auto r = degree_n_existence(x1, x2, 3);
    EXPECT_FALSE(r.exists);
    EXPECT_LT(r.rank_difference_matrix, r.rank_augmented);

    // The subtracted equation as written out by hand.
    EXPECT_EQ(x1 * x1 - x2 * x2, qm({{0, -4, -2}, {0, 2, 2}, {0, -2, -2}}));
    EXPECT_EQ(x1 - x2, qm({{0, -2, -2}, {0, 0, 0}, {0, 0, 0}}));
    EXPECT_EQ(ring_pow(x2, 3) - ring_pow(x1, 3), qm({{-2, 8, 4}, {0, -6, -4}, {0, 4, 2}}));
}

TEST(DegreeNExistence, DegreeTwoMatchesQuadratic) {
    Random rng(61);
    for (int t = 0; t < 200; ++t) {
        const auto k = static_cast<std::size_t>(rng.integer(1, 3));
        auto [x1, x2] = singular_difference_pair(rng, k);
        if (t % 3 == 0) x2 = rng.rational_matrix(k);
        if (x1 == x2) continue;
        const auto a = quadratic_existence(x1, x2);
        const auto b = degree_n_existence(x1, x2, 2);
        ASSERT_EQ(a.exists, b.exists);
        ASSERT_EQ(a.rank_difference_matrix, b.rank_difference_matrix);
        ASSERT_EQ(a.rank_augmented, b.rank_augmented);
        ASSERT_EQ(a.solution_space_dim, b.solution_space_dim);
        ASSERT_EQ(a.coefficients, b.coefficients);
        ASSERT_EQ(a.a0, b.a0);
    }
}

TEST(DegreeNExistence, RejectsSmallDegree) {
    const auto [x1, x2] = singular_gap_pair();
    EXPECT_THROW(degree_n_existence(x1, x2, 1), std::invalid_argument);
    EXPECT_THROW(theorem3_construct(x1, x2, 1), std::invalid_argument);
}

TEST(ExplicitConstruct, QuaternionCubic) {
    const auto p = theorem3_construct(Quaternion::i(), Quaternion::j(), 3);
    ASSERT_TRUE(p);
    EXPECT_EQ(*p, Polynomial<Quaternion>(QuaternionRing{}, {0, 1, 0, 1}));
}

TEST(ExplicitConstruct, QuadraticWithInvertibleDifferenceIsUnique) {
    Random rng(62);
    int checked = 0;
    for (int t = 0; t < 100; ++t) {
        const auto x1 = rng.rational_matrix(2), x2 = rng.rational_matrix(2);
        const auto inv = invert(x1 - x2);
        if (!inv) continue;
        ++checked;
        const auto p = theorem3_construct(x1, x2, 2);
        ASSERT_TRUE(p);
        ASSERT_EQ(p->coefficient(1), (x2 * x2 - x1 * x1) * *inv);
        const auto r = quadratic_existence(x1, x2);
        ASSERT_TRUE(r.exists);
        ASSERT_EQ(r.solution_space_dim, 0u);
        ASSERT_EQ(*r.polynomial(), *p);
    }
    EXPECT_GT(checked, 50);
}

TEST(ExplicitConstruct, AbsentWhenAllDifferencesSingular) {
    const auto [x1, x2] = singular_gap_pair();
    EXPECT_FALSE(theorem3_construct(x1, x2, 3).has_value());
    EXPECT_TRUE(degree_n_existence(x1, x2, 3).exists);
}

TEST(ExplicitConstruct, HonoursFreeCoefficients) {
    Random rng(63);
    for (int t = 0; t < 50; ++t) {
        const auto x1 = rng.quaternion(2), x2 = rng.quaternion(2);
        if (x1 == x2) continue;
        const std::vector<Quaternion> free{rng.quaternion(2), rng.quaternion(2), rng.quaternion(2)};
        const auto p = theorem3_construct(x1, x2, 4, free);
        ASSERT_TRUE(p);
        ASSERT_EQ(*p->degree(), 4u);
        ASSERT_TRUE(evaluate_right(*p, x1).is_zero());
        ASSERT_TRUE(evaluate_right(*p, x2).is_zero());
        // j = 1 is solved (division ring), a_2 and a_3 are kept.
        ASSERT_EQ(p->coefficient(2), free[1]);
        ASSERT_EQ(p->coefficient(3), free[2]);
    }
}

TEST(ExplicitConstruct, UsesLaterInvertibleDifference) {
    // x1 - x2 singular, x1^2 - x2^2 invertible: j = 2 is used.
    Random rng(64);
    int found = 0;
    for (int t = 0; t < 2000 && found < 10; ++t) {
        const auto x1 = rng.rational_matrix(2, 2), x2 = rng.rational_matrix(2, 2);
        if (x1 == x2 || invert(x1 - x2) || !invert(x1 * x1 - x2 * x2)) continue;
        ++found;
        const auto p = theorem3_construct(x1, x2, 3);
        ASSERT_TRUE(p);
        ASSERT_TRUE(p->coefficient(1).is_zero());
        ASSERT_TRUE(evaluate_right(*p, x1).is_zero());
        ASSERT_TRUE(evaluate_right(*p, x2).is_zero());
        ASSERT_TRUE(degree_n_existence(x1, x2, 3).exists);
    }
    EXPECT_GT(found, 0);
}

TEST(ComputeA0, Examples) {
    {
        const auto [x1, x2] = identity_swap_pair();
        EXPECT_EQ(compute_a0(std::vector<QMatrix>{QMatrix(2, 2, Q)}, x1, x2, 2), qm({{-1, 0}, {0, -1}}));
    }
    {
        const auto [x1, x2] = nilpotent_pair();
        EXPECT_TRUE(compute_a0(std::vector<QMatrix>{QMatrix(2, 2, Q)}, x1, x2, 2).is_zero());
    }
    {
        const auto [x1, x2] = singular_gap_pair();
        EXPECT_THROW(compute_a0(std::vector<QMatrix>{QMatrix(2, 2, Q)}, x1, x2, 2), inconsistent_result);
        EXPECT_THROW(compute_a0(std::vector<QMatrix>{}, x1, x2, 2), std::invalid_argument);
    }
}

TEST(Criterion, TransposedColumnFormAgrees) {
    Random rng(65);
    for (int t = 0; t < 300; ++t) {
        const auto k = static_cast<std::size_t>(rng.integer(1, 3));
        auto [x1, x2] = singular_difference_pair(rng, k);
        if (t % 4 == 0) x2 = rng.rational_matrix(k);
        if (x1 == x2) continue;
        ASSERT_EQ(transposed_column_criterion(x1, x2), quadratic_existence(x1, x2).exists);
    }
    const auto [g1, g2] = singular_gap_pair();
    EXPECT_FALSE(transposed_column_criterion(g1, g2));
}

TEST(Criterion, SoundOnRandomPairs) {
    Random rng(66);
    int yes = 0, no = 0;
    for (int t = 0; t < 300; ++t) {
        const auto k = static_cast<std::size_t>(rng.integer(1, 3));
        const auto [x1, x2] = singular_difference_pair(rng, k);
        const auto n = static_cast<std::size_t>(rng.integer(2, 4));
        const auto r = degree_n_existence(x1, x2, n);
        (r.exists ? yes : no)++;
        if (r.exists) {
            ASSERT_TRUE(annihilates(r, x1, x2));
        }
    }
    EXPECT_GT(yes, 0);
    EXPECT_GT(no, 0);
}

TEST(Criterion, SingularDifferenceGivesPerturbableSolutions) {
    Random rng(67);
    int checked = 0;
    for (int t = 0; t < 500; ++t) {
        const auto [x1, x2] = singular_difference_pair(rng, 2);
        const auto r = quadratic_existence(x1, x2);
        if (!r.exists) continue;
        ++checked;
        ASSERT_GE(r.solution_space_dim, 1u);
        // Add a left-null row of x1 - x2 to a1: still a solution.
        const auto null = nullspace_basis((x1 - x2).transpose());
        ASSERT_FALSE(null.empty());
        auto a1 = r.coefficients->front();
        for (std::size_t j = 0; j < 2; ++j) a1(0, j) += null.front()(j, 0);
        ASSERT_NE(a1, r.coefficients->front());
        const auto alt = quadratic_from_a1(x1, x2, a1);
        ASSERT_TRUE(annihilates(alt, x1, x2));
    }
    EXPECT_GT(checked, 10);
}
