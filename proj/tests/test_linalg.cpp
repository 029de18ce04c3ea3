#include <gtest/gtest.h>

#include "evalg/linalg.hpp"
#include "support.hpp"

using namespace evalg;
using namespace evalg::testing;

namespace {

Matrix random_matrix(RandomElements& rnd, const Ring& r, std::size_t n) {
    Matrix m(n);
    for (auto& row : m)
        for (std::size_t j = 0; j < n; ++j) row.push_back(rnd.of(r));
    return m;
}

}  // namespace

TEST(Determinant, CofactorAndBareissAgree) {
    RandomElements rnd;
    for (const auto& r : {Ring::integers(), Ring::rationals(), Ring::gaussian_integers(), Ring::fp_poly(3),
                          Ring::fp_rational_functions(2), Ring::int_poly()}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int t = 0; t < 4; ++t) {
                const Matrix m = random_matrix(rnd, r, n);
                EXPECT_EQ(cofactor_determinant(m, r), bareiss_determinant(m, r)) << r.name() << " n=" << n;
            }
        }
    }
}

TEST(Determinant, SingularAndPivoting) {
    const Ring z = Ring::integers();
    const Matrix singular{{Z(1), Z(2)}, {Z(2), Z(4)}};
    EXPECT_TRUE(bareiss_determinant(singular, z).is_zero());
    const Matrix needs_swap{{Z(0), Z(1), Z(2)}, {Z(1), Z(0), Z(3)}, {Z(4), Z(-3), Z(8)}};
    EXPECT_EQ(bareiss_determinant(needs_swap, z), cofactor_determinant(needs_swap, z));
}

TEST(Solve, CramerAndBareissAgree) {
    RandomElements rnd;
    for (const auto& r : {Ring::rationals(), Ring::gaussian_rationals(), Ring::fp_rational_functions(3)}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int t = 0; t < 6; ++t) {
                const Matrix m = random_matrix(rnd, r, n);
                if (cofactor_determinant(m, r).is_zero()) continue;
                std::vector<Element> b;
                for (std::size_t i = 0; i < n; ++i) b.push_back(rnd.of(r));
                const auto x1 = cramer_solve(m, b, r);
                const auto x2 = bareiss_solve(m, b, r);
                EXPECT_EQ(x1, x2) << r.name();
                for (std::size_t i = 0; i < n; ++i) {
                    Element acc = Element::zero(r);
                    for (std::size_t j = 0; j < n; ++j) acc += m[i][j] * x1[j];
                    EXPECT_EQ(acc, b[i]);
                }
            }
        }
    }
}

TEST(Solve, SingularThrows) {
    const Ring q = Ring::rationals();
    const Matrix singular{{Q(1), Q(2)}, {Q(2), Q(4)}};
    EXPECT_THROW(cramer_solve(singular, {Q(1), Q(1)}, q), Error);
    EXPECT_THROW(bareiss_solve(singular, {Q(1), Q(1)}, q), Error);
}

TEST(Solve, IntegerSolutionOutsideRingIsNotDivisible) {
    const Ring z = Ring::integers();
    const Matrix m{{Z(2)}};
    try {
        bareiss_solve(m, {Z(1)}, z);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
    }
}

TEST(Vandermonde, Shape) {
    const Matrix v = vandermonde({Z(2), Z(3)});
    EXPECT_EQ(v[0][0], Z(1));
    EXPECT_EQ(v[1][0], Z(2));
    EXPECT_EQ(v[1][1], Z(3));
}
