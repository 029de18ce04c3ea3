#include <gtest/gtest.h>

#include "evalg/numerical.hpp"
#include "evalg/poly.hpp"
#include "support.hpp"

using namespace evalg;
using namespace evalg::testing;

namespace {

Poly qpoly(std::vector<std::pair<long, long>> c) {
    std::vector<Element> v;
    for (auto [a, b] : c) v.push_back(Q(a, b));
    return Poly(Ring::rationals(), v);
}

}  // namespace

TEST(PolyEval, SquarePlusOne) {
    const Poly p(Ring::integers(), {Z(1), Z(0), Z(1)});
    const std::vector<Element> pt{Z(2)};
    EXPECT_EQ(poly_eval(p, pt), Z(5));
}

TEST(PolyEval, BinomialTwo) {
    const Poly p = qpoly({{0, 1}, {-1, 2}, {1, 2}});
    const std::vector<Element> pt{Z(5)};
    EXPECT_EQ(poly_eval(p, pt), Q(10));
}

TEST(PolyEval, FpqFamilyAtQ) {
    const Poly f = fpq_family(2, 1);
    const Element q = Element::generator(Ring::fp_poly(2));
    const std::vector<Element> pt{q};
    EXPECT_TRUE(poly_eval(f, pt).is_one());
}

TEST(PolyEval, ArityAndCoercionErrors) {
    const Poly p(Ring::integers(), {Z(1), Z(1)});
    const std::vector<Element> two{Z(1), Z(2)};
    try {
        poly_eval(p, two);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
    }
    const std::vector<Element> rat{Q(1, 2)};
    try {
        poly_eval(p, rat);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CoercionFailure);
    }
}

TEST(PolyBasics, ZeroDegreeAndTrim) {
    const Poly z(Ring::integers(), {Z(0), Z(0)});
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), Poly::kMinusInfinity);
    EXPECT_EQ(Poly(Ring::integers(), {Z(1), Z(2), Z(0)}).degree(), 1);
}

TEST(PolyBasics, ShiftMatchesSubstitution) {
    RandomElements rnd;
    for (int t = 0; t < 30; ++t) {
        std::vector<Element> c;
        for (int i = 0; i < 6; ++i) c.push_back(rnd.of(Ring::rationals()));
        const Poly p(Ring::rationals(), c);
        const Element k = rnd.of(Ring::rationals());
        const Poly s = p.shift(k);
        for (long x = -3; x <= 3; ++x) EXPECT_EQ(s.eval(Q(x)), p.eval(Q(x) + k));
    }
}

TEST(FiniteDifferences, Square) {
    const auto c = finite_differences(qpoly({{0, 1}, {0, 1}, {1, 1}}));
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], Q(0));
    EXPECT_EQ(c[1], Q(1));
    EXPECT_EQ(c[2], Q(2));
    // Both sides at 0, 1, 2.
    for (long x = 0; x <= 2; ++x)
        EXPECT_EQ(Q(x * x), c[1] * binomial_poly(1).eval(Q(x)) + c[2] * binomial_poly(2).eval(Q(x)));
}

TEST(FiniteDifferences, BinomialBasisVector) {
    const auto c = finite_differences(binomial_poly(3));
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c[0], Q(0));
    EXPECT_EQ(c[1], Q(0));
    EXPECT_EQ(c[2], Q(0));
    EXPECT_EQ(c[3], Q(1));
    EXPECT_EQ(binomial_poly(3), qpoly({{0, 1}, {1, 3}, {-1, 2}, {1, 6}}));
}

TEST(FiniteDifferences, Constant) {
    const auto c = finite_differences(qpoly({{7, 1}}));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], Q(7));
}

TEST(FiniteDifferences, ReconstructionProperty) {
    RandomElements rnd;
    for (int t = 0; t < 40; ++t) {
        const long d = rnd.small(0, 12);
        std::vector<Element> c;
        for (long i = 0; i <= d; ++i) c.push_back(rnd.of(Ring::rationals()));
        const Poly p(Ring::rationals(), c);
        const auto coords = finite_differences(p);
        Poly acc(Ring::rationals());
        for (std::size_t k = 0; k < coords.size(); ++k) acc += binomial_poly(k) * coords[k];
        EXPECT_EQ(acc, p);
    }
}

TEST(PolyEval, RingHomomorphism) {
    RandomElements rnd;
    for (const auto& r : all_rings()) {
        for (int t = 0; t < 10; ++t) {
            std::vector<Element> a, b;
            for (int i = 0; i < 4; ++i) {
                a.push_back(rnd.of(r));
                b.push_back(rnd.of(r));
            }
            const Poly pa(r, a), pb(r, b);
            const std::vector<Element> pt{rnd.of(r)};
            EXPECT_EQ(poly_eval(pa + pb, pt), poly_eval(pa, pt) + poly_eval(pb, pt)) << r.name();
            EXPECT_EQ(poly_eval(pa * pb, pt), poly_eval(pa, pt) * poly_eval(pb, pt)) << r.name();
        }
    }
}

TEST(MPoly, EvalAndArity) {
    const Ring z = Ring::integers();
    const std::vector<std::string> vars{"x", "y"};
    const MPoly x = MPoly::variable(z, vars, 0), y = MPoly::variable(z, vars, 1);
    const MPoly p = x * x * y + y.pow(3) * Z(2) - MPoly::constant(Z(5), vars);
    const std::vector<Element> pt{Z(2), Z(-1)};
    EXPECT_EQ(p.eval(pt), Z(4 * -1 + 2 * -1 - 5));
    const std::vector<Element> bad{Z(1)};
    EXPECT_THROW(p.eval(bad), Error);
    EXPECT_EQ(p.terms().size(), 3u);
}

TEST(MPoly, GradedLexOrder) {
    GradedLex less;
    EXPECT_TRUE(less({0, 0}, {0, 1}));
    EXPECT_TRUE(less({0, 2}, {1, 0}) == false);
    EXPECT_TRUE(less({1, 0}, {0, 2}));
    EXPECT_TRUE(less({0, 2}, {1, 1}));
}

TEST(MPoly, SubstituteIsHomomorphism) {
    const Ring z = Ring::integers();
    const std::vector<std::string> v2{"a", "b"}, v1{"t"};
    const MPoly a = MPoly::variable(z, v2, 0), b = MPoly::variable(z, v2, 1);
    const MPoly t = MPoly::variable(z, v1, 0);
    const MPoly p = a * b + a.pow(2);
    const MPoly s = p.substitute({t + MPoly::constant(Z(1), v1), t});
    const MPoly expected = (t + MPoly::constant(Z(1), v1)) * t + (t + MPoly::constant(Z(1), v1)).pow(2);
    EXPECT_EQ(s, expected);
}

TEST(PolyText, Formatting) {
    EXPECT_EQ(qpoly({{0, 1}, {-1, 2}, {1, 2}}).to_string(), "(1/2)*x^2+(-1/2)*x");
    EXPECT_EQ(Poly(Ring::integers(), {Z(1), Z(-1), Z(1)}).to_string(), "x^2-x+1");
    EXPECT_EQ(Poly(Ring::integers()).to_string(), "0");
}
