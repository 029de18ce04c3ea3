#include <gtest/gtest.h>

#include "evalg/ring.hpp"
#include "support.hpp"

using namespace evalg;
using namespace evalg::testing;

TEST(RingUnits, IntegerTwoIsNotAUnit) { EXPECT_FALSE(is_invertible(Z(2))); }

TEST(RingUnits, GaussianIIsAUnit) {
    const Element i = Element::generator(Ring::gaussian_integers());
    EXPECT_TRUE(is_invertible(i));
    EXPECT_EQ(i * inverse(i), Gi(1, 0));
    EXPECT_EQ(inverse(i), Gi(0, -1));
}

TEST(RingUnits, LaurentQSquaredMinusQIsAUnit) {
    const Ring L = Ring::laurent(32);
    const Element q = Element::generator(L);
    const Element a = q * q - q;
    ASSERT_TRUE(is_invertible(a));
    // Oracle: q^{-1} (q-1)^{-1} = -q^{-1} (1 + q + q^2 + ...), built by hand.
    LaurentSeries geo{-1, std::vector<mpz_class>(32, -1)};
    const Element expected(L, geo);
    EXPECT_EQ(inverse(a), expected);
    EXPECT_EQ(a * expected, Element::one(L));
}

TEST(RingUnits, LaurentNonUnitLowestCoefficient) {
    const Ring L = Ring::laurent(8);
    const Element q = Element::generator(L);
    EXPECT_FALSE(is_invertible(q * Element::from_integer(L, 2) + q * q));
    EXPECT_THROW(inverse(Element::from_integer(L, 2)), Error);
}

TEST(ExactDivide, Integers) {
    EXPECT_EQ(exact_divide(Z(6), Z(3)), Z(2));
    EXPECT_THROW(exact_divide(Z(7), Z(3)), Error);
    try {
        exact_divide(Z(1), Z(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
}

TEST(ExactDivide, FpPolyLongDivision) {
    // (q^4 - q) / (q^3 - 1) in F_3[q]
    const Element a = Fq(3, {0, 2, 0, 0, 1});
    const Element b = Fq(3, {2, 0, 0, 1});
    const Element c = exact_divide(a, b);
    EXPECT_EQ(c, Fq(3, {0, 1}));
    EXPECT_EQ(b * c, a);
}

TEST(ExactDivide, GaussianNotDivisible) {
    try {
        exact_divide(Gi(1, 2), Gi(1, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
    }
    // Norm oracle: N(1+2i)=5 is odd, N(1+i)=2.
    EXPECT_EQ(exact_divide(Gi(1, 3), Gi(1, 1)), Gi(2, 1));
}

TEST(InSubring, RationalToInteger) {
    auto w = in_subring(Q(4, 2), Ring::integers());
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, Z(2));
    EXPECT_FALSE(in_subring(Q(1, 3), Ring::integers()));
}

TEST(InSubring, RationalFunctionReduces) {
    // (q^2 - 1)/(q - 1) over F_2 -> q + 1
    const Element f = FracFq(2, {1, 0, 1}, {1, 1});
    auto w = in_subring(f, Ring::fp_poly(2));
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, Fq(2, {1, 1}));
    EXPECT_EQ(embed(*w, f.ring()), f);
}

TEST(InSubring, UnsupportedPair) {
    try {
        in_subring(Z(3), Ring::gaussian_integers());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedPair);
    }
}

TEST(Canonical, FractionsNormalize) {
    EXPECT_EQ(Q(-4, -6), Q(2, 3));
    const Element f = FracFq(3, {0, 2}, {0, 2});  // 2q / 2q
    EXPECT_TRUE(f.is_one());
    const auto& fr = f.as<FpFraction>();
    EXPECT_EQ(fr.den.c.back(), 1u);
}

TEST(Canonical, IdempotentNormalization) {
    RandomElements rnd;
    for (const auto& r : all_rings()) {
        for (int i = 0; i < 50; ++i) {
            const Element a = rnd.of(r);
            const Element again(r, a.payload());
            EXPECT_EQ(a, again) << r.name();
            EXPECT_EQ(a.to_string(), again.to_string()) << r.name();
        }
    }
}

TEST(RingAxioms, RandomTriples) {
    RandomElements rnd;
    for (const auto& r : all_rings()) {
        const Element zero = Element::zero(r), one = Element::one(r);
        for (int i = 0; i < 60; ++i) {
            const Element a = rnd.of(r), b = rnd.of(r), c = rnd.of(r);
            EXPECT_EQ((a + b) + c, a + (b + c)) << r.name();
            EXPECT_EQ((a * b) * c, a * (b * c)) << r.name();
            EXPECT_EQ(a * (b + c), a * b + a * c) << r.name();
            EXPECT_EQ(a + b, b + a) << r.name();
            EXPECT_EQ(a * b, b * a) << r.name();
            EXPECT_EQ(a + zero, a) << r.name();
            EXPECT_EQ(a * one, a) << r.name();
            EXPECT_TRUE((a - a).is_zero()) << r.name();
        }
    }
}

TEST(RingAxioms, UnitsHaveInverses) {
    RandomElements rnd;
    for (const auto& r : all_rings()) {
        for (int i = 0; i < 60; ++i) {
            const Element a = rnd.of(r);
            if (!is_invertible(a)) continue;
            const Element inv = exact_divide(Element::one(r), a);
            EXPECT_EQ(a * inv, Element::one(r)) << r.name() << " " << a;
        }
    }
}

TEST(RingAxioms, SubringWitnessReembeds) {
    RandomElements rnd;
    const std::vector<std::pair<Ring, Ring>> pairs = {
        {Ring::rationals(), Ring::integers()},
        {Ring::gaussian_rationals(), Ring::gaussian_integers()},
        {Ring::fp_rational_functions(2), Ring::fp_poly(2)},
        {Ring::fp_rational_functions(3), Ring::fp_poly(3)},
    };
    for (const auto& [big, small] : pairs) {
        for (int i = 0; i < 100; ++i) {
            const Element a = i % 2 == 0 ? rnd.of(big) : embed(rnd.of(small), big);
            if (auto w = in_subring(a, small)) EXPECT_EQ(embed(*w, big), a);
        }
    }
}

TEST(Laurent, AgreesWithPolynomialArithmetic) {
    RandomElements rnd;
    const int prec = 16;
    const Ring L = Ring::laurent(prec);
    for (int i = 0; i < 100; ++i) {
        IntPoly a, b;
        for (int k = 0; k < prec / 2; ++k) {
            a.c.emplace_back(rnd.small(-5, 5));
            b.c.emplace_back(rnd.small(-5, 5));
        }
        const Element pa(Ring::int_poly(), a), pb(Ring::int_poly(), b);
        EXPECT_EQ(embed(pa + pb, L), embed(pa, L) + embed(pb, L));
        EXPECT_EQ(embed(pa - pb, L), embed(pa, L) - embed(pb, L));
        EXPECT_EQ(embed(pa * pb, L), embed(pa, L) * embed(pb, L));
    }
}

TEST(Laurent, WindowShrinksUnderCancellation) {
    const Ring L = Ring::laurent(4);
    const Element q = Element::generator(L);
    const Element a = Element::one(L) + q;
    const Element d = a - Element::one(L);
    EXPECT_EQ(d, q);
    EXPECT_EQ(laurent_window(Element::zero(L)), kInfinitePrecision);
}

TEST(RingDescriptor, ParseRoundTrip) {
    for (const auto& r : all_rings()) EXPECT_EQ(Ring::parse(r.name()), r);
    EXPECT_EQ(Ring::parse("Fq2"), Ring::fp_poly(2));
    EXPECT_EQ(Ring::parse("FracFq2"), Ring::fp_rational_functions(2));
    EXPECT_EQ(Ring::parse("LaurentZ"), Ring::laurent(32));
    EXPECT_THROW(Ring::prime_field(4), Error);
    EXPECT_THROW(Ring::laurent(0), Error);
}
