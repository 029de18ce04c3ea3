#pragma once

#include <random>
#include <vector>

#include "evalg/ring.hpp"

namespace evalg::testing {

inline Element Z(long n) { return Element::from_integer(Ring::integers(), n); }
inline Element Q(long a, long b = 1) { return Element(Ring::rationals(), mpq_class(a, b)); }
inline Element Gi(long re, long im) { return Element(Ring::gaussian_integers(), Gaussian{re, im}); }
inline Element Gq(const mpq_class& re, const mpq_class& im) {
    return Element(Ring::gaussian_rationals(), GaussianRational{re, im});
}
/// Ascending coefficients in F_p[q].
inline Element Fq(std::uint64_t p, std::vector<std::uint64_t> c) {
    for (auto& x : c) x %= p;
    return Element(Ring::fp_poly(p), FpPoly{std::move(c)});
}
inline Element FracFq(std::uint64_t p, std::vector<std::uint64_t> num, std::vector<std::uint64_t> den) {
    return Element(Ring::fp_rational_functions(p), FpFraction{FpPoly{std::move(num)}, FpPoly{std::move(den)}});
}
inline Element Zq(std::vector<long> c) {
    IntPoly p;
    for (long x : c) p.c.emplace_back(x);
    return Element(Ring::int_poly(), p);
}

/// Deterministic random elements of a tower ring with small entries.
class RandomElements {
public:
    explicit RandomElements(std::uint64_t seed = 20240607) : rng_(seed) {}

    long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Element of(const Ring& r) {
        switch (r.kind()) {
            case RingKind::Int: return Element::from_integer(r, small(-50, 50));
            case RingKind::Rat: return Element(r, mpq_class(small(-30, 30), small(1, 12)));
            case RingKind::Fp: return Element::from_integer(r, small(0, 1000));
            case RingKind::PolyInt: {
                IntPoly p;
                for (long i = small(0, 4); i >= 0; --i) p.c.emplace_back(small(-9, 9));
                return Element(r, p);
            }
            case RingKind::PolyFp: {
                FpPoly p;
                for (long i = small(0, 4); i >= 0; --i) p.c.push_back(static_cast<std::uint64_t>(small(0, 1000)) % r.prime());
                return Element(r, p);
            }
            case RingKind::FracPolyFp: {
                const Ring base = Ring::fp_poly(r.prime());
                Element d = of(base);
                while (d.is_zero()) d = of(base);
                return Element(r, FpFraction{of(base).as<FpPoly>(), d.as<FpPoly>()});
            }
            case RingKind::GaussInt: return Element(r, Gaussian{small(-20, 20), small(-20, 20)});
            case RingKind::GaussRat:
                return Element(r, GaussianRational{mpq_class(small(-20, 20), small(1, 9)), mpq_class(small(-20, 20), small(1, 9))});
            case RingKind::Laurent: {
                LaurentSeries s{small(-3, 3), {}};
                for (int i = 0; i < r.precision(); ++i) s.c.emplace_back(small(-5, 5));
                return Element(r, s);
            }
        }
        return Element::zero(r);
    }

    Element nonzero(const Ring& r) {
        Element e = of(r);
        while (e.is_zero()) e = of(r);
        return e;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline std::vector<Ring> all_rings() {
    return {Ring::integers(),           Ring::rationals(),          Ring::prime_field(7),
            Ring::int_poly(),           Ring::fp_poly(2),           Ring::fp_poly(3),
            Ring::fp_rational_functions(2), Ring::fp_rational_functions(3), Ring::gaussian_integers(),
            Ring::gaussian_rationals(), Ring::laurent(16)};
}

}  // namespace evalg::testing
