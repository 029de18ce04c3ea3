#include "evalg/numerical.hpp"

namespace evalg {

std::string_view to_string(NumericalStatus s) noexcept {
    switch (s) {
        case NumericalStatus::Numerical: return "Numerical";
        case NumericalStatus::NotNumerical: return "NotNumerical";
        case NumericalStatus::InconclusiveSampled: return "InconclusiveSampled";
    }
    return "?";
}

NumericalVerdict is_numerical_ZZ(const Poly& p) {
    NumericalVerdict v;
    v.coords = finite_differences(p);
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (v.coords[i].as<mpq_class>().get_den() != 1) {
            v.status = NumericalStatus::NotNumerical;
            v.witness_index = i;
            v.witness_point = Element::from_integer(Ring::integers(), static_cast<long>(i));
            v.witness_value = v.coords[i];
            return v;
        }
    }
    v.status = NumericalStatus::Numerical;
    return v;
}

Poly construct_from_quotient(const Element& a, const std::vector<Element>& reps) {
    if (a.is_zero()) raise(ErrorCode::ZeroElement, "modulus must be nonzero");
    if (is_invertible(a)) raise(ErrorCode::InvertibleModulus, a.to_string() + " is a unit");
    const auto lhat = a.ring().fraction_field();
    if (!lhat) raise(ErrorCode::UnsupportedQuotient, "no fraction field for " + a.ring().name());
    Poly acc = Poly::constant(Element::one(*lhat));
    for (const auto& k : reps) acc *= Poly(*lhat, {-embed(k, *lhat), Element::one(*lhat)});
    return acc * inverse(embed(a, *lhat));
}

Poly fpq_family(std::uint64_t p, unsigned n) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "family index must be >= 1");
    const Ring f = Ring::fp_rational_functions(p);
    mpz_class pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
    if (!pn.fits_ulong_p() || pn > 1u << 20) raise(ErrorCode::InvalidArgument, "p^n too large");
    const std::size_t deg = pn.get_ui();
    const Element one = Element::one(f);
    const Poly num = Poly::monomial(one, deg) - Poly::x(f);
    const Element q = Element::generator(f);
    return num * inverse(q.pow(deg) - q);
}

Poly gaussian_family(unsigned n) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "family index must be >= 1");
    const Ring g = Ring::gaussian_rationals();
    Poly acc = Poly::constant(Element::one(g));
    mpz_class fact = 1;
    for (unsigned a = 0; a < n; ++a) {
        fact *= a + 1;
        for (unsigned b = 0; b < n; ++b) {
            const Element shift(g, GaussianRational{mpq_class(a), mpq_class(b)});
            acc *= Poly(g, {-shift, Element::one(g)});
        }
    }
    return acc * Element(g, GaussianRational{mpq_class(1, fact), mpq_class(0)});
}

NumericalVerdict is_numerical_sampled(const Poly& p, const RingPair& pair, const std::vector<Element>& samples) {
    if (pair.K.kind() == RingKind::Int && pair.L.kind() == RingKind::Int &&
        (p.ring().kind() == RingKind::Rat || p.ring().kind() == RingKind::Int))
        return is_numerical_ZZ(p);
    if (samples.empty()) raise(ErrorCode::InvalidArgument, "sample set is empty");
    const Poly ph = p.embed_into(pair.Lhat);
    NumericalVerdict v;
    for (const auto& k : samples) {
        const Element value = ph.eval(embed(k, pair.Lhat));
        if (!in_subring(value, pair.L)) {
            v.status = NumericalStatus::NotNumerical;
            v.witness_point = k;
            v.witness_value = value;
            return v;
        }
    }
    v.status = NumericalStatus::InconclusiveSampled;
    return v;
}

std::vector<Element> default_samples(const Ring& K) {
    std::vector<Element> out;
    switch (K.kind()) {
        case RingKind::Int:
            for (long k = -10; k <= 10; ++k) out.push_back(Element::from_integer(K, k));
            break;
        case RingKind::PolyFp: {
            const std::uint64_t count = K.prime() * K.prime() * K.prime();
            for (std::uint64_t i = 0; i < count; ++i) out.emplace_back(K, detail::fp_from_index(i, K.prime()));
            break;
        }
        case RingKind::GaussInt:
            for (long re = -5; re <= 5; ++re)
                for (long im = -5; im <= 5; ++im) out.emplace_back(K, Gaussian{re, im});
            break;
        case RingKind::PolyInt:
            for (long c0 = -1; c0 <= 1; ++c0)
                for (long c1 = -1; c1 <= 1; ++c1)
                    for (long c2 = -1; c2 <= 1; ++c2) out.emplace_back(K, IntPoly{{c0, c1, c2}});
            break;
        default: raise(ErrorCode::UnsupportedPair, "no sample suite for " + K.name());
    }
    return out;
}

std::vector<mpz_class> binomial_dual_coordinates(const mpz_class& k, std::size_t d) {
    std::vector<mpz_class> out;
    out.reserve(d);
    mpz_class c = 1;
    for (std::size_t j = 0; j < d; ++j) {
        out.push_back(c);
        // C(k, j+1) = C(k, j) * (k - j) / (j + 1), always exact.
        c *= k - static_cast<unsigned long>(j);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j + 1));
    }
    return out;
}

Poly difference_operator_apply(const GroupRingElement& omega, const Poly& p) {
    const Ring& r = omega.ring();
    const Poly pr = p.embed_into(r);
    Poly acc(r);
    for (const auto& [k, c] : omega.terms()) acc += pr.shift(embed(k, r)) * c;
    return acc;
}

}  // namespace evalg
