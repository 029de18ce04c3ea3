#include "evalg/pair.hpp"

namespace evalg {

RingPair RingPair::make(const Ring& K, const Ring& L) {
    auto pair = [&](const Ring& lhat, bool frac) { return RingPair{K, L, lhat, frac}; };
    switch (K.kind()) {
        case RingKind::Int:
            if (L.kind() == RingKind::Int) return pair(Ring::rationals(), false);
            if (L.kind() == RingKind::Rat) return pair(L, true);
            break;
        case RingKind::PolyFp:
            if (L == K) return pair(Ring::fp_rational_functions(K.prime()), false);
            if (L == Ring::fp_rational_functions(K.prime())) return pair(L, true);
            break;
        case RingKind::GaussInt:
            if (L.kind() == RingKind::GaussInt) return pair(Ring::gaussian_rationals(), false);
            if (L.kind() == RingKind::GaussRat) return pair(L, true);
            break;
        case RingKind::PolyInt:
            if (L.kind() == RingKind::Laurent) return pair(L, false);
            break;
        default: break;
    }
    raise(ErrorCode::UnsupportedPair, K.name() + "/" + L.name() + " is not a registered pair");
}

RingPair RingPair::parse(std::string_view text) {
    // Ring names never contain '/', so the split is unambiguous.
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        raise(ErrorCode::UnsupportedPair, "pair must be written K/L, got '" + std::string(text) + "'");
    Ring K = Ring::parse(text.substr(0, slash));
    Ring L = Ring::parse(text.substr(slash + 1));
    return make(K, L);
}

std::vector<RingPair> registered_pairs(std::uint64_t p, int precision) {
    return {
        RingPair::make(Ring::integers(), Ring::integers()),
        RingPair::make(Ring::integers(), Ring::rationals()),
        RingPair::make(Ring::fp_poly(p), Ring::fp_poly(p)),
        RingPair::make(Ring::fp_poly(p), Ring::fp_rational_functions(p)),
        RingPair::make(Ring::gaussian_integers(), Ring::gaussian_integers()),
        RingPair::make(Ring::gaussian_integers(), Ring::gaussian_rationals()),
        RingPair::make(Ring::int_poly(), Ring::laurent(precision)),
    };
}

}  // namespace evalg
