#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "evalg/ring.hpp"

namespace evalg {

/// A whitelisted extension K ⊂ L together with the ring L̂ in which
/// functional coefficients and numerical-polynomial coefficients live.
struct RingPair {
    Ring K;
    Ring L;
    /// Fraction field of L when it is in the tower; L itself for the
    /// truncated Laurent ring (there divisions are performed in L directly).
    Ring Lhat;
    /// Whether L contains the fraction field of K (whitelist metadata).
    bool contains_fraction_field = false;

    std::string name() const { return K.name() + "/" + L.name(); }

    /// "K/L" with ring names as accepted by Ring::parse. Throws UnsupportedPair.
    static RingPair parse(std::string_view text);
    static RingPair make(const Ring& K, const Ring& L);

    friend bool operator==(const RingPair& a, const RingPair& b) { return a.K == b.K && a.L == b.L; }
};

/// All registered pairs for a given prime and Laurent precision (for listings).
std::vector<RingPair> registered_pairs(std::uint64_t p = 2, int precision = kDefaultLaurentPrecision);

}  // namespace evalg
