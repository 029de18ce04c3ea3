#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "evalg/pair.hpp"
#include "evalg/poly.hpp"
#include "evalg/transform.hpp"

namespace evalg {

enum class NumericalStatus { Numerical, NotNumerical, InconclusiveSampled };

std::string_view to_string(NumericalStatus s) noexcept;

struct NumericalVerdict {
    NumericalStatus status = NumericalStatus::InconclusiveSampled;
    /// Exact test: index of the first non-integral binomial coordinate.
    std::optional<std::size_t> witness_index;
    /// Sampled test: the failing sample point.
    std::optional<Element> witness_point;
    /// The offending coordinate or value.
    std::optional<Element> witness_value;
    /// Binomial coordinates (exact test only).
    std::vector<Element> coords;
};

/// Exact test for integer-valued polynomials: all binomial coordinates in Z.
/// On failure the first fractional coordinate i is the witness and P(i) is
/// not an integer.
NumericalVerdict is_numerical_ZZ(const Poly& p);

/// prod (x - k_i) / a over the fraction field of a's ring.
/// Throws InvertibleModulus when a is a unit, ZeroElement when a = 0.
Poly construct_from_quotient(const Element& a, const std::vector<Element>& reps);

/// (x^{p^n} - x) / (q^{p^n} - q) over F_p(q).
Poly fpq_family(std::uint64_t p, unsigned n);

/// (1/n!) prod_{0<=a,b<n} (x - a - ib) over Q(i).
Poly gaussian_family(unsigned n);

/// Pointwise pullback test: every P(k) must lie in L. Delegates to the exact
/// test for Z/Z with P over Q.
NumericalVerdict is_numerical_sampled(const Poly& p, const RingPair& pair, const std::vector<Element>& samples);

/// Deterministic default sample suite for K: Z -> -10..10, F_p[q] -> degree < 3,
/// Z[i] -> box |re|,|im| <= 5, Z[q] -> degree < 3 with coefficients in {-1,0,1}.
std::vector<Element> default_samples(const Ring& K);

/// First d coefficients of (1+y)^k (generalized binomial coefficients for k < 0).
std::vector<mpz_class> binomial_dual_coordinates(const mpz_class& k, std::size_t d);

/// p(x) -> sum_i alpha_i p(x + k_i), over omega's coefficient ring.
Poly difference_operator_apply(const GroupRingElement& omega, const Poly& p);

}  // namespace evalg
