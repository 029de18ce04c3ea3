#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "evalg/pair.hpp"
#include "evalg/transform.hpp"

namespace evalg {

/// Ordered list of pairwise-distinct K-elements (k_1..k_n).
class PointConfig {
public:
    /// Throws DuplicatePoint.
    explicit PointConfig(std::vector<Element> points);

    const std::vector<Element>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    const Ring& ring() const { return points_.front().ring(); }

private:
    std::vector<Element> points_;
};

/// prod_{i<j} (k_j - k_i) in K, cross-checked against a determinant for n <= 5.
Element vandermonde_det(const PointConfig& omega);

/// e_{l,omega} over `lhat`: coefficient of [k_j] is (-1)^{l+j} minor_{l,j} / d_omega (l is 1-based).
GroupRingElement build_e(const PointConfig& omega, std::size_t l, const Ring& lhat);

/// Determinant with row l (power l-1) replaced by k_j^m, divided by d_omega exactly in K.
Element schur_ratio(const PointConfig& omega, std::size_t l, std::size_t m);

struct KeyFormulaReport {
    bool ok = false;
    /// ev_star(e_{l,omega}, N).
    std::vector<Element> table;
    /// Index of the first mismatching coordinate.
    std::optional<std::size_t> failure;
};

/// Triangularity below n and agreement with (integral) Schur ratios up to N.
KeyFormulaReport verify_key_formula(const PointConfig& omega, std::size_t l, std::size_t n_trunc, const RingPair& pair);

/// First n coordinates of ev_star(f).
std::vector<Element> phi_n(const GroupRingElement& f, std::size_t n);

struct MembershipVerdict {
    bool numerical = false;
    /// Support of f in key order.
    std::vector<Element> omega;
    /// e-basis coordinates c_0..c_{n-1} in L when numerical.
    std::vector<Element> coords;
    std::optional<std::size_t> witness_index;
    std::optional<Element> witness_value;
};

/// Exact test for f in the L-span of the e_{l,omega}. Throws ZeroElement.
MembershipVerdict membership(const GroupRingElement& f, const RingPair& pair);

/// sum_l c_{l-1} e_{l,omega} over L̂.
GroupRingElement reconstruct(const PointConfig& omega, const std::vector<Element>& coords, const Ring& lhat);

}  // namespace evalg
