#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "evalg/poly.hpp"
#include "evalg/ring.hpp"

namespace evalg {

/// Finite formal linear combination of points with coefficients in one ring.
/// Zero coefficients are never stored.
template <class Point>
class GroupRing {
public:
    using Terms = std::map<Point, Element>;

    explicit GroupRing(Ring ring) : ring_(ring) {}

    static GroupRing point(const Point& k, const Ring& ring) {
        GroupRing g(ring);
        g.add_term(k, Element::one(ring));
        return g;
    }

    const Ring& ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t support_size() const noexcept { return terms_.size(); }

    Element coeff(const Point& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Element::zero(ring_) : it->second;
    }

    void add_term(const Point& k, const Element& c) {
        Element v = embed(c, ring_);
        if (v.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GroupRing& operator+=(const GroupRing& rhs) {
        check_ring(rhs);
        for (const auto& [k, c] : rhs.terms_) add_term(k, c);
        return *this;
    }
    GroupRing& operator-=(const GroupRing& rhs) {
        check_ring(rhs);
        for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
        return *this;
    }
    GroupRing& operator*=(const Element& scalar) {
        const Element s = embed(scalar, ring_);
        Terms out;
        for (const auto& [k, c] : terms_) {
            Element v = c * s;
            if (!v.is_zero()) out.emplace(k, std::move(v));
        }
        terms_ = std::move(out);
        return *this;
    }
    friend GroupRing operator+(GroupRing a, const GroupRing& b) { return a += b; }
    friend GroupRing operator-(GroupRing a, const GroupRing& b) { return a -= b; }
    friend GroupRing operator*(GroupRing a, const Element& s) { return a *= s; }
    friend bool operator==(const GroupRing& a, const GroupRing& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    /// Coefficientwise embedding into a larger ring.
    GroupRing embed_into(const Ring& target) const {
        GroupRing out(target);
        for (const auto& [k, c] : terms_) out.add_term(k, embed(c, target));
        return out;
    }

    void check_ring(const GroupRing& rhs) const {
        if (!(ring_ == rhs.ring_)) raise(ErrorCode::RingMismatch, ring_.name() + " vs " + rhs.ring_.name());
    }

private:
    Ring ring_;
    Terms terms_;
};

using PointTuple = std::vector<Element>;
/// L[K] for A = K[x].
using GroupRingElement = GroupRing<Element>;
/// L[K^g] for A = K[x_1..x_g].
using MultiGroupRingElement = GroupRing<PointTuple>;

/// Truncated element of the divided power module: coefficient n of u_n,
/// n < trunc. Entries at index >= valid carry no information.
struct DividedPowerVector {
    Ring ring;
    std::size_t trunc = 0;
    std::vector<Element> coeffs;
    std::size_t valid = 0;

    bool is_zero() const;
    friend bool operator==(const DividedPowerVector& a, const DividedPowerVector& b);
};

/// Multivariate truncation: exponent vectors of total weight < bound.
struct MultiDividedPowerVector {
    Ring ring;
    std::size_t nvars = 0;
    std::size_t bound = 0;
    std::map<Exponents, Element> coeffs;
};

/// Values of P at each point (1-tuples for univariate P).
std::vector<Element> ev_apply(const Poly& p, const std::vector<PointTuple>& points);
std::vector<Element> ev_apply(const MPoly& p, const std::vector<PointTuple>& points);

/// Coefficient of u_i is sum over terms of coeff * k^i, i < n.
DividedPowerVector ev_star(const GroupRingElement& g, std::size_t n);
/// Multivariate moments: coefficient at e is sum of coeff * prod k_v^{e_v}, |e| < n.
MultiDividedPowerVector ev_star(const MultiGroupRingElement& g, std::size_t n);

/// z^k u_n = u_{n-k}; the valid window shrinks by deg a.
DividedPowerVector gamma_action(const Poly& a, const DividedPowerVector& v);

/// [k] -> a(k)[k].
GroupRingElement groupring_action(const Poly& a, const GroupRingElement& g);
MultiGroupRingElement groupring_action(const MPoly& a, const MultiGroupRingElement& g);

/// Bilinear extension of [a][b] = [a+b].
GroupRingElement convolution(const GroupRingElement& g, const GroupRingElement& h);
MultiGroupRingElement convolution(const MultiGroupRingElement& g, const MultiGroupRingElement& h);

/// Least N with ev_star(g, N) != 0. Throws ZeroElement for g = 0.
std::size_t injectivity_witness(const GroupRingElement& g);

/// Product measure of univariate factors, truncated to total weight < n.
MultiDividedPowerVector tensor_ev_star(const std::vector<GroupRingElement>& gs, std::size_t n);

/// Pairing of u_n against the coefficient of x^n. Requires deg p < v.valid.
Element pair(const DividedPowerVector& v, const Poly& p);

/// All exponent vectors with nvars entries and total degree < bound, graded-lex ascending.
std::vector<Exponents> exponents_below(std::size_t nvars, std::size_t bound);

}  // namespace evalg
