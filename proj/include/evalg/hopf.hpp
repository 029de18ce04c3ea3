#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evalg/density.hpp"
#include "evalg/pair.hpp"
#include "evalg/poly.hpp"
#include "evalg/transform.hpp"

namespace evalg {

enum class SeriesKind { Nottingham, PSeries };

std::string_view to_string(SeriesKind k) noexcept;

/// Nottingham: t + x_1 t^2 + ... + x_g t^{g+1} mod t^{g+2}.
/// PSeries:    x + a_1 x^p + ... + a_g x^{p^g} mod x^{p^{g+1}}, p = char of the ring.
class TruncatedSeries {
public:
    TruncatedSeries(SeriesKind kind, Ring ring, std::vector<Element> coeffs);

    static TruncatedSeries identity(SeriesKind kind, const Ring& ring, std::size_t depth);

    SeriesKind kind() const noexcept { return kind_; }
    const Ring& ring() const noexcept { return ring_; }
    std::size_t depth() const noexcept { return coeffs_.size(); }
    std::uint64_t prime() const noexcept { return ring_.characteristic(); }
    /// Coefficient x_i (1-based); x_0 = 1.
    Element coeff(std::size_t i) const;
    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }

    TruncatedSeries embed_into(const Ring& target) const;
    std::string to_string() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator<(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    SeriesKind kind_;
    Ring ring_;
    std::vector<Element> coeffs_;
};

/// f∘g = f(g(t)). Throws KindMismatch (kind, ring or depth differ).
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);
/// Two-sided compositional inverse by triangular back substitution.
TruncatedSeries series_reverse(const TruncatedSeries& f);

/// The Hopf algebra N = Z[x_1, x_2, ...] (|x_i| = i) or P = F_p[x_1, ...] (|x_i| = p^i - 1).
struct HopfAlgebra {
    enum class Kind { N, P } kind = Kind::N;
    std::uint64_t p = 0;

    static HopfAlgebra nottingham() { return {Kind::N, 0}; }
    static HopfAlgebra steenrod(std::uint64_t p);
    static HopfAlgebra parse(std::string_view name, std::uint64_t p);

    std::uint64_t weight(std::size_t i) const;
    std::uint64_t weight(const Exponents& e) const;
    /// Number of generators of weight < D.
    std::size_t generators_below(std::size_t bound) const;
    /// Smallest series depth supporting weight bound D.
    std::size_t depth_for(std::size_t bound) const;
    bool depth_supports(std::size_t depth, std::size_t bound) const;
    SeriesKind series_kind() const { return kind == Kind::N ? SeriesKind::Nottingham : SeriesKind::PSeries; }
    /// Z for N, F_p for P.
    Ring coefficient_ring() const;
    std::string name() const;

    friend bool operator==(const HopfAlgebra&, const HopfAlgebra&) = default;
};

/// Monomials of weight < D over the generators of weight < D, ordered by weight
/// then descending lexicographic exponent vector.
std::vector<Exponents> monomials_below(const HopfAlgebra& alg, std::size_t bound);

/// Delta(x_k) in variables x_1..x_G (left leg) and y_1..y_G (right leg), G >= k,
/// obtained by expanding the composite of two generic series. Pairing against
/// (f, g) gives coefficient k of f∘g.
MPoly hopf_diagonal(const HopfAlgebra& alg, std::size_t k, std::size_t legs);
MPoly nottingham_diagonal(std::size_t k, std::size_t legs);
MPoly steenrod_diagonal(std::size_t n, std::uint64_t p, std::size_t legs);

/// prod_i coeff_i^{e_i}. Throws DepthExceeded.
Element point_pairing(const TruncatedSeries& s, const Exponents& mono);

using SeriesGroupRing = GroupRing<TruncatedSeries>;

/// Bilinear extension of [f][g] = [f∘g].
SeriesGroupRing series_convolution(const SeriesGroupRing& g, const SeriesGroupRing& h);

/// Finitely supported functional on monomials of weight < bound.
struct DualFunctional {
    HopfAlgebra alg;
    std::size_t bound = 0;
    Ring ring;
    std::map<Exponents, Element> values;

    Element at(const Exponents& e) const;
    friend bool operator==(const DualFunctional& a, const DualFunctional& b);
};

/// mono -> sum coeff * point_pairing(point, mono). Throws DepthExceeded.
DualFunctional groupring_ev_star(const HopfAlgebra& alg, const SeriesGroupRing& g, std::size_t bound);

/// (phi * psi)(m) = (phi ⊗ psi)(Delta m). Throws AlgebraMismatch.
DualFunctional functional_convolution(const DualFunctional& phi, const DualFunctional& psi);

/// Counit: 1 on the empty monomial, 0 elsewhere.
DualFunctional counit(const HopfAlgebra& alg, const Ring& ring, std::size_t bound);

struct HopfCertificate {
    HopfAlgebra alg;
    RingPair pair;
    std::size_t bound = 0;
    std::size_t depth = 0;
    std::vector<Exponents> monomials;
    std::vector<SeriesGroupRing> elements;
    /// gram[r][c] = groupring_ev_star(elements[r]) at monomials[c].
    Matrix gram;
};

/// One element per monomial of weight < D, built by tensoring univariate
/// certificates over the generators. Propagates CoefficientOutsideL.
HopfCertificate hopf_density_certificate(const HopfAlgebra& alg, const RingPair& pair, std::size_t bound,
                                         std::size_t ds_budget = 100);

/// Recomputes every pairing from the series points and checks the Gram matrix
/// is upper unitriangular in monomial order and equal to the stored one.
CertificateCheck verify_hopf_certificate(const HopfCertificate& cert);

}  // namespace evalg
