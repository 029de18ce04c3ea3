#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evalg/linalg.hpp"
#include "evalg/pair.hpp"
#include "evalg/poly.hpp"
#include "evalg/transform.hpp"

namespace evalg {

/// Raised when a solved coefficient does not lie in L.
class CoefficientOutsideLError : public Error {
public:
    CoefficientOutsideLError(std::size_t level, std::size_t index, Element alpha, std::vector<Element> points);

    std::size_t level() const noexcept { return level_; }
    std::size_t index() const noexcept { return index_; }
    const Element& alpha() const noexcept { return alpha_; }
    const std::vector<Element>& points() const noexcept { return points_; }

private:
    std::size_t level_;
    std::size_t index_;
    Element alpha_;
    std::vector<Element> points_;
};

struct DSWitness {
    RingPair pair;
    std::vector<Element> points;
    bool checked = false;
};

/// Candidate K-elements in the pair's deterministic search order.
/// Z: 0..B then -1..-B; Z[i] and F_p[q]: the first B elements of the box order
/// (by max(|re|,|im|)) or of the index order (capped at 2^16);
/// Z[q]: monomials 1, q, ..., q^B.
std::vector<Element> ds_candidates(const RingPair& pair, std::size_t budget);

/// Depth-first search for n candidates with pairwise differences invertible in L.
/// Throws NotFoundWithinBudget.
DSWitness ds_witness(const RingPair& pair, std::size_t n, std::size_t budget);

/// Whether all pairwise differences of `points` are units of L.
bool differences_invertible(const RingPair& pair, const std::vector<Element>& points);

struct DensityCertificate {
    RingPair pair;
    std::size_t trunc = 0;
    std::vector<Element> points;
    std::vector<GroupRingElement> elements;
    /// Row n: ev_star(a_n, trunc).
    Matrix matrix;
};

/// Solves the nested Vandermonde systems sum_j alpha_{n,j} k_j^l = delta_{l,n}, l <= n.
/// Throws CoefficientOutsideLError, DuplicatePoint, InvalidArgument (too few points).
DensityCertificate build_certificate(const RingPair& pair, const std::vector<Element>& points, std::size_t trunc);

struct CertificateCheck {
    bool ok = false;
    std::optional<std::pair<std::size_t, std::size_t>> failure;
};

/// Recomputes every row from the elements and checks unitriangularity and the
/// stored matrix. Throws WindowExhausted when a Laurent entry has no valid window.
CertificateCheck verify_certificate(const DensityCertificate& cert);

struct FiniteImage {
    bool finite = false;
    std::vector<Element> reps;
    std::size_t steps = 0;
};

/// Image of K in L/(a), enumerated until no new residue appears for 2*size steps.
FiniteImage finite_image_size(const Element& a, const RingPair& pair, std::size_t bound);

/// Residue class key of x modulo a (Euclidean remainder).
Element residue(const Element& x, const Element& a);

struct ClassifyBudgets {
    std::size_t ds_n = 3;
    std::size_t ds_budget = 100;
    std::size_t trunc = 16;
    std::size_t image_bound = 1000;
};

struct ClassificationReport {
    RingPair pair;
    bool contains_fraction_field = false;
    std::size_t ds_n = 0;
    std::optional<std::vector<Element>> ds_points{};
    std::size_t trunc = 0;
    bool certificate_built = false;
    std::optional<std::string> certificate_failure{};
    bool obstruction_searched = false;
    std::optional<Element> obstruction_modulus{};
    std::optional<FiniteImage> obstruction_image{};
    std::optional<Poly> obstruction_poly{};
    std::vector<std::string> notes{};
};

ClassificationReport classify_pair(const RingPair& pair, const ClassifyBudgets& budgets = {});

}  // namespace evalg
