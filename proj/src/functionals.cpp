#include "evalg/functionals.hpp"

#include "evalg/linalg.hpp"

namespace evalg {

PointConfig::PointConfig(std::vector<Element> points) : points_(std::move(points)) {
    if (points_.empty()) raise(ErrorCode::InvalidArgument, "point configuration is empty");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!(points_[i].ring() == points_.front().ring()))
            raise(ErrorCode::RingMismatch, "points must share one ring");
        for (std::size_t j = 0; j < i; ++j)
            if (points_[i] == points_[j]) raise(ErrorCode::DuplicatePoint, points_[i].to_string() + " repeated");
    }
}

Element vandermonde_det(const PointConfig& omega) {
    const auto& k = omega.points();
    const Ring& r = omega.ring();
    Element d = Element::one(r);
    for (std::size_t j = 0; j < k.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) d *= k[j] - k[i];
    if (k.size() <= 5 && !(cofactor_determinant(vandermonde(k), r) == d))
        raise(ErrorCode::Internal, "Vandermonde product disagrees with cofactor expansion");
    return d;
}

GroupRingElement build_e(const PointConfig& omega, std::size_t l, const Ring& lhat) {
    const std::size_t n = omega.size();
    if (l < 1 || l > n) raise(ErrorCode::InvalidArgument, "row index out of range");
    const Matrix a = vandermonde(omega.points());
    const Element d = embed(vandermonde_det(omega), lhat);
    GroupRingElement e(lhat);
    for (std::size_t j = 1; j <= n; ++j) {
        Element m = embed(determinant(minor_matrix(a, l - 1, j - 1), omega.ring()), lhat);
        if ((l + j) % 2 == 1) m = -m;
        e.add_term(omega.points()[j - 1], exact_divide(m, d));
    }
    return e;
}

Element schur_ratio(const PointConfig& omega, std::size_t l, std::size_t m) {
    const std::size_t n = omega.size();
    if (l < 1 || l > n) raise(ErrorCode::InvalidArgument, "row index out of range");
    Matrix a = vandermonde(omega.points());
    for (std::size_t j = 0; j < n; ++j) a[l - 1][j] = omega.points()[j].pow(m);
    return exact_divide(determinant(a, omega.ring()), vandermonde_det(omega));
}

KeyFormulaReport verify_key_formula(const PointConfig& omega, std::size_t l, std::size_t n_trunc, const RingPair& pair) {
    const std::size_t n = omega.size();
    if (n_trunc <= n) raise(ErrorCode::InvalidArgument, "truncation must exceed the number of points");
    KeyFormulaReport rep;
    rep.table = ev_star(build_e(omega, l, pair.Lhat), n_trunc).coeffs;
    for (std::size_t i = 0; i < n_trunc; ++i) {
        bool good;
        if (i < n) {
            good = i + 1 == l ? rep.table[i].is_one() : rep.table[i].is_zero();
        } else {
            const Element ratio = embed(schur_ratio(omega, l, i), pair.L);
            const auto in_l = in_subring(rep.table[i], pair.L);
            good = in_l && *in_l == ratio;
        }
        if (!good) {
            rep.failure = i;
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

std::vector<Element> phi_n(const GroupRingElement& f, std::size_t n) { return ev_star(f, n).coeffs; }

MembershipVerdict membership(const GroupRingElement& f, const RingPair& pair) {
    if (f.is_zero()) raise(ErrorCode::ZeroElement, "membership of the zero functional");
    MembershipVerdict v;
    for (const auto& [k, c] : f.terms()) v.omega.push_back(embed(k, pair.K));
    const auto c = phi_n(f.embed_into(pair.Lhat), v.omega.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto w = in_subring(c[i], pair.L);
        if (!w) {
            v.coords.clear();
            v.witness_index = i;
            v.witness_value = c[i];
            return v;
        }
        v.coords.push_back(*w);
    }
    v.numerical = true;
    return v;
}

GroupRingElement reconstruct(const PointConfig& omega, const std::vector<Element>& coords, const Ring& lhat) {
    if (coords.size() != omega.size()) raise(ErrorCode::ArityMismatch, "one coordinate per point expected");
    GroupRingElement acc(lhat);
    for (std::size_t l = 1; l <= omega.size(); ++l) acc += build_e(omega, l, lhat) * embed(coords[l - 1], lhat);
    return acc;
}

}  // namespace evalg
