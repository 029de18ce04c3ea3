#include "evalg/density.hpp"

#include <algorithm>
#include <tuple>

#include "evalg/functionals.hpp"
#include "evalg/numerical.hpp"

namespace evalg {

namespace {

constexpr std::size_t kMaxCandidates = std::size_t{1} << 16;

// Box of radius r around 0 in Z[i]: 1, -1, i, 1+i, ... before larger radii.
std::vector<Element> gaussian_box(const Ring& ring, long radius) {
    std::vector<std::pair<long, long>> pts;
    for (long re = -radius; re <= radius; ++re)
        for (long im = -radius; im <= radius; ++im) pts.emplace_back(re, im);
    auto key = [](const std::pair<long, long>& z) {
        return std::make_tuple(std::max(std::labs(z.first), std::labs(z.second)), z.second < 0, std::labs(z.second),
                               z.first < 0, std::labs(z.first));
    };
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    std::vector<Element> out;
    out.reserve(pts.size());
    for (auto [re, im] : pts) out.emplace_back(ring, Gaussian{re, im});
    return out;
}

// 0, 1, -1, 2, -2, ...
Element integer_at(const Ring& ring, std::size_t i) {
    const long m = static_cast<long>((i + 1) / 2);
    return Element::from_integer(ring, i % 2 == 1 ? m : -m);
}

bool ds_search(const RingPair& pair, const std::vector<Element>& cands, std::size_t start, std::size_t n,
               std::vector<Element>& chosen) {
    if (chosen.size() == n) return true;
    for (std::size_t i = start; i < cands.size(); ++i) {
        if (cands.size() - i < n - chosen.size()) return false;
        const Element k = embed(cands[i], pair.L);
        bool ok = true;
        for (const auto& c : chosen) {
            if (!is_invertible(k - embed(c, pair.L))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(cands[i]);
        if (ds_search(pair, cands, i + 1, n, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

void check_window(const Element& e) {
    if (e.ring().kind() == RingKind::Laurent && laurent_window(e) < 1)
        raise(ErrorCode::WindowExhausted, "entry " + e.to_string() + " carries no constant-term information");
}

}  // namespace

CoefficientOutsideLError::CoefficientOutsideLError(std::size_t level, std::size_t index, Element alpha,
                                                   std::vector<Element> points)
    : Error(ErrorCode::CoefficientOutsideL,
            "CoefficientOutsideL: alpha[" + std::to_string(level) + "][" + std::to_string(index) +
                "] = " + alpha.to_string() + " is not in L"),
      level_(level),
      index_(index),
      alpha_(std::move(alpha)),
      points_(std::move(points)) {}

std::vector<Element> ds_candidates(const RingPair& pair, std::size_t budget) {
    const Ring& K = pair.K;
    std::vector<Element> out;
    switch (K.kind()) {
        case RingKind::Int: {
            for (std::size_t k = 0; k <= budget; ++k) out.push_back(Element::from_integer(K, static_cast<long>(k)));
            for (std::size_t k = 1; k <= budget; ++k) out.push_back(Element::from_integer(K, -static_cast<long>(k)));
            break;
        }
        case RingKind::GaussInt: {
            const std::size_t count = std::min(budget, kMaxCandidates);
            long radius = 0;
            while (static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1)) < count) ++radius;
            out = gaussian_box(K, radius);
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(std::min(count, out.size())), out.end());
            break;
        }
        case RingKind::PolyFp: {
            const std::size_t count = std::min(budget, kMaxCandidates);
            for (std::size_t i = 0; i < count; ++i) out.emplace_back(K, detail::fp_from_index(i, K.prime()));
            break;
        }
        case RingKind::PolyInt: {
            const Element q = Element::generator(K);
            for (std::size_t i = 0; i <= budget; ++i) out.push_back(q.pow(i));
            break;
        }
        default: raise(ErrorCode::UnsupportedPair, "no enumerator for " + K.name());
    }
    return out;
}

bool differences_invertible(const RingPair& pair, const std::vector<Element>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!is_invertible(embed(points[i], pair.L) - embed(points[j], pair.L))) return false;
    return true;
}

DSWitness ds_witness(const RingPair& pair, std::size_t n, std::size_t budget) {
    if (n == 0) raise(ErrorCode::InvalidArgument, "witness size must be >= 1");
    const auto cands = ds_candidates(pair, budget);
    std::vector<Element> chosen;
    if (!ds_search(pair, cands, 0, n, chosen))
        raise(ErrorCode::NotFoundWithinBudget, "no " + std::to_string(n) + " points with invertible differences among " +
                                                   std::to_string(cands.size()) + " candidates");
    DSWitness w{pair, chosen, differences_invertible(pair, chosen)};
    if (!w.checked) raise(ErrorCode::Internal, "witness failed its own check");
    return w;
}

DensityCertificate build_certificate(const RingPair& pair, const std::vector<Element>& points, std::size_t trunc) {
    if (trunc == 0) raise(ErrorCode::InvalidArgument, "truncation must be >= 1");
    if (points.size() < trunc)
        raise(ErrorCode::InvalidArgument, "need at least " + std::to_string(trunc) + " points");
    std::vector<Element> ks;
    for (const auto& k : points) ks.push_back(embed(k, pair.K));
    PointConfig config(ks);  // distinctness
    DensityCertificate cert{pair, trunc, ks, {}, {}};
    std::vector<Element> lifted;
    for (const auto& k : ks) lifted.push_back(embed(k, pair.Lhat));
    for (std::size_t n = 0; n < trunc; ++n) {
        const std::vector<Element> sub(lifted.begin(), lifted.begin() + static_cast<std::ptrdiff_t>(n + 1));
        std::vector<Element> rhs(n + 1, Element::zero(pair.Lhat));
        rhs[n] = Element::one(pair.Lhat);
        std::vector<Element> alpha;
        try {
            alpha = bareiss_solve(vandermonde(sub), rhs, pair.Lhat);
        } catch (const Error& e) {
            // Only possible when L̂ is not a field (truncated Laurent): the ratio leaves L.
            if (e.code() != ErrorCode::NotDivisible) throw;
            raise(ErrorCode::CoefficientOutsideL, "level " + std::to_string(n) + ": " + e.what());
        }
        GroupRingElement a(pair.L);
        for (std::size_t j = 0; j <= n; ++j) {
            auto in_l = in_subring(alpha[j], pair.L);
            if (!in_l) throw CoefficientOutsideLError(n, j, alpha[j], std::vector<Element>(ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(n + 1)));
            a.add_term(ks[j], *in_l);
        }
        cert.matrix.push_back(ev_star(a, trunc).coeffs);
        cert.elements.push_back(std::move(a));
    }
    return cert;
}

CertificateCheck verify_certificate(const DensityCertificate& cert) {
    CertificateCheck res;
    if (cert.elements.size() != cert.trunc) {
        res.failure = {cert.elements.size(), 0};
        return res;
    }
    for (std::size_t n = 0; n < cert.trunc; ++n) {
        const auto row = ev_star(cert.elements[n], cert.trunc).coeffs;
        for (std::size_t m = 0; m < cert.trunc; ++m) {
            if (m <= n) {
                const Element target = m == n ? Element::one(row[m].ring()) : Element::zero(row[m].ring());
                const Element diff = row[m] - target;
                check_window(diff);
                if (!diff.is_zero()) {
                    res.failure = {n, m};
                    return res;
                }
            }
            if (n < cert.matrix.size() && m < cert.matrix[n].size()) {
                const Element diff = row[m] - cert.matrix[n][m];
                if (m <= n) check_window(diff);
                if (!diff.is_zero()) {
                    res.failure = {n, m};
                    return res;
                }
            } else {
                res.failure = {n, m};
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

Element residue(const Element& x, const Element& a) {
    const Ring& r = a.ring();
    const Element xr = embed(x, r);
    switch (r.kind()) {
        case RingKind::Int: {
            mpz_class m = abs(a.as<mpz_class>());
            mpz_class out;
            mpz_fdiv_r(out.get_mpz_t(), xr.as<mpz_class>().get_mpz_t(), m.get_mpz_t());
            return Element(r, out);
        }
        case RingKind::PolyFp: return Element(r, detail::fp_divmod(xr.as<FpPoly>(), a.as<FpPoly>(), r.prime()).second);
        case RingKind::GaussInt: return Element(r, detail::gauss_divmod(xr.as<Gaussian>(), a.as<Gaussian>()).second);
        default: raise(ErrorCode::UnsupportedQuotient, "no Euclidean reduction in " + r.name());
    }
}

FiniteImage finite_image_size(const Element& a, const RingPair& pair, std::size_t bound) {
    const Element al = embed(a, pair.L);
    if (al.is_zero()) raise(ErrorCode::ZeroElement, "modulus must be nonzero");
    if (is_invertible(al)) raise(ErrorCode::InvertibleModulus, al.to_string() + " is a unit of " + pair.L.name());
    const RingKind lk = pair.L.kind();
    if (lk != RingKind::Int && lk != RingKind::PolyFp && lk != RingKind::GaussInt)
        raise(ErrorCode::UnsupportedQuotient, "no Euclidean reduction in " + pair.L.name());

    std::vector<Element> gauss;
    long gauss_radius = 4;
    auto candidate = [&](std::size_t i) -> std::optional<Element> {
        switch (pair.K.kind()) {
            case RingKind::Int: return integer_at(pair.K, i);
            case RingKind::PolyFp: {
                // Stop before the index overflows the digit expansion.
                if (i >= (std::size_t{1} << 40)) return std::nullopt;
                return Element(pair.K, detail::fp_from_index(i, pair.K.prime()));
            }
            case RingKind::GaussInt: {
                while (i >= gauss.size()) {
                    gauss_radius *= 2;
                    gauss = gaussian_box(pair.K, gauss_radius);
                }
                return gauss[i];
            }
            default: return std::nullopt;
        }
    };

    FiniteImage img;
    std::vector<Element> seen;  // residues, parallel to img.reps
    std::size_t since_new = 0;
    for (std::size_t i = 0; i < bound; ++i) {
        auto k = candidate(i);
        if (!k) break;
        ++img.steps;
        const Element r = residue(*k, al);
        if (std::find(seen.begin(), seen.end(), r) == seen.end()) {
            seen.push_back(r);
            img.reps.push_back(*k);
            since_new = 0;
        } else if (++since_new >= 2 * seen.size()) {
            img.finite = true;
            return img;
        }
    }
    return img;
}

ClassificationReport classify_pair(const RingPair& pair, const ClassifyBudgets& b) {
    ClassificationReport rep{pair};
    rep.contains_fraction_field = pair.contains_fraction_field;
    rep.ds_n = b.ds_n;
    rep.trunc = b.trunc;
    rep.notes.push_back(pair.contains_fraction_field
                            ? "L contains the fraction field of K: no nontrivial numerical functionals and ev* is asymptotically split"
                            : "L does not contain the fraction field of K: nontrivial numerical functionals exist");

    try {
        rep.ds_points = ds_witness(pair, b.ds_n, b.ds_budget).points;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotFoundWithinBudget) throw;
    }

    std::vector<Element> cert_points;
    if (rep.ds_points) {
        try {
            cert_points = ds_witness(pair, std::max(b.trunc, b.ds_n), b.ds_budget).points;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotFoundWithinBudget) throw;
        }
    }
    if (cert_points.empty()) {
        auto cands = ds_candidates(pair, b.ds_budget);
        if (cands.size() > b.trunc) cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(b.trunc), cands.end());
        cert_points = cands;
    }
    try {
        const auto cert = build_certificate(pair, cert_points, b.trunc);
        rep.certificate_built = verify_certificate(cert).ok;
        if (!rep.certificate_built) rep.certificate_failure = "certificate failed verification";
    } catch (const Error& e) {
        rep.certificate_failure = e.what();
    }
    if (rep.ds_points) rep.notes.push_back("DS witness found: L is a DS-extension candidate, so ev has dense image up to the certified truncation");
    else rep.notes.push_back("no DS witness within budget (not a proof of non-existence)");

    const RingKind lk = pair.L.kind();
    const bool quotient_supported = lk == RingKind::Int || lk == RingKind::PolyFp || lk == RingKind::GaussInt;
    if (!pair.L.is_field() && quotient_supported) {
        rep.obstruction_searched = true;
        for (const auto& a : ds_candidates(RingPair::make(pair.L, pair.L), 16)) {
            if (a.is_zero() || is_invertible(a)) continue;
            const auto img = finite_image_size(a, pair, b.image_bound);
            if (!img.finite) continue;
            const Poly p = construct_from_quotient(a, img.reps);
            const auto verdict = is_numerical_sampled(p, pair, default_samples(pair.K));
            if (verdict.status == NumericalStatus::NotNumerical) continue;
            rep.obstruction_modulus = a;
            rep.obstruction_image = img;
            rep.obstruction_poly = p;
            rep.notes.push_back("finite image of K in L/(" + a.to_string() +
                                ") yields a nontrivial numerical polynomial: ev is not asymptotically split");
            break;
        }
    }
    return rep;
}

}  // namespace evalg
