#include "evalg/transform.hpp"

#include <algorithm>

namespace evalg {

bool DividedPowerVector::is_zero() const {
    for (std::size_t i = 0; i < valid && i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) return false;
    return true;
}

bool operator==(const DividedPowerVector& a, const DividedPowerVector& b) {
    return a.ring == b.ring && a.trunc == b.trunc && a.valid == b.valid && a.coeffs == b.coeffs;
}

std::vector<Element> ev_apply(const Poly& p, const std::vector<PointTuple>& points) {
    std::vector<Element> out;
    out.reserve(points.size());
    for (const auto& pt : points) out.push_back(poly_eval(p, pt));
    return out;
}

std::vector<Element> ev_apply(const MPoly& p, const std::vector<PointTuple>& points) {
    std::vector<Element> out;
    out.reserve(points.size());
    for (const auto& pt : points) out.push_back(p.eval(pt));
    return out;
}

DividedPowerVector ev_star(const GroupRingElement& g, std::size_t n) {
    if (n == 0) raise(ErrorCode::InvalidArgument, "truncation must be >= 1");
    const Ring& r = g.ring();
    DividedPowerVector v{r, n, std::vector<Element>(n, Element::zero(r)), n};
    for (const auto& [k, c] : g.terms()) {
        const Element kk = embed(k, r);
        Element term = c;
        for (std::size_t i = 0; i < n; ++i) {
            v.coeffs[i] += term;
            if (i + 1 < n) term *= kk;
        }
    }
    return v;
}

std::vector<Exponents> exponents_below(std::size_t nvars, std::size_t bound) {
    std::vector<Exponents> out;
    if (bound == 0) return out;
    Exponents e(nvars, 0);
    // Enumerate all vectors with total < bound by odometer, then sort.
    for (;;) {
        out.push_back(e);
        std::size_t i = 0;
        for (; i < nvars; ++i) {
            ++e[i];
            std::uint32_t t = 0;
            for (auto x : e) t += x;
            if (t < bound) break;
            e[i] = 0;
        }
        if (i == nvars) break;
    }
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

MultiDividedPowerVector ev_star(const MultiGroupRingElement& g, std::size_t n) {
    const Ring& r = g.ring();
    const std::size_t nv = g.is_zero() ? 0 : g.terms().begin()->first.size();
    MultiDividedPowerVector v{r, nv, n, {}};
    const auto exps = exponents_below(nv, n);
    for (const auto& e : exps) v.coeffs.emplace(e, Element::zero(r));
    for (const auto& [k, c] : g.terms()) {
        if (k.size() != nv) raise(ErrorCode::ArityMismatch, "points of differing arity");
        std::vector<Element> kk;
        for (const auto& x : k) kk.push_back(embed(x, r));
        for (const auto& e : exps) {
            Element t = c;
            for (std::size_t i = 0; i < nv; ++i)
                if (e[i] > 0) t *= kk[i].pow(e[i]);
            v.coeffs.at(e) += t;
        }
    }
    return v;
}

DividedPowerVector gamma_action(const Poly& a, const DividedPowerVector& v) {
    const Ring& r = v.ring;
    DividedPowerVector out{r, v.trunc, std::vector<Element>(v.trunc, Element::zero(r)), v.valid};
    if (a.is_zero()) return out;
    const std::size_t d = static_cast<std::size_t>(a.degree());
    out.valid = v.valid > d ? v.valid - d : 0;
    for (std::size_t n = 0; n < out.valid; ++n) {
        for (std::size_t k = 0; k <= d; ++k) {
            if (a.coeffs()[k].is_zero()) continue;
            out.coeffs[n] += embed(a.coeffs()[k], r) * v.coeffs[n + k];
        }
    }
    return out;
}

GroupRingElement groupring_action(const Poly& a, const GroupRingElement& g) {
    GroupRingElement out(g.ring());
    for (const auto& [k, c] : g.terms()) out.add_term(k, c * embed(a.eval(k), g.ring()));
    return out;
}

MultiGroupRingElement groupring_action(const MPoly& a, const MultiGroupRingElement& g) {
    MultiGroupRingElement out(g.ring());
    for (const auto& [k, c] : g.terms()) out.add_term(k, c * embed(a.eval(k), g.ring()));
    return out;
}

GroupRingElement convolution(const GroupRingElement& g, const GroupRingElement& h) {
    g.check_ring(h);
    GroupRingElement out(g.ring());
    for (const auto& [a, ca] : g.terms())
        for (const auto& [b, cb] : h.terms()) out.add_term(a + b, ca * cb);
    return out;
}

MultiGroupRingElement convolution(const MultiGroupRingElement& g, const MultiGroupRingElement& h) {
    g.check_ring(h);
    MultiGroupRingElement out(g.ring());
    for (const auto& [a, ca] : g.terms()) {
        for (const auto& [b, cb] : h.terms()) {
            if (a.size() != b.size()) raise(ErrorCode::ArityMismatch, "points of differing arity");
            PointTuple s;
            s.reserve(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) s.push_back(a[i] + b[i]);
            out.add_term(s, ca * cb);
        }
    }
    return out;
}

std::size_t injectivity_witness(const GroupRingElement& g) {
    if (g.is_zero()) raise(ErrorCode::ZeroElement, "injectivity witness of the zero element");
    const auto v = ev_star(g, g.support_size());
    for (std::size_t i = 0; i < v.coeffs.size(); ++i)
        if (!v.coeffs[i].is_zero()) return i + 1;
    raise(ErrorCode::Internal, "all moments below the support size vanish");
}

MultiDividedPowerVector tensor_ev_star(const std::vector<GroupRingElement>& gs, std::size_t n) {
    if (gs.empty()) raise(ErrorCode::InvalidArgument, "tensor product needs at least one factor");
    const Ring& r = gs.front().ring();
    std::vector<DividedPowerVector> per;
    per.reserve(gs.size());
    for (const auto& g : gs) {
        g.check_ring(gs.front());
        per.push_back(ev_star(g, std::max<std::size_t>(n, 1)));
    }
    MultiDividedPowerVector out{r, gs.size(), n, {}};
    for (const auto& e : exponents_below(gs.size(), n)) {
        Element t = Element::one(r);
        for (std::size_t v = 0; v < gs.size(); ++v) t *= per[v].coeffs[e[v]];
        out.coeffs.emplace(e, std::move(t));
    }
    return out;
}

Element pair(const DividedPowerVector& v, const Poly& p) {
    if (!p.is_zero() && static_cast<std::size_t>(p.degree()) >= v.valid)
        raise(ErrorCode::WindowExhausted, "polynomial degree exceeds the valid window");
    Element acc = Element::zero(v.ring);
    for (std::size_t n = 0; n < p.coeffs().size(); ++n) acc += v.coeffs[n] * embed(p.coeffs()[n], v.ring);
    return acc;
}

}  // namespace evalg
