#include "evalg/hopf.hpp"

#include <algorithm>

namespace evalg {

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

void require_same_shape(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.kind() != g.kind() || !(f.ring() == g.ring()) || f.depth() != g.depth())
        raise(ErrorCode::KindMismatch, "series differ in kind, ring or depth");
}

// Dense truncated product in R[t], degrees <= top.
std::vector<Element> dense_mul(const std::vector<Element>& a, const std::vector<Element>& b, std::size_t top,
                               const Ring& r) {
    std::vector<Element> out(top + 1, Element::zero(r));
    for (std::size_t i = 0; i < a.size() && i <= top; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= top; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Polynomial in t with multivariate coefficients, truncated above degree `top`.
using SymSeries = std::map<std::uint64_t, MPoly>;

SymSeries sym_mul(const SymSeries& a, const SymSeries& b, std::uint64_t top) {
    SymSeries out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            if (ea + eb > top) break;
            MPoly prod = ca * cb;
            auto it = out.find(ea + eb);
            if (it == out.end()) out.emplace(ea + eb, std::move(prod));
            else it->second += prod;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::vector<std::string> leg_vars(std::size_t legs) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= legs; ++i) v.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= legs; ++i) v.push_back("y" + std::to_string(i));
    return v;
}

MPoly coefficient_at(const SymSeries& s, std::uint64_t e, const Ring& r, const std::vector<std::string>& vars) {
    auto it = s.find(e);
    return it == s.end() ? MPoly(r, vars) : it->second;
}

// Integer or F_p coefficient mapped into an arbitrary ring through its integer value.
Element coerce_scalar(const Element& c, const Ring& target) {
    if (c.ring().kind() == RingKind::Int) return Element::from_integer(target, c.as<mpz_class>());
    if (c.ring().kind() == RingKind::Fp) return Element::from_integer(target, mpz_class(c.as<std::uint64_t>()));
    return embed(c, target);
}

void check_window(const Element& e) {
    if (e.ring().kind() == RingKind::Laurent && laurent_window(e) < 1)
        raise(ErrorCode::WindowExhausted, "entry " + e.to_string() + " carries no constant-term information");
}

}  // namespace

std::string_view to_string(SeriesKind k) noexcept {
    return k == SeriesKind::Nottingham ? "nottingham" : "pseries";
}

// ---- TruncatedSeries ---------------------------------------------------------------

TruncatedSeries::TruncatedSeries(SeriesKind kind, Ring ring, std::vector<Element> coeffs)
    : kind_(kind), ring_(ring), coeffs_(std::move(coeffs)) {
    if (kind_ == SeriesKind::PSeries && ring_.characteristic() == 0)
        raise(ErrorCode::KindMismatch, "p-series need a coefficient ring of positive characteristic");
    for (auto& c : coeffs_) c = embed(c, ring_);
}

TruncatedSeries TruncatedSeries::identity(SeriesKind kind, const Ring& ring, std::size_t depth) {
    return TruncatedSeries(kind, ring, std::vector<Element>(depth, Element::zero(ring)));
}

Element TruncatedSeries::coeff(std::size_t i) const {
    if (i == 0) return Element::one(ring_);
    if (i > coeffs_.size()) raise(ErrorCode::DepthExceeded, "coefficient index beyond series depth");
    return coeffs_[i - 1];
}

TruncatedSeries TruncatedSeries::embed_into(const Ring& target) const {
    std::vector<Element> c;
    for (const auto& x : coeffs_) c.push_back(embed(x, target));
    return TruncatedSeries(kind_, target, std::move(c));
}

std::string TruncatedSeries::to_string() const {
    const bool n = kind_ == SeriesKind::Nottingham;
    std::string out = n ? "t" : "x";
    for (std::size_t i = 1; i <= coeffs_.size(); ++i) {
        if (coeffs_[i - 1].is_zero()) continue;
        const std::string mono = n ? "t^" + std::to_string(i + 1) : "x^" + std::to_string(ipow(prime(), i));
        const std::string c = coeffs_[i - 1].to_string();
        out += " + " + (c == "1" ? mono : "(" + c + ")*" + mono);
    }
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.kind_ == b.kind_ && a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (!(a.ring_ == b.ring_)) return a.ring_ < b.ring_;
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_shape(f, g);
    const Ring& r = f.ring();
    const std::size_t depth = f.depth();
    std::vector<Element> out;
    out.reserve(depth);
    if (f.kind() == SeriesKind::Nottingham) {
        // f(g(t)) = sum_i x_i(f) g(t)^{i+1}, degrees up to depth + 1.
        const std::size_t top = depth + 1;
        std::vector<Element> gt(top + 1, Element::zero(r));
        gt[1] = Element::one(r);
        for (std::size_t i = 1; i <= depth; ++i) gt[i + 1] = g.coeff(i);
        std::vector<Element> acc(top + 1, Element::zero(r));
        std::vector<Element> power = gt;
        for (std::size_t i = 0; i <= depth; ++i) {
            const Element c = f.coeff(i);
            if (!c.is_zero())
                for (std::size_t d = 0; d <= top; ++d) acc[d] += c * power[d];
            if (i < depth) power = dense_mul(power, gt, top, r);
        }
        for (std::size_t i = 1; i <= depth; ++i) out.push_back(acc[i + 1]);
    } else {
        // Additivity in characteristic p: (a∘b)_k = sum_{i+j=k} a_i b_j^{p^i}.
        const std::uint64_t p = f.prime();
        for (std::size_t k = 1; k <= depth; ++k) {
            Element c = Element::zero(r);
            for (std::size_t i = 0; i <= k; ++i) c += f.coeff(i) * g.coeff(k - i).pow(ipow(p, i));
            out.push_back(c);
        }
    }
    return TruncatedSeries(f.kind(), r, std::move(out));
}

TruncatedSeries series_reverse(const TruncatedSeries& f) {
    // Coefficient k of f∘g is g_k plus terms in g_1..g_{k-1}.
    TruncatedSeries g = TruncatedSeries::identity(f.kind(), f.ring(), f.depth());
    std::vector<Element> gc(f.depth(), Element::zero(f.ring()));
    for (std::size_t k = 1; k <= f.depth(); ++k) {
        const Element c = series_compose(f, TruncatedSeries(f.kind(), f.ring(), gc)).coeffs()[k - 1];
        gc[k - 1] = -c;
    }
    return TruncatedSeries(f.kind(), f.ring(), std::move(gc));
}

// ---- HopfAlgebra -------------------------------------------------------------------

HopfAlgebra HopfAlgebra::steenrod(std::uint64_t p) {
    if (!detail::is_prime(p)) raise(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    return {Kind::P, p};
}

HopfAlgebra HopfAlgebra::parse(std::string_view name, std::uint64_t p) {
    if (name == "N" || name == "n" || name == "nottingham") return nottingham();
    if (name == "P" || name == "p" || name == "steenrod") return steenrod(p);
    raise(ErrorCode::ParseError, "unknown algebra '" + std::string(name) + "'");
}

std::uint64_t HopfAlgebra::weight(std::size_t i) const { return kind == Kind::N ? i : ipow(p, i) - 1; }

std::uint64_t HopfAlgebra::weight(const Exponents& e) const {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += weight(i + 1) * e[i];
    return w;
}

std::size_t HopfAlgebra::generators_below(std::size_t bound) const {
    std::size_t g = 0;
    while (weight(g + 1) < bound) ++g;
    return g;
}

std::size_t HopfAlgebra::depth_for(std::size_t bound) const {
    if (kind == Kind::N) return bound == 0 ? 0 : bound - 1;
    std::size_t g = 0;
    while (ipow(p, g) < bound) ++g;
    return g;
}

bool HopfAlgebra::depth_supports(std::size_t depth, std::size_t bound) const {
    return kind == Kind::N ? bound <= depth + 1 : bound <= ipow(p, depth);
}

Ring HopfAlgebra::coefficient_ring() const { return kind == Kind::N ? Ring::integers() : Ring::prime_field(p); }

std::string HopfAlgebra::name() const { return kind == Kind::N ? "N" : "P(" + std::to_string(p) + ")"; }

std::vector<Exponents> monomials_below(const HopfAlgebra& alg, std::size_t bound) {
    std::vector<Exponents> out;
    if (bound == 0) return out;
    const std::size_t g = alg.generators_below(bound);
    Exponents e(g, 0);
    // Odometer over exponent vectors of weight < bound.
    for (;;) {
        out.push_back(e);
        std::size_t i = 0;
        for (; i < g; ++i) {
            ++e[i];
            if (alg.weight(e) < bound) break;
            e[i] = 0;
        }
        if (i == g) break;
    }
    std::sort(out.begin(), out.end(), [&](const Exponents& a, const Exponents& b) {
        const auto wa = alg.weight(a), wb = alg.weight(b);
        if (wa != wb) return wa < wb;
        return a > b;
    });
    return out;
}

// ---- diagonals ---------------------------------------------------------------------

MPoly nottingham_diagonal(std::size_t k, std::size_t legs) {
    if (k < 1 || k > legs) raise(ErrorCode::InvalidArgument, "generator index must lie in 1..legs");
    const Ring z = Ring::integers();
    const auto vars = leg_vars(legs);
    const std::uint64_t top = k + 1;
    // Inner series g(t) = t + y_1 t^2 + ... with formal coefficients.
    SymSeries g;
    g.emplace(1, MPoly::constant(Element::one(z), vars));
    for (std::size_t j = 1; j <= k; ++j) g.emplace(j + 1, MPoly::variable(z, vars, legs + j - 1));
    MPoly result(z, vars);
    SymSeries power = g;
    for (std::size_t i = 0; i <= k; ++i) {
        const MPoly xi = i == 0 ? MPoly::constant(Element::one(z), vars) : MPoly::variable(z, vars, i - 1);
        result += xi * coefficient_at(power, top, z, vars);
        if (i < k) power = sym_mul(power, g, top);
    }
    return result;
}

MPoly steenrod_diagonal(std::size_t n, std::uint64_t p, std::size_t legs) {
    if (n < 1 || n > legs) raise(ErrorCode::InvalidArgument, "generator index must lie in 1..legs");
    const Ring fp = Ring::prime_field(p);
    const auto vars = leg_vars(legs);
    const std::uint64_t top = ipow(p, n);
    SymSeries g;
    g.emplace(1, MPoly::constant(Element::one(fp), vars));
    for (std::size_t j = 1; j <= n; ++j) g.emplace(ipow(p, j), MPoly::variable(fp, vars, legs + j - 1));
    MPoly result(fp, vars);
    SymSeries power = g;  // g^{p^i}
    for (std::size_t i = 0; i <= n; ++i) {
        const MPoly xi = i == 0 ? MPoly::constant(Element::one(fp), vars) : MPoly::variable(fp, vars, i - 1);
        result += xi * coefficient_at(power, top, fp, vars);
        if (i < n) {
            SymSeries next = power;
            for (std::uint64_t r = 1; r < p; ++r) next = sym_mul(next, power, top);
            power = std::move(next);
        }
    }
    return result;
}

MPoly hopf_diagonal(const HopfAlgebra& alg, std::size_t k, std::size_t legs) {
    return alg.kind == HopfAlgebra::Kind::N ? nottingham_diagonal(k, legs) : steenrod_diagonal(k, alg.p, legs);
}

// ---- pairings and functionals ------------------------------------------------------

Element point_pairing(const TruncatedSeries& s, const Exponents& mono) {
    Element acc = Element::one(s.ring());
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (i + 1 > s.depth())
            raise(ErrorCode::DepthExceeded, "monomial uses x_" + std::to_string(i + 1) + " beyond series depth " +
                                                std::to_string(s.depth()));
        acc *= s.coeff(i + 1).pow(mono[i]);
    }
    return acc;
}

SeriesGroupRing series_convolution(const SeriesGroupRing& g, const SeriesGroupRing& h) {
    g.check_ring(h);
    SeriesGroupRing out(g.ring());
    for (const auto& [f, cf] : g.terms())
        for (const auto& [k, ck] : h.terms()) out.add_term(series_compose(f, k), cf * ck);
    return out;
}

Element DualFunctional::at(const Exponents& e) const {
    if (auto it = values.find(e); it != values.end()) return it->second;
    // Keys may be padded to different generator counts.
    const auto trimmed = [](const Exponents& x) {
        auto end = x.end();
        while (end != x.begin() && *(end - 1) == 0) --end;
        return Exponents(x.begin(), end);
    };
    const Exponents key = trimmed(e);
    for (const auto& [k, v] : values)
        if (trimmed(k) == key) return v;
    return Element::zero(ring);
}

bool operator==(const DualFunctional& a, const DualFunctional& b) {
    if (!(a.alg == b.alg) || a.bound != b.bound || !(a.ring == b.ring)) return false;
    for (const auto& e : monomials_below(a.alg, a.bound))
        if (!(a.at(e) == b.at(e))) return false;
    return true;
}

DualFunctional groupring_ev_star(const HopfAlgebra& alg, const SeriesGroupRing& g, std::size_t bound) {
    DualFunctional out{alg, bound, g.ring(), {}};
    const auto monos = monomials_below(alg, bound);
    for (const auto& [s, c] : g.terms()) {
        if (s.kind() != alg.series_kind()) raise(ErrorCode::KindMismatch, "point kind does not match " + alg.name());
        if (alg.kind == HopfAlgebra::Kind::P && s.prime() != alg.p)
            raise(ErrorCode::KindMismatch, "point characteristic does not match " + alg.name());
        if (!alg.depth_supports(s.depth(), bound))
            raise(ErrorCode::DepthExceeded, "depth " + std::to_string(s.depth()) + " does not support weight bound " +
                                                std::to_string(bound));
    }
    for (const auto& e : monos) {
        Element v = Element::zero(g.ring());
        for (const auto& [s, c] : g.terms()) v += c * embed(point_pairing(s, e), g.ring());
        if (!v.is_zero()) out.values.emplace(e, std::move(v));
    }
    return out;
}

DualFunctional counit(const HopfAlgebra& alg, const Ring& ring, std::size_t bound) {
    DualFunctional out{alg, bound, ring, {}};
    if (bound > 0) out.values.emplace(Exponents(alg.generators_below(bound), 0), Element::one(ring));
    return out;
}

DualFunctional functional_convolution(const DualFunctional& phi, const DualFunctional& psi) {
    if (!(phi.alg == psi.alg) || phi.bound != psi.bound)
        raise(ErrorCode::AlgebraMismatch, "functionals live on different algebras or weight bounds");
    if (!(phi.ring == psi.ring)) raise(ErrorCode::RingMismatch, phi.ring.name() + " vs " + psi.ring.name());
    const auto& alg = phi.alg;
    const std::size_t g = alg.generators_below(phi.bound);
    std::vector<MPoly> delta;
    for (std::size_t i = 1; i <= g; ++i) delta.push_back(hopf_diagonal(alg, i, g));
    DualFunctional out{alg, phi.bound, phi.ring, {}};
    const auto vars = leg_vars(g);
    for (const auto& m : monomials_below(alg, phi.bound)) {
        MPoly dm = MPoly::constant(Element::one(alg.coefficient_ring()), vars);
        for (std::size_t i = 0; i < g; ++i)
            if (m[i] > 0) dm = dm * delta[i].pow(m[i]);
        Element v = Element::zero(phi.ring);
        for (const auto& [e, c] : dm.terms()) {
            const Exponents left(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(g));
            const Exponents right(e.begin() + static_cast<std::ptrdiff_t>(g), e.end());
            v += coerce_scalar(c, phi.ring) * phi.at(left) * psi.at(right);
        }
        if (!v.is_zero()) out.values.emplace(m, std::move(v));
    }
    return out;
}

// ---- density certificates ----------------------------------------------------------

HopfCertificate hopf_density_certificate(const HopfAlgebra& alg, const RingPair& pair, std::size_t bound,
                                         std::size_t ds_budget) {
    if (bound == 0) raise(ErrorCode::InvalidArgument, "weight bound must be >= 1");
    if (alg.kind == HopfAlgebra::Kind::P && pair.K.characteristic() != alg.p)
        raise(ErrorCode::AlgebraMismatch, pair.K.name() + " does not have characteristic " + std::to_string(alg.p));
    HopfCertificate cert{alg, pair, bound, alg.depth_for(bound), monomials_below(alg, bound), {}, {}};
    const std::size_t g = alg.generators_below(bound);
    std::size_t top = 0;
    for (std::size_t i = 1; i <= g; ++i) top = std::max<std::size_t>(top, (bound - 1) / alg.weight(i));
    const auto points = ds_witness(pair, top + 1, ds_budget).points;
    const auto uni = build_certificate(pair, points, top + 1);

    for (const auto& e : cert.monomials) {
        // Tensor product of a_{e_1} ⊗ ... ⊗ a_{e_g}, one slot per generator.
        std::vector<std::pair<std::vector<Element>, Element>> acc{{{}, Element::one(pair.L)}};
        for (std::size_t i = 0; i < g; ++i) {
            std::vector<std::pair<std::vector<Element>, Element>> next;
            for (const auto& [slots, c] : acc) {
                for (const auto& [k, a] : uni.elements[e[i]].terms()) {
                    auto s = slots;
                    s.push_back(k);
                    next.emplace_back(std::move(s), c * a);
                }
            }
            acc = std::move(next);
        }
        SeriesGroupRing elem(pair.L);
        for (auto& [slots, c] : acc) {
            while (slots.size() < cert.depth) slots.push_back(Element::zero(pair.K));
            elem.add_term(TruncatedSeries(alg.series_kind(), pair.K, std::move(slots)), c);
        }
        const auto f = groupring_ev_star(alg, elem, bound);
        std::vector<Element> row;
        for (const auto& m : cert.monomials) row.push_back(f.at(m));
        cert.gram.push_back(std::move(row));
        cert.elements.push_back(std::move(elem));
    }
    return cert;
}

CertificateCheck verify_hopf_certificate(const HopfCertificate& cert) {
    CertificateCheck res;
    const std::size_t n = cert.monomials.size();
    if (cert.elements.size() != n || cert.gram.size() != n) {
        res.failure = {std::min(cert.elements.size(), cert.gram.size()), 0};
        return res;
    }
    const auto expected = monomials_below(cert.alg, cert.bound);
    if (expected != cert.monomials) {
        res.failure = {0, 0};
        return res;
    }
    for (std::size_t r = 0; r < n; ++r) {
        const Ring& ring = cert.elements[r].ring();
        for (std::size_t c = 0; c < n; ++c) {
            Element v = Element::zero(ring);
            for (const auto& [s, coef] : cert.elements[r].terms()) {
                if (!cert.alg.depth_supports(s.depth(), cert.bound)) raise(ErrorCode::DepthExceeded, "certificate point too shallow");
                v += coef * embed(point_pairing(s, cert.monomials[c]), ring);
            }
            if (c <= r) {
                const Element diff = v - (c == r ? Element::one(ring) : Element::zero(ring));
                check_window(diff);
                if (!diff.is_zero()) {
                    res.failure = {r, c};
                    return res;
                }
            }
            if (cert.gram[r].size() != n || !(cert.gram[r][c] == v)) {
                res.failure = {r, c};
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

}  // namespace evalg
