// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "evalg/density.hpp"
#include "evalg/functionals.hpp"
#include "evalg/hopf.hpp"
#include "evalg/numerical.hpp"
#include "oracles.hpp"

using namespace evalg;
using namespace evalg::testing;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class... Parts>
void require(bool cond, const Parts&... parts) {
    if (cond) return;
    std::ostringstream os;
    (os << ... << parts);
    throw Failure(os.str());
}

const RingPair ZZ = RingPair::make(Ring::integers(), Ring::integers());
const RingPair ZQ = RingPair::make(Ring::integers(), Ring::rationals());
const RingPair F2 = RingPair::make(Ring::fp_poly(2), Ring::fp_rational_functions(2));

bool is_integer(const Element& e) { return in_subring(e, Ring::integers()).has_value(); }

// ---- 1 ---------------------------------------------------------------------

std::string binomial_basis() {
    std::vector<Poly> basis;
    for (std::size_t k = 0; k <= 20; ++k) basis.push_back(binomial_poly(k));
    for (std::size_t k = 0; k <= 20; ++k) {
        const auto v = is_numerical_ZZ(basis[k]);
        require(v.status == NumericalStatus::Numerical, "P_", k, " rejected");
        for (std::size_t j = 0; j < v.coords.size(); ++j)
            require(embed(v.coords[j], Ring::rationals()) == Element::from_integer(Ring::rationals(), j == k ? 1L : 0L), "P_", k,
                    " coords");
    }
    RandomElements rnd(1);
    for (int t = 0; t < 200; ++t) {
        std::vector<long> c(21);
        Poly f(Ring::rationals());
        for (std::size_t k = 0; k <= 20; ++k) {
            c[k] = rnd.small(-20, 20);
            f += basis[k] * Element::from_integer(Ring::rationals(), c[k]);
        }
        const auto v = is_numerical_ZZ(f);
        require(v.status == NumericalStatus::Numerical, "combination ", t, " rejected");
        for (std::size_t k = 0; k <= 20; ++k) {
            const Element expect = Element::from_integer(Ring::integers(), c[k]);
            const Element got = k < v.coords.size() ? v.coords[k] : Element::zero(Ring::integers());
            require(embed(got, Ring::rationals()) == embed(expect, Ring::rationals()), "combination ", t, " coord ", k);
        }
    }
    std::size_t rejected = 0;
    for (std::size_t k = 0; k <= 20; ++k)
        for (long m : {2, 3, 5}) {
            const Poly f = basis[k] * Element(Ring::rationals(), mpq_class(1, m));
            const auto v = is_numerical_ZZ(f);
            require(v.status == NumericalStatus::NotNumerical, "P_", k, "/", m, " accepted");
            require(v.witness_point && v.witness_index && v.witness_value, "P_", k, "/", m, " without witness");
            require(*v.witness_value == v.coords[*v.witness_index] && !is_integer(*v.witness_value), "P_", k, "/", m,
                    " witness coordinate is integral");
            const Element at = f.eval(embed(*v.witness_point, Ring::rationals()));
            require(is_integer(*v.witness_point) && !is_integer(at), "P_", k, "/", m, " witness point does not certify");
            ++rejected;
        }
    return "21 basis polys, 200 combinations, " + std::to_string(rejected) + " rejections";
}

// ---- 2 ---------------------------------------------------------------------

// Schoolbook F_p[q] arithmetic on ascending coefficient vectors.
using Dense = std::vector<std::uint64_t>;

Dense dense_trim(Dense a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Dense dense_mul(const Dense& a, const Dense& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return dense_trim(r);
}

Dense dense_sub(Dense a, const Dense& b, std::uint64_t p) {
    a.resize(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    return dense_trim(a);
}

// Division by a monic divisor; returns {quotient, remainder}.
std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& monic, std::uint64_t p) {
    const std::size_t db = monic.size() - 1;
    if (a.size() <= db) return {{}, a};
    Dense quot(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const std::uint64_t c = a[i];
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - c * monic[j] % p) % p;
    }
    a.resize(db);
    return {dense_trim(quot), dense_trim(a)};
}

std::string fpq_family_integral() {
    std::size_t checked = 0;
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}}) {
        const Poly f = fpq_family(p, n);
        const Ring frac = Ring::fp_rational_functions(p), poly = Ring::fp_poly(p);
        const std::size_t pn = ipow(p, n);
        Dense den(pn + 1, 0);
        den[pn] = 1;
        den = dense_sub(den, {0, 1}, p);
        for (std::uint64_t a0 = 0; a0 < p; ++a0)
            for (std::uint64_t a1 = 0; a1 < p; ++a1)
                for (std::uint64_t a2 = 0; a2 < p; ++a2) {
                    const Dense x = dense_trim({a0, a1, a2});
                    Dense xp{1};
                    for (std::size_t i = 0; i < pn; ++i) xp = dense_mul(xp, x, p);
                    const auto [quot, rem] = dense_divmod(dense_sub(xp, x, p), den, p);
                    require(rem.empty(), "oracle remainder nonzero");
                    const auto value = in_subring(f.eval(Element(frac, FpFraction{FpPoly{x}, FpPoly{{1}}})), poly);
                    require(value.has_value(), "f_", n, " (p=", p, ") leaves F_p[q] at ", a0, ",", a1, ",", a2);
                    require(*value == Element(poly, FpPoly{quot}), "f_", n, " (p=", p, ") disagrees with oracle");
                    ++checked;
                }
    }
    return std::to_string(checked) + " evaluations in F_p[q]";
}

// ---- 3 ---------------------------------------------------------------------

std::string gaussian_family_integral() {
    std::size_t checked = 0;
    for (unsigned n : {1u, 2u}) {
        const Poly f = gaussian_family(n);
        mpz_class fact = 1;
        for (unsigned j = 2; j <= n; ++j) fact *= j;
        for (long a = -5; a <= 5; ++a)
            for (long b = -5; b <= 5; ++b) {
                mpz_class re = 1, im = 0;
                for (unsigned s = 0; s < n; ++s)
                    for (unsigned t = 0; t < n; ++t) {
                        const mpz_class xr = a - static_cast<long>(s), xi = b - static_cast<long>(t);
                        const mpz_class nr = re * xr - im * xi, ni = re * xi + im * xr;
                        re = nr;
                        im = ni;
                    }
                require(mpz_divisible_p(re.get_mpz_t(), fact.get_mpz_t()) && mpz_divisible_p(im.get_mpz_t(), fact.get_mpz_t()),
                        "oracle not divisible");
                const Element x(Ring::gaussian_rationals(), GaussianRational{mpq_class(a), mpq_class(b)});
                const auto value = in_subring(f.eval(x), Ring::gaussian_integers());
                require(value.has_value(), "f_", n, " leaves Z[i] at ", a, "+", b, "i");
                const Element expect(Ring::gaussian_integers(), Gaussian{re / fact, im / fact});
                require(*value == expect, "f_", n, " disagrees with oracle at ", a, "+", b, "i");
                ++checked;
            }
    }
    return std::to_string(checked) + " evaluations in Z[i]";
}

// ---- 4 ---------------------------------------------------------------------

void check_key_formula(const std::vector<Element>& pts, const RingPair& pair) {
    const PointConfig w(pts);
    const std::size_t n = pts.size(), trunc = n + 8;
    for (std::size_t l = 1; l <= n; ++l) {
        const auto report = verify_key_formula(w, l, trunc, pair);
        require(report.ok, pair.name(), " l=", l, " n=", n, " key formula fails");
        const auto e = build_e(w, l, pair.Lhat);
        for (std::size_t m = 0; m < trunc; ++m) {
            const Element mom = moment(e, m);
            require(report.table.size() == trunc && report.table[m] == mom, pair.name(), " table mismatch at ", m);
            if (m < n) {
                require(m + 1 == l ? mom.is_one() : mom.is_zero(), pair.name(), " not triangular at ", m);
                continue;
            }
            const Element ratio = schur_ratio(w, l, m);
            require(in_subring(ratio, pair.L).has_value(), pair.name(), " Schur ratio outside L");
            require(embed(ratio, pair.Lhat) == schur_oracle(pts, l, m, pair.Lhat), pair.name(), " Schur ratio mismatch");
            require(mom == embed(ratio, pair.Lhat), pair.name(), " moment ", m, " differs from Schur ratio");
        }
    }
}

std::string key_formula() {
    RandomElements rnd(4);
    for (int t = 0; t < 50; ++t) check_key_formula(distinct(rnd, Ring::integers(), rnd.small(1, 4)), ZZ);
    const Ring zi = Ring::gaussian_integers();
    const auto ZiZi = RingPair::make(zi, zi);
    check_key_formula({Element::zero(zi), Element::one(zi), Element(zi, Gaussian{0, 1})}, ZiZi);
    check_key_formula({Element(zi, Gaussian{1, 1}), Element(zi, Gaussian{0, -1}), Element(zi, Gaussian{2, 0}),
                       Element(zi, Gaussian{-1, 3})},
                      ZiZi);
    const auto FF = RingPair::make(Ring::fp_poly(2), Ring::fp_poly(2));
    const Ring f2 = Ring::fp_poly(2);
    check_key_formula({Element(f2, FpPoly{}), Element(f2, FpPoly{{1}}), Element(f2, FpPoly{{0, 1}})}, FF);
    check_key_formula({Element(f2, FpPoly{{0, 1}}), Element(f2, FpPoly{{1, 1}}), Element(f2, FpPoly{{0, 0, 1}}),
                       Element(f2, FpPoly{{1, 0, 1}})},
                      FF);
    return "50 integer configs, 2 Gaussian, 2 over F_2[q]";
}

// ---- 5 ---------------------------------------------------------------------

std::string two_point_forms() {
    const Ring zi = Ring::gaussian_integers();
    const std::vector<std::pair<Element, Element>> cases{
        {Element::from_integer(Ring::integers(), 0), Element::from_integer(Ring::integers(), 1)},
        {Element::from_integer(Ring::integers(), 1), Element::from_integer(Ring::integers(), 3)},
        {Element(zi, Gaussian{0, 1}), Element(zi, Gaussian{1, 1})}};
    for (const auto& [k1, k2] : cases) {
        const Ring lhat = *k1.ring().fraction_field();
        const Element a = embed(k1, lhat), b = embed(k2, lhat);
        GroupRingElement e1(lhat), e2(lhat);
        e1.add_term(k1, b * inverse(b - a));
        e1.add_term(k2, a * inverse(a - b));
        e2.add_term(k1, inverse(a - b));
        e2.add_term(k2, inverse(b - a));
        const PointConfig w({k1, k2});
        require(build_e(w, 1, lhat) == e1, "e_1 differs at (", k1, ",", k2, ")");
        require(build_e(w, 2, lhat) == e2, "e_2 differs at (", k1, ",", k2, ")");
    }
    return "(0,1), (1,3), (i,1+i)";
}

// ---- 6 ---------------------------------------------------------------------

std::string density_certificates() {
    const auto laurent = RingPair::make(Ring::int_poly(), Ring::laurent(64));
    for (const auto& [pair, trunc] : std::vector<std::pair<RingPair, std::size_t>>{{ZQ, 16}, {F2, 8}, {laurent, 6}}) {
        const auto pts = ds_witness(pair, trunc, 100).points;
        const auto cert = build_certificate(pair, pts, trunc);
        require(verify_certificate(cert).ok, pair.name(), " certificate rejected");
        require(density_unitriangular(cert), pair.name(), " moments not unitriangular");
        auto tampered = cert;
        tampered.matrix[trunc - 1][0] = tampered.matrix[trunc - 1][0] + Element::one(pair.Lhat);
        require(!verify_certificate(tampered).ok, pair.name(), " tampering undetected");
    }
    return "Z/Q N=16, F_2[q]/F_2(q) N=8, Z[q]/Z((q)) N=6";
}

// ---- 7 ---------------------------------------------------------------------

std::string integer_obstruction() {
    RandomElements rnd(7);
    for (int t = 0; t < 50; ++t) {
        std::vector<Element> pts;
        while (pts.size() < 3) {
            const Element k = Element::from_integer(Ring::integers(), rnd.small(-50, 50));
            if (std::find(pts.begin(), pts.end(), k) == pts.end()) pts.push_back(k);
        }
        bool raised = false;
        try {
            build_certificate(ZZ, pts, 3);
        } catch (const CoefficientOutsideLError& e) {
            raised = !in_subring(e.alpha(), Ring::integers()).has_value();
        }
        require(raised, "triple ", t, " did not fail with a non-integral coefficient");
    }
    const auto report = classify_pair(ZZ);
    require(report.obstruction_modulus && *report.obstruction_modulus == Element::from_integer(Ring::integers(), 2),
            "obstruction modulus is not 2");
    require(report.obstruction_image && report.obstruction_image->finite && report.obstruction_image->reps.size() == 2,
            "image size is not 2");
    require(report.obstruction_poly && report.obstruction_poly->embed_into(Ring::rationals()) == binomial_poly(2),
            "obstruction polynomial is not x(x-1)/2");
    require(finite_image_size(Element::from_integer(Ring::integers(), 2), ZZ, 1000).reps.size() == 2, "image size");

    bool exhausted = false;
    try {
        ds_witness(ZZ, 3, 50);
    } catch (const Error& e) {
        exhausted = e.code() == ErrorCode::NotFoundWithinBudget;
    }
    require(exhausted, "DS search for n=3 did not report exhaustion");
    for (long a = -50; a <= 50; ++a)
        for (long b = a + 1; b <= 50; ++b)
            for (long c = b + 1; c <= 50; ++c)
                require(!(b - a == 1 && c - b == 1 && c - a == 1), "oracle found unit differences");
    return "50 triples, modulus 2 with image size 2, DS exhausted for |k| <= 50";
}

// ---- 8 ---------------------------------------------------------------------

std::string monomorphism() {
    RandomElements rnd(8);
    const Ring zi = Ring::gaussian_integers(), qi = Ring::gaussian_rationals();
    std::size_t max_n = 0;
    for (int t = 0; t < 500; ++t) {
        const auto s = static_cast<std::size_t>(rnd.small(1, 6));
        const auto pts = distinct(rnd, zi, s);
        GroupRingElement g(qi);
        std::size_t expect = 0;
        if (t % 2 == 0) {
            for (const auto& k : pts) g.add_term(k, rnd.nonzero(qi));
        } else {
            // e_l has vanishing moments below l-1, which pushes the witness to l.
            expect = static_cast<std::size_t>(rnd.small(1, static_cast<long>(s)));
            g = build_e(PointConfig(pts), expect, qi) * rnd.nonzero(qi);
        }
        const std::size_t n = injectivity_witness(g);
        require(n >= 1 && n <= g.support_size(), "element ", t, " witness ", n, " exceeds support ", g.support_size());
        require(!moment(g, n - 1).is_zero(), "element ", t, " moment at witness vanishes");
        for (std::size_t m = 0; m + 1 < n; ++m) require(moment(g, m).is_zero(), "element ", t, " witness not least");
        require(expect == 0 || n == expect, "element ", t, " expected witness ", expect, " got ", n);
        max_n = std::max(max_n, n);
    }
    return "500 elements, largest witness N=" + std::to_string(max_n);
}

// ---- 9 ---------------------------------------------------------------------

GroupRingElement point_difference(long k, const mpq_class& scale) {
    GroupRingElement f(Ring::rationals());
    f.add_term(Element::from_integer(Ring::integers(), k), Element(Ring::rationals(), scale));
    f.add_term(Element::zero(Ring::integers()), Element(Ring::rationals(), -scale));
    return f;
}

std::string functional_membership() {
    const auto d = membership(point_difference(1, 1), ZZ);
    require(d.numerical && d.coords == std::vector<Element>{Element::zero(Ring::integers()), Element::one(Ring::integers())},
            "[1]-[0] coords are not (0,1)");
    for (long k = 1; k <= 10; ++k)
        require(membership(point_difference(k, mpq_class(1, k)), ZZ).numerical, "([", k, "]-[0])/", k, " rejected");
    const auto third = point_difference(1, mpq_class(1, 3));
    const auto bad = membership(third, ZZ);
    require(!bad.numerical && bad.witness_index && bad.witness_value, "([1]-[0])/3 accepted");
    require(phi_n(third, *bad.witness_index + 1)[*bad.witness_index] == *bad.witness_value &&
                !is_integer(*bad.witness_value),
            "witness does not certify");

    RandomElements rnd(9);
    int done = 0;
    while (done < 100) {
        auto pts = distinct(rnd, Ring::integers(), rnd.small(1, 4));
        std::sort(pts.begin(), pts.end());
        const PointConfig w(pts);
        std::vector<Element> c;
        GroupRingElement f(Ring::rationals());
        for (std::size_t l = 1; l <= pts.size(); ++l) {
            c.push_back(Element::from_integer(Ring::integers(), rnd.small(-9, 9)));
            f += build_e(w, l, Ring::rationals()) * embed(c.back(), Ring::rationals());
        }
        if (f.support_size() != pts.size()) continue;
        const auto v = membership(f, ZZ);
        require(v.numerical, "combination ", done, " rejected");
        require(v.coords == c, "combination ", done, " coords differ");
        require(reconstruct(PointConfig(v.omega), v.coords, Ring::rationals()) == f, "combination ", done, " not reconstructed");
        ++done;
    }
    return "examples plus 100 reconstructions";
}

// ---- 10 --------------------------------------------------------------------

std::string hopf_layer() {
    RandomElements rnd(10);
    for (const auto& [kind, ring] : std::vector<std::pair<SeriesKind, Ring>>{{SeriesKind::Nottingham, Ring::rationals()},
                                                                             {SeriesKind::Nottingham, Ring::fp_rational_functions(2)},
                                                                             {SeriesKind::PSeries, Ring::fp_rational_functions(2)}}) {
        const auto id = TruncatedSeries::identity(kind, ring, 8);
        for (int t = 0; t < 3; ++t) {
            const auto f = random_series(rnd, kind, ring, 8), g = random_series(rnd, kind, ring, 8),
                       h = random_series(rnd, kind, ring, 8);
            require(series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h)), "associativity");
            require(series_compose(f, series_reverse(f)) == id && series_compose(series_reverse(f), f) == id, "inverse");
            require(series_compose(id, f) == f && series_compose(f, id) == f, "identity");
        }
    }
    const auto n = HopfAlgebra::nottingham();
    for (int t = 0; t < 5; ++t) {
        const auto f = random_series(rnd, SeriesKind::Nottingham, Ring::rationals(), 6);
        const auto g = random_series(rnd, SeriesKind::Nottingham, Ring::rationals(), 6);
        const auto fg = compose_oracle(f, g);
        for (std::size_t k = 1; k <= 6; ++k)
            require(hopf_diagonal(n, k, 6).eval(concat(f.coeffs(), g.coeffs())) == fg.coeff(k), "N duality at k=", k);
    }
    for (std::uint64_t p : {2u, 3u}) {
        const auto alg = HopfAlgebra::steenrod(p);
        const Ring r = Ring::fp_rational_functions(p);
        const std::size_t dense = p == 2 ? 3 : 2;
        for (int t = 0; t < 3; ++t) {
            const auto f = random_series(rnd, SeriesKind::PSeries, r, 3), g = random_series(rnd, SeriesKind::PSeries, r, 3);
            const auto pt = concat(f.coeffs(), g.coeffs());
            const auto fg = series_compose(f, g);
            for (std::size_t k = 1; k <= 3; ++k) require(hopf_diagonal(alg, k, 3).eval(pt) == fg.coeff(k), "P", p, " duality n=", k);
            // dense substitution is cheap enough up to x^{p^dense}
            std::vector<Element> fc(f.coeffs().begin(), f.coeffs().begin() + dense),
                gc(g.coeffs().begin(), g.coeffs().begin() + dense);
            const TruncatedSeries fs(SeriesKind::PSeries, r, fc), gs(SeriesKind::PSeries, r, gc);
            require(series_compose(fs, gs) == compose_oracle(fs, gs), "P", p, " composition differs from substitution");
        }
        require(coassociative(alg, 3) && counital(alg, 3), "P", p, " coassociativity or counit");
    }
    require(coassociative(n, 6) && counital(n, 6), "N coassociativity or counit");

    const auto p2 = HopfAlgebra::steenrod(2);
    for (std::size_t bound = 1; bound <= 4; ++bound)
        for (int t = 0; t < 3; ++t) {
            const auto g = random_group_element(rnd, SeriesKind::Nottingham, Ring::integers(), Ring::rationals(), 3);
            const auto h = random_group_element(rnd, SeriesKind::Nottingham, Ring::integers(), Ring::rationals(), 3);
            require(groupring_ev_star(n, series_convolution(g, h), bound) ==
                        functional_convolution(groupring_ev_star(n, g, bound), groupring_ev_star(n, h, bound)),
                    "N ev* not multiplicative at D=", bound);
            const auto a = random_group_element(rnd, SeriesKind::PSeries, Ring::fp_poly(2), Ring::fp_rational_functions(2), 2);
            const auto b = random_group_element(rnd, SeriesKind::PSeries, Ring::fp_poly(2), Ring::fp_rational_functions(2), 2);
            require(groupring_ev_star(p2, series_convolution(a, b), bound) ==
                        functional_convolution(groupring_ev_star(p2, a, bound), groupring_ev_star(p2, b, bound)),
                    "P2 ev* not multiplicative at D=", bound);
        }
    return "group axioms, duality, coassociativity, counit, multiplicativity";
}

// ---- 11 --------------------------------------------------------------------

std::string hopf_density() {
    const auto nc = hopf_density_certificate(HopfAlgebra::nottingham(), ZQ, 4);
    const auto pc = hopf_density_certificate(HopfAlgebra::steenrod(2), F2, 4);
    require(nc.monomials.size() == 7 && pc.monomials.size() == 5, "unexpected monomial counts");
    for (const auto* cert : {&nc, &pc}) {
        require(hopf_gram_unitriangular(*cert), cert->alg.name(), " Gram recompute fails");
        require(verify_hopf_certificate(*cert).ok, cert->alg.name(), " certificate rejected");
    }
    return "N over Z/Q: 7 monomials, P(2) over F_2[q]/F_2(q): 5 monomials";
}

// ---- 12 --------------------------------------------------------------------

std::string dual_coordinates() {
    constexpr std::size_t d = 12;
    for (long k = -1; k <= 10; ++k) {
        const auto coords = binomial_dual_coordinates(k, d);
        require(coords.size() == d, "length");
        for (std::size_t j = 0; j < d; ++j) {
            mpz_class expect;
            if (k >= 0) mpz_bin_ui(expect.get_mpz_t(), mpz_class(k).get_mpz_t(), j);
            else expect = j % 2 ? -1 : 1;
            require(coords[j] == expect, "k=", k, " j=", j);
            require(binomial_poly(j).eval(Element::from_integer(Ring::rationals(), k)) == Element(Ring::rationals(), mpq_class(expect)),
                    "P_", j, "(", k, ") mismatch");
        }
    }
    return "k in 0..10 and k=-1, 12 coordinates each";
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<std::string()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "binomial basis is numerical", 1, binomial_basis},
        {2, "F_p[q] family integral on small degrees", 1, fpq_family_integral},
        {3, "Gaussian family integral on box", 1, gaussian_family_integral},
        {4, "key formula and integral Schur ratios", 0, key_formula},
        {5, "two-point closed forms", 0, two_point_forms},
        {6, "density certificates", 5, density_certificates},
        {7, "integer obstruction", 0, integer_obstruction},
        {8, "ev* injective with small witness", 0, monomorphism},
        {9, "functional membership", 0, functional_membership},
        {10, "composition Hopf layer", 10, hopf_layer},
        {11, "Hopf density certificates", 10, hopf_density},
        {12, "binomial dual coordinates", 0, dual_coordinates},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.budget_seconds > 0 && secs >= c.budget_seconds) {
            ok = false;
            detail += "; over time budget";
        }
        failed += !ok;
        std::printf("%s %2d %s: %s (%.3f s)\n", ok ? "PASS" : "FAIL", c.id, c.name, detail.c_str(), secs);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
    return failed == 0 && total < 60 ? 0 : 1;
}
