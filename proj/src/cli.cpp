#include "evalg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "evalg/json_io.hpp"

namespace evalg::cli {

namespace {

struct Globals {
    std::string out;
    std::size_t trunc = 0;
    std::string pair;
    std::uint64_t seed = 0;
};

// Inline JSON when the argument looks like JSON, otherwise a file path.
Json load_json(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) raise(ErrorCode::InvalidArgument, "cannot open '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return Json::parse(ss.str());
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int operator()(const std::vector<std::string>& args) {
        CLI::App app{"Exact evaluation maps, numerical functionals and density certificates", "evalg"};
        app.fallthrough();
        app.require_subcommand(1);
        app.add_option("--out", g_.out, "Write the result JSON to this file");
        app.add_option("--trunc", g_.trunc, "Truncation order N");
        app.add_option("--pair", g_.pair, "Ring pair K/L, e.g. Z/Q or Fq2/FracFq2");
        app.add_option("--seed", g_.seed, "Seed for randomized sampling");

        add_numpoly(app);
        add_functional(app);
        add_density(app);
        add_hopf(app);
        add_transform(app);
        auto* self = app.add_subcommand("selftest", "Run the embedded example fixtures");
        self->callback([this] { action_ = [this] { return selftest(out_); }; });

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out_, err_);
            return code == 0 ? kExitOk : kExitUsage;
        }
        try {
            return action_();
        } catch (const CoefficientOutsideLError& e) {
            Json w{{"error", "CoefficientOutsideL"},
                   {"message", e.what()},
                   {"level", e.level()},
                   {"index", e.index()},
                   {"alpha", to_json(e.alpha())},
                   {"points", to_json(e.points())}};
            emit(w);
            return kExitNegative;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::CoefficientOutsideL || e.code() == ErrorCode::NotFoundWithinBudget) {
                emit(Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
                return kExitNegative;
            }
            err_ << "error: " << e.what() << '\n';
            return kExitUsage;
        } catch (const Json::exception& e) {
            err_ << "error: malformed JSON: " << e.what() << '\n';
            return kExitUsage;
        } catch (const std::exception& e) {
            err_ << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }

private:
    void emit(const Json& j) {
        if (g_.out.empty()) {
            out_ << j.dump(2) << '\n';
            return;
        }
        std::ofstream f(g_.out);
        if (!f) raise(ErrorCode::InvalidArgument, "cannot write '" + g_.out + "'");
        f << j.dump(2) << '\n';
    }

    RingPair pair_or(const std::string& fallback) const { return RingPair::parse(g_.pair.empty() ? fallback : g_.pair); }
    std::size_t trunc_or(std::size_t fallback) const { return g_.trunc == 0 ? fallback : g_.trunc; }

    template <class F>
    void leaf(CLI::App* sub, F f) {
        sub->callback([this, f] { action_ = f; });
    }

    // ---- numpoly --------------------------------------------------------------

    void add_numpoly(CLI::App& app) {
        auto* grp = app.add_subcommand("numpoly", "Numerical (integer-valued) polynomials");
        grp->require_subcommand(1);

        auto* check = grp->add_subcommand("check", "Test whether a polynomial maps K into L");
        check->add_option("--poly", s_.poly, "Polynomial JSON (inline or file)")->required();
        check->add_option("--samples", n_.samples, "Extra random sample points (uses --seed)");
        leaf(check, [this] {
            const RingPair pair = pair_or("Z/Z");
            const Poly p = poly_from_json(load_json(s_.poly), pair.Lhat);
            NumericalVerdict v;
            if (pair.name() == "Z/Z") {
                v = is_numerical_ZZ(p.embed_into(Ring::rationals()));
            } else {
                auto samples = default_samples(pair.K);
                std::mt19937_64 rng(g_.seed);
                for (std::size_t i = 0; i < n_.samples; ++i) samples.push_back(random_point(pair.K, rng));
                v = is_numerical_sampled(p, pair, samples);
            }
            emit(to_json(v));
            return v.status == NumericalStatus::NotNumerical ? kExitNegative : kExitOk;
        });

        auto* family = grp->add_subcommand("family", "Explicit numerical polynomial families");
        family->add_option("--kind", s_.kind, "fpq or gaussian")->required();
        family->add_option("--p", n_.p, "Prime for the fpq family");
        family->add_option("--n", n_.n, "Family index n >= 1")->required();
        leaf(family, [this] {
            if (s_.kind == "fpq") emit(to_json(fpq_family(n_.p, static_cast<unsigned>(n_.n))));
            else if (s_.kind == "gaussian") emit(to_json(gaussian_family(static_cast<unsigned>(n_.n))));
            else raise(ErrorCode::InvalidArgument, "unknown family '" + s_.kind + "'");
            return kExitOk;
        });

        auto* dual = grp->add_subcommand("dual-coords", "Binomial dual coordinates of the point [k]");
        dual->add_option("--k", s_.k, "Integer point")->required()->allow_extra_args(false);
        leaf(dual, [this] {
            const auto c = binomial_dual_coordinates(mpz_class(s_.k), trunc_or(8));
            Json a = Json::array();
            for (const auto& x : c) a.push_back(x.get_str());
            emit(Json{{"k", s_.k}, {"coords", a}});
            return kExitOk;
        });

        auto* construct = grp->add_subcommand("construct", "Numerical polynomial from a finite quotient image");
        construct->add_option("--a", s_.a, "Non-invertible modulus in L")->required();
        construct->add_option("--reps", s_.reps, "Residue representatives; computed when omitted");
        construct->add_option("--bound", n_.bound, "Enumeration budget for the image");
        leaf(construct, [this] {
            const RingPair pair = pair_or("Z/Z");
            const Element a = parse_element(s_.a, pair.L);
            std::vector<Element> reps;
            if (!s_.reps.empty()) {
                reps = parse_element_list(s_.reps, pair.K);
            } else {
                const auto img = finite_image_size(a, pair, n_.bound);
                if (!img.finite) {
                    emit(Json{{"a", element_value(a)}, {"image", to_json(img)}});
                    return kExitNegative;
                }
                reps = img.reps;
            }
            emit(Json{{"a", element_value(a)}, {"reps", to_json(reps)}, {"poly", to_json(construct_from_quotient(a, reps))}});
            return kExitOk;
        });

        auto* diff = grp->add_subcommand("diff-op", "Apply a group-ring element as a difference operator");
        diff->add_option("--omega", s_.input, "Group-ring element JSON over Q")->required();
        diff->add_option("--poly", s_.poly, "Polynomial JSON over Q")->required();
        leaf(diff, [this] {
            const auto w = groupring_from_json(load_json(s_.input), Ring::rationals(), Ring::integers());
            const Poly p = poly_from_json(load_json(s_.poly), Ring::rationals());
            emit(to_json(difference_operator_apply(w, p)));
            return kExitOk;
        });
    }

    static Element random_point(const Ring& k, std::mt19937_64& rng) {
        std::uniform_int_distribution<long> d(-1000, 1000);
        switch (k.kind()) {
            case RingKind::GaussInt: return Element(k, Gaussian{d(rng), d(rng)});
            case RingKind::PolyFp: {
                std::uniform_int_distribution<std::uint64_t> idx(0, 1u << 12);
                return Element(k, detail::fp_from_index(idx(rng), k.prime()));
            }
            default: return Element::from_integer(k, d(rng));
        }
    }

    // ---- functional -----------------------------------------------------------

    void add_functional(CLI::App& app) {
        auto* grp = app.add_subcommand("functional", "Vandermonde functionals e_{l,omega}");
        grp->require_subcommand(1);

        auto* build = grp->add_subcommand("build-e", "The functional e_{l,omega}");
        build->add_option("--omega", s_.omega, "Points, e.g. \"[0,1,2]\"")->required();
        build->add_option("--l", n_.l, "Row index, 1-based")->required();
        leaf(build, [this] {
            const RingPair pair = pair_or("Z/Z");
            emit(to_json(build_e(PointConfig(parse_element_list(s_.omega, pair.K)), n_.l, pair.Lhat)));
            return kExitOk;
        });

        auto* check = grp->add_subcommand("check", "Membership in the numerical functionals");
        check->add_option("--input", s_.input, "Group-ring element JSON")->required();
        leaf(check, [this] {
            const RingPair pair = pair_or("Z/Z");
            const auto v = membership(groupring_from_json(load_json(s_.input), pair.Lhat, pair.K), pair);
            emit(to_json(v));
            return v.numerical ? kExitOk : kExitNegative;
        });

        auto* key = grp->add_subcommand("verify-key", "Check the triangular moment formula up to --trunc");
        key->add_option("--omega", s_.omega, "Points")->required();
        key->add_option("--l", n_.l, "Row index, 1-based")->required();
        leaf(key, [this] {
            const RingPair pair = pair_or("Z/Z");
            const PointConfig w(parse_element_list(s_.omega, pair.K));
            const auto r = verify_key_formula(w, n_.l, trunc_or(w.size() + 8), pair);
            emit(to_json(r));
            return r.ok ? kExitOk : kExitNegative;
        });

        auto* schur = grp->add_subcommand("schur", "Determinant ratio with row l replaced by power m");
        schur->add_option("--omega", s_.omega, "Points")->required();
        schur->add_option("--l", n_.l, "Row index, 1-based")->required();
        schur->add_option("--m", n_.m, "Replacement power")->required();
        leaf(schur, [this] {
            const RingPair pair = pair_or("Z/Z");
            emit(Json{{"value", to_json(schur_ratio(PointConfig(parse_element_list(s_.omega, pair.K)), n_.l, n_.m))}});
            return kExitOk;
        });

        auto* phi = grp->add_subcommand("phi", "First n moments of a functional");
        phi->add_option("--input", s_.input, "Group-ring element JSON")->required();
        phi->add_option("--n", n_.n, "Number of moments")->required();
        leaf(phi, [this] {
            const RingPair pair = pair_or("Z/Z");
            emit(Json{{"coords", to_json(phi_n(groupring_from_json(load_json(s_.input), pair.Lhat, pair.K), n_.n))}});
            return kExitOk;
        });
    }

    // ---- density --------------------------------------------------------------

    void add_density(CLI::App& app) {
        auto* grp = app.add_subcommand("density", "DS witnesses, density certificates and pair classification");
        grp->require_subcommand(1);

        auto* classify = grp->add_subcommand("classify", "Classify a ring pair");
        classify->add_option("--n", n_.n, "DS witness size");
        classify->add_option("--budget", n_.budget, "DS search budget");
        classify->add_option("--bound", n_.bound, "Quotient enumeration budget");
        leaf(classify, [this] {
            const RingPair pair = pair_or("Z/Q");
            ClassifyBudgets b;
            if (n_.n) b.ds_n = n_.n;
            b.ds_budget = n_.budget;
            b.trunc = trunc_or(b.trunc);
            b.image_bound = n_.bound;
            emit(to_json(classify_pair(pair, b)));
            return kExitOk;
        });

        auto* certify = grp->add_subcommand("certify", "Build a truncated density certificate");
        certify->add_option("--points", s_.points, "Explicit points; a DS witness is searched when omitted");
        certify->add_option("--budget", n_.budget, "DS search budget");
        leaf(certify, [this] {
            const RingPair pair = pair_or("Z/Q");
            const std::size_t n = trunc_or(16);
            const auto pts = s_.points.empty() ? ds_witness(pair, n, n_.budget).points : parse_element_list(s_.points, pair.K);
            emit(to_json(build_certificate(pair, pts, n)));
            return kExitOk;
        });

        auto* verify = grp->add_subcommand("verify", "Independently re-verify a certificate");
        verify->add_option("--input", s_.input, "Certificate JSON")->required();
        leaf(verify, [this] {
            const auto c = verify_certificate(density_certificate_from_json(load_json(s_.input)));
            emit(to_json(c));
            return c.ok ? kExitOk : kExitNegative;
        });

        auto* ds = grp->add_subcommand("ds-witness", "Points with pairwise invertible differences");
        ds->add_option("--n", n_.n, "Number of points")->required();
        ds->add_option("--budget", n_.budget, "Search budget");
        leaf(ds, [this] {
            emit(to_json(ds_witness(pair_or("Z/Q"), n_.n, n_.budget)));
            return kExitOk;
        });

        auto* image = grp->add_subcommand("image", "Image of K in L/(a)");
        image->add_option("--a", s_.a, "Modulus in L")->required();
        image->add_option("--bound", n_.bound, "Enumeration budget");
        leaf(image, [this] {
            const RingPair pair = pair_or("Z/Z");
            emit(to_json(finite_image_size(parse_element(s_.a, pair.L), pair, n_.bound)));
            return kExitOk;
        });
    }

    // ---- hopf -----------------------------------------------------------------

    TruncatedSeries series_arg(const std::string& arg) const {
        Json j = load_json(arg);
        if (!j.contains("kind") && !s_.kind.empty()) j["kind"] = s_.kind;
        if (!j.contains("depth") && n_.depth) j["depth"] = n_.depth;
        if (!j.contains("p") && n_.p && !j.contains("ring")) j["p"] = n_.p;
        if (!j.contains("ring") && !s_.ring.empty()) j["ring"] = s_.ring;
        return series_from_json(j);
    }

    HopfAlgebra algebra() const { return HopfAlgebra::parse(s_.algebra, n_.p); }

    void add_hopf(CLI::App& app) {
        auto* grp = app.add_subcommand("hopf", "Series groups, diagonals and Hopf density certificates");
        grp->require_subcommand(1);

        auto* compose = grp->add_subcommand("compose", "f o g");
        compose->add_option("--f", s_.f, "Outer series JSON")->required();
        compose->add_option("--g", s_.g, "Inner series JSON")->required();
        compose->add_option("--kind", s_.kind, "nottingham or pseries");
        compose->add_option("--depth", n_.depth, "Series depth");
        compose->add_option("--p", n_.p, "Prime for p-series");
        compose->add_option("--ring", s_.ring, "Coefficient ring");
        leaf(compose, [this] {
            emit(to_json(series_compose(series_arg(s_.f), series_arg(s_.g))));
            return kExitOk;
        });

        auto* reverse = grp->add_subcommand("reverse", "Compositional inverse");
        reverse->add_option("--f", s_.f, "Series JSON")->required();
        reverse->add_option("--kind", s_.kind, "nottingham or pseries");
        reverse->add_option("--depth", n_.depth, "Series depth");
        reverse->add_option("--p", n_.p, "Prime for p-series");
        reverse->add_option("--ring", s_.ring, "Coefficient ring");
        leaf(reverse, [this] {
            emit(to_json(series_reverse(series_arg(s_.f))));
            return kExitOk;
        });

        auto* diagonal = grp->add_subcommand("diagonal", "Coproduct of a generator");
        diagonal->add_option("--algebra", s_.algebra, "N or P")->required();
        diagonal->add_option("--p", n_.p, "Prime for P");
        diagonal->add_option("--k", n_.k, "Generator index")->required();
        diagonal->add_option("--legs", n_.legs, "Generators per tensor leg (default k)");
        leaf(diagonal, [this] {
            emit(to_json(hopf_diagonal(algebra(), n_.k, std::max(n_.k, n_.legs))));
            return kExitOk;
        });

        auto* density = grp->add_subcommand("density", "Bounded-weight density certificate");
        density->add_option("--algebra", s_.algebra, "N or P")->required();
        density->add_option("--p", n_.p, "Prime for P");
        density->add_option("--weight", n_.weight, "Weight bound D")->required();
        density->add_option("--budget", n_.budget, "DS search budget");
        leaf(density, [this] {
            const HopfAlgebra alg = algebra();
            const RingPair pair = pair_or(alg.kind == HopfAlgebra::Kind::N ? "Z/Q" : "Fq" + std::to_string(alg.p) + "/FracFq" + std::to_string(alg.p));
            emit(to_json(hopf_density_certificate(alg, pair, n_.weight, n_.budget)));
            return kExitOk;
        });

        auto* verify = grp->add_subcommand("verify", "Independently re-verify a Hopf certificate");
        verify->add_option("--input", s_.input, "Certificate JSON")->required();
        leaf(verify, [this] {
            const auto c = verify_hopf_certificate(hopf_certificate_from_json(load_json(s_.input)));
            emit(to_json(c));
            return c.ok ? kExitOk : kExitNegative;
        });

        auto* ev = grp->add_subcommand("ev-star", "Functional induced by a group-ring element of series");
        ev->add_option("--input", s_.input, "Series group-ring JSON")->required();
        ev->add_option("--algebra", s_.algebra, "N or P")->required();
        ev->add_option("--p", n_.p, "Prime for P");
        ev->add_option("--weight", n_.weight, "Weight bound D")->required();
        leaf(ev, [this] {
            emit(to_json(groupring_ev_star(algebra(), series_groupring_from_json(load_json(s_.input)), n_.weight)));
            return kExitOk;
        });
    }

    // ---- transform ------------------------------------------------------------

    void add_transform(CLI::App& app) {
        auto* grp = app.add_subcommand("transform", "Evaluation maps and their duals");
        grp->require_subcommand(1);

        auto* ev = grp->add_subcommand("ev", "Values of a polynomial at points");
        ev->add_option("--poly", s_.poly, "Polynomial JSON")->required();
        ev->add_option("--points", s_.points, "Points in K")->required();
        leaf(ev, [this] {
            const RingPair pair = pair_or("Z/Q");
            const Poly p = poly_from_json(load_json(s_.poly), pair.Lhat);
            std::vector<PointTuple> pts;
            for (auto& k : parse_element_list(s_.points, pair.K)) pts.push_back({k});
            emit(Json{{"values", to_json(ev_apply(p, pts))}});
            return kExitOk;
        });

        auto* star = grp->add_subcommand("ev-star", "Moments of a group-ring element up to --trunc");
        star->add_option("--input", s_.input, "Group-ring element JSON")->required();
        leaf(star, [this] {
            const RingPair pair = pair_or("Z/Q");
            emit(to_json(ev_star(groupring_from_json(load_json(s_.input), pair.Lhat, pair.K), trunc_or(8))));
            return kExitOk;
        });

        auto* witness = grp->add_subcommand("witness", "Least truncation detecting a nonzero element");
        witness->add_option("--input", s_.input, "Group-ring element JSON")->required();
        leaf(witness, [this] {
            const RingPair pair = pair_or("Z/Q");
            emit(Json{{"n", injectivity_witness(groupring_from_json(load_json(s_.input), pair.Lhat, pair.K))}});
            return kExitOk;
        });
    }

    struct Strings {
        std::string poly, kind, k, a, reps, input, omega, points, f, g, ring, algebra;
    } s_;
    struct Numbers {
        std::uint64_t p = 2;
        std::size_t n = 0, l = 0, m = 0, k = 0, legs = 0, depth = 0, weight = 0;
        std::size_t samples = 0, budget = 100, bound = 1000;
    } n_;

    std::ostream& out_;
    std::ostream& err_;
    Globals g_;
    std::function<int()> action_;
};

// ---- selftest fixtures -------------------------------------------------------------

using Fixture = std::pair<const char*, std::function<bool()>>;

Element zint(long n) { return Element::from_integer(Ring::integers(), n); }
Element qrat(long a, long b = 1) { return Element(Ring::rationals(), mpq_class(a, b)); }

GroupRingElement two_point(long k1, long c1n, long c1d, long k2, long c2n, long c2d) {
    GroupRingElement g(Ring::rationals());
    g.add_term(zint(k1), qrat(c1n, c1d));
    g.add_term(zint(k2), qrat(c2n, c2d));
    return g;
}

std::vector<Fixture> fixtures() {
    const Ring q = Ring::rationals();
    const Poly choose2(q, {qrat(0), qrat(-1, 2), qrat(1, 2)});
    return {
        {"binomial x(x-1)/2 is numerical with coords (0,0,1)",
         [=] {
             const auto v = is_numerical_ZZ(choose2);
             return v.status == NumericalStatus::Numerical && v.coords == std::vector<Element>{qrat(0), qrat(0), qrat(1)};
         }},
        {"quotient Z/(2) yields x(x-1)/2", [=] { return construct_from_quotient(zint(2), {zint(0), zint(1)}) == choose2; }},
        {"fpq family p=2 n=1 is (x^2-x)/(q^2-q)",
         [] {
             const Ring f = Ring::fp_rational_functions(2);
             const Element d = inverse(Element::generator(f).pow(2) - Element::generator(f));
             return fpq_family(2, 1) == Poly(f, {Element::zero(f), -d, d});
         }},
        {"fpq family p=3 n=1 is (x^3-x)/(q^3-q)",
         [] {
             const Ring f = Ring::fp_rational_functions(3);
             const Element d = inverse(Element::generator(f).pow(3) - Element::generator(f));
             return fpq_family(3, 1) == Poly(f, {Element::zero(f), -d, Element::zero(f), d});
         }},
        {"gaussian family n=2 is x(x-1)(x-i)(x-1-i)/2",
         [] {
             const Ring g = Ring::gaussian_rationals();
             const Element i = Element::generator(g), one = Element::one(g);
             Poly p = Poly::x(g) * Poly(g, {-one, one}) * Poly(g, {-i, one}) * Poly(g, {-one - i, one});
             return gaussian_family(2) == p * Element(g, GaussianRational{mpq_class(1, 2), 0});
         }},
        {"dual coordinates of [1] are (1,1,0)",
         [] { return binomial_dual_coordinates(1, 3) == std::vector<mpz_class>{1, 1, 0}; }},
        {"two-point e-basis forms for (0,1)",
         [=] {
             const PointConfig w({zint(0), zint(1)});
             return build_e(w, 1, q) == two_point(0, 1, 1, 1, 0, 1) && build_e(w, 2, q) == two_point(0, -1, 1, 1, 1, 1);
         }},
        {"two-point e-basis forms for (1,3)",
         [=] {
             const PointConfig w({zint(1), zint(3)});
             return build_e(w, 1, q) == two_point(1, 3, 2, 3, -1, 2) && build_e(w, 2, q) == two_point(1, -1, 2, 3, 1, 2);
         }},
        {"e_{l,omega} moments are unitriangular on (0,1,2)",
         [=] {
             const PointConfig w({zint(0), zint(1), zint(2)});
             for (std::size_t l = 1; l <= 3; ++l) {
                 const auto c = phi_n(build_e(w, l, q), 3);
                 for (std::size_t j = 0; j < 3; ++j)
                     if (!(c[j] == qrat(j + 1 == l ? 1 : 0))) return false;
             }
             return true;
         }},
        {"Laurent pair has DS witness (1, q, q^2)",
         [] {
             const auto pair = RingPair::make(Ring::int_poly(), Ring::laurent());
             const Element gq = Element::generator(Ring::int_poly());
             return ds_witness(pair, 3, 10).points == std::vector<Element>{gq.pow(0), gq, gq.pow(2)};
         }},
        {"image of Z in Z/(2) has two residues",
         [] { return finite_image_size(zint(2), RingPair::make(Ring::integers(), Ring::integers()), 1000).reps.size() == 2; }},
        {"Z/Z classification finds the x(x-1)/2 obstruction",
         [=] {
             const auto r = classify_pair(RingPair::make(Ring::integers(), Ring::integers()));
             return !r.contains_fraction_field && !r.ds_points && r.obstruction_poly && *r.obstruction_poly == choose2;
         }},
    };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) { return Runner(out, err)(args); }

int selftest(std::ostream& out) {
    std::size_t failed = 0;
    for (const auto& [name, check] : fixtures()) {
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception& e) {
            out << "  raised: " << e.what() << '\n';
        }
        out << (ok ? "PASS " : "FAIL ") << name << '\n';
        if (!ok) ++failed;
    }
    out << (failed == 0 ? "all fixtures passed" : std::to_string(failed) + " fixture(s) failed") << '\n';
    return failed == 0 ? kExitOk : kExitNegative;
}

}  // namespace evalg::cli
