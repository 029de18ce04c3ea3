// Values cross the boundary as JSON text; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "evalg/cli.hpp"
#include "evalg/json_io.hpp"

namespace py = pybind11;
using namespace evalg;

namespace {

std::string dump(const Json& j) { return j.dump(); }
Json load(const std::string& text) { return Json::parse(text); }

std::vector<Element> elements(const std::string& json, const Ring& ring) { return elements_from_json(load(json), ring); }

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact numerical polynomials, evaluation duality and density certificates.";

    static py::exception<Error> error(m, "EvalgError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetObject(error.ptr(), py::make_tuple(std::string(to_string(e.code())), std::string(e.what())).ptr());
        } catch (const nlohmann::json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("run_cli", &run_cli, py::arg("args"), "Runs one CLI invocation; returns (exit_code, stdout, stderr).");

    m.def("parse_element", [](const std::string& text, const std::string& ring) {
        return dump(to_json(parse_element(text, Ring::parse(ring))));
    });

    m.def("is_numerical_zz", [](const std::string& poly) {
        return dump(to_json(is_numerical_ZZ(poly_from_json(load(poly), Ring::rationals()))));
    });
    m.def("is_numerical_sampled", [](const std::string& poly, const std::string& pair, const std::string& samples) {
        const auto rp = RingPair::parse(pair);
        const auto pts = load(samples).empty() ? default_samples(rp.K) : elements(samples, rp.K);
        return dump(to_json(is_numerical_sampled(poly_from_json(load(poly), rp.Lhat), rp, pts)));
    });
    m.def("binomial_dual_coordinates", [](long k, std::size_t d) {
        std::vector<std::string> out;
        for (const auto& c : binomial_dual_coordinates(k, d)) out.push_back(c.get_str());
        return out;
    });
    m.def("fpq_family", [](std::uint64_t p, unsigned n) { return dump(to_json(fpq_family(p, n))); });
    m.def("gaussian_family", [](unsigned n) { return dump(to_json(gaussian_family(n))); });

    m.def("build_e", [](const std::string& omega, std::size_t l, const std::string& pair) {
        const auto rp = RingPair::parse(pair);
        return dump(to_json(build_e(PointConfig(elements(omega, rp.K)), l, rp.Lhat)));
    });
    m.def("membership", [](const std::string& f, const std::string& pair) {
        const auto rp = RingPair::parse(pair);
        return dump(to_json(membership(groupring_from_json(load(f), rp.Lhat, rp.K), rp)));
    });
    m.def("verify_key_formula", [](const std::string& omega, std::size_t l, std::size_t trunc, const std::string& pair) {
        const auto rp = RingPair::parse(pair);
        return dump(to_json(verify_key_formula(PointConfig(elements(omega, rp.K)), l, trunc, rp)));
    });

    m.def("ev_star", [](const std::string& g, std::size_t n, const std::string& pair) {
        const auto rp = RingPair::parse(pair);
        return dump(to_json(ev_star(groupring_from_json(load(g), rp.Lhat, rp.K), n)));
    });
    m.def("injectivity_witness", [](const std::string& g, const std::string& pair) {
        const auto rp = RingPair::parse(pair);
        return injectivity_witness(groupring_from_json(load(g), rp.Lhat, rp.K));
    });

    m.def("ds_witness", [](const std::string& pair, std::size_t n, std::size_t budget) {
        return dump(to_json(ds_witness(RingPair::parse(pair), n, budget)));
    });
    m.def("build_certificate", [](const std::string& pair, const std::string& points, std::size_t trunc) {
        const auto rp = RingPair::parse(pair);
        return dump(to_json(build_certificate(rp, elements(points, rp.K), trunc)));
    });
    m.def("verify_certificate", [](const std::string& cert) {
        return dump(to_json(verify_certificate(density_certificate_from_json(load(cert)))));
    });
    m.def("classify_pair", [](const std::string& pair) { return dump(to_json(classify_pair(RingPair::parse(pair)))); });

    m.def("series_compose", [](const std::string& f, const std::string& g) {
        return dump(to_json(series_compose(series_from_json(load(f)), series_from_json(load(g)))));
    });
    m.def("series_reverse", [](const std::string& f) { return dump(to_json(series_reverse(series_from_json(load(f))))); });
    m.def("hopf_diagonal", [](const std::string& alg, std::uint64_t p, std::size_t k, std::size_t legs) {
        return dump(to_json(hopf_diagonal(HopfAlgebra::parse(alg, p), k, legs)));
    });
    m.def("hopf_density_certificate", [](const std::string& alg, std::uint64_t p, const std::string& pair, std::size_t weight) {
        return dump(to_json(hopf_density_certificate(HopfAlgebra::parse(alg, p), RingPair::parse(pair), weight)));
    });
    m.def("verify_hopf_certificate", [](const std::string& cert) {
        return dump(to_json(verify_hopf_certificate(hopf_certificate_from_json(load(cert)))));
    });
}
