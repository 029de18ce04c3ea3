#include "evalg/json_io.hpp"

#include <cctype>

namespace evalg {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        bad(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

Ring ring_field(const Json& j, const char* key, const Ring& fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    return Ring::parse(j.at(key).get<std::string>());
}

std::string number_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return j.dump();
    bad("expected a decimal string, got " + j.dump());
}

// ---- expression parser ---------------------------------------------------------------

class ExprParser {
public:
    ExprParser(std::string_view text, const Ring& ring) : s_(text), ring_(ring) {}

    Element parse() {
        std::optional<std::int64_t> window;
        Element v = sum(&window);
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        if (window) v = truncate(v, *window);
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        bad("in '" + std::string(s_) + "' at position " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_window() {
        skip();
        return s_.compare(pos_, 2, "O(") == 0;
    }

    Element sum(std::optional<std::int64_t>* window) {
        Element acc = Element::zero(ring_);
        bool first = true;
        while (true) {
            bool neg = false;
            if (accept('-')) neg = true;
            else if (!first && !accept('+')) break;
            else if (first) accept('+');
            if (window && at_window()) {
                if (neg) fail("negated O-term");
                *window = window_term();
            } else {
                Element t = product();
                acc += neg ? -t : t;
            }
            first = false;
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
        }
        return acc;
    }

    std::int64_t window_term() {
        if (ring_.kind() != RingKind::Laurent) fail("O-term outside a Laurent ring");
        pos_ += 2;
        skip();
        if (!accept('q')) fail("expected q in O-term");
        std::int64_t e = 1;
        if (accept('^')) e = signed_integer();
        if (!accept(')')) fail("expected ')'");
        return e;
    }

    Element product() {
        Element acc = power();
        while (true) {
            if (accept('*')) acc *= power();
            else if (accept('/')) {
                const Element d = power();
                acc = is_invertible(d) ? acc * inverse(d) : exact_divide(acc, d);
            } else break;
        }
        return acc;
    }

    Element power() {
        Element base = atom();
        if (!accept('^')) return base;
        const std::int64_t e = signed_integer();
        if (e >= 0) return base.pow(static_cast<unsigned long>(e));
        return inverse(base).pow(static_cast<unsigned long>(-e));
    }

    std::int64_t signed_integer() {
        skip();
        bool neg = false;
        if (accept('-')) neg = true;
        else if (accept('(')) {
            const std::int64_t v = signed_integer();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        const std::int64_t v = std::stoll(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }

    Element atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Element v = sum(nullptr);
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Element::from_integer(ring_, mpz_class(std::string(s_.substr(start, pos_ - start))));
        }
        if (c == 'q' || c == 'i') {
            ++pos_;
            const RingKind k = ring_.kind();
            const bool has_q = k == RingKind::PolyInt || k == RingKind::PolyFp || k == RingKind::FracPolyFp ||
                               k == RingKind::Laurent;
            const bool has_i = k == RingKind::GaussInt || k == RingKind::GaussRat;
            if ((c == 'q' && !has_q) || (c == 'i' && !has_i))
                fail(std::string("symbol ") + c + " does not belong to " + ring_.name());
            return Element::generator(ring_);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Element truncate(const Element& v, std::int64_t end) const {
        const auto& s = v.as<LaurentSeries>();
        LaurentSeries out{end, {}};
        if (!s.c.empty() && s.val < end) {
            out.val = s.val;
            for (std::int64_t e = s.val; e < end; ++e) {
                const auto idx = static_cast<std::size_t>(e - s.val);
                out.c.push_back(idx < s.c.size() ? s.c[idx] : mpz_class(0));
            }
        }
        return Element(ring_, std::move(out));
    }

    std::string_view s_;
    Ring ring_;
    std::size_t pos_ = 0;
};

std::vector<std::uint64_t> fp_coeffs(const Json& j, std::uint64_t p) {
    if (!j.is_array()) bad("expected a coefficient array, got " + j.dump());
    std::vector<std::uint64_t> out;
    for (const auto& c : j) {
        mpz_class v(number_text(c));
        v %= static_cast<unsigned long>(p);
        if (v < 0) v += static_cast<unsigned long>(p);
        out.push_back(v.get_ui());
    }
    return out;
}

Json exps_to_json(const Exponents& e) {
    Json a = Json::array();
    for (auto x : e) a.push_back(x);
    return a;
}

Exponents exps_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an exponent array");
    Exponents e;
    for (const auto& x : j) e.push_back(x.get<std::uint32_t>());
    return e;
}

Json bool_or_null(const std::optional<Element>& e) { return e ? element_value(*e) : Json(nullptr); }

}  // namespace

// ---- elements ---------------------------------------------------------------------

Element parse_element(std::string_view text, const Ring& ring) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && (text[first] == '[' || text[first] == '{') && Json::accept(text))
        return element_from_json(Json::parse(text), ring);
    return ExprParser(text, ring).parse();
}

std::vector<Element> parse_element_list(std::string_view text, const Ring& ring) {
    std::string s(text);
    auto first = s.find_first_not_of(" \t\n");
    auto last = s.find_last_not_of(" \t\n");
    if (first == std::string::npos || s[first] != '[' || s[last] != ']') bad("expected a bracketed list, got '" + s + "'");
    if (Json::accept(s)) return elements_from_json(Json::parse(s), ring);
    s = s.substr(first + 1, last - first - 1);
    std::vector<Element> out;
    if (s.find_first_not_of(" \t\n") == std::string::npos) return out;
    int depth = 0;
    std::string cur;
    auto flush = [&] {
        std::string t = cur;
        t.erase(std::remove(t.begin(), t.end(), '"'), t.end());
        out.push_back(parse_element(t, ring));
        cur.clear();
    };
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) flush();
        else cur += c;
    }
    flush();
    return out;
}

Json element_value(const Element& e) {
    switch (e.ring().kind()) {
        case RingKind::Int:
        case RingKind::Rat:
        case RingKind::Fp: return e.to_string();
        case RingKind::PolyInt: {
            Json a = Json::array();
            for (const auto& c : e.as<IntPoly>().c) a.push_back(c.get_str());
            return a;
        }
        case RingKind::PolyFp: {
            Json a = Json::array();
            for (auto c : e.as<FpPoly>().c) a.push_back(std::to_string(c));
            return a;
        }
        case RingKind::FracPolyFp: {
            const auto& f = e.as<FpFraction>();
            Json num = Json::array(), den = Json::array();
            for (auto c : f.num.c) num.push_back(std::to_string(c));
            for (auto c : f.den.c) den.push_back(std::to_string(c));
            return Json{{"num", num}, {"den", den}};
        }
        case RingKind::GaussInt: return Json::array({e.as<Gaussian>().re.get_str(), e.as<Gaussian>().im.get_str()});
        case RingKind::GaussRat:
            return Json::array({e.as<GaussianRational>().re.get_str(), e.as<GaussianRational>().im.get_str()});
        case RingKind::Laurent: {
            const auto& s = e.as<LaurentSeries>();
            if (s.c.empty() && s.val >= kInfinitePrecision) return "0";
            Json c = Json::array();
            for (const auto& x : s.c) c.push_back(x.get_str());
            return Json{{"val", s.val}, {"coeffs", c}};
        }
    }
    return nullptr;
}

Json to_json(const Element& e) { return Json{{"ring", e.ring().name()}, {"value", element_value(e)}}; }

Element element_from_json(const Json& j, const Ring& ring) {
    if (j.is_object() && j.contains("ring") && j.contains("value")) {
        const Element e = element_from_json(j.at("value"), Ring::parse(j.at("ring").get<std::string>()));
        return embed(e, ring);
    }
    if (j.is_string()) return parse_element(j.get<std::string>(), ring);
    if (j.is_number_integer()) return Element::from_integer(ring, mpz_class(j.dump()));
    switch (ring.kind()) {
        case RingKind::PolyInt: {
            if (!j.is_array()) break;
            IntPoly p;
            for (const auto& c : j) p.c.emplace_back(number_text(c));
            return Element(ring, std::move(p));
        }
        case RingKind::PolyFp:
            if (!j.is_array()) break;
            return Element(ring, FpPoly{fp_coeffs(j, ring.prime())});
        case RingKind::FracPolyFp: {
            if (!j.is_object()) break;
            FpPoly den{fp_coeffs(field(j, "den"), ring.prime())};
            detail::trim(den);
            if (den.c.empty()) raise(ErrorCode::DivisionByZero, "zero denominator in " + j.dump());
            return Element(ring, FpFraction{FpPoly{fp_coeffs(field(j, "num"), ring.prime())}, den});
        }
        case RingKind::GaussInt:
            if (!j.is_array() || j.size() != 2) break;
            return Element(ring, Gaussian{mpz_class(number_text(j[0])), mpz_class(number_text(j[1]))});
        case RingKind::GaussRat:
            if (!j.is_array() || j.size() != 2) break;
            return Element(ring, GaussianRational{mpq_class(number_text(j[0])), mpq_class(number_text(j[1]))});
        case RingKind::Laurent: {
            if (!j.is_object()) break;
            LaurentSeries s{field(j, "val").get<std::int64_t>(), {}};
            for (const auto& c : field(j, "coeffs")) s.c.emplace_back(number_text(c));
            return Element(ring, std::move(s));
        }
        default: break;
    }
    bad("cannot read " + j.dump() + " as an element of " + ring.name());
}

Element element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ring")) bad("element needs a \"ring\" field: " + j.dump());
    return element_from_json(field(j, "value"), Ring::parse(j.at("ring").get<std::string>()));
}

Json to_json(const std::vector<Element>& v) {
    Json a = Json::array();
    for (const auto& e : v) a.push_back(element_value(e));
    return a;
}

std::vector<Element> elements_from_json(const Json& j, const Ring& ring) {
    if (j.is_string()) return parse_element_list(j.get<std::string>(), ring);
    if (!j.is_array()) bad("expected an array of elements, got " + j.dump());
    std::vector<Element> out;
    for (const auto& x : j) out.push_back(element_from_json(x, ring));
    return out;
}

// ---- polynomials ------------------------------------------------------------------

Json to_json(const Poly& p) { return Json{{"ring", p.ring().name()}, {"coeffs", to_json(p.coeffs())}}; }

Poly poly_from_json(const Json& j, const Ring& ring) {
    const Ring r = ring_field(j, "ring", ring);
    if (j.is_object() && j.contains("terms")) {
        const MPoly m = mpoly_from_json(j, r);
        if (m.nvars() != 1) raise(ErrorCode::ArityMismatch, "expected a univariate polynomial");
        std::vector<Element> c;
        for (const auto& [e, v] : m.terms()) {
            const std::size_t k = e.empty() ? 0 : e[0];
            while (c.size() <= k) c.push_back(Element::zero(r));
            c[k] += v;
        }
        return Poly(r, std::move(c));
    }
    return Poly(r, elements_from_json(field(j, "coeffs"), r));
}

Json to_json(const MPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", exps_to_json(e)}, {"coeff", element_value(c)}});
    return Json{{"ring", p.ring().name()}, {"vars", p.vars()}, {"terms", terms}};
}

MPoly mpoly_from_json(const Json& j, const Ring& ring) {
    const Ring r = ring_field(j, "ring", ring);
    MPoly out(r, field(j, "vars").get<std::vector<std::string>>());
    for (const auto& t : field(j, "terms")) {
        Exponents e = exps_from_json(field(t, "exp"));
        if (e.size() != out.nvars()) raise(ErrorCode::ArityMismatch, "exponent length differs from variable count");
        out.add_term(e, element_from_json(field(t, "coeff"), r));
    }
    return out;
}

// ---- group rings and divided powers -----------------------------------------------

Json to_json(const GroupRingElement& g) {
    Json terms = Json::array();
    std::string point_ring;
    for (const auto& [k, c] : g.terms()) {
        point_ring = k.ring().name();
        terms.push_back(Json{{"point", element_value(k)}, {"coeff", element_value(c)}});
    }
    Json out{{"ring", g.ring().name()}};
    if (!point_ring.empty()) out["point_ring"] = point_ring;
    out["terms"] = terms;
    return out;
}

GroupRingElement groupring_from_json(const Json& j, const Ring& coeff_ring, const Ring& point_ring) {
    const Ring r = ring_field(j, "ring", coeff_ring);
    const Ring pr = ring_field(j, "point_ring", point_ring);
    GroupRingElement g(r);
    for (const auto& t : field(j, "terms"))
        g.add_term(element_from_json(field(t, "point"), pr), element_from_json(field(t, "coeff"), r));
    return g;
}

Json to_json(const MultiGroupRingElement& g) {
    Json terms = Json::array();
    std::string point_ring;
    for (const auto& [k, c] : g.terms()) {
        if (!k.empty()) point_ring = k.front().ring().name();
        terms.push_back(Json{{"point", to_json(k)}, {"coeff", element_value(c)}});
    }
    Json out{{"ring", g.ring().name()}};
    if (!point_ring.empty()) out["point_ring"] = point_ring;
    out["terms"] = terms;
    return out;
}

MultiGroupRingElement multi_groupring_from_json(const Json& j, const Ring& coeff_ring, const Ring& point_ring) {
    const Ring r = ring_field(j, "ring", coeff_ring);
    const Ring pr = ring_field(j, "point_ring", point_ring);
    MultiGroupRingElement g(r);
    for (const auto& t : field(j, "terms"))
        g.add_term(elements_from_json(field(t, "point"), pr), element_from_json(field(t, "coeff"), r));
    return g;
}

Json to_json(const DividedPowerVector& v) {
    return Json{{"ring", v.ring.name()}, {"trunc", v.trunc}, {"valid", v.valid}, {"coeffs", to_json(v.coeffs)}};
}

DividedPowerVector divided_power_from_json(const Json& j) {
    DividedPowerVector v{Ring::parse(field(j, "ring").get<std::string>()), size_field(j, "trunc"), {}, 0};
    v.coeffs = elements_from_json(field(j, "coeffs"), v.ring);
    v.valid = j.contains("valid") ? size_field(j, "valid") : v.trunc;
    if (v.coeffs.size() != v.trunc) raise(ErrorCode::ArityMismatch, "coefficient count differs from trunc");
    return v;
}

// ---- series and Hopf objects ------------------------------------------------------

Json to_json(const TruncatedSeries& s) {
    Json out{{"kind", std::string(to_string(s.kind()))}, {"ring", s.ring().name()}};
    if (s.kind() == SeriesKind::PSeries) out["p"] = s.prime();
    out["depth"] = s.depth();
    out["coeffs"] = to_json(s.coeffs());
    return out;
}

TruncatedSeries series_from_json(const Json& j) {
    const std::string kind_name = field(j, "kind").get<std::string>();
    SeriesKind kind;
    if (kind_name == "nottingham") kind = SeriesKind::Nottingham;
    else if (kind_name == "pseries") kind = SeriesKind::PSeries;
    else bad("unknown series kind '" + kind_name + "'");
    Ring fallback = Ring::rationals();
    if (kind == SeriesKind::PSeries) {
        if (!j.contains("p") && !j.contains("ring")) bad("p-series need \"p\" or \"ring\"");
        if (j.contains("p")) fallback = Ring::prime_field(j.at("p").get<std::uint64_t>());
    }
    const Ring r = ring_field(j, "ring", fallback);
    auto coeffs = elements_from_json(field(j, "coeffs"), r);
    if (j.contains("depth")) {
        const std::size_t depth = size_field(j, "depth");
        if (coeffs.size() > depth) raise(ErrorCode::ArityMismatch, "more coefficients than depth");
        while (coeffs.size() < depth) coeffs.push_back(Element::zero(r));
    }
    return TruncatedSeries(kind, r, std::move(coeffs));
}

Json to_json(const SeriesGroupRing& g) {
    Json terms = Json::array();
    for (const auto& [s, c] : g.terms()) terms.push_back(Json{{"point", to_json(s)}, {"coeff", element_value(c)}});
    return Json{{"ring", g.ring().name()}, {"terms", terms}};
}

SeriesGroupRing series_groupring_from_json(const Json& j) {
    const Ring r = Ring::parse(field(j, "ring").get<std::string>());
    SeriesGroupRing g(r);
    for (const auto& t : field(j, "terms"))
        g.add_term(series_from_json(field(t, "point")), element_from_json(field(t, "coeff"), r));
    return g;
}

namespace {

Json algebra_to_json(const HopfAlgebra& a) {
    Json out{{"algebra", a.kind == HopfAlgebra::Kind::N ? "N" : "P"}};
    if (a.kind == HopfAlgebra::Kind::P) out["p"] = a.p;
    return out;
}

HopfAlgebra algebra_from_json(const Json& j) {
    return HopfAlgebra::parse(field(j, "algebra").get<std::string>(), j.contains("p") ? j.at("p").get<std::uint64_t>() : 0);
}

}  // namespace

Json to_json(const DualFunctional& f) {
    Json out = algebra_to_json(f.alg);
    out["bound"] = f.bound;
    out["ring"] = f.ring.name();
    Json values = Json::array();
    for (const auto& m : monomials_below(f.alg, f.bound)) {
        const Element v = f.at(m);
        if (!v.is_zero()) values.push_back(Json{{"exp", exps_to_json(m)}, {"value", element_value(v)}});
    }
    out["values"] = values;
    return out;
}

DualFunctional dual_functional_from_json(const Json& j) {
    DualFunctional f{algebra_from_json(j), size_field(j, "bound"), Ring::parse(field(j, "ring").get<std::string>()), {}};
    for (const auto& t : field(j, "values")) {
        Element v = element_from_json(field(t, "value"), f.ring);
        if (!v.is_zero()) f.values.emplace(exps_from_json(field(t, "exp")), std::move(v));
    }
    return f;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (const auto& r : m) rows.push_back(to_json(r));
    return rows;
}

Matrix matrix_from_json(const Json& j, const Ring& ring) {
    if (!j.is_array()) bad("expected a matrix");
    Matrix m;
    for (const auto& r : j) m.push_back(elements_from_json(r, ring));
    return m;
}

Json to_json(const DensityCertificate& c) {
    Json elements = Json::array();
    for (const auto& a : c.elements) elements.push_back(to_json(a));
    return Json{{"pair", c.pair.name()},    {"trunc", c.trunc},       {"points", to_json(c.points)},
                {"elements", elements}, {"matrix", to_json(c.matrix)}};
}

DensityCertificate density_certificate_from_json(const Json& j) {
    const RingPair pair = RingPair::parse(field(j, "pair").get<std::string>());
    DensityCertificate c{pair, size_field(j, "trunc"), {}, {}, {}};
    c.points = elements_from_json(field(j, "points"), pair.K);
    for (const auto& e : field(j, "elements")) c.elements.push_back(groupring_from_json(e, pair.L, pair.K));
    c.matrix = matrix_from_json(field(j, "matrix"), pair.L);
    return c;
}

Json to_json(const HopfCertificate& c) {
    Json out = algebra_to_json(c.alg);
    out["pair"] = c.pair.name();
    out["bound"] = c.bound;
    out["depth"] = c.depth;
    Json monos = Json::array();
    for (const auto& m : c.monomials) monos.push_back(exps_to_json(m));
    out["monomials"] = monos;
    Json elements = Json::array();
    for (const auto& e : c.elements) elements.push_back(to_json(e));
    out["elements"] = elements;
    out["gram"] = to_json(c.gram);
    return out;
}

HopfCertificate hopf_certificate_from_json(const Json& j) {
    const RingPair pair = RingPair::parse(field(j, "pair").get<std::string>());
    HopfCertificate c{algebra_from_json(j), pair, size_field(j, "bound"), size_field(j, "depth"), {}, {}, {}};
    for (const auto& m : field(j, "monomials")) c.monomials.push_back(exps_from_json(m));
    for (const auto& e : field(j, "elements")) c.elements.push_back(series_groupring_from_json(e));
    c.gram = matrix_from_json(field(j, "gram"), pair.Lhat);
    return c;
}

// ---- reports ----------------------------------------------------------------------

Json to_json(const DSWitness& w) {
    return Json{{"pair", w.pair.name()}, {"points", to_json(w.points)}, {"checked", w.checked}};
}

Json to_json(const NumericalVerdict& v) {
    Json out{{"status", std::string(to_string(v.status))}};
    if (!v.coords.empty()) out["coords"] = to_json(v.coords);
    if (v.witness_index) out["witness_index"] = *v.witness_index;
    if (v.witness_point) out["witness_point"] = element_value(*v.witness_point);
    if (v.witness_value) out["witness_value"] = element_value(*v.witness_value);
    return out;
}

Json to_json(const MembershipVerdict& v) {
    Json out{{"numerical", v.numerical}, {"omega", to_json(v.omega)}};
    if (v.numerical) out["coords"] = to_json(v.coords);
    if (v.witness_index) out["witness_index"] = *v.witness_index;
    if (v.witness_value) out["witness_value"] = element_value(*v.witness_value);
    return out;
}

Json to_json(const KeyFormulaReport& r) {
    Json out{{"ok", r.ok}, {"table", to_json(r.table)}};
    if (r.failure) out["failure"] = *r.failure;
    return out;
}

Json to_json(const CertificateCheck& c) {
    Json out{{"ok", c.ok}};
    if (c.failure) out["failure"] = Json::array({c.failure->first, c.failure->second});
    return out;
}

Json to_json(const FiniteImage& f) {
    Json out{{"finite", f.finite}, {"steps", f.steps}};
    if (f.finite) {
        out["size"] = f.reps.size();
        out["reps"] = to_json(f.reps);
    }
    return out;
}

Json to_json(const ClassificationReport& r) {
    Json out{{"pair", r.pair.name()}, {"contains_fraction_field", r.contains_fraction_field}, {"ds_n", r.ds_n}};
    out["ds_points"] = r.ds_points ? to_json(*r.ds_points) : Json(nullptr);
    out["trunc"] = r.trunc;
    out["certificate_built"] = r.certificate_built;
    out["certificate_failure"] = r.certificate_failure ? Json(*r.certificate_failure) : Json(nullptr);
    out["obstruction_searched"] = r.obstruction_searched;
    out["obstruction_modulus"] = bool_or_null(r.obstruction_modulus);
    out["obstruction_image"] = r.obstruction_image ? to_json(*r.obstruction_image) : Json(nullptr);
    out["obstruction_poly"] = r.obstruction_poly ? to_json(*r.obstruction_poly) : Json(nullptr);
    out["notes"] = r.notes;
    return out;
}

}  // namespace evalg
