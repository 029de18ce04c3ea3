#include "evalg/poly.hpp"

#include <algorithm>
#include <numeric>

namespace evalg {

namespace {

bool plain_coefficient(const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    return start < s.size() && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                           [](char ch) { return ch >= '0' && ch <= '9'; });
}

std::string monomial_text(const Exponents& e, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::uint32_t total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

// Appends coefficient*monomial with sign handling.
void append_term(std::string& out, const Element& c, const std::string& mono) {
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-' && plain_coefficient(cs);
    if (neg) cs.erase(0, 1);
    if (!plain_coefficient(cs)) cs = "(" + cs + ")";
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
}

}  // namespace

// ---- Poly -------------------------------------------------------------------------

Poly::Poly(Ring ring, std::vector<Element> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = embed(c, ring_);
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::x(const Ring& ring) { return Poly(ring, {Element::zero(ring), Element::one(ring)}); }

Poly Poly::constant(const Element& c) { return Poly(c.ring(), {c}); }

Poly Poly::monomial(const Element& c, std::size_t k) {
    std::vector<Element> v(k + 1, Element::zero(c.ring()));
    v[k] = c;
    return Poly(c.ring(), std::move(v));
}

Element Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Element::zero(ring_); }

Element Poly::eval(const Element& point) const {
    const Element x = embed(point, ring_);
    Element acc = Element::zero(ring_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Poly Poly::shift(const Element& k) const {
    const Poly lin(ring_, {embed(k, ring_), Element::one(ring_)});
    Poly acc(ring_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * lin + Poly::constant(coeffs_[i]);
    return acc;
}

Poly Poly::embed_into(const Ring& target) const {
    std::vector<Element> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(embed(c, target));
    return Poly(target, std::move(out));
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (!(ring_ == rhs.ring_)) raise(ErrorCode::RingMismatch, ring_.name() + " vs " + rhs.ring_.name());
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Element::zero(ring_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (!(ring_ == rhs.ring_)) raise(ErrorCode::RingMismatch, ring_.name() + " vs " + rhs.ring_.name());
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Element::zero(ring_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (!(ring_ == rhs.ring_)) raise(ErrorCode::RingMismatch, ring_.name() + " vs " + rhs.ring_.name());
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Element> out(coeffs_.size() + rhs.coeffs_.size() - 1, Element::zero(ring_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Element& scalar) {
    const Element s = embed(scalar, ring_);
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_; }

std::string Poly::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    const std::vector<std::string> vars{std::string(var)};
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        append_term(out, coeffs_[i], monomial_text(Exponents{static_cast<std::uint32_t>(i)}, vars));
    }
    return out;
}

// ---- MPoly ------------------------------------------------------------------------

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    const auto ta = total(a), tb = total(b);
    if (ta != tb) return ta < tb;
    // Within a degree, larger leading exponents sort later (x_1 > x_2 > ...).
    return a < b;
}

MPoly::MPoly(Ring ring, std::vector<std::string> vars) : ring_(ring), vars_(std::move(vars)) {}

MPoly MPoly::variable(const Ring& ring, const std::vector<std::string>& vars, std::size_t index) {
    if (index >= vars.size()) raise(ErrorCode::ArityMismatch, "variable index out of range");
    MPoly p(ring, vars);
    Exponents e(vars.size(), 0);
    e[index] = 1;
    p.add_term(e, Element::one(ring));
    return p;
}

MPoly MPoly::constant(const Element& c, const std::vector<std::string>& vars) {
    MPoly p(c.ring(), vars);
    p.add_term(Exponents(vars.size(), 0), c);
    return p;
}

Element MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Element::zero(ring_) : it->second;
}

void MPoly::add_term(const Exponents& e, const Element& c) {
    if (e.size() != vars_.size()) raise(ErrorCode::ArityMismatch, "exponent vector length mismatch");
    Element v = embed(c, ring_);
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element MPoly::eval(std::span<const Element> point) const {
    if (point.size() != vars_.size())
        raise(ErrorCode::ArityMismatch, "expected " + std::to_string(vars_.size()) + " coordinates, got " +
                                            std::to_string(point.size()));
    Ring target = ring_;
    for (const auto& v : point)
        if (!embeds_into(v.ring(), target) && embeds_into(target, v.ring())) target = v.ring();
    std::vector<Element> x;
    x.reserve(point.size());
    for (const auto& v : point) x.push_back(embed(v, target));
    Element acc = Element::zero(target);
    for (const auto& [e, c] : terms_) {
        Element t = embed(c, target);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= x[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (images.size() != vars_.size()) raise(ErrorCode::ArityMismatch, "substitution arity mismatch");
    if (images.empty()) return *this;
    MPoly acc(ring_, images.front().vars());
    for (const auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(c, images.front().vars());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * images[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

bool MPoly::is_homogeneous(std::span<const std::uint64_t> weights, std::uint64_t weight) const {
    for (const auto& [e, c] : terms_) {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < e.size(); ++i) w += weights[i] * e[i];
        if (w != weight) return false;
    }
    return true;
}

void MPoly::check_compatible(const MPoly& rhs) const {
    if (!(ring_ == rhs.ring_)) raise(ErrorCode::RingMismatch, ring_.name() + " vs " + rhs.ring_.name());
    if (vars_ != rhs.vars_) raise(ErrorCode::ArityMismatch, "variable lists differ");
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Element& scalar) {
    const Element s = embed(scalar, ring_);
    Terms out;
    for (auto& [e, c] : terms_) {
        Element v = c * s;
        if (!v.is_zero()) out.emplace(e, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    MPoly out(a.ring_, a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
    return a.ring_ == b.ring_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result = MPoly::constant(Element::one(ring_), vars_);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) append_term(out, it->second, monomial_text(it->first, vars_));
    return out;
}

// ---- free functions --------------------------------------------------------------

Element poly_eval(const Poly& p, std::span<const Element> point) {
    if (point.size() != 1) raise(ErrorCode::ArityMismatch, "univariate polynomial takes exactly one coordinate");
    return p.eval(point[0]);
}

Element poly_eval(const MPoly& p, std::span<const Element> point) { return p.eval(point); }

std::vector<Element> finite_differences(const Poly& p) {
    const Ring q = Ring::rationals();
    if (!(p.ring() == q) && !(p.ring() == Ring::integers()))
        raise(ErrorCode::RingMismatch, "finite differences need a polynomial over Q, got " + p.ring().name());
    const Poly pq = p.embed_into(q);
    if (pq.is_zero()) return {Element::zero(q)};
    const std::size_t d = static_cast<std::size_t>(pq.degree());
    std::vector<Element> table;
    table.reserve(d + 1);
    for (std::size_t i = 0; i <= d; ++i) table.push_back(pq.eval(Element::from_integer(q, static_cast<long>(i))));
    std::vector<Element> coords;
    coords.reserve(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        coords.push_back(table[0]);
        for (std::size_t i = 0; i + 1 < table.size(); ++i) table[i] = table[i + 1] - table[i];
        table.pop_back();
    }
    return coords;
}

Poly binomial_poly(std::size_t k) {
    const Ring q = Ring::rationals();
    Poly acc = Poly::constant(Element::one(q));
    mpz_class fact = 1;
    for (std::size_t i = 0; i < k; ++i) {
        acc *= Poly(q, {Element::from_integer(q, -static_cast<long>(i)), Element::one(q)});
        fact *= static_cast<unsigned long>(i + 1);
    }
    return acc * Element(q, mpq_class(1, fact));
}

}  // namespace evalg
