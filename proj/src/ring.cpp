#include "evalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace evalg {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

std::string trim_copy(std::string_view t) {
    std::size_t b = 0, e = t.size();
    while (b < e && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(t[e - 1]))) --e;
    return std::string(t.substr(b, e - b));
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
    if (s.empty() || s.size() > 18) return std::nullopt;
    std::uint64_t v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return std::nullopt;
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return v;
}

// "F(5)" -> "5" given prefix "F"; also "F5".
std::optional<std::uint64_t> parse_suffix_number(const std::string& s, std::string_view prefix) {
    if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    std::string_view rest(s);
    rest.remove_prefix(prefix.size());
    if (rest.front() == '(' && rest.back() == ')') {
        rest.remove_prefix(1);
        rest.remove_suffix(1);
    }
    return parse_uint(rest);
}

std::uint64_t checked_prime(std::uint64_t p) {
    if (p >= kMaxPrime) raise(ErrorCode::InvalidArgument, "prime " + std::to_string(p) + " too large");
    if (!detail::is_prime(p)) raise(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    return p;
}

// ---- Laurent window arithmetic ---------------------------------------------

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a >= kInfinitePrecision || b >= kInfinitePrecision) return kInfinitePrecision;
    std::int64_t r = a + b;
    return r >= kInfinitePrecision ? kInfinitePrecision : r;
}

std::int64_t window_end(const LaurentSeries& s) {
    return s.c.empty() ? s.val : s.val + static_cast<std::int64_t>(s.c.size());
}

void laurent_normalize(LaurentSeries& s, int precision) {
    std::size_t lead = 0;
    while (lead < s.c.size() && s.c[lead] == 0) ++lead;
    if (lead == s.c.size()) {
        s.val = std::min(window_end(s), kInfinitePrecision);
        s.c.clear();
        return;
    }
    s.c.erase(s.c.begin(), s.c.begin() + static_cast<std::ptrdiff_t>(lead));
    s.val += static_cast<std::int64_t>(lead);
    if (s.c.size() > static_cast<std::size_t>(precision)) s.c.resize(static_cast<std::size_t>(precision));
}

mpz_class laurent_coeff(const LaurentSeries& s, std::int64_t e) {
    if (s.c.empty() || e < s.val) return 0;
    auto idx = e - s.val;
    if (idx >= static_cast<std::int64_t>(s.c.size())) return 0;
    return s.c[static_cast<std::size_t>(idx)];
}

LaurentSeries laurent_add(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
    const std::int64_t end = std::min(window_end(a), window_end(b));
    if (end >= kInfinitePrecision) return LaurentSeries{kInfinitePrecision, {}};
    const std::int64_t lo = std::min(a.c.empty() ? end : a.val, b.c.empty() ? end : b.val);
    if (lo >= end) return LaurentSeries{end, {}};
    LaurentSeries r{lo, std::vector<mpz_class>(static_cast<std::size_t>(end - lo))};
    for (std::int64_t e = lo; e < end; ++e) {
        auto& slot = r.c[static_cast<std::size_t>(e - lo)];
        slot = laurent_coeff(a, e);
        if (subtract) slot -= laurent_coeff(b, e);
        else slot += laurent_coeff(b, e);
    }
    return r;
}

LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.c.empty() && b.c.empty()) return LaurentSeries{sat_add(a.val, b.val), {}};
    if (a.c.empty()) return LaurentSeries{sat_add(a.val, b.val), {}};
    if (b.c.empty()) return LaurentSeries{sat_add(b.val, a.val), {}};
    const std::size_t r = std::min(a.c.size(), b.c.size());
    LaurentSeries out{a.val + b.val, std::vector<mpz_class>(r)};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; i + j < r; ++j) out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

LaurentSeries laurent_div(const LaurentSeries& a, const LaurentSeries& b) {
    if (b.c.empty()) raise(ErrorCode::DivisionByZero, "Laurent divisor has no nonzero coefficient in its window");
    if (a.c.empty()) {
        auto end = a.val >= kInfinitePrecision ? kInfinitePrecision : a.val - b.val;
        return LaurentSeries{end, {}};
    }
    const std::size_t r = std::min(a.c.size(), b.c.size());
    LaurentSeries out{a.val - b.val, std::vector<mpz_class>(r)};
    for (std::size_t k = 0; k < r; ++k) {
        mpz_class acc = a.c[k];
        for (std::size_t i = 1; i <= k; ++i) acc -= b.c[i] * out.c[k - i];
        if (!mpz_divisible_p(acc.get_mpz_t(), b.c[0].get_mpz_t()))
            raise(ErrorCode::NotDivisible, "Laurent coefficient not divisible by leading coefficient");
        mpz_divexact(out.c[k].get_mpz_t(), acc.get_mpz_t(), b.c[0].get_mpz_t());
    }
    return out;
}

LaurentSeries laurent_from_poly(const IntPoly& p, int precision) {
    std::size_t v = 0;
    while (v < p.c.size() && p.c[v] == 0) ++v;
    if (v == p.c.size()) return LaurentSeries{kInfinitePrecision, {}};
    LaurentSeries s{static_cast<std::int64_t>(v), std::vector<mpz_class>(static_cast<std::size_t>(precision))};
    for (std::size_t i = v; i < p.c.size() && i - v < s.c.size(); ++i) s.c[i - v] = p.c[i];
    return s;
}

// ---- formatting helpers ------------------------------------------------------

// Each term: (degree, coefficient text, negative?).
std::string format_terms(const std::vector<std::tuple<std::int64_t, std::string, bool>>& terms,
                         std::string_view var) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [deg, mag, neg] : terms) {
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        first = false;
        if (deg == 0) {
            out += mag;
            continue;
        }
        if (mag != "1") out += mag + "*";
        out += var;
        if (deg != 1) out += "^" + std::to_string(deg);
    }
    return out;
}

std::string fp_poly_string(const FpPoly& a) {
    std::vector<std::tuple<std::int64_t, std::string, bool>> terms;
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i), std::to_string(a.c[i]), false);
    return format_terms(terms, "q");
}

std::string int_poly_string(const IntPoly& a) {
    std::vector<std::tuple<std::int64_t, std::string, bool>> terms;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] == 0) continue;
        mpz_class m = abs(a.c[i]);
        terms.emplace_back(static_cast<std::int64_t>(i), m.get_str(), a.c[i] < 0);
    }
    return format_terms(terms, "q");
}

std::string rat_string(const mpq_class& q) { return q.get_str(); }

template <class T>
int compare_values(const T& a, const T& b) {
    return a < b ? -1 : (b < a ? 1 : 0);
}

int compare_mpz_vec(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

int compare_fp(const FpPoly& a, const FpPoly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
    return 0;
}

void require_same_ring(const Element& a, const Element& b) {
    if (!(a.ring() == b.ring()))
        raise(ErrorCode::RingMismatch, a.ring().name() + " vs " + b.ring().name());
}

FpFraction make_fraction(FpPoly num, FpPoly den, std::uint64_t p) {
    detail::trim(num);
    detail::trim(den);
    if (den.c.empty()) raise(ErrorCode::DivisionByZero, "zero denominator in F_p(q)");
    if (num.c.empty()) return FpFraction{FpPoly{}, FpPoly{{1}}};
    FpPoly g = detail::fp_gcd(num, den, p);
    num = detail::fp_divmod(num, g, p).first;
    den = detail::fp_divmod(den, g, p).first;
    const std::uint64_t lc_inv = detail::fp_inv(den.c.back(), p);
    return FpFraction{detail::fp_scale(num, lc_inv, p), detail::fp_scale(den, lc_inv, p)};
}

}  // namespace

// ---- detail ------------------------------------------------------------------

namespace detail {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) raise(ErrorCode::DivisionByZero, "zero has no inverse mod " + std::to_string(p));
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::tie(t, newt) = std::make_pair(newt, t - q * newt);
        std::tie(r, newr) = std::make_pair(newr, r - q * newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

void trim(FpPoly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

void trim(IntPoly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
        std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = (x + y) % p;
    }
    trim(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
        std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.c.empty() || b.c.empty()) return {};
    FpPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
    }
    trim(r);
    return r;
}

FpPoly fp_scale(const FpPoly& a, std::uint64_t s, std::uint64_t p) {
    FpPoly r = a;
    for (auto& x : r.c) x = (x * (s % p)) % p;
    trim(r);
    return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (b.c.empty()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    FpPoly rem = a;
    if (rem.c.size() < b.c.size()) return {FpPoly{}, rem};
    FpPoly quot;
    quot.c.assign(rem.c.size() - b.c.size() + 1, 0);
    const std::uint64_t lc_inv = fp_inv(b.c.back(), p);
    for (std::size_t k = quot.c.size(); k-- > 0;) {
        const std::uint64_t coef = (rem.c[k + b.c.size() - 1] * lc_inv) % p;
        quot.c[k] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            rem.c[k + j] = (rem.c[k + j] + p - (coef * b.c[j]) % p) % p;
    }
    trim(quot);
    trim(rem);
    return {quot, rem};
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.c.empty()) {
        FpPoly r = fp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.c.empty()) return a;
    return fp_scale(a, fp_inv(a.c.back(), p), p);
}

FpPoly fp_from_index(std::uint64_t index, std::uint64_t p) {
    FpPoly r;
    while (index > 0) {
        r.c.push_back(index % p);
        index /= p;
    }
    trim(r);
    return r;
}

IntPoly int_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] += b.c[i];
    }
    trim(r);
    return r;
}

IntPoly int_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] -= b.c[i];
    }
    trim(r);
    return r;
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    IntPoly r;
    r.c.resize(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    trim(r);
    return r;
}

namespace {

// Nearest integer to n/d, ties toward +infinity; d > 0.
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
    mpz_class twice = 2 * n + d;
    mpz_class den = 2 * d;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

std::pair<Gaussian, Gaussian> gauss_divmod(const Gaussian& a, const Gaussian& b) {
    const mpz_class norm = b.re * b.re + b.im * b.im;
    if (norm == 0) raise(ErrorCode::DivisionByZero, "Gaussian division by zero");
    const mpz_class tr = a.re * b.re + a.im * b.im;
    const mpz_class ti = a.im * b.re - a.re * b.im;
    Gaussian q{round_div(tr, norm), round_div(ti, norm)};
    Gaussian r{a.re - (q.re * b.re - q.im * b.im), a.im - (q.re * b.im + q.im * b.re)};
    return {q, r};
}

}  // namespace detail

// ---- Ring ------------------------------------------------------------------------

Ring Ring::integers() { return Ring(RingKind::Int, 0, 0); }
Ring Ring::rationals() { return Ring(RingKind::Rat, 0, 0); }
Ring Ring::prime_field(std::uint64_t p) { return Ring(RingKind::Fp, checked_prime(p), 0); }
Ring Ring::int_poly() { return Ring(RingKind::PolyInt, 0, 0); }
Ring Ring::fp_poly(std::uint64_t p) { return Ring(RingKind::PolyFp, checked_prime(p), 0); }
Ring Ring::fp_rational_functions(std::uint64_t p) { return Ring(RingKind::FracPolyFp, checked_prime(p), 0); }
Ring Ring::gaussian_integers() { return Ring(RingKind::GaussInt, 0, 0); }
Ring Ring::gaussian_rationals() { return Ring(RingKind::GaussRat, 0, 0); }

Ring Ring::laurent(int precision) {
    if (precision < 1) raise(ErrorCode::InvalidArgument, "Laurent precision must be >= 1");
    return Ring(RingKind::Laurent, 0, precision);
}

Ring Ring::parse(std::string_view text) {
    const std::string s = trim_copy(text);
    if (s == "Z") return integers();
    if (s == "Q") return rationals();
    if (s == "Zi" || s == "Z[i]") return gaussian_integers();
    if (s == "Qi" || s == "Q(i)") return gaussian_rationals();
    if (s == "Zq" || s == "Z[q]") return int_poly();
    if (s == "LaurentZ" || s == "Z((q))") return laurent();
    if (auto n = parse_suffix_number(s, "LaurentZ")) return laurent(static_cast<int>(*n));
    if (s.rfind("Frac(", 0) == 0 && s.back() == ')') {
        Ring inner = parse(std::string_view(s).substr(5, s.size() - 6));
        if (auto f = inner.fraction_field()) return *f;
        raise(ErrorCode::ParseError, "no fraction field registered for " + inner.name());
    }
    if (auto p = parse_suffix_number(s, "FracFq")) return fp_rational_functions(*p);
    if (auto p = parse_suffix_number(s, "Fq")) return fp_poly(*p);
    if (auto p = parse_suffix_number(s, "Fp")) return prime_field(*p);
    if (auto p = parse_suffix_number(s, "F")) return prime_field(*p);
    raise(ErrorCode::ParseError, "unknown ring '" + s + "'");
}

std::uint64_t Ring::characteristic() const noexcept {
    switch (kind_) {
        case RingKind::Fp:
        case RingKind::PolyFp:
        case RingKind::FracPolyFp: return p_;
        default: return 0;
    }
}

bool Ring::is_field() const noexcept {
    switch (kind_) {
        case RingKind::Rat:
        case RingKind::Fp:
        case RingKind::FracPolyFp:
        case RingKind::GaussRat: return true;
        default: return false;
    }
}

std::optional<Ring> Ring::fraction_field() const {
    switch (kind_) {
        case RingKind::Int: return rationals();
        case RingKind::PolyFp: return fp_rational_functions(p_);
        case RingKind::GaussInt: return gaussian_rationals();
        case RingKind::Rat:
        case RingKind::Fp:
        case RingKind::FracPolyFp:
        case RingKind::GaussRat: return *this;
        case RingKind::PolyInt:
        case RingKind::Laurent: return std::nullopt;
    }
    return std::nullopt;
}

std::string Ring::name() const {
    switch (kind_) {
        case RingKind::Int: return "Z";
        case RingKind::Rat: return "Q";
        case RingKind::Fp: return "F(" + std::to_string(p_) + ")";
        case RingKind::PolyInt: return "Zq";
        case RingKind::PolyFp: return "Fq(" + std::to_string(p_) + ")";
        case RingKind::FracPolyFp: return "Frac(Fq(" + std::to_string(p_) + "))";
        case RingKind::GaussInt: return "Zi";
        case RingKind::GaussRat: return "Qi";
        case RingKind::Laurent: return "LaurentZ(" + std::to_string(precision_) + ")";
    }
    return "?";
}

// ---- Element -----------------------------------------------------------------------

namespace {

std::size_t expected_index(RingKind k) {
    switch (k) {
        case RingKind::Int: return 0;
        case RingKind::Rat: return 1;
        case RingKind::Fp: return 2;
        case RingKind::PolyInt: return 3;
        case RingKind::PolyFp: return 4;
        case RingKind::FracPolyFp: return 5;
        case RingKind::GaussInt: return 6;
        case RingKind::GaussRat: return 7;
        case RingKind::Laurent: return 8;
    }
    return 0;
}

}  // namespace

Element::Element(Ring ring, Payload payload) : ring_(ring), payload_(std::move(payload)) {
    if (payload_.index() != expected_index(ring_.kind()))
        raise(ErrorCode::RingMismatch, "payload does not match ring " + ring_.name());
    const std::uint64_t p = ring_.prime();
    switch (ring_.kind()) {
        case RingKind::Int:
        case RingKind::GaussInt: break;
        case RingKind::Rat: std::get<mpq_class>(payload_).canonicalize(); break;
        case RingKind::Fp: std::get<std::uint64_t>(payload_) %= p; break;
        case RingKind::PolyInt: detail::trim(std::get<IntPoly>(payload_)); break;
        case RingKind::PolyFp: {
            auto& a = std::get<FpPoly>(payload_);
            for (auto& x : a.c) x %= p;
            detail::trim(a);
            break;
        }
        case RingKind::FracPolyFp: {
            auto& f = std::get<FpFraction>(payload_);
            for (auto& x : f.num.c) x %= p;
            for (auto& x : f.den.c) x %= p;
            f = make_fraction(f.num, f.den, p);
            break;
        }
        case RingKind::GaussRat: {
            auto& g = std::get<GaussianRational>(payload_);
            g.re.canonicalize();
            g.im.canonicalize();
            break;
        }
        case RingKind::Laurent: laurent_normalize(std::get<LaurentSeries>(payload_), ring_.precision()); break;
    }
}

Element Element::zero(const Ring& ring) { return from_integer(ring, mpz_class(0)); }
Element Element::one(const Ring& ring) { return from_integer(ring, mpz_class(1)); }

Element Element::from_integer(const Ring& ring, const mpz_class& n) {
    const std::uint64_t p = ring.prime();
    auto mod_p = [&]() {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
        return r.get_ui();
    };
    switch (ring.kind()) {
        case RingKind::Int: return Element(ring, n);
        case RingKind::Rat: return Element(ring, mpq_class(n));
        case RingKind::Fp: return Element(ring, std::uint64_t{mod_p()});
        case RingKind::PolyInt: return Element(ring, IntPoly{{n}});
        case RingKind::PolyFp: return Element(ring, FpPoly{{mod_p()}});
        case RingKind::FracPolyFp: return Element(ring, FpFraction{FpPoly{{mod_p()}}, FpPoly{{1}}});
        case RingKind::GaussInt: return Element(ring, Gaussian{n, 0});
        case RingKind::GaussRat: return Element(ring, GaussianRational{mpq_class(n), mpq_class(0)});
        case RingKind::Laurent: return Element(ring, laurent_from_poly(IntPoly{{n}}, ring.precision()));
    }
    raise(ErrorCode::Internal, "unreachable");
}

Element Element::generator(const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::PolyInt: return Element(ring, IntPoly{{0, 1}});
        case RingKind::PolyFp: return Element(ring, FpPoly{{0, 1}});
        case RingKind::FracPolyFp: return Element(ring, FpFraction{FpPoly{{0, 1}}, FpPoly{{1}}});
        case RingKind::GaussInt: return Element(ring, Gaussian{0, 1});
        case RingKind::GaussRat: return Element(ring, GaussianRational{mpq_class(0), mpq_class(1)});
        case RingKind::Laurent: return Element(ring, laurent_from_poly(IntPoly{{0, 1}}, ring.precision()));
        default: raise(ErrorCode::InvalidArgument, ring.name() + " has no distinguished generator");
    }
}

bool Element::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::Int: return as<mpz_class>() == 0;
        case RingKind::Rat: return as<mpq_class>() == 0;
        case RingKind::Fp: return as<std::uint64_t>() == 0;
        case RingKind::PolyInt: return as<IntPoly>().c.empty();
        case RingKind::PolyFp: return as<FpPoly>().c.empty();
        case RingKind::FracPolyFp: return as<FpFraction>().num.c.empty();
        case RingKind::GaussInt: return as<Gaussian>().re == 0 && as<Gaussian>().im == 0;
        case RingKind::GaussRat: return as<GaussianRational>().re == 0 && as<GaussianRational>().im == 0;
        case RingKind::Laurent: return as<LaurentSeries>().c.empty();
    }
    return false;
}

bool Element::is_one() const { return *this == one(ring_); }

Element Element::operator-() const { return zero(ring_) - *this; }

Element& Element::operator+=(const Element& rhs) {
    require_same_ring(*this, rhs);
    const std::uint64_t p = ring_.prime();
    switch (ring_.kind()) {
        case RingKind::Int: std::get<mpz_class>(payload_) += rhs.as<mpz_class>(); break;
        case RingKind::Rat: std::get<mpq_class>(payload_) += rhs.as<mpq_class>(); break;
        case RingKind::Fp: {
            auto& x = std::get<std::uint64_t>(payload_);
            x = (x + rhs.as<std::uint64_t>()) % p;
            break;
        }
        case RingKind::PolyInt: payload_ = detail::int_add(as<IntPoly>(), rhs.as<IntPoly>()); break;
        case RingKind::PolyFp: payload_ = detail::fp_add(as<FpPoly>(), rhs.as<FpPoly>(), p); break;
        case RingKind::FracPolyFp: {
            const auto& a = as<FpFraction>();
            const auto& b = rhs.as<FpFraction>();
            FpPoly num = detail::fp_add(detail::fp_mul(a.num, b.den, p), detail::fp_mul(b.num, a.den, p), p);
            payload_ = make_fraction(num, detail::fp_mul(a.den, b.den, p), p);
            break;
        }
        case RingKind::GaussInt: {
            auto& a = std::get<Gaussian>(payload_);
            a.re += rhs.as<Gaussian>().re;
            a.im += rhs.as<Gaussian>().im;
            break;
        }
        case RingKind::GaussRat: {
            auto& a = std::get<GaussianRational>(payload_);
            a.re += rhs.as<GaussianRational>().re;
            a.im += rhs.as<GaussianRational>().im;
            break;
        }
        case RingKind::Laurent: {
            auto s = laurent_add(as<LaurentSeries>(), rhs.as<LaurentSeries>(), false);
            laurent_normalize(s, ring_.precision());
            payload_ = std::move(s);
            break;
        }
    }
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    require_same_ring(*this, rhs);
    const std::uint64_t p = ring_.prime();
    switch (ring_.kind()) {
        case RingKind::Int: std::get<mpz_class>(payload_) -= rhs.as<mpz_class>(); break;
        case RingKind::Rat: std::get<mpq_class>(payload_) -= rhs.as<mpq_class>(); break;
        case RingKind::Fp: {
            auto& x = std::get<std::uint64_t>(payload_);
            x = (x + p - rhs.as<std::uint64_t>()) % p;
            break;
        }
        case RingKind::PolyInt: payload_ = detail::int_sub(as<IntPoly>(), rhs.as<IntPoly>()); break;
        case RingKind::PolyFp: payload_ = detail::fp_sub(as<FpPoly>(), rhs.as<FpPoly>(), p); break;
        case RingKind::FracPolyFp: {
            const auto& a = as<FpFraction>();
            const auto& b = rhs.as<FpFraction>();
            FpPoly num = detail::fp_sub(detail::fp_mul(a.num, b.den, p), detail::fp_mul(b.num, a.den, p), p);
            payload_ = make_fraction(num, detail::fp_mul(a.den, b.den, p), p);
            break;
        }
        case RingKind::GaussInt: {
            auto& a = std::get<Gaussian>(payload_);
            a.re -= rhs.as<Gaussian>().re;
            a.im -= rhs.as<Gaussian>().im;
            break;
        }
        case RingKind::GaussRat: {
            auto& a = std::get<GaussianRational>(payload_);
            a.re -= rhs.as<GaussianRational>().re;
            a.im -= rhs.as<GaussianRational>().im;
            break;
        }
        case RingKind::Laurent: {
            auto s = laurent_add(as<LaurentSeries>(), rhs.as<LaurentSeries>(), true);
            laurent_normalize(s, ring_.precision());
            payload_ = std::move(s);
            break;
        }
    }
    return *this;
}

Element& Element::operator*=(const Element& rhs) {
    require_same_ring(*this, rhs);
    const std::uint64_t p = ring_.prime();
    switch (ring_.kind()) {
        case RingKind::Int: std::get<mpz_class>(payload_) *= rhs.as<mpz_class>(); break;
        case RingKind::Rat: std::get<mpq_class>(payload_) *= rhs.as<mpq_class>(); break;
        case RingKind::Fp: {
            auto& x = std::get<std::uint64_t>(payload_);
            x = (x * rhs.as<std::uint64_t>()) % p;
            break;
        }
        case RingKind::PolyInt: payload_ = detail::int_mul(as<IntPoly>(), rhs.as<IntPoly>()); break;
        case RingKind::PolyFp: payload_ = detail::fp_mul(as<FpPoly>(), rhs.as<FpPoly>(), p); break;
        case RingKind::FracPolyFp: {
            const auto& a = as<FpFraction>();
            const auto& b = rhs.as<FpFraction>();
            payload_ = make_fraction(detail::fp_mul(a.num, b.num, p), detail::fp_mul(a.den, b.den, p), p);
            break;
        }
        case RingKind::GaussInt: {
            const auto& a = as<Gaussian>();
            const auto& b = rhs.as<Gaussian>();
            payload_ = Gaussian{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
            break;
        }
        case RingKind::GaussRat: {
            const auto& a = as<GaussianRational>();
            const auto& b = rhs.as<GaussianRational>();
            GaussianRational r{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
            r.re.canonicalize();
            r.im.canonicalize();
            payload_ = std::move(r);
            break;
        }
        case RingKind::Laurent: {
            auto s = laurent_mul(as<LaurentSeries>(), rhs.as<LaurentSeries>());
            laurent_normalize(s, ring_.precision());
            payload_ = std::move(s);
            break;
        }
    }
    return *this;
}

Element Element::pow(unsigned long e) const {
    Element result = one(ring_);
    Element base = *this;
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

std::string Element::to_string() const {
    switch (ring_.kind()) {
        case RingKind::Int: return as<mpz_class>().get_str();
        case RingKind::Rat: return rat_string(as<mpq_class>());
        case RingKind::Fp: return std::to_string(as<std::uint64_t>());
        case RingKind::PolyInt: return int_poly_string(as<IntPoly>());
        case RingKind::PolyFp: return fp_poly_string(as<FpPoly>());
        case RingKind::FracPolyFp: {
            const auto& f = as<FpFraction>();
            std::string num = fp_poly_string(f.num);
            if (f.den.c.size() == 1) return num;
            std::string den = fp_poly_string(f.den);
            return "(" + num + ")/(" + den + ")";
        }
        case RingKind::GaussInt:
        case RingKind::GaussRat: {
            std::string re, im;
            bool im_neg = false, re_zero = false, im_zero = false, im_unit = false;
            if (ring_.kind() == RingKind::GaussInt) {
                const auto& g = as<Gaussian>();
                re = g.re.get_str();
                im = mpz_class(abs(g.im)).get_str();
                im_neg = g.im < 0;
                re_zero = g.re == 0;
                im_zero = g.im == 0;
                im_unit = abs(g.im) == 1;
            } else {
                const auto& g = as<GaussianRational>();
                re = g.re.get_str();
                im = mpq_class(abs(g.im)).get_str();
                im_neg = g.im < 0;
                re_zero = g.re == 0;
                im_zero = g.im == 0;
                im_unit = abs(g.im) == 1;
            }
            if (im_zero) return re;
            std::string imag = (im_unit ? std::string() : im + "*") + "i";
            if (re_zero) return (im_neg ? "-" : "") + imag;
            return re + (im_neg ? "-" : "+") + imag;
        }
        case RingKind::Laurent: {
            const auto& s = as<LaurentSeries>();
            std::vector<std::tuple<std::int64_t, std::string, bool>> terms;
            for (std::size_t i = 0; i < s.c.size(); ++i) {
                if (s.c[i] == 0) continue;
                mpz_class m = abs(s.c[i]);
                terms.emplace_back(s.val + static_cast<std::int64_t>(i), m.get_str(), s.c[i] < 0);
            }
            std::string body = terms.empty() ? "0" : format_terms(terms, "q");
            const auto end = window_end(s);
            if (end >= kInfinitePrecision) return body;
            return body + "+O(q^" + std::to_string(end) + ")";
        }
    }
    return "?";
}

bool operator==(const Element& a, const Element& b) {
    if (!(a.ring_ == b.ring_)) return false;
    switch (a.ring_.kind()) {
        case RingKind::Int: return a.as<mpz_class>() == b.as<mpz_class>();
        case RingKind::Rat: return a.as<mpq_class>() == b.as<mpq_class>();
        case RingKind::Fp: return a.as<std::uint64_t>() == b.as<std::uint64_t>();
        case RingKind::PolyInt: return compare_mpz_vec(a.as<IntPoly>().c, b.as<IntPoly>().c) == 0;
        case RingKind::PolyFp: return a.as<FpPoly>() == b.as<FpPoly>();
        case RingKind::FracPolyFp:
            return a.as<FpFraction>().num == b.as<FpFraction>().num &&
                   a.as<FpFraction>().den == b.as<FpFraction>().den;
        case RingKind::GaussInt:
            return a.as<Gaussian>().re == b.as<Gaussian>().re && a.as<Gaussian>().im == b.as<Gaussian>().im;
        case RingKind::GaussRat:
            return a.as<GaussianRational>().re == b.as<GaussianRational>().re &&
                   a.as<GaussianRational>().im == b.as<GaussianRational>().im;
        case RingKind::Laurent: return (a - b).is_zero();
    }
    return false;
}

bool operator<(const Element& a, const Element& b) {
    if (!(a.ring_ == b.ring_)) return a.ring_ < b.ring_;
    int c = 0;
    switch (a.ring_.kind()) {
        case RingKind::Int: c = compare_values(a.as<mpz_class>(), b.as<mpz_class>()); break;
        case RingKind::Rat: c = compare_values(a.as<mpq_class>(), b.as<mpq_class>()); break;
        case RingKind::Fp: c = compare_values(a.as<std::uint64_t>(), b.as<std::uint64_t>()); break;
        case RingKind::PolyInt: c = compare_mpz_vec(a.as<IntPoly>().c, b.as<IntPoly>().c); break;
        case RingKind::PolyFp: c = compare_fp(a.as<FpPoly>(), b.as<FpPoly>()); break;
        case RingKind::FracPolyFp:
            c = compare_fp(a.as<FpFraction>().num, b.as<FpFraction>().num);
            if (c == 0) c = compare_fp(a.as<FpFraction>().den, b.as<FpFraction>().den);
            break;
        case RingKind::GaussInt:
            c = compare_values(a.as<Gaussian>().re, b.as<Gaussian>().re);
            if (c == 0) c = compare_values(a.as<Gaussian>().im, b.as<Gaussian>().im);
            break;
        case RingKind::GaussRat:
            c = compare_values(a.as<GaussianRational>().re, b.as<GaussianRational>().re);
            if (c == 0) c = compare_values(a.as<GaussianRational>().im, b.as<GaussianRational>().im);
            break;
        case RingKind::Laurent:
            c = compare_values(a.as<LaurentSeries>().val, b.as<LaurentSeries>().val);
            if (c == 0) c = compare_mpz_vec(a.as<LaurentSeries>().c, b.as<LaurentSeries>().c);
            break;
    }
    return c < 0;
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

// ---- units and division ---------------------------------------------------------

bool is_invertible(const Element& a) {
    switch (a.ring().kind()) {
        case RingKind::Int: return abs(a.as<mpz_class>()) == 1;
        case RingKind::PolyInt: {
            const auto& c = a.as<IntPoly>().c;
            return c.size() == 1 && abs(c[0]) == 1;
        }
        case RingKind::PolyFp: return a.as<FpPoly>().c.size() == 1;
        case RingKind::GaussInt: {
            const auto& g = a.as<Gaussian>();
            return g.re * g.re + g.im * g.im == 1;
        }
        case RingKind::Laurent: {
            const auto& s = a.as<LaurentSeries>();
            return !s.c.empty() && abs(s.c[0]) == 1;
        }
        case RingKind::Rat:
        case RingKind::Fp:
        case RingKind::FracPolyFp:
        case RingKind::GaussRat: return !a.is_zero();
    }
    return false;
}

Element inverse(const Element& a) {
    if (!is_invertible(a)) {
        if (a.is_zero()) raise(ErrorCode::DivisionByZero, "zero is not invertible");
        raise(ErrorCode::NotDivisible, a.to_string() + " is not a unit of " + a.ring().name());
    }
    return exact_divide(Element::one(a.ring()), a);
}

Element exact_divide(const Element& a, const Element& b) {
    require_same_ring(a, b);
    if (b.is_zero()) raise(ErrorCode::DivisionByZero, "division by zero in " + b.ring().name());
    const Ring& ring = a.ring();
    const std::uint64_t p = ring.prime();
    auto not_divisible = [&]() {
        raise(ErrorCode::NotDivisible, b.to_string() + " does not divide " + a.to_string() + " in " + ring.name());
    };
    switch (ring.kind()) {
        case RingKind::Int: {
            const auto& x = a.as<mpz_class>();
            const auto& y = b.as<mpz_class>();
            if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) not_divisible();
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            return Element(ring, q);
        }
        case RingKind::Rat: return Element(ring, mpq_class(a.as<mpq_class>() / b.as<mpq_class>()));
        case RingKind::Fp: return Element(ring, std::uint64_t{(a.as<std::uint64_t>() * detail::fp_inv(b.as<std::uint64_t>(), p)) % p});
        case RingKind::PolyInt: {
            IntPoly rem = a.as<IntPoly>();
            const auto& d = b.as<IntPoly>().c;
            if (rem.c.size() < d.size()) {
                if (!rem.c.empty()) not_divisible();
                return Element::zero(ring);
            }
            IntPoly quot;
            quot.c.resize(rem.c.size() - d.size() + 1);
            for (std::size_t k = quot.c.size(); k-- > 0;) {
                const mpz_class& top = rem.c[k + d.size() - 1];
                if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) not_divisible();
                mpz_class coef;
                mpz_divexact(coef.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
                for (std::size_t j = 0; j < d.size(); ++j) rem.c[k + j] -= coef * d[j];
                quot.c[k] = coef;
            }
            detail::trim(rem);
            if (!rem.c.empty()) not_divisible();
            return Element(ring, quot);
        }
        case RingKind::PolyFp: {
            auto [q, r] = detail::fp_divmod(a.as<FpPoly>(), b.as<FpPoly>(), p);
            if (!r.c.empty()) not_divisible();
            return Element(ring, q);
        }
        case RingKind::FracPolyFp: {
            const auto& x = a.as<FpFraction>();
            const auto& y = b.as<FpFraction>();
            return Element(ring, FpFraction{detail::fp_mul(x.num, y.den, p), detail::fp_mul(x.den, y.num, p)});
        }
        case RingKind::GaussInt: {
            auto [q, r] = detail::gauss_divmod(a.as<Gaussian>(), b.as<Gaussian>());
            if (r.re != 0 || r.im != 0) not_divisible();
            return Element(ring, q);
        }
        case RingKind::GaussRat: {
            const auto& x = a.as<GaussianRational>();
            const auto& y = b.as<GaussianRational>();
            const mpq_class norm = y.re * y.re + y.im * y.im;
            GaussianRational r{(x.re * y.re + x.im * y.im) / norm, (x.im * y.re - x.re * y.im) / norm};
            return Element(ring, r);
        }
        case RingKind::Laurent: return Element(ring, laurent_div(a.as<LaurentSeries>(), b.as<LaurentSeries>()));
    }
    raise(ErrorCode::Internal, "unreachable");
}

// ---- embeddings --------------------------------------------------------------------

bool embeds_into(const Ring& from, const Ring& to) {
    if (from == to) return true;
    switch (from.kind()) {
        case RingKind::Int:
            return to.kind() == RingKind::Rat || to.kind() == RingKind::GaussInt ||
                   to.kind() == RingKind::GaussRat || to.kind() == RingKind::PolyInt ||
                   to.kind() == RingKind::Laurent;
        case RingKind::Rat: return to.kind() == RingKind::GaussRat;
        case RingKind::GaussInt: return to.kind() == RingKind::GaussRat;
        case RingKind::Fp:
            return (to.kind() == RingKind::PolyFp || to.kind() == RingKind::FracPolyFp) && to.prime() == from.prime();
        case RingKind::PolyFp: return to.kind() == RingKind::FracPolyFp && to.prime() == from.prime();
        case RingKind::PolyInt: return to.kind() == RingKind::Laurent;
        default: return false;
    }
}

Element embed(const Element& a, const Ring& target) {
    const Ring& from = a.ring();
    if (from == target) return a;
    if (!embeds_into(from, target))
        raise(ErrorCode::CoercionFailure, "no embedding " + from.name() + " -> " + target.name());
    switch (from.kind()) {
        case RingKind::Int: {
            if (target.kind() == RingKind::GaussRat)
                return Element(target, GaussianRational{mpq_class(a.as<mpz_class>()), mpq_class(0)});
            return Element::from_integer(target, a.as<mpz_class>());
        }
        case RingKind::Rat: return Element(target, GaussianRational{a.as<mpq_class>(), mpq_class(0)});
        case RingKind::GaussInt:
            return Element(target, GaussianRational{mpq_class(a.as<Gaussian>().re), mpq_class(a.as<Gaussian>().im)});
        case RingKind::Fp: {
            FpPoly c{{a.as<std::uint64_t>()}};
            if (target.kind() == RingKind::PolyFp) return Element(target, c);
            return Element(target, FpFraction{c, FpPoly{{1}}});
        }
        case RingKind::PolyFp: return Element(target, FpFraction{a.as<FpPoly>(), FpPoly{{1}}});
        case RingKind::PolyInt: return Element(target, laurent_from_poly(a.as<IntPoly>(), target.precision()));
        default: break;
    }
    raise(ErrorCode::CoercionFailure, "no embedding " + from.name() + " -> " + target.name());
}

std::optional<Element> in_subring(const Element& a, const Ring& target) {
    const Ring& from = a.ring();
    if (from == target) return a;
    if (!embeds_into(target, from))
        raise(ErrorCode::UnsupportedPair, target.name() + " is not a registered subring of " + from.name());
    switch (from.kind()) {
        case RingKind::Rat: {
            const auto& q = a.as<mpq_class>();
            if (q.get_den() != 1) return std::nullopt;
            return Element(target, q.get_num());
        }
        case RingKind::GaussInt: {
            const auto& g = a.as<Gaussian>();
            if (g.im != 0) return std::nullopt;
            return Element(target, g.re);
        }
        case RingKind::GaussRat: {
            const auto& g = a.as<GaussianRational>();
            if (target.kind() == RingKind::Rat) {
                if (g.im != 0) return std::nullopt;
                return Element(target, g.re);
            }
            if (g.re.get_den() != 1 || g.im.get_den() != 1) return std::nullopt;
            if (target.kind() == RingKind::GaussInt) return Element(target, Gaussian{g.re.get_num(), g.im.get_num()});
            if (g.im != 0) return std::nullopt;
            return Element(target, g.re.get_num());
        }
        case RingKind::PolyInt: {
            const auto& c = a.as<IntPoly>().c;
            if (c.size() > 1) return std::nullopt;
            return Element(target, c.empty() ? mpz_class(0) : c[0]);
        }
        case RingKind::PolyFp: {
            const auto& c = a.as<FpPoly>().c;
            if (c.size() > 1) return std::nullopt;
            return Element(target, std::uint64_t{c.empty() ? 0 : c[0]});
        }
        case RingKind::FracPolyFp: {
            const auto& f = a.as<FpFraction>();
            if (f.den.c.size() != 1) return std::nullopt;
            if (target.kind() == RingKind::PolyFp) return Element(target, f.num);
            if (f.num.c.size() > 1) return std::nullopt;
            return Element(target, std::uint64_t{f.num.c.empty() ? 0 : f.num.c[0]});
        }
        default: break;
    }
    raise(ErrorCode::UnsupportedPair, "membership of " + from.name() + " elements in " + target.name() +
                                          " is not decidable within a truncated window");
}

std::int64_t laurent_window(const Element& a) {
    if (a.ring().kind() != RingKind::Laurent) return kInfinitePrecision;
    return window_end(a.as<LaurentSeries>());
}

}  // namespace evalg
