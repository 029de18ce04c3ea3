#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "evalg/ring.hpp"

namespace evalg {

/// Dense univariate polynomial in x over a tower ring.
class Poly {
public:
    /// degree() of the zero polynomial.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    explicit Poly(Ring ring) : ring_(ring) {}
    Poly(Ring ring, std::vector<Element> coeffs);

    static Poly x(const Ring& ring);
    static Poly constant(const Element& c);
    static Poly monomial(const Element& c, std::size_t k);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Element coeff(std::size_t k) const;

    /// Horner evaluation; the point is embedded into the coefficient ring.
    Element eval(const Element& point) const;
    /// x -> x + k.
    Poly shift(const Element& k) const;
    /// Coefficientwise canonical embedding.
    Poly embed_into(const Ring& target) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Element& scalar);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Element& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b);

    std::string to_string(std::string_view var = "x") const;

private:
    void normalize();

    Ring ring_;
    std::vector<Element> coeffs_;
};

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then x_1 > x_2 > ...
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with graded-lex term order.
class MPoly {
public:
    using Terms = std::map<Exponents, Element, GradedLex>;

    MPoly(Ring ring, std::vector<std::string> vars);

    static MPoly variable(const Ring& ring, const std::vector<std::string>& vars, std::size_t index);
    static MPoly constant(const Element& c, const std::vector<std::string>& vars);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<std::string>& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Element coeff(const Exponents& e) const;

    /// Accumulates c into the coefficient of x^e.
    void add_term(const Exponents& e, const Element& c);

    /// Throws ArityMismatch when |point| != nvars(). Evaluates in the larger of the
    /// coefficient ring and the point rings.
    Element eval(std::span<const Element> point) const;
    /// Replaces variable i by images[i] (all images share one variable list).
    MPoly substitute(const std::vector<MPoly>& images) const;
    /// Every term has weighted degree `weight` under the given generator weights.
    bool is_homogeneous(std::span<const std::uint64_t> weights, std::uint64_t weight) const;

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const Element& scalar);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Element& s) { return a *= s; }
    friend bool operator==(const MPoly& a, const MPoly& b);
    MPoly pow(unsigned e) const;

    std::string to_string() const;

private:
    void check_compatible(const MPoly& rhs) const;

    Ring ring_;
    std::vector<std::string> vars_;
    Terms terms_;
};

/// Exact value of P at a point; the univariate case takes a 1-tuple.
Element poly_eval(const Poly& p, std::span<const Element> point);
Element poly_eval(const MPoly& p, std::span<const Element> point);

/// Coordinates (c_0..c_d) of P in the binomial basis C(x,k), by the forward
/// difference table at 0. P must be over Z or Q; the result is over Q.
std::vector<Element> finite_differences(const Poly& p);

/// C(x,k) = x(x-1)...(x-k+1)/k! over Q.
Poly binomial_poly(std::size_t k);

}  // namespace evalg
