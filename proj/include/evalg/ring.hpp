#pragma once

// Exact arithmetic over the closed tower of concrete rings the library
// computes with: Z, Q, F_p, Z[q], F_p[q], F_p(q), Z[i], Q(i) and the
// truncated Laurent ring Z((q)).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evalg/error.hpp"

namespace evalg {

enum class RingKind : std::uint8_t {
    Int,
    Rat,
    Fp,
    PolyInt,     // Z[q]
    PolyFp,      // F_p[q]
    FracPolyFp,  // F_p(q)
    GaussInt,    // Z[i]
    GaussRat,    // Q(i)
    Laurent,     // Z((q)) with a capped coefficient window
};

inline constexpr int kDefaultLaurentPrecision = 32;

/// Descriptor of one ring of the tower. Small value type; two descriptors
/// compare equal iff they denote the same ring.
class Ring {
public:
    static Ring integers();
    static Ring rationals();
    static Ring prime_field(std::uint64_t p);
    static Ring int_poly();
    static Ring fp_poly(std::uint64_t p);
    static Ring fp_rational_functions(std::uint64_t p);
    static Ring gaussian_integers();
    static Ring gaussian_rationals();
    static Ring laurent(int precision = kDefaultLaurentPrecision);

    /// Accepts the canonical names produced by name() plus the short CLI
    /// spellings ("Fq2", "FracFq2", "Zq", "LaurentZ", ...).
    static Ring parse(std::string_view text);

    RingKind kind() const noexcept { return kind_; }
    std::uint64_t prime() const noexcept { return p_; }
    int precision() const noexcept { return precision_; }
    std::uint64_t characteristic() const noexcept;
    bool is_field() const noexcept;

    /// Fraction field when it is a member of the tower.
    std::optional<Ring> fraction_field() const;

    std::string name() const;

    friend bool operator==(const Ring&, const Ring&) = default;
    friend auto operator<=>(const Ring&, const Ring&) = default;

private:
    Ring(RingKind kind, std::uint64_t p, int precision)
        : kind_(kind), p_(p), precision_(precision) {}

    RingKind kind_;
    std::uint64_t p_ = 0;
    int precision_ = 0;
};

// ---- payload types --------------------------------------------------------

/// Dense polynomial in q over F_p, ascending, no trailing zeros.
struct FpPoly {
    std::vector<std::uint64_t> c;
    friend bool operator==(const FpPoly&, const FpPoly&) = default;
};

/// Dense polynomial in q over Z, ascending, no trailing zeros.
struct IntPoly {
    std::vector<mpz_class> c;
};

/// Reduced fraction with monic denominator.
struct FpFraction {
    FpPoly num;
    FpPoly den;
};

struct Gaussian {
    mpz_class re;
    mpz_class im;
};

struct GaussianRational {
    mpq_class re;
    mpq_class im;
};

/// q^val * (c[0] + c[1] q + ...), known modulo q^(val + c.size()).
/// A zero value has an empty window and val holds its absolute precision.
struct LaurentSeries {
    std::int64_t val = 0;
    std::vector<mpz_class> c;
};

inline constexpr std::int64_t kInfinitePrecision = std::numeric_limits<std::int64_t>::max() / 4;

class Element {
public:
    using Payload = std::variant<mpz_class, mpq_class, std::uint64_t, IntPoly, FpPoly, FpFraction,
                                 Gaussian, GaussianRational, LaurentSeries>;

    /// Builds and canonicalizes. The payload alternative must match the ring.
    Element(Ring ring, Payload payload);

    static Element zero(const Ring& ring);
    static Element one(const Ring& ring);
    static Element from_integer(const Ring& ring, const mpz_class& n);
    static Element from_integer(const Ring& ring, long n) { return from_integer(ring, mpz_class(n)); }
    /// q for the polynomial/Laurent rings, i for the Gaussian rings.
    static Element generator(const Ring& ring);

    const Ring& ring() const noexcept { return ring_; }
    const Payload& payload() const noexcept { return payload_; }
    template <class T>
    const T& as() const { return std::get<T>(payload_); }

    bool is_zero() const;
    bool is_one() const;

    Element operator-() const;
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Element& rhs);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Element& b) { return a *= b; }

    Element pow(unsigned long e) const;

    std::string to_string() const;

    /// Representation equality; for the Laurent ring equality within the
    /// common valid window.
    friend bool operator==(const Element& a, const Element& b);
    /// Total order on canonical forms (rings ordered first).
    friend bool operator<(const Element& a, const Element& b);

private:
    Ring ring_;
    Payload payload_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

bool is_invertible(const Element& a);
/// Throws NotDivisible when a is not a unit.
Element inverse(const Element& a);
/// c with b*c == a. Throws DivisionByZero / NotDivisible.
Element exact_divide(const Element& a, const Element& b);

/// Whether `from` embeds canonically into `to`.
bool embeds_into(const Ring& from, const Ring& to);
/// Canonical embedding; throws CoercionFailure when none is registered.
Element embed(const Element& a, const Ring& target);
/// Witness w in `target` with embed(w, a.ring()) == a, if one exists.
/// Throws UnsupportedPair when target does not embed into a.ring().
std::optional<Element> in_subring(const Element& a, const Ring& target);

/// Absolute precision of a Laurent element (kInfinitePrecision for exact zero).
std::int64_t laurent_window(const Element& a);

namespace detail {

bool is_prime(std::uint64_t p);
std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p);

void trim(FpPoly& a);
void trim(IntPoly& a);
FpPoly fp_add(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_scale(const FpPoly& a, std::uint64_t s, std::uint64_t p);
/// Returns (quotient, remainder); b must be nonzero.
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p);
FpPoly fp_from_index(std::uint64_t index, std::uint64_t p);

IntPoly int_add(const IntPoly& a, const IntPoly& b);
IntPoly int_sub(const IntPoly& a, const IntPoly& b);
IntPoly int_mul(const IntPoly& a, const IntPoly& b);

/// Euclidean division in Z[i] with rounded quotient.
std::pair<Gaussian, Gaussian> gauss_divmod(const Gaussian& a, const Gaussian& b);

}  // namespace detail

}  // namespace evalg
