#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "hsw/error.hpp"

namespace hsw {

/// Ground field descriptor: the rationals (characteristic 0) or a prime field GF(p), p <= 2^16.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }
    /// Throws Error unless p is a prime in [2, 65536].
    static Field prime(std::uint32_t p);

    constexpr std::uint32_t characteristic() const { return p_; }
    constexpr bool is_rational() const { return p_ == 0; }

    /// "Q" or "GF(p)".
    std::string name() const;
    /// "Q" or "gf<p>"; the spelling accepted by the CLI and the file format.
    std::string token() const;

    friend constexpr bool operator==(Field, Field) = default;

private:
    friend class Scalar;
    constexpr explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Exact scalar: an arbitrary precision rational or a residue modulo a prime.
///
/// Equality is exact. Arithmetic between scalars of different fields throws
/// FieldMismatch, division by zero throws DivisionByZero.
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;

    static Scalar zero(Field f);
    static Scalar one(Field f);
    static Scalar from_int(Field f, long v);
    /// Maps a rational into f; throws DivisionByZero when the denominator vanishes mod p.
    static Scalar from_rational(Field f, const mpq_class& q);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; only meaningful in rational mode.
    const mpq_class& rational() const;
    /// Residue in [0, p); only meaningful in GF(p) mode.
    std::uint32_t residue() const;

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    /// Multiplication by a small integer (typically a Koszul sign).
    friend Scalar operator*(int k, const Scalar& a);

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "p/q" (or "p" for integers) in rational mode, "k mod p" in GF(p) mode.
    std::string to_string() const;
    /// Compact form used inside linear combinations: "p/q" or "k".
    std::string to_short_string() const;

private:
    struct Residue {
        std::uint32_t value;
        std::uint32_t p;
        friend bool operator==(const Residue&, const Residue&) = default;
    };

    explicit Scalar(Residue r) : v_(r) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}

    void require_same_field(const Scalar& o) const;

    std::variant<mpq_class, Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "p/q", "k", "-3/4" or "k mod p".
Scalar parse_scalar(Field f, const std::string& text);

} // namespace hsw
