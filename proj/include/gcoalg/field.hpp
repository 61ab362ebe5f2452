#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gcoalg/errors.hpp"

namespace gcoalg {

/// Exact coefficient field: the rationals, or a prime field F_p.
class Field {
  public:
    enum class Kind { rationals, prime };

    Field() = default;

    static Field rationals() { return Field{}; }

    /// F_p; p is checked for primality by trial division. Throws NotPrime.
    static Field prime(std::uint64_t p);

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::prime; }
    std::uint64_t modulus() const { return p_; }

    /// "Q" or "F<p>"; also the serialized form.
    std::string name() const;

    /// Parses "Q" or "F<p>".
    static Field parse(const std::string& text);

    bool operator==(const Field&) const = default;

  private:
    Kind kind_ = Kind::rationals;
    std::uint64_t p_ = 0;
};

/// An exact field element: an arbitrary-precision rational or a residue
/// mod p. All arithmetic is exact; mixing fields throws FieldMismatch.
class Scalar {
  public:
    Scalar() = default;  // rational zero

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long value);

    /// Parses "a/b" (lowest terms enforced on read) over Q, or "r mod p"
    /// or a plain integer over F_p.
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws Error on zero divisor
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws Error on zero.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical string: "a/b" in lowest terms ("a" when b = 1) over Q,
    /// "r mod p" with 0 <= r < p over prime fields.
    std::string str() const;

    /// Residue value for prime-field scalars.
    std::uint64_t residue() const;
    /// Rational value for scalars over Q.
    const mpq_class& rational() const;

  private:
    void check_same_field(const Scalar& o) const;

    Field field_ = Field::rationals();
    mpq_class rat_ = 0;
    std::uint64_t res_ = 0;
};

}  // namespace gcoalg
