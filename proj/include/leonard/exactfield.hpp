#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "leonard/error.hpp"

namespace leonard {

/// The scalar field K: either the rationals or GF(p) for a prime p < 2^64.
class FieldSpec {
public:
    enum class Kind { Rational, Prime };

    FieldSpec() = default;

    static FieldSpec rational() { return FieldSpec(); }
    /// Throws Errc::NotPrime unless p is prime.
    static FieldSpec prime(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::Rational; }
    /// Only meaningful for prime fields.
    std::uint64_t modulus() const noexcept { return p_; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return is_rational() ? 0 : p_; }

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    Kind kind_ = Kind::Rational;
    std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n) noexcept;

/// An element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator, residues in [0, p).
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;
    Scalar(const FieldSpec& field, long value);

    static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
    static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }
    static Scalar from_integer(const FieldSpec& field, const mpz_class& value);
    /// num/den mapped into the field; Errc::DivisionByZero if den vanishes there.
    static Scalar from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den);
    /// Parses the interchange text form: "n" or "n/m" over Q, a decimal
    /// residue in [0, p) over GF(p). Errc::ParseError otherwise.
    static Scalar parse(const FieldSpec& field, std::string_view text);

    /// Canonical text form (the inverse of parse).
    std::string to_string() const;

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Errc::DivisionByZero for zero.
    Scalar inverse() const;
    /// Negative exponents invert first.
    Scalar pow(long exponent) const;

    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    /// Errc::FieldMismatch when the operands live in different fields.
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

private:
    void require_same_field(const Scalar& rhs) const;

    FieldSpec field_;
    std::variant<mpq_class, std::uint64_t> value_{mpq_class(0)};
};

enum class ArithOp { Add, Sub, Mul, Div };

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// True iff the field has characteristic 0 or an odd prime characteristic
/// greater than d.
bool characteristic_guard(const FieldSpec& field, std::size_t d) noexcept;

struct QuadraticRoots {
    /// Distinct roots in the field; a double root appears once.
    std::vector<Scalar> roots;
    bool double_root = false;
};

/// Roots of a*x^2 + b*x + c lying in the field. Requires a != 0 and odd or
/// zero characteristic (Errc::CharTwoUnsupported otherwise).
QuadraticRoots solve_quadratic_in_field(const Scalar& a, const Scalar& b, const Scalar& c);

/// A square root in the field if one exists.
std::vector<Scalar> field_square_roots(const Scalar& value);

}  // namespace leonard
