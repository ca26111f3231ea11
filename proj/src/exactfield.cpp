#include "leonard/exactfield.hpp"

#include <algorithm>
#include <charconv>

namespace leonard {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NotPrime: return "NotPrime";
        case Errc::CharTwoUnsupported: return "CharTwoUnsupported";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::ZeroScale: return "ZeroScale";
        case Errc::NotMultiplicityFree: return "NotMultiplicityFree";
        case Errc::InvalidInput: return "InvalidInput";
        case Errc::BadCharacteristic: return "BadCharacteristic";
        case Errc::ConstraintViolated: return "ConstraintViolated";
        case Errc::RepeatedDualEigenvalue: return "RepeatedDualEigenvalue";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 base, u64 exp, u64 p) {
    u64 result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1U;
    }
    return result;
}

u64 inv_mod(u64 a, u64 p) {
    // Fermat; p is prime by construction of FieldSpec.
    return pow_mod(a, p - 2, p);
}

u64 reduce_mpz(const mpz_class& value, u64 p) {
    mpz_class r;
    mpz_class modulus;
    mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
    return out;
}

bool parse_digits(std::string_view text, mpz_class& out) {
    if (text.empty()) return false;
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) return false;
    out.set_str(std::string(text), 10);
    return true;
}

[[noreturn]] void parse_fail(std::string_view text, const FieldSpec& field) {
    throw Error(Errc::ParseError, "'" + std::string(text) + "' is not a scalar of " + field.to_string());
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 odd = n - 1;
    unsigned twos = 0;
    while ((odd & 1U) == 0) {
        odd >>= 1U;
        ++twos;
    }
    // These witnesses are deterministic for every n < 2^64.
    for (u64 witness : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(witness, odd, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < twos; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    return FieldSpec(Kind::Prime, p);
}

std::string FieldSpec::to_string() const {
    return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
    if (field.is_rational()) {
        value_ = mpq_class(value);
    } else {
        value_ = reduce_mpz(mpz_class(value), field.modulus());
    }
}

Scalar Scalar::from_integer(const FieldSpec& field, const mpz_class& value) {
    Scalar out = zero(field);
    if (field.is_rational()) {
        out.value_ = mpq_class(value);
    } else {
        out.value_ = reduce_mpz(value, field.modulus());
    }
    return out;
}

Scalar Scalar::from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
    return from_integer(field, num) / from_integer(field, den);
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
    if (field.is_rational()) {
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && body.front() == '-') {
            negative = true;
            body.remove_prefix(1);
        }
        mpz_class num;
        mpz_class den(1);
        auto slash = body.find('/');
        if (slash == std::string_view::npos) {
            if (!parse_digits(body, num)) parse_fail(text, field);
        } else {
            if (!parse_digits(body.substr(0, slash), num) || !parse_digits(body.substr(slash + 1), den)) {
                parse_fail(text, field);
            }
            if (den == 0) parse_fail(text, field);
        }
        if (negative) num = -num;
        return from_fraction(field, num, den);
    }
    mpz_class residue;
    if (!parse_digits(text, residue)) parse_fail(text, field);
    mpz_class modulus;
    u64 p = field.modulus();
    mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
    if (residue >= modulus) parse_fail(text, field);
    return from_integer(field, residue);
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return rational().get_str(10);
    return std::to_string(residue());
}

bool Scalar::is_zero() const noexcept {
    if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<u64>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
    if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
    return std::get<u64>(value_) == 1 % field_.modulus();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in " + field_.to_string());
    Scalar out = *this;
    if (field_.is_rational()) {
        out.value_ = mpq_class(1) / rational();
    } else {
        out.value_ = inv_mod(residue(), field_.modulus());
    }
    return out;
}

Scalar Scalar::pow(long exponent) const {
    Scalar base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1 : static_cast<unsigned long>(exponent);
    Scalar result = one(field_);
    while (e > 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (!(field_ == rhs.field_)) {
        throw Error(Errc::FieldMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
    }
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    if (field_.is_rational()) {
        out.value_ = mpq_class(-rational());
    } else {
        u64 r = residue();
        out.value_ = r == 0 ? u64{0} : field_.modulus() - r;
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += rhs.rational();
    } else {
        u64 p = field_.modulus();
        u64 a = residue();
        u64 b = rhs.residue();
        value_ = a >= p - b ? a - (p - b) : a + b;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) -= rhs.rational();
    } else {
        u64 a = residue();
        u64 b = rhs.residue();
        value_ = a >= b ? a - b : field_.modulus() - (b - a);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= rhs.rational();
    } else {
        value_ = mul_mod(residue(), rhs.residue(), field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "division by zero in " + field_.to_string());
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) /= rhs.rational();
    } else {
        value_ = mul_mod(residue(), inv_mod(rhs.residue(), field_.modulus()), field_.modulus());
    }
    return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    lhs.require_same_field(rhs);
    if (lhs.field_.is_rational()) return lhs.rational() == rhs.rational();
    return lhs.residue() == rhs.residue();
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw Error(Errc::InvalidInput, "unknown arithmetic operation");
}

bool characteristic_guard(const FieldSpec& field, std::size_t d) noexcept {
    if (field.is_rational()) return true;
    u64 p = field.modulus();
    return p != 2 && p > d;
}

namespace {

std::vector<Scalar> rational_square_roots(const Scalar& value) {
    const mpq_class& q = value.rational();
    if (sgn(q) < 0) return {};
    if (sgn(q) == 0) return {value};
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return {};
    mpz_class num_root;
    mpz_class den_root;
    mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
    Scalar root = Scalar::from_fraction(value.field(), num_root, den_root);
    return {root, -root};
}

// Tonelli-Shanks; a must be a nonzero quadratic residue mod an odd prime p.
u64 tonelli_shanks(u64 a, u64 p) {
    u64 q = p - 1;
    u64 s = 0;
    while ((q & 1U) == 0) {
        q >>= 1U;
        ++s;
    }
    u64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s;
    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(a, q, p);
    u64 r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0;
        u64 t2 = t;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, p);
            ++i;
        }
        u64 b = c;
        for (u64 k = 0; k + i + 1 < m; ++k) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

std::vector<Scalar> prime_square_roots(const Scalar& value) {
    const FieldSpec& field = value.field();
    u64 p = field.modulus();
    u64 a = value.residue();
    if (a == 0) return {value};
    if (p == 2) return {value};
    if (pow_mod(a, (p - 1) / 2, p) != 1) return {};
    u64 root = 0;
    if (p < (1ULL << 16)) {
        for (u64 x = 1; x <= p / 2; ++x) {
            if (mul_mod(x, x, p) == a) {
                root = x;
                break;
            }
        }
    } else {
        root = tonelli_shanks(a, p);
    }
    Scalar r = Scalar::from_integer(field, mpz_class(static_cast<unsigned long>(root)));
    return {r, -r};
}

}  // namespace

std::vector<Scalar> field_square_roots(const Scalar& value) {
    return value.field().is_rational() ? rational_square_roots(value) : prime_square_roots(value);
}

QuadraticRoots solve_quadratic_in_field(const Scalar& a, const Scalar& b, const Scalar& c) {
    const FieldSpec& field = a.field();
    if (!field.is_rational() && field.modulus() == 2) {
        throw Error(Errc::CharTwoUnsupported, "quadratic solving over GF(2)");
    }
    if (a.is_zero()) throw Error(Errc::InvalidInput, "leading coefficient is zero");
    Scalar disc = b * b - Scalar(field, 4) * a * c;
    Scalar two_a = Scalar(field, 2) * a;
    QuadraticRoots out;
    if (disc.is_zero()) {
        out.roots.push_back(-b / two_a);
        out.double_root = true;
        return out;
    }
    for (const Scalar& root : field_square_roots(disc)) out.roots.push_back((-b + root) / two_a);
    return out;
}

}  // namespace leonard
