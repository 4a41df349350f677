#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace quintic::exactalg {

/// Coefficient field tag: the rationals, or the prime field F_p (p < 2^31).
class Field {
public:
    enum class Kind { Rational, Prime };

    static Field rationals() { return Field(Kind::Rational, 0); }
    static Field prime(std::uint64_t p);

    /// Parses "qq" or "fp:<p>".
    static Field parse(std::string_view spec);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    bool is_prime() const { return kind_ == Kind::Prime; }
    std::uint64_t modulus() const { return p_; }

    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

inline constexpr std::uint64_t kDefaultPrime = 65521;

bool is_prime_number(std::uint64_t n);

/// Exact field element. Rationals are kept canonical by GMP (lowest terms,
/// positive denominator); residues lie in [0, p).
class Scalar {
public:
    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
        friend bool operator==(const Residue&, const Residue&) = default;
    };

    Scalar() : value_(mpq_class(0)) {}
    explicit Scalar(mpq_class q);
    Scalar(const Field& field, long v);
    Scalar(const Field& field, const mpq_class& q);

    static Scalar zero(const Field& field) { return Scalar(field, 0L); }
    static Scalar one(const Field& field) { return Scalar(field, 1L); }
    static Scalar residue(std::uint64_t value, std::uint64_t modulus);

    /// Parses "a", "a/b" (rational) or a residue literal in the given field.
    static Scalar parse(const Field& field, std::string_view text);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const;
    std::uint64_t residue_value() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Strict weak order within one field (numeric for residues and rationals).
    friend bool operator<(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    void require_same_field(const Scalar& o) const;

    std::variant<mpq_class, Residue> value_;
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace quintic::exactalg
