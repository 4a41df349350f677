#include "quintic/exactalg/scalar.hpp"

#include <charconv>

#include "quintic/errors.hpp"

namespace quintic::exactalg {

bool is_prime_number(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p))
        throw InputError("field modulus must be a prime below 2^31, got " + std::to_string(p));
    return Field(Kind::Prime, p);
}

Field Field::parse(std::string_view spec)
{
    if (spec == "qq")
        return rationals();
    if (spec.starts_with("fp:")) {
        auto digits = spec.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
            throw InputError("malformed field spec '" + std::string(spec) + "'");
        return prime(p);
    }
    throw InputError("unknown field spec '" + std::string(spec) + "' (expected qq or fp:<p>)");
}

std::string Field::to_string() const
{
    return is_rational() ? "qq" : "fp:" + std::to_string(p_);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw InputError("division by zero in F_" + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

namespace {

std::uint64_t reduce(const mpq_class& q, std::uint64_t p)
{
    mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
    if (num < 0)
        num += static_cast<unsigned long>(p);
    mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p));
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    return n * mod_inverse(d, p) % p;
}

}  // namespace

Scalar::Scalar(mpq_class q) : value_(std::move(q))
{
    std::get<mpq_class>(value_).canonicalize();
}

Scalar::Scalar(const Field& field, long v)
{
    if (field.is_rational()) {
        value_ = mpq_class(v);
    } else {
        auto p = static_cast<std::int64_t>(field.modulus());
        std::int64_t r = v % p;
        if (r < 0)
            r += p;
        value_ = Residue{static_cast<std::uint64_t>(r), field.modulus()};
    }
}

Scalar::Scalar(const Field& field, const mpq_class& q)
{
    if (field.is_rational()) {
        mpq_class c = q;
        c.canonicalize();
        value_ = c;
    } else {
        value_ = Residue{reduce(q, field.modulus()), field.modulus()};
    }
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t modulus)
{
    Scalar s;
    s.value_ = Residue{value % modulus, modulus};
    return s;
}

Scalar Scalar::parse(const Field& field, std::string_view text)
{
    mpq_class q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0)
        throw InputError("malformed scalar '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return Scalar(field, q);
}

Field Scalar::field() const
{
    if (auto* r = std::get_if<Residue>(&value_))
        return Field(Field::Kind::Prime, r->modulus);
    return Field::rationals();
}

bool Scalar::is_zero() const
{
    if (auto* r = std::get_if<Residue>(&value_))
        return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const
{
    if (auto* r = std::get_if<Residue>(&value_))
        return r->value == 1;
    return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const
{
    if (auto* q = std::get_if<mpq_class>(&value_))
        return *q;
    throw InputError("scalar is a residue, not a rational");
}

std::uint64_t Scalar::residue_value() const
{
    if (auto* r = std::get_if<Residue>(&value_))
        return r->value;
    throw InputError("scalar is a rational, not a residue");
}

void Scalar::require_same_field(const Scalar& o) const
{
    bool same = value_.index() == o.value_.index();
    if (same && value_.index() == 1)
        same = std::get<Residue>(value_).modulus == std::get<Residue>(o.value_).modulus;
    if (!same)
        throw InputError("mixed field tags in arithmetic");
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    if (auto* r = std::get_if<Residue>(&s.value_))
        r->value = r->value == 0 ? 0 : r->modulus - r->value;
    else
        std::get<mpq_class>(s.value_) = -std::get<mpq_class>(s.value_);
    return s;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw InputError("inverse of zero");
    Scalar s = *this;
    if (auto* r = std::get_if<Residue>(&s.value_))
        r->value = mod_inverse(r->value, r->modulus);
    else
        std::get<mpq_class>(s.value_) = 1 / std::get<mpq_class>(s.value_);
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    require_same_field(o);
    if (auto* r = std::get_if<Residue>(&value_))
        r->value = (r->value + std::get<Residue>(o.value_).value) % r->modulus;
    else
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    require_same_field(o);
    if (auto* r = std::get_if<Residue>(&value_))
        r->value = (r->value + r->modulus - std::get<Residue>(o.value_).value) % r->modulus;
    else
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    require_same_field(o);
    if (auto* r = std::get_if<Residue>(&value_))
        r->value = r->value * std::get<Residue>(o.value_).value % r->modulus;
    else
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    require_same_field(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    a.require_same_field(b);
    return a.value_ == b.value_;
}

bool operator<(const Scalar& a, const Scalar& b)
{
    a.require_same_field(b);
    if (auto* r = std::get_if<Scalar::Residue>(&a.value_))
        return r->value < std::get<Scalar::Residue>(b.value_).value;
    return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const
{
    if (auto* r = std::get_if<Residue>(&value_))
        return std::to_string(r->value);
    return std::get<mpq_class>(value_).get_str();
}

}  // namespace quintic::exactalg
