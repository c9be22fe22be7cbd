#include "hsw/scalar.hpp"

#include <ostream>

namespace hsw {

namespace {

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p)
{
    mpz_class r = z % p;
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

} // namespace

Field Field::prime(std::uint32_t p)
{
    if (p > 65536 || !is_prime(p))
        throw Error("field characteristic must be a prime <= 65536, got " + std::to_string(p));
    return Field(p);
}

std::string Field::name() const
{
    return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

std::string Field::token() const
{
    return p_ == 0 ? "Q" : "gf" + std::to_string(p_);
}

Scalar Scalar::zero(Field f)
{
    return from_int(f, 0);
}

Scalar Scalar::one(Field f)
{
    return from_int(f, 1);
}

Scalar Scalar::from_int(Field f, long v)
{
    if (f.is_rational())
        return Scalar(mpq_class(v));
    const auto p = static_cast<long>(f.characteristic());
    long r = v % p;
    if (r < 0)
        r += p;
    return Scalar(Residue{static_cast<std::uint32_t>(r), f.characteristic()});
}

Scalar Scalar::from_rational(Field f, const mpq_class& q)
{
    if (f.is_rational())
        return Scalar(q);
    const std::uint32_t p = f.characteristic();
    const std::uint32_t den = reduce(q.get_den(), p);
    if (den == 0)
        throw DivisionByZero("denominator of " + q.get_str() + " vanishes in " + f.name());
    const std::uint64_t num = reduce(q.get_num(), p);
    return Scalar(Residue{static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p), p});
}

Field Scalar::field() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return Field(r->p);
    return Field::rationals();
}

bool Scalar::is_zero() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return r->value == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return r->value == 1;
    return std::get<mpq_class>(v_) == 1;
}

const mpq_class& Scalar::rational() const
{
    if (!std::holds_alternative<mpq_class>(v_))
        throw FieldMismatch("rational() called on a prime-field scalar");
    return std::get<mpq_class>(v_);
}

std::uint32_t Scalar::residue() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return r->value;
    throw FieldMismatch("residue() called on a rational scalar");
}

void Scalar::require_same_field(const Scalar& o) const
{
    if (v_.index() != o.v_.index())
        throw FieldMismatch("mixing rational and prime-field scalars");
    if (const auto* r = std::get_if<Residue>(&v_))
        if (r->p != std::get<Residue>(o.v_).p)
            throw FieldMismatch("mixing scalars of different characteristic");
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    if (const auto* r = std::get_if<Residue>(&v_))
        return Scalar(Residue{pow_mod(r->value, r->p - 2, r->p), r->p});
    mpq_class q = 1 / std::get<mpq_class>(v_);
    return Scalar(std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    require_same_field(o);
    if (auto* r = std::get_if<Residue>(&v_)) {
        r->value = static_cast<std::uint32_t>((std::uint64_t{r->value} + std::get<Residue>(o.v_).value) % r->p);
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    require_same_field(o);
    if (auto* r = std::get_if<Residue>(&v_)) {
        r->value = static_cast<std::uint32_t>(
            (std::uint64_t{r->value} + r->p - std::get<Residue>(o.v_).value) % r->p);
    } else {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    require_same_field(o);
    if (auto* r = std::get_if<Residue>(&v_)) {
        r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} * std::get<Residue>(o.v_).value % r->p);
    } else {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    require_same_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
    mpq_class q = -std::get<mpq_class>(v_);
    return Scalar(std::move(q));
}

Scalar operator*(int k, const Scalar& a)
{
    if (k == 1)
        return a;
    if (k == -1)
        return -a;
    return Scalar::from_int(a.field(), k) * a;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    a.require_same_field(b);
    return a.v_ == b.v_;
}

std::string Scalar::to_short_string() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return std::to_string(r->value);
    return std::get<mpq_class>(v_).get_str();
}

std::string Scalar::to_string() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return std::to_string(r->value) + " mod " + std::to_string(r->p);
    return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

Scalar parse_scalar(Field f, const std::string& text)
{
    std::string body = text;
    if (const auto pos = text.find(" mod "); pos != std::string::npos) {
        const auto p = static_cast<std::uint32_t>(std::stoul(text.substr(pos + 5)));
        if (Field::prime(p) != f)
            throw FieldMismatch("scalar '" + text + "' does not belong to " + f.name());
        body = text.substr(0, pos);
    }
    mpq_class q;
    if (q.set_str(body, 10) != 0)
        throw Error("malformed scalar '" + text + "'");
    if (q.get_den() == 0)
        throw DivisionByZero("zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar::from_rational(f, q);
}

} // namespace hsw
