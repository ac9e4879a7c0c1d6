#include "skcat/scalar.hpp"

#include <cctype>

namespace skcat {

namespace {

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

// Residue of n modulo p in [0, p).
Int mod_reduce(const Int& n, long p)
{
    Int r = n % p;
    if (r < 0)
        r += p;
    return r;
}

// Inverse of a modulo p via extended Euclid; a must be nonzero mod p.
Int mod_inverse(const Int& a, long p)
{
    Int old_r = mod_reduce(a, p), r = p;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw MathError("not invertible modulo " + std::to_string(p));
    return mod_reduce(old_s, p);
}

} // namespace

Field Field::gf(long p)
{
    if (!is_prime(p))
        throw InputError("GF(p) requires a prime modulus, got " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const
{
    return is_rational() ? std::string("rational") : "gf:" + std::to_string(p_);
}

Field Field::parse(const std::string& text)
{
    if (text == "q" || text == "Q" || text == "rational")
        return rationals();
    if (text.rfind("gf:", 0) == 0) {
        try {
            return gf(std::stol(text.substr(3)));
        } catch (const std::logic_error&) {
            throw InputError("bad field descriptor: " + text);
        }
    }
    throw InputError("bad field descriptor: " + text + " (expected q|rational|gf:P)");
}

Scalar Scalar::of_rational(Field f, const Rational& r)
{
    if (!f.is_rational()) {
        long p = f.characteristic();
        Int den = denominator(r);
        if (den % p == 0)
            throw InputError("denominator of " + r.str() + " vanishes in " + f.name());
        return Scalar(f, Rational(mod_reduce(numerator(r) * mod_inverse(den, p), p)));
    }
    return Scalar(f, r);
}

Scalar Scalar::parse(Field f, const std::string& text)
{
    if (text.empty())
        throw InputError("empty scalar literal");
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw InputError("scalar literal must be decimal-free exact: '" + text + "'");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return of_rational(f, Rational(Int(text)));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0)
            throw InputError("zero denominator in '" + text + "'");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return of_rational(f, Rational(num, den));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("bad scalar literal '" + text + "'");
    }
}

void Scalar::normalize()
{
    if (!field_.is_rational()) {
        // Residues stay integral in [0, p).
        v_ = Rational(mod_reduce(numerator(v_), field_.characteristic()));
    }
}

void Scalar::check_same_field(const Scalar& o) const
{
    if (field_ != o.field_)
        throw InputError("mixed fields: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check_same_field(o);
    return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const
{
    check_same_field(o);
    return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check_same_field(o);
    return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const
{
    return *this * o.inverse();
}

Scalar Scalar::operator-() const
{
    return Scalar(field_, -v_);
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw MathError("division by zero in " + field_.name());
    if (field_.is_rational())
        return Scalar(field_, 1 / v_);
    return Scalar(field_, Rational(mod_inverse(numerator(v_), field_.characteristic())));
}

bool Scalar::operator==(const Scalar& o) const
{
    check_same_field(o);
    return v_ == o.v_;
}

std::string Scalar::str() const
{
    return v_.str();
}

} // namespace skcat
