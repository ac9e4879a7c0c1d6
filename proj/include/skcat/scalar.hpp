#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "skcat/errors.hpp"

namespace skcat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* Ground field descriptor: the rationals (p == 0) or GF(p) for a prime p. */
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    static Field gf(long p);

    bool is_rational() const { return p_ == 0; }
    long characteristic() const { return p_; }

    std::string name() const;

    // Accepts "q", "rational", "gf:P".
    static Field parse(const std::string& text);

    bool operator==(const Field&) const = default;

private:
    long p_ = 0;
};

/* An exact field element.  Rationals are kept in lowest terms with a
 * positive denominator (cpp_rational canonicalizes); GF(p) residues are
 * kept in [0, p). */
class Scalar {
public:
    Scalar() = default; // rational zero

    static Scalar zero(Field f) { return Scalar(f, Rational(0)); }
    static Scalar one(Field f) { return Scalar(f, Rational(1)); }
    static Scalar of_int(Field f, const Int& n) { return Scalar(f, Rational(n)); }
    static Scalar of_rational(Field f, const Rational& r);

    // Parses "3/4", "-2", "17".  Over GF(p) a fraction means num * den^-1.
    static Scalar parse(Field f, const std::string& text);

    Field field() const { return field_; }
    bool is_zero() const { return v_ == 0; }
    const Rational& value() const { return v_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Decimal-free exact string: "3/4", "-2", "5".
    std::string str() const;

private:
    Scalar(Field f, Rational v) : field_(f), v_(std::move(v)) { normalize(); }

    void normalize();
    void check_same_field(const Scalar& o) const;

    Field field_;
    Rational v_{0};
};

} // namespace skcat
