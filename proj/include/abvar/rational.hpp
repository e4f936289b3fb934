#pragma once

#include <iosfwd>
#include <string>

#include "abvar/integer.hpp"

namespace abvar {

/*
 * Exact rational number. Always normalized: denominator positive,
 * gcd(|numerator|, denominator) = 1. Every operation is exact; there is
 * no floating-point mode anywhere in this library.
 */
class Rational {
    Int num_;
    Int den_;

    void normalize();

  public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(Int n, Int d);
    Rational(long n, long d) : Rational(Int(n), Int(d)) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    /* The exact integer value; throws integrality_error otherwise. */
    Int as_integer(const char* context = "") const;

    int sign() const { return sgn(num_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /* Canonical "num/den" form, denominator always spelled out. */
    std::string str_frac() const;
    /* "num" when integral, "num/den" otherwise. */
    std::string str() const;

    /* Parses both forms emitted above. */
    static Rational parse(const std::string& s);
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace abvar
