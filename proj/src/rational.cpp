#include "abvar/rational.hpp"

#include <ostream>
#include <sstream>

namespace abvar {

void Rational::normalize()
{
    if (den_ == 0)
        throw domain_error("Rational: zero denominator");
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d))
{
    normalize();
}

Int Rational::as_integer(const char* context) const
{
    if (den_ != 1)
        throw integrality_error(std::string("non-integral value ") + str_frac() +
                                (*context ? std::string(" in ") + context : std::string()));
    return num_;
}

Rational Rational::operator-() const
{
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.num_ == 0)
        throw domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

bool operator<(const Rational& a, const Rational& b)
{
    return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string Rational::str_frac() const
{
    return num_.get_str() + "/" + den_.get_str();
}

std::string Rational::str() const
{
    if (den_ == 1)
        return num_.get_str();
    return str_frac();
}

Rational Rational::parse(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw domain_error("Rational::parse: bad literal '" + s + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

} // namespace abvar
