#include "abvar/symbols.hpp"

namespace abvar {

int kronecker_symbol(const Int& a_in, const Int& n_in)
{
    if (n_in == 0)
        throw domain_error("kronecker_symbol: n = 0");

    Int a = a_in;
    Int n = n_in;
    int result = 1;

    if (sgn(n) < 0) {
        n = -n;
        if (sgn(a) < 0)
            result = -result;
    }
    // (a/2)^e for the even part of n
    if (mod_ui(n, 2) == 0) {
        if (mod_ui(a, 2) == 0)
            return 0;
        unsigned long a8 = mod_ui(a, 8);
        while (mod_ui(n, 2) == 0) {
            n /= 2;
            if (a8 == 3 || a8 == 5)
                result = -result;
        }
    }
    if (n == 1)
        return result;

    // Jacobi symbol (a/n) for odd n > 1 by binary reciprocity.
    a = mod_floor(a, n);
    while (a != 0) {
        while (mod_ui(a, 2) == 0) {
            a /= 2;
            unsigned long n8 = mod_ui(n, 8);
            if (n8 == 3 || n8 == 5)
                result = -result;
        }
        std::swap(a, n);
        if (mod_ui(a, 4) == 3 && mod_ui(n, 4) == 3)
            result = -result;
        a = mod_floor(a, n);
    }
    return n == 1 ? result : 0;
}

Discriminant::Discriminant(Int value) : value_(std::move(value)), is_fundamental_(false)
{
    if (value_ == 0)
        throw domain_error("Discriminant: zero");
    unsigned long r = mod_ui(value_, 4);
    if (r != 0 && r != 1)
        throw domain_error("Discriminant: value " + value_.get_str() + " is not 0 or 1 mod 4");
    if (r == 1) {
        is_fundamental_ = is_squarefree(value_);
    } else {
        Int m = value_ / 4;
        unsigned long m4 = mod_ui(m, 4);
        is_fundamental_ = (m4 == 2 || m4 == 3) && is_squarefree(m);
    }
}

Discriminant discriminant_of_field(const Int& d)
{
    if (d == 0 || d == 1)
        throw domain_error("discriminant_of_field: degenerate d = " + d.get_str());
    if (!is_squarefree(d))
        throw domain_error("discriminant_of_field: d = " + d.get_str() + " is not squarefree");
    Discriminant out(mod_ui(d, 4) == 1 ? d : Int(4 * d));
    return out;
}

} // namespace abvar
