#pragma once

#include "abvar/integer.hpp"

namespace abvar {

/*
 * Kronecker symbol (a/n), the extension of the Legendre symbol that is
 * completely multiplicative in both arguments, with the usual conventions
 *   (a/2)  = 0 if a even, 1 if a = ±1 mod 8, -1 if a = ±3 mod 8,
 *   (a/-1) = -1 iff a < 0,
 *   (a/1)  = 1.
 * n = 0 is a domain error.
 */
int kronecker_symbol(const Int& a, const Int& n);

inline int kronecker_symbol(long a, long n)
{
    return kronecker_symbol(Int(a), Int(n));
}

/*
 * A quadratic discriminant: a nonzero integer = 0 or 1 mod 4.
 * is_fundamental marks field discriminants (1 mod 4 and squarefree, or 4m
 * with m squarefree and m = 2, 3 mod 4).
 */
class Discriminant {
    Int value_;
    bool is_fundamental_;

  public:
    explicit Discriminant(Int value);

    const Int& value() const { return value_; }
    bool is_fundamental() const { return is_fundamental_; }
    int sign() const { return sgn(value_); }
};

/* Field discriminant of Q(sqrt(d)) for squarefree d not in {0, 1}:
 * d itself if d = 1 mod 4, else 4d. */
Discriminant discriminant_of_field(const Int& d);

} // namespace abvar
