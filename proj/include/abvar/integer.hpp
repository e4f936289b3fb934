#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "abvar/errors.hpp"

namespace abvar {

/* All integers in the formula pipeline are arbitrary precision. */
using Int = mpz_class;

inline Int isqrt_floor(const Int& n)
{
    if (n < 0)
        throw domain_error("isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_prime(const Int& n)
{
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/* Nonnegative residue of a mod m, m > 0. */
inline Int mod_floor(const Int& a, const Int& m)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline unsigned long mod_ui(const Int& a, unsigned long m)
{
    return mpz_fdiv_ui(a.get_mpz_t(), m);
}

/* Trial-division factorization of n > 0: (prime, exponent) pairs, primes
 * ascending. Intended for desk-scale inputs; all pipeline discriminants
 * and conductors stay far below the point where this matters. */
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

/* Divisors of n > 0 in ascending order. */
std::vector<Int> divisors(const Int& n);

bool is_squarefree(const Int& n);

inline Int binomial(unsigned long n, unsigned long k)
{
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/* Primes in [2, bound] by sieve; bound is a plain machine integer since
 * sweeps are desk-scale by design. */
std::vector<long> primes_up_to(long bound);

} // namespace abvar
