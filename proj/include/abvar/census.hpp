#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abvar/rational.hpp"
#include "abvar/symbols.hpp"

namespace abvar {

/* Weil-number descriptors covered by the census. */
struct RealSqrtQ { // pi = sqrt(p^a), a odd: supersingular abelian surfaces
    Int p;
    unsigned a = 1;
};
struct RealSqrtQEven { // pi = +-sqrt(p^a), a even: supersingular elliptic curves
    Int p;
    unsigned a = 2;
};
struct ImagSqrtMinusP { // pi = sqrt(-p)
    Int p;
};
struct DivisorChainExample { // imaginary quadratic pi with conductor data
    Int p;
    Int d0; // fundamental discriminant of Q(pi)
    Int big_d; // prime-to-p conductor part
    unsigned n = 1; // dimension
    std::vector<unsigned> a_list; // p-power exponents, one per lattice class
};

using CensusQuery = std::variant<RealSqrtQ, RealSqrtQEven, ImagSqrtMinusP, DivisorChainExample>;

struct CensusTerm {
    std::string label;
    Rational value;
};

/*
 * Exact isogeny-class count with its per-term rational breakdown. The
 * breakdown always sums to count. sp_count and mass are present for the
 * odd-exponent real case with p > 5, where count = sp_count + (q-p)*mass.
 */
struct CensusResult {
    Int count;
    std::optional<Int> sp_count;
    std::optional<Rational> mass;
    std::vector<CensusTerm> breakdown;
    std::string case_label;
};

/* |A_pi| for pi = sqrt(p^a), a odd. */
CensusResult census_sqrt_q(const Int& p, unsigned a);

/* |A_pi| for pi = +-sqrt(p^a), a even: the definite rational quaternion
 * class number, independent of a. */
CensusResult census_even(const Int& p, unsigned a);

/* |A_pi| for pi = sqrt(-p): N(pi) * h(Q(sqrt(-p))). */
CensusResult census_sqrt_minus_p(const Int& p);

/* Divisor-chain census for imaginary quadratic pi, summing class numbers
 * of orders of conductor p^{a_i} d_n over divisor chains d_n|...|d_1 of D. */
CensusResult census_divisor_chain(const Int& p, const Int& d0, const Int& big_d, unsigned n,
                                  const std::vector<unsigned>& a_list);

CensusResult run_census(const CensusQuery& query);

/* Fiber cardinality (q - p)/rho_image_order over one superspecial class;
 * the division must be exact and the order must divide |PGL_2(F_p)|. */
Int fiber_size(const Int& q, const Int& p, const Int& rho_image_order);

/* Number of divisor chains e_k | e_{k-1} | ... | e_1 | m of length k.
 * Computed multiplicatively over prime powers: prod binom(m_i + k, k). */
Int multichain_count(const Int& m, unsigned k);

} // namespace abvar
