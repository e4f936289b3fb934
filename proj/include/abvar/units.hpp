#pragma once

#include <vector>

#include "abvar/integer.hpp"

namespace abvar {

/* Continued fraction of sqrt(n) for non-square n >= 2: a0 followed by the
 * full (purely periodic) period. */
struct ContinuedFractionSqrt {
    Int a0;
    std::vector<Int> period;
};

ContinuedFractionSqrt continued_fraction_sqrt(const Int& n);

/*
 * Fundamental unit (x + y*sqrt(d))/denom of the maximal order of the real
 * quadratic field Q(sqrt(d)), x, y > 0 minimal. denom = 2 happens only for
 * d = 1 mod 4 with x = y = 1 mod 2; norm = (x^2 - d*y^2)/denom^2 is +-1.
 */
struct FundamentalUnit {
    Int x;
    Int y;
    int denom = 1;
    int norm = 1;

    bool lies_in_z_sqrt_order() const { return denom == 1; }
};

/* Spec'd entry point: d must be prime. */
FundamentalUnit fundamental_unit(const Int& p);

/* Same computation for any squarefree d >= 2 (class_number_real needs
 * composite radicands such as d = 10). */
FundamentalUnit fundamental_unit_of_field(const Int& d);

/*
 * Unit-index symbols for p = 1 mod 4:
 *   varpi_p = 3 / [O_F^x : Z[sqrt(p)]^x]  in {1, 3}; the index is 3 exactly
 *             when the fundamental unit is half-integral, so varpi_p = 3
 *             iff the fundamental unit lies in Z[sqrt(p)],
 *   delta_1_varpi = 1 iff varpi_p = 1,
 *   beta_p = varpi_p * (2 - (2/p)).
 */
struct UnitSymbols {
    int varpi_p;
    int delta_1_varpi;
    int beta_p;
};

UnitSymbols unit_symbols(const Int& p);

} // namespace abvar
