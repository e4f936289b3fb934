#pragma once

#include <optional>

#include "abvar/rational.hpp"
#include "abvar/symbols.hpp"

namespace abvar {

/*
 * Class numbers of the distinguished orders O_1 (maximal), O_8 and O_16
 * (index 8 and 16, defined only for p = 1 mod 4) of the totally definite
 * quaternion algebra over Q(sqrt(p)) ramified exactly at the two infinite
 * places, together with the superspecial mass.
 */
struct OrderClassNumbers {
    Int h_O1;
    std::optional<Int> h_O8;
    std::optional<Int> h_O16;
    /* Exact coefficient of (q - p) in the odd-exponent census. */
    Rational mass_sp;
};

/* h(O_1). Constants 1, 2, 1 at p = 2, 3, 5; closed forms in class numbers
 * and zeta_F(-1) for p >= 7. */
Int h_maximal(const Int& p);

/* h(O_8) and h(O_16) for primes p = 1 mod 4 (p = 5 allowed). */
Int h_order8(const Int& p);
Int h_order16(const Int& p);

/*
 * Class number of a maximal order of the rational definite quaternion
 * algebra ramified at {p, infinity}. Computed by two independent routes
 * which are asserted equal:
 *   - the classical three-term display, and
 *   - the trace-formula specialization: mass (p-1)/12 plus the weighted
 *     contributions of the two imaginary quadratic orders with extra units
 *     (discriminants -4 and -3), their class numbers taken from form
 *     enumeration.
 */
Int deuring_class_number(const Int& p);

/* The two routes, exposed individually for cross-checking. */
Rational deuring_display(const Int& p);
Rational deuring_trace_formula(const Int& p);

/* |Sp|: h(O_1) for p = 2 or p = 3 mod 4; h(O_1)+h(O_8)+h(O_16) for
 * p = 1 mod 4. */
Int superspecial_count(const Int& p);

/* Superspecial mass for p > 5: h(sqrt p) zeta_F(-1)/2, with the extra
 * factor (1 + 5 beta_p) when p = 1 mod 4. */
Rational mass_superspecial(const Int& p);

/* Bundle of all of the above for one prime. */
OrderClassNumbers order_class_numbers(const Int& p);

} // namespace abvar
