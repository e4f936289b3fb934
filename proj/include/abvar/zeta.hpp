#pragma once

#include "abvar/rational.hpp"
#include "abvar/symbols.hpp"

namespace abvar {

/*
 * Exact special value zeta_F(-1) for the real quadratic field of
 * fundamental discriminant d_F > 0, by the finite representation sum
 *   zeta_F(-1) = (1/60) * sum of a over b^2 + 4ac = d_F, a, c > 0, b in Z.
 */
Rational zeta_minus_one(const Discriminant& d_F);

} // namespace abvar
