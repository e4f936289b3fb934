#pragma once

#include <vector>

#include "abvar/symbols.hpp"

namespace abvar {

/*
 * Integral binary quadratic form a x^2 + b xy + c y^2 of discriminant
 * b^2 - 4ac. In the positive-definite case (disc < 0) a is positive and
 * the reduced representative satisfies |b| <= a <= c with b >= 0 whenever
 * |b| = a or a = c.
 */
struct BinaryQuadraticForm {
    Int a;
    Int b;
    Int c;

    Int discriminant() const { return b * b - 4 * a * c; }
    bool is_primitive() const;
    /* Reduced predicate for the definite case. */
    bool is_reduced_definite() const;
    /* Value a x^2 + b xy + c y^2. */
    Int evaluate(const Int& x, const Int& y) const;

    friend bool operator==(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g)
    {
        return f.a == g.a && f.b == g.b && f.c == g.c;
    }
    friend bool operator<(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g)
    {
        if (f.a != g.a)
            return f.a < g.a;
        if (f.b != g.b)
            return f.b < g.b;
        return f.c < g.c;
    }
};

/*
 * One reduced representative per proper equivalence class of primitive
 * positive-definite forms of discriminant D < 0, in lexicographic order.
 * Exhaustive scan over |b| <= a <= sqrt(|D|/3).
 */
std::vector<BinaryQuadraticForm> reduced_forms(const Discriminant& D);

/* Form class number of the quadratic order of discriminant D < 0
 * (= ideal class number of that order). */
Int class_number_imaginary(const Discriminant& D);

/* Non-maximal imaginary quadratic order, given by the field discriminant
 * and the conductor. */
class ImaginaryOrderSpec {
    Discriminant fundamental_;
    Int conductor_;

  public:
    ImaginaryOrderSpec(Discriminant fundamental, Int conductor);

    const Discriminant& fundamental_discriminant() const { return fundamental_; }
    const Int& conductor() const { return conductor_; }
    Int order_discriminant() const { return conductor_ * conductor_ * fundamental_.value(); }
};

/*
 * Class number of the order of conductor f via the conductor formula
 *   h(R_f) = h(O) * f * prod_{l | f} (1 - (D0/l)/l) / [O^x : R_f^x],
 * where the unit index is 2 for D0 = -4, 3 for D0 = -3 (f > 1 in both
 * cases) and 1 otherwise. Agrees with class_number_imaginary at f^2 D0.
 */
Int class_number_order(const ImaginaryOrderSpec& spec);

/* Narrow class number h+ of a real quadratic field: number of cycles of
 * reduced indefinite forms of the (positive fundamental) discriminant
 * under the right-neighbor operator. */
Int narrow_class_number(const Discriminant& D);

/* Wide class number of the real quadratic field: h+ when the fundamental
 * unit has norm -1, else h+/2. */
Int class_number_real(const Discriminant& D);

} // namespace abvar
