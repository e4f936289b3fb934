#include "abvar/quaternion.hpp"

#include "abvar/forms.hpp"
#include "abvar/units.hpp"
#include "abvar/zeta.hpp"

namespace abvar {

namespace {

void require_prime(const Int& p, const char* who)
{
    if (!is_prime(p))
        throw domain_error(std::string(who) + ": " + p.get_str() + " is not prime");
}

/* Class number of Q(sqrt(m)) for squarefree m. */
Int h_field(const Int& m)
{
    const Discriminant d = discriminant_of_field(m);
    return d.sign() < 0 ? class_number_imaginary(d) : class_number_real(d);
}

Rational zeta_of_sqrt(const Int& p)
{
    return zeta_minus_one(discriminant_of_field(p));
}

} // namespace

Int h_maximal(const Int& p)
{
    require_prime(p, "h_maximal");
    if (p == 2)
        return 1;
    if (p == 3)
        return 2;
    if (p == 5)
        return 1;

    const Rational z = zeta_of_sqrt(p);
    const Rational hp(h_field(p));
    Rational v;
    if (mod_ui(p, 4) == 1) {
        v = hp * (z / 2 + Rational(h_field(-p), 8) + Rational(h_field(-3 * p), 6));
    } else {
        const Rational unit_term = Rational(13, 8) - Rational(5, 8) * Rational(kronecker_symbol(Int(2), p));
        v = hp * (z / 2 + unit_term * Rational(h_field(-p)) + Rational(h_field(-2 * p), 4) +
                  Rational(h_field(-3 * p), 6));
    }
    return v.as_integer("h_maximal");
}

Int h_order8(const Int& p)
{
    require_prime(p, "h_order8");
    if (mod_ui(p, 4) != 1)
        throw domain_error("h_order8: defined only for p = 1 mod 4, got " + p.get_str());

    const UnitSymbols s = unit_symbols(p);
    const int two_p = kronecker_symbol(Int(2), p);
    const Rational z = zeta_of_sqrt(p);
    Rational v = Rational(s.varpi_p) * Rational(h_field(p)) *
                 (Rational(4 - two_p) * z / 2 + Rational(2 - two_p) * Rational(h_field(-p), 24) +
                  Rational(s.delta_1_varpi) * Rational(h_field(-3 * p), 3));
    return v.as_integer("h_order8");
}

Int h_order16(const Int& p)
{
    require_prime(p, "h_order16");
    if (mod_ui(p, 4) != 1)
        throw domain_error("h_order16: defined only for p = 1 mod 4, got " + p.get_str());

    const UnitSymbols s = unit_symbols(p);
    const int two_p = kronecker_symbol(Int(2), p);
    const Rational z = zeta_of_sqrt(p);
    Rational v = Rational(s.varpi_p) * Rational(h_field(p)) *
                 (Rational(3 - 2 * two_p) * z + Rational(2 - two_p) * Rational(h_field(-p), 12) +
                  Rational(h_field(-3 * p), 6));
    return v.as_integer("h_order16");
}

Rational deuring_display(const Int& p)
{
    require_prime(p, "deuring_display");
    return Rational(p - 1, 12) + Rational(1, 3) * Rational(1 - kronecker_symbol(Int(-3), p)) +
           Rational(1, 4) * Rational(1 - kronecker_symbol(Int(-4), p));
}

Rational deuring_trace_formula(const Int& p)
{
    require_prime(p, "deuring_trace_formula");

    // Mass of a maximal order of the definite rational quaternion algebra
    // ramified at {p, infinity}, with weights [O_i^x : Z^x].
    Rational h = Rational(p - 1, 12);

    // The only imaginary quadratic orders with units beyond +-1: the
    // Gaussian order (disc -4, w = 2) and the Eisenstein order (disc -3,
    // w = 3). Both are stable under conjugation, their class numbers come
    // from form enumeration, and the optimal-embedding product collapses
    // to the local factor 1 - (d/p) at the ramified prime.
    struct EllipticOrder {
        long disc;
        long w;
    };
    for (const EllipticOrder& B : {EllipticOrder{-4, 2}, EllipticOrder{-3, 3}}) {
        const Rational h_B(class_number_imaginary(Discriminant(Int(B.disc))));
        const Rational embeddings(1 - kronecker_symbol(Int(B.disc), p));
        h += Rational(1, 2) * h_B * (Rational(1) - Rational(1, B.w)) * embeddings;
    }
    return h;
}

Int deuring_class_number(const Int& p)
{
    const Rational display = deuring_display(p);
    const Rational trace = deuring_trace_formula(p);
    if (display != trace)
        throw internal_error("deuring_class_number: routes disagree at p = " + p.get_str() + ": " +
                             display.str_frac() + " vs " + trace.str_frac());
    return display.as_integer("deuring_class_number");
}

Int superspecial_count(const Int& p)
{
    require_prime(p, "superspecial_count");
    if (p == 2 || mod_ui(p, 4) == 3)
        return h_maximal(p);

    const Int h1 = h_maximal(p);
    const Int h8 = h_order8(p);
    const Int h16 = h_order16(p);
    if (p == 5 && h8 + h16 != 2)
        throw internal_error("superspecial_count: p = 5 suborder class numbers must sum to 2, got " +
                             Int(h8 + h16).get_str());
    return h1 + h8 + h16;
}

Rational mass_superspecial(const Int& p)
{
    require_prime(p, "mass_superspecial");
    if (p <= 5)
        throw domain_error("mass_superspecial: p must exceed 5 (small primes use the closed-form census)");

    const Rational z = zeta_of_sqrt(p);
    const Rational hp(h_field(p));
    if (mod_ui(p, 4) == 3)
        return hp * z / 2;
    const UnitSymbols s = unit_symbols(p);
    return hp * Rational(1 + 5 * s.beta_p) * z / 2;
}

OrderClassNumbers order_class_numbers(const Int& p)
{
    require_prime(p, "order_class_numbers");
    OrderClassNumbers out;
    out.h_O1 = h_maximal(p);
    if (mod_ui(p, 4) == 1) {
        out.h_O8 = h_order8(p);
        out.h_O16 = h_order16(p);
    }
    if (p == 2 || p == 3)
        out.mass_sp = Rational(1, 6);
    else if (p == 5)
        out.mass_sp = Rational(4, 15);
    else
        out.mass_sp = mass_superspecial(p);
    return out;
}

} // namespace abvar
