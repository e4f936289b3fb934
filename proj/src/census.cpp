#include "abvar/census.hpp"

#include "abvar/forms.hpp"
#include "abvar/quaternion.hpp"
#include "abvar/units.hpp"
#include "abvar/zeta.hpp"

namespace abvar {

namespace {

void require_prime(const Int& p, const char* who)
{
    if (!is_prime(p))
        throw domain_error(std::string(who) + ": " + p.get_str() + " is not prime");
}

Int pow_int(const Int& p, unsigned a)
{
    Int q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), a);
    return q;
}

Int h_field(const Int& m)
{
    const Discriminant d = discriminant_of_field(m);
    return d.sign() < 0 ? class_number_imaginary(d) : class_number_real(d);
}

void finish(CensusResult& r, const char* who)
{
    Rational total;
    for (const CensusTerm& t : r.breakdown)
        total += t.value;
    if (total != Rational(r.count))
        throw internal_error(std::string(who) + ": breakdown sums to " + total.str_frac() +
                             ", count is " + r.count.get_str());
    if (r.count <= 0)
        throw internal_error(std::string(who) + ": nonpositive count");
}

} // namespace

CensusResult census_sqrt_q(const Int& p, unsigned a)
{
    require_prime(p, "census_sqrt_q");
    if (a % 2 == 0)
        throw domain_error("census_sqrt_q: exponent must be odd (use the even-exponent census)");

    const Int q = pow_int(p, a);
    CensusResult r;

    if (p == 2 || p == 3) {
        const long base = (p == 2) ? 1 : 2;
        Rational fiber(q - p, 6);
        r.count = (Rational(base) + fiber).as_integer("census_sqrt_q");
        r.breakdown = {{"superspecial classes", Rational(base)},
                       {"non-superspecial: (q-p)/6", fiber}};
        r.case_label = (p == 2) ? "p = 2 closed form" : "p = 3 closed form";
        finish(r, "census_sqrt_q");
        return r;
    }
    if (p == 5) {
        Rational fiber = Rational(4) * Rational(q - 5, 15);
        r.count = (Rational(3) + fiber).as_integer("census_sqrt_q");
        r.breakdown = {{"superspecial classes", Rational(3)},
                       {"non-superspecial: 4(q-5)/15", fiber}};
        r.case_label = "p = 5 closed form";
        finish(r, "census_sqrt_q");
        return r;
    }

    const Rational z = zeta_minus_one(discriminant_of_field(p));
    const Rational hp(h_field(p));
    const Rational q_weight(q - p + 1);

    if (mod_ui(p, 4) == 3) {
        const Rational unit_term = Rational(13, 8) - Rational(5, 8) * Rational(kronecker_symbol(Int(2), p));
        CensusTerm t1{"zeta term: h(sqrt p)(q-p+1) zeta_F(-1)/2", hp * q_weight * z / 2};
        CensusTerm t2{"h(sqrt -p) term", hp * unit_term * Rational(h_field(-p))};
        CensusTerm t3{"h(sqrt -2p)/4 term", hp * Rational(h_field(-2 * p), 4)};
        CensusTerm t4{"h(sqrt -3p)/6 term", hp * Rational(h_field(-3 * p), 6)};
        r.count = (t1.value + t2.value + t3.value + t4.value).as_integer("census_sqrt_q");
        r.breakdown = {t1, t2, t3, t4};
        r.case_label = "p = 3 mod 4, p > 5";
    } else {
        const UnitSymbols s = unit_symbols(p);
        CensusTerm t1{"zeta term: h(sqrt p)(q-p+1)(1+5 beta_p) zeta_F(-1)/2",
                      hp * q_weight * Rational(1 + 5 * s.beta_p) * z / 2};
        CensusTerm t2{"(1+beta_p) h(sqrt -p)/8 term", hp * Rational(1 + s.beta_p) * Rational(h_field(-p), 8)};
        CensusTerm t3{"2 h(sqrt -3p)/3 term", hp * Rational(2) * Rational(h_field(-3 * p), 3)};
        r.count = (t1.value + t2.value + t3.value).as_integer("census_sqrt_q");
        r.breakdown = {t1, t2, t3};
        r.case_label = "p = 1 mod 4, p > 5";
    }

    r.sp_count = superspecial_count(p);
    r.mass = mass_superspecial(p);
    if (Rational(r.count) != Rational(*r.sp_count) + Rational(q - p) * *r.mass)
        throw internal_error("census_sqrt_q: count != sp_count + (q-p) mass at p = " + p.get_str() +
                             ", a = " + std::to_string(a));
    finish(r, "census_sqrt_q");
    return r;
}

CensusResult census_even(const Int& p, unsigned a)
{
    require_prime(p, "census_even");
    if (a % 2 != 0 || a == 0)
        throw domain_error("census_even: exponent must be even and positive");

    CensusResult r;
    CensusTerm mass{"mass term (p-1)/12", Rational(p - 1, 12)};
    CensusTerm gauss{"Gaussian-unit term (1-(-4/p))/4",
                     Rational(1 - kronecker_symbol(Int(-4), p), 4)};
    CensusTerm eisen{"Eisenstein-unit term (1-(-3/p))/3",
                     Rational(1 - kronecker_symbol(Int(-3), p), 3)};
    r.count = deuring_class_number(p);
    r.breakdown = {mass, eisen, gauss};
    r.case_label = "even exponent: class number of the definite rational quaternion algebra";
    finish(r, "census_even");
    return r;
}

CensusResult census_sqrt_minus_p(const Int& p)
{
    require_prime(p, "census_sqrt_minus_p");

    const Int h = class_number_imaginary(discriminant_of_field(-p));
    long n_extra; // weight of the Z[sqrt(-p)] lattice component, 0 if maximal
    std::string congruence;
    if (p == 2 || mod_ui(p, 4) == 1) {
        n_extra = 0;
        congruence = "p = 2 or p = 1 mod 4";
    } else if (p == 3 || mod_ui(p, 8) == 7) {
        n_extra = 1;
        congruence = "p = 3 or p = 7 mod 8";
    } else {
        n_extra = 3;
        congruence = "p = 3 mod 8, p > 3";
    }
    const long n_pi = 1 + n_extra;

    CensusResult r;
    r.count = n_pi * h;
    r.breakdown.push_back({"maximal-lattice component: h(F)", Rational(h)});
    if (n_extra > 0)
        r.breakdown.push_back({"Z[pi]-lattice component: " + std::to_string(n_extra) + " h(F)",
                               Rational(n_extra) * Rational(h)});
    r.case_label = "N(pi) = " + std::to_string(n_pi) + ", h(F) = " + h.get_str() + "; " + congruence;
    finish(r, "census_sqrt_minus_p");
    return r;
}

Int multichain_count(const Int& m, unsigned k)
{
    if (m < 1)
        throw domain_error("multichain_count: m must be positive");
    Int count = 1;
    if (m == 1)
        return count;
    for (const auto& [prime, e] : factorize(m))
        count *= binomial(e + k, k);
    return count;
}

CensusResult census_divisor_chain(const Int& p, const Int& d0, const Int& big_d, unsigned n,
                                  const std::vector<unsigned>& a_list)
{
    require_prime(p, "census_divisor_chain");
    if (big_d < 1)
        throw domain_error("census_divisor_chain: D must be positive");
    if (gcd(p, big_d) != 1)
        throw domain_error("census_divisor_chain: gcd(p, D) must be 1");
    if (n < 1)
        throw domain_error("census_divisor_chain: n must be >= 1");
    if (a_list.empty())
        throw domain_error("census_divisor_chain: empty exponent list");

    const Discriminant fund(d0);
    if (fund.sign() >= 0 || !fund.is_fundamental())
        throw domain_error("census_divisor_chain: d0 must be a negative fundamental discriminant");

    CensusResult r;
    Rational total;
    for (unsigned ai : a_list) {
        const Int p_power = pow_int(p, ai);
        for (const Int& d : divisors(big_d)) {
            // chains with smallest element d: free choice of the n-1 upper
            // entries between d and D
            const Int chains = multichain_count(big_d / d, n - 1);
            const Int h = class_number_order(ImaginaryOrderSpec(fund, p_power * d));
            CensusTerm t;
            t.label = "a_i = " + std::to_string(ai) + ", d_n = " + d.get_str() + ": " +
                      chains.get_str() + " chains x h(conductor " + (p_power * d).get_str() + ") = " +
                      chains.get_str() + " x " + h.get_str();
            t.value = Rational(chains) * Rational(h);
            total += t.value;
            r.breakdown.push_back(std::move(t));
        }
    }
    r.count = total.as_integer("census_divisor_chain");
    r.case_label = "imaginary quadratic divisor-chain census, dimension n = " + std::to_string(n);
    finish(r, "census_divisor_chain");
    return r;
}

CensusResult run_census(const CensusQuery& query)
{
    return std::visit(
        [](const auto& q) -> CensusResult {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, RealSqrtQ>)
                return census_sqrt_q(q.p, q.a);
            else if constexpr (std::is_same_v<T, RealSqrtQEven>)
                return census_even(q.p, q.a);
            else if constexpr (std::is_same_v<T, ImagSqrtMinusP>)
                return census_sqrt_minus_p(q.p);
            else
                return census_divisor_chain(q.p, q.d0, q.big_d, q.n, q.a_list);
        },
        query);
}

Int fiber_size(const Int& q, const Int& p, const Int& rho_image_order)
{
    require_prime(p, "fiber_size");
    if (rho_image_order < 1)
        throw domain_error("fiber_size: group order must be positive");

    // q = p^a with a odd
    Int rest = q;
    unsigned a = 0;
    while (rest > 1 && mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++a;
    }
    if (rest != 1 || a == 0 || a % 2 == 0)
        throw domain_error("fiber_size: q = " + q.get_str() + " is not an odd power of p = " + p.get_str());

    const Int pgl2_order = p * (p * p - 1);
    if (!mpz_divisible_p(pgl2_order.get_mpz_t(), rho_image_order.get_mpz_t()))
        throw domain_error("fiber_size: " + rho_image_order.get_str() + " does not divide |PGL_2(F_p)| = " +
                           pgl2_order.get_str());

    const Int numerator = q - p;
    if (!mpz_divisible_p(numerator.get_mpz_t(), rho_image_order.get_mpz_t()))
        throw domain_error("fiber_size: " + rho_image_order.get_str() + " does not divide q - p = " +
                           numerator.get_str());
    return numerator / rho_image_order;
}

} // namespace abvar
