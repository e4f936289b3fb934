#include "abvar/units.hpp"

#include <map>
#include <mutex>

#include "abvar/symbols.hpp"

namespace abvar {

namespace {

std::map<Int, FundamentalUnit> g_unit_memo;
std::mutex g_unit_mutex;

} // namespace

ContinuedFractionSqrt continued_fraction_sqrt(const Int& n)
{
    if (n < 2)
        throw domain_error("continued_fraction_sqrt: n must be >= 2");
    if (is_perfect_square(n))
        throw domain_error("continued_fraction_sqrt: " + n.get_str() + " is a perfect square");

    ContinuedFractionSqrt cf;
    cf.a0 = isqrt_floor(n);

    // Complete-quotient states (P + sqrt(n))/Q; the expansion is purely
    // periodic from index 1, so the period closes at the first return to
    // the index-1 state.
    const Int P1 = cf.a0;
    const Int Q1 = n - cf.a0 * cf.a0;
    Int P = P1, Q = Q1;
    Int a = (cf.a0 + P) / Q;
    cf.period.push_back(a);
    while (true) {
        P = a * Q - P;
        Q = (n - P * P) / Q;
        if (P == P1 && Q == Q1)
            break;
        a = (cf.a0 + P) / Q;
        cf.period.push_back(a);
    }
    return cf;
}

namespace {

/* Minimal x + y*sqrt(d) > 1 with x^2 - d y^2 = +-1: the convergent at the
 * end of the first continued-fraction period. */
FundamentalUnit pell_unit(const Int& d)
{
    const ContinuedFractionSqrt cf = continued_fraction_sqrt(d);
    Int h_prev = 1, h = cf.a0;
    Int k_prev = 0, k = 1;
    for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
        const Int& a = cf.period[i];
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    FundamentalUnit u;
    u.x = h;
    u.y = k;
    u.denom = 1;
    u.norm = (cf.period.size() % 2 == 0) ? 1 : -1;
    if (u.x * u.x - d * u.y * u.y != u.norm)
        throw integrality_error("pell_unit: convergent fails its norm equation at d = " + d.get_str());
    return u;
}

/*
 * For d = 1 mod 4 the maximal order may contain a smaller half-integral
 * unit e = (x + y sqrt d)/2 whose cube is the Z[sqrt d] unit u. Writing
 * t = Tr(e) = x and n = N(e) = N(u), e^3 = u forces t^3 - 3nt = Tr(u),
 * so t is pinned by an integer cube root; x, y follow.
 */
FundamentalUnit half_unit_or(const FundamentalUnit& u, const Int& d)
{
    const Int trace_u = 2 * u.x;
    const Int n = u.norm;
    Int t;
    mpz_root(t.get_mpz_t(), trace_u.get_mpz_t(), 3);
    for (Int cand = t - 1; cand <= t + 2; ++cand) {
        if (cand <= 0)
            continue;
        if (cand * cand * cand - 3 * n * cand != trace_u)
            continue;
        Int num = cand * cand - 4 * n;
        if (num <= 0 || !mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t()))
            continue;
        Int y2 = num / d;
        if (!is_perfect_square(y2))
            continue;
        Int y = isqrt_floor(y2);
        if (y == 0 || mod_ui(cand, 2) != 1 || mod_ui(y, 2) != 1)
            continue;
        FundamentalUnit e;
        e.x = cand;
        e.y = y;
        e.denom = 2;
        e.norm = u.norm;
        if (e.x * e.x - d * e.y * e.y != 4 * e.norm)
            throw integrality_error("half-integral unit fails its norm equation at d = " + d.get_str());
        return e;
    }
    return u;
}

} // namespace

FundamentalUnit fundamental_unit_of_field(const Int& d)
{
    if (d < 2)
        throw domain_error("fundamental_unit_of_field: d must be >= 2");
    if (!is_squarefree(d))
        throw domain_error("fundamental_unit_of_field: d = " + d.get_str() + " is not squarefree");

    {
        std::lock_guard lock(g_unit_mutex);
        auto it = g_unit_memo.find(d);
        if (it != g_unit_memo.end())
            return it->second;
    }

    FundamentalUnit u = pell_unit(d);
    if (mod_ui(d, 4) == 1)
        u = half_unit_or(u, d);

    std::lock_guard lock(g_unit_mutex);
    g_unit_memo.emplace(d, u);
    return u;
}

FundamentalUnit fundamental_unit(const Int& p)
{
    if (!is_prime(p))
        throw domain_error("fundamental_unit: p = " + p.get_str() + " is not prime");
    return fundamental_unit_of_field(p);
}

UnitSymbols unit_symbols(const Int& p)
{
    if (mod_ui(p, 4) != 1)
        throw domain_error("unit_symbols: p = " + p.get_str() + " is not 1 mod 4");
    if (!is_prime(p))
        throw domain_error("unit_symbols: p = " + p.get_str() + " is not prime");

    const FundamentalUnit u = fundamental_unit_of_field(p);
    UnitSymbols s;
    s.varpi_p = u.lies_in_z_sqrt_order() ? 3 : 1;
    s.delta_1_varpi = (s.varpi_p == 1) ? 1 : 0;
    s.beta_p = s.varpi_p * (2 - kronecker_symbol(Int(2), p));
    return s;
}

} // namespace abvar
