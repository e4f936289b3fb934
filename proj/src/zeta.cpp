#include "abvar/zeta.hpp"

#include <map>
#include <mutex>

namespace abvar {

namespace {

std::map<Int, Rational> g_zeta_memo;
std::mutex g_zeta_mutex;

} // namespace

Rational zeta_minus_one(const Discriminant& d_F)
{
    if (d_F.sign() <= 0)
        throw domain_error("zeta_minus_one: discriminant must be positive");
    if (!d_F.is_fundamental())
        throw domain_error("zeta_minus_one: " + d_F.value().get_str() + " is not fundamental");

    const Int& d = d_F.value();
    {
        std::lock_guard lock(g_zeta_mutex);
        auto it = g_zeta_memo.find(d);
        if (it != g_zeta_memo.end())
            return it->second;
    }

    // b runs over all integers with b^2 < d; the b and -b halves contribute
    // equally, so scan b >= 0 and double the b > 0 part.
    Int sum = 0;
    const Int root = isqrt_floor(d);
    for (Int b = 0; b <= root; ++b) {
        Int num = d - b * b;
        if (num <= 0 || mod_ui(num, 4) != 0)
            continue;
        Int n = num / 4;
        Int part = 0;
        for (Int a = 1; a * a <= n; ++a) {
            if (!mpz_divisible_p(n.get_mpz_t(), a.get_mpz_t()))
                continue;
            part += a;
            Int co = n / a;
            if (co != a)
                part += co;
        }
        sum += (b == 0) ? part : 2 * part;
    }

    Rational z(sum, 60);
    std::lock_guard lock(g_zeta_mutex);
    g_zeta_memo.emplace(d, z);
    return z;
}

} // namespace abvar
