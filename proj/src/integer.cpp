#include "abvar/integer.hpp"

#include <algorithm>

namespace abvar {

std::vector<std::pair<Int, unsigned>> factorize(const Int& n)
{
    if (n <= 0)
        throw domain_error("factorize: argument must be positive");
    std::vector<std::pair<Int, unsigned>> out;
    Int m = n;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= m; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1)
        out.emplace_back(m, 1);
    return out;
}

std::vector<Int> divisors(const Int& n)
{
    std::vector<Int> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const size_t base = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_squarefree(const Int& n)
{
    if (n == 0)
        return false;
    Int m = abs(n);
    for (const auto& [p, e] : factorize(m))
        if (e > 1)
            return false;
    return true;
}

std::vector<long> primes_up_to(long bound)
{
    std::vector<long> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
    for (long i = 2; i <= bound; ++i) {
        if (composite[static_cast<size_t>(i)])
            continue;
        out.push_back(i);
        for (long j = i * 2; j <= bound; j += i)
            composite[static_cast<size_t>(j)] = true;
    }
    return out;
}

} // namespace abvar
