#include "abvar/genus.hpp"

#include <algorithm>

namespace abvar {

namespace {

/* Unique factorization of a fundamental discriminant into prime
 * discriminants: l* = (-1)^((l-1)/2) l for each odd ramified prime, and
 * whatever of {-4, 8, -8} is left over when 2 ramifies. */
std::vector<Int> prime_discriminant_factors(const Discriminant& D)
{
    std::vector<Int> out;
    Int rem = D.value();
    for (const auto& [l, e] : factorize(abs(D.value()))) {
        if (l == 2)
            continue;
        Int l_star = (mod_ui(l, 4) == 1) ? l : Int(-l);
        out.push_back(l_star);
        rem /= l_star;
    }
    if (rem != 1) {
        if (rem != -4 && rem != 8 && rem != -8)
            throw internal_error("prime_discriminant_factors: residual factor " + rem.get_str() +
                                 " at D = " + D.value().get_str());
        out.push_back(rem);
    }
    return out;
}

/* Smallest positive value of the form coprime to 2D; exists because the
 * form is primitive. */
Int represented_coprime(const BinaryQuadraticForm& f, const Int& modulus)
{
    for (long bound = 1; bound <= 64; ++bound) {
        for (long x = 0; x <= bound; ++x) {
            const long y = bound - x;
            for (const long sy : {y, -y}) {
                if (y == 0 && sy != y)
                    continue;
                Int v = f.evaluate(x, sy);
                if (v > 0 && gcd(v, modulus) == 1)
                    return v;
            }
        }
    }
    throw internal_error("represented_coprime: no small represented value coprime to " +
                         modulus.get_str());
}

} // namespace

CMAlgebraSpec::CMAlgebraSpec(std::vector<Discriminant> factors) : factors_(std::move(factors))
{
    if (factors_.empty())
        throw domain_error("CMAlgebraSpec: needs at least one factor");
    for (const Discriminant& d : factors_)
        if (d.sign() >= 0 || !d.is_fundamental())
            throw domain_error("CMAlgebraSpec: factor " + d.value().get_str() +
                               " is not a negative fundamental discriminant");
}

Int principal_genus_count(const CMAlgebraSpec& spec)
{
    Int total = 1;
    for (const Discriminant& d : spec.factors()) {
        const Int h = class_number_imaginary(d);
        const std::size_t t = factorize(abs(d.value())).size();
        Int denom = 1;
        mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), t - 1);
        if (!mpz_divisible_p(h.get_mpz_t(), denom.get_mpz_t()))
            throw integrality_error("principal_genus_count: 2^(t-1) = " + denom.get_str() +
                                    " does not divide h = " + h.get_str() + " at D = " +
                                    d.value().get_str());
        total *= h / denom;
    }
    return total;
}

GenusPartition genus_partition_oracle(const Discriminant& D)
{
    if (D.sign() >= 0 || !D.is_fundamental())
        throw domain_error("genus_partition_oracle: needs a negative fundamental discriminant");

    GenusPartition out;
    out.prime_discriminants = prime_discriminant_factors(D);
    const std::size_t t = out.prime_discriminants.size();

    const Int char_modulus = 2 * abs(D.value());
    std::map<std::vector<int>, std::vector<BinaryQuadraticForm>> by_vector;
    for (const BinaryQuadraticForm& f : reduced_forms(D)) {
        const Int m = represented_coprime(f, char_modulus);
        std::vector<int> vec;
        int product = 1;
        for (const Int& pd : out.prime_discriminants) {
            const int chi = kronecker_symbol(pd, m);
            if (chi == 0)
                throw internal_error("genus_partition_oracle: vanishing character at D = " +
                                     D.value().get_str());
            vec.push_back(chi);
            product *= chi;
        }
        // the characters multiply to (D/m) = 1 on represented values
        if (product != 1)
            throw internal_error("genus_partition_oracle: character product != 1 at D = " +
                                 D.value().get_str() + ", form (" + f.a.get_str() + "," +
                                 f.b.get_str() + "," + f.c.get_str() + ")");
        out.characters.emplace(f, vec);
        by_vector[std::move(vec)].push_back(f);
    }

    // 2^(t-1) genera of equal size
    const std::size_t expected_genera = static_cast<std::size_t>(1) << (t - 1);
    if (by_vector.size() != expected_genera)
        throw internal_error("genus_partition_oracle: " + std::to_string(by_vector.size()) +
                             " genera instead of " + std::to_string(expected_genera) + " at D = " +
                             D.value().get_str());
    const std::size_t genus_size = by_vector.begin()->second.size();
    for (const auto& [vec, forms] : by_vector)
        if (forms.size() != genus_size)
            throw internal_error("genus_partition_oracle: unequal genus sizes at D = " +
                                 D.value().get_str());

    const std::vector<int> principal_vector(t, 1);
    if (!by_vector.count(principal_vector))
        throw internal_error("genus_partition_oracle: no principal genus at D = " + D.value().get_str());
    out.genera.push_back(by_vector.at(principal_vector));
    for (auto& [vec, forms] : by_vector)
        if (vec != principal_vector)
            out.genera.push_back(std::move(forms));
    return out;
}

} // namespace abvar
