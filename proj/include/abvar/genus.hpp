#pragma once

#include <map>
#include <vector>

#include "abvar/forms.hpp"

namespace abvar {

/* CM algebra that is a product of imaginary quadratic fields, given by
 * the list of (negative fundamental) factor discriminants. */
class CMAlgebraSpec {
    std::vector<Discriminant> factors_;

  public:
    explicit CMAlgebraSpec(std::vector<Discriminant> factors);

    const std::vector<Discriminant>& factors() const { return factors_; }
};

/*
 * Number of isomorphism classes in the principal genus:
 *   prod_i h(K_i) / 2^(t_i - 1),
 * with t_i the number of ramified primes of the i-th factor. The Hasse
 * unit index is 1 and h of the totally real subalgebra is 1 for such
 * products, so no other factors enter.
 */
Int principal_genus_count(const CMAlgebraSpec& spec);

/*
 * Independent oracle: partitions the reduced forms of one fundamental
 * discriminant D < 0 into genera by evaluating the assigned characters
 * (Kronecker symbols of the prime-discriminant factors of D) on a
 * represented value coprime to 2D.
 */
struct GenusPartition {
    /* Prime discriminants whose Kronecker symbols are the characters. */
    std::vector<Int> prime_discriminants;
    /* Character vector per reduced form, entries +-1. */
    std::map<BinaryQuadraticForm, std::vector<int>> characters;
    /* The partition itself; the principal genus (all characters +1) first,
     * remaining genera in lexicographic character order. */
    std::vector<std::vector<BinaryQuadraticForm>> genera;
};

GenusPartition genus_partition_oracle(const Discriminant& D);

} // namespace abvar
