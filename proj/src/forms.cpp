#include "abvar/forms.hpp"

#include <array>
#include <set>

#include "abvar/cache.hpp"
#include "abvar/rational.hpp"
#include "abvar/units.hpp"

namespace abvar {

bool BinaryQuadraticForm::is_primitive() const
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g == 1;
}

bool BinaryQuadraticForm::is_reduced_definite() const
{
    if (a <= 0)
        return false;
    Int ab = abs(b);
    if (ab > a || a > c)
        return false;
    if ((ab == a || a == c) && sgn(b) < 0)
        return false;
    return true;
}

Int BinaryQuadraticForm::evaluate(const Int& x, const Int& y) const
{
    return a * x * x + b * x * y + c * y * y;
}

std::vector<BinaryQuadraticForm> reduced_forms(const Discriminant& D)
{
    if (D.sign() >= 0)
        throw domain_error("reduced_forms: discriminant " + D.value().get_str() + " is not negative");

    const Int& d = D.value();
    const Int abs_d = -d;
    std::vector<BinaryQuadraticForm> out;
    for (Int a = 1; 3 * a * a <= abs_d; ++a) {
        const Int four_a = 4 * a;
        for (Int b = -a; b <= a; ++b) {
            Int num = b * b - d;
            if (!mpz_divisible_p(num.get_mpz_t(), four_a.get_mpz_t()))
                continue;
            Int c = num / four_a;
            if (c < a)
                continue;
            BinaryQuadraticForm f{a, b, c};
            if (!f.is_reduced_definite() || !f.is_primitive())
                continue;
            out.push_back(std::move(f));
        }
    }
    return out; // already lexicographic: a ascending, then b
}

Int class_number_imaginary(const Discriminant& D)
{
    if (D.sign() >= 0)
        throw domain_error("class_number_imaginary: discriminant must be negative");
    auto& cache = ClassNumberCache::instance();
    if (auto hit = cache.lookup(D.value()))
        return *hit;
    Int h = static_cast<long>(reduced_forms(D).size());
    cache.store(D.value(), h);
    return h;
}

ImaginaryOrderSpec::ImaginaryOrderSpec(Discriminant fundamental, Int conductor)
    : fundamental_(std::move(fundamental)), conductor_(std::move(conductor))
{
    if (fundamental_.sign() >= 0)
        throw domain_error("ImaginaryOrderSpec: fundamental discriminant must be negative");
    if (!fundamental_.is_fundamental())
        throw domain_error("ImaginaryOrderSpec: " + fundamental_.value().get_str() +
                           " is not a fundamental discriminant");
    if (conductor_ < 1)
        throw domain_error("ImaginaryOrderSpec: conductor must be >= 1");
}

Int class_number_order(const ImaginaryOrderSpec& spec)
{
    const Int& d0 = spec.fundamental_discriminant().value();
    const Int& f = spec.conductor();

    Rational h(class_number_imaginary(spec.fundamental_discriminant()));
    h *= Rational(f);
    for (const auto& [l, e] : factorize(f))
        h *= Rational(l - kronecker_symbol(d0, l), l);

    long unit_index = 1;
    if (f > 1 && d0 == -4)
        unit_index = 2;
    else if (f > 1 && d0 == -3)
        unit_index = 3;
    h /= Rational(unit_index);

    return h.as_integer("class_number_order");
}

namespace {

using FormKey = std::array<Int, 3>;

/* Reduced predicate for indefinite forms of non-square discriminant D > 0:
 * |sqrt(D) - 2|a|| < b < sqrt(D), in exact integer arithmetic. */
bool is_reduced_indefinite(const Int& a, const Int& b, const Int& D)
{
    if (b <= 0 || b * b >= D)
        return false;
    Int s = 2 * abs(a);
    Int lo = s - b;
    if (lo > 0 && lo * lo >= D)
        return false;
    Int hi = s + b;
    return D < hi * hi;
}

std::set<FormKey> reduced_indefinite_forms(const Int& D)
{
    std::set<FormKey> forms;
    const Int root = isqrt_floor(D);
    for (Int b = 1; b <= root; ++b) {
        Int num = D - b * b;
        if (mod_ui(num, 4) != 0)
            continue;
        Int n = num / 4; // -a*c, positive
        for (const Int& u : divisors(n)) {
            Int v = n / u;
            // (a, c) = (u, -v) and (-u, v)
            for (int sign : {1, -1}) {
                Int a = sign * u;
                Int c = -sign * v;
                if (!is_reduced_indefinite(a, b, D))
                    continue;
                BinaryQuadraticForm f{a, b, c};
                if (!f.is_primitive())
                    continue;
                forms.insert({a, b, c});
            }
        }
    }
    return forms;
}

/* Right neighbor: (a, b, c) -> (c, b', (b'^2 - D)/(4c)) with b' = -b mod
 * 2|c| shifted into (sqrt(D) - 2|c|, sqrt(D)). Maps reduced to reduced and
 * partitions them into cycles. */
FormKey rho_step(const FormKey& f, const Int& D, const Int& root)
{
    const Int& b = f[1];
    const Int& c = f[2];
    Int two_c = 2 * abs(c);
    Int bp = root - mod_floor(root + b, two_c);
    Int cp = (bp * bp - D) / (4 * c);
    return {c, bp, cp};
}

} // namespace

Int narrow_class_number(const Discriminant& D)
{
    if (D.sign() <= 0 || !D.is_fundamental())
        throw domain_error("narrow_class_number: needs a positive fundamental discriminant");

    const Int& d = D.value();
    const Int root = isqrt_floor(d);
    std::set<FormKey> remaining = reduced_indefinite_forms(d);

    long cycles = 0;
    while (!remaining.empty()) {
        ++cycles;
        FormKey start = *remaining.begin();
        FormKey g = start;
        do {
            remaining.erase(g);
            g = rho_step(g, d, root);
        } while (g != start);
    }
    return cycles;
}

Int class_number_real(const Discriminant& D)
{
    auto& cache = ClassNumberCache::instance();
    if (D.sign() > 0 && D.is_fundamental())
        if (auto hit = cache.lookup(D.value()))
            return *hit;

    Int h_plus = narrow_class_number(D);

    const Int& d = D.value();
    Int radicand = (mod_ui(d, 4) == 1) ? d : Int(d / 4);
    const FundamentalUnit unit = fundamental_unit_of_field(radicand);

    Int h = h_plus;
    if (unit.norm == 1) {
        if (mod_ui(h_plus, 2) != 0)
            throw integrality_error("class_number_real: odd narrow class number with norm +1 unit at " +
                                    d.get_str());
        h = h_plus / 2;
    }
    cache.store(d, h);
    return h;
}

} // namespace abvar
