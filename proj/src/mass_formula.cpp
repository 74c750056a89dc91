#include "periodica/mass_formula.hpp"

#include "periodica/errors.hpp"

namespace periodica {

mpq_class eichler_constant(const RealCyclotomicField& field)
{
    u64 d = field.degree();
    mpq_class z = zeta_minus_one(field);
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, d - 1);
    mpq_class ei = (d % 2 == 0 ? z : mpq_class(-z)) / mpq_class(two_pow);
    ei.canonicalize();
    ensure(ei > 0, "Eichler constant is not positive for m=" + std::to_string(field.m));
    return ei;
}

MassValue mass_class_set(const QuaternionAlgebraSpec& alg, u64 h_K)
{
    require(h_K >= 1, "mass_class_set: h_K must be positive");
    if (!alg.ramified_norms)
        throw FixtureRequiredError("fixture required: ramified prime norms for m=" + std::to_string(alg.m));
    MassValue out;
    out.eichler_constant = eichler_constant({alg.m});
    out.class_number_factor = static_cast<unsigned long>(h_K);
    out.ramification_factor = 1;
    for (u64 q : *alg.ramified_norms) {
        require(q >= 2, "mass_class_set: prime norms must be >= 2");
        out.ramification_factor *= static_cast<unsigned long>(q - 1);
    }
    out.value = out.eichler_constant * out.class_number_factor * out.ramification_factor;
    out.value.canonicalize();
    return out;
}

bool sfc_degree_obstruction(const RealCyclotomicField& field)
{
    require(field.m >= 1, "sfc_degree_obstruction: m must be positive");
    u64 d = field.m >= 3 ? euler_phi(field.m) / 2 : 1;
    return d <= 6;
}

bool numerator_power_of_two_test(const RealCyclotomicField& field)
{
    mpz_class num = eichler_constant(field).get_num();
    return num > 0 && mpz_popcount(num.get_mpz_t()) == 1;
}

ClassSetBound class_set_lower_bound(u64 m)
{
    require(m >= 6 && m % 2 == 0, "class_set_lower_bound: m must be even and >= 6");
    ClassSetBound b;
    b.m = m;
    u64 ph = euler_phi(m);
    b.t = ph;
    b.pi_power = ph;
    b.delta = disc_real_cyclotomic({m});

    // 2 |D|^{3/2} / (2^t (2 pi)^phi) = (2 |D| / 4^phi) sqrt|D| / pi^phi.
    mpz_class four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, ph);
    b.coefficient = mpq_class(2 * b.delta, four_pow);
    b.coefficient.canonicalize();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), b.delta.get_mpz_t());
    if (root * root == b.delta) {
        b.coefficient *= root;
        b.radicand = 1;
    } else {
        b.radicand = b.delta;
    }

    Interval v = Interval::exact(b.coefficient);
    if (b.radicand != 1)
        v = v * Interval::exact(b.radicand).sqrt();
    v = v / Interval::pi().pow(b.pi_power);
    b.value = v;
    b.log_value = v.log();

    mpz_class c;
    mpfr_get_z(c.get_mpz_t(), v.lo.get(), MPFR_RNDU);
    b.certified_count = c < 1 ? mpz_class(1) : c;
    return b;
}

u64 ambiguous_class_number(u64 p)
{
    require(p % 2 == 1 && is_prime(p), "ambiguous_class_number: p must be an odd prime");
    u64 degree = euler_phi(p);
    // Totally ramified at p; each real place becomes complex.
    u64 ram = euler_phi(p) * 2;
    u64 norm_index = 2;
    ensure(ram % (degree * norm_index) == 0, "ambiguous class number is not integral");
    return ram / (degree * norm_index);
}

} // namespace periodica
