#pragma once

#include "periodica/cyclotomic.hpp"
#include "periodica/interval.hpp"

#include <optional>
#include <string>
#include <vector>

namespace periodica {

// Totally definite algebra Q[zeta_m, j] over K = Q(zeta_m)^+.
struct QuaternionAlgebraSpec {
    u64 m;
    std::optional<std::vector<u64>> ramified_norms;
};

struct MassValue {
    mpq_class value;
    mpq_class eichler_constant;
    mpq_class class_number_factor;
    mpq_class ramification_factor;
};

mpq_class eichler_constant(const RealCyclotomicField& field);
MassValue mass_class_set(const QuaternionAlgebraSpec& alg, u64 h_K);

bool sfc_degree_obstruction(const RealCyclotomicField& field);
bool numerator_power_of_two_test(const RealCyclotomicField& field);

// coefficient * sqrt(radicand) / pi^pi_power, with a certified enclosure.
struct ClassSetBound {
    u64 m;
    u64 t;
    mpz_class delta;
    mpq_class coefficient;
    mpz_class radicand;
    u64 pi_power;
    Interval value;
    Interval log_value;
    // max(1, ceil(value.lo)).
    mpz_class certified_count;
};

ClassSetBound class_set_lower_bound(u64 m);

u64 ambiguous_class_number(u64 p);

} // namespace periodica
