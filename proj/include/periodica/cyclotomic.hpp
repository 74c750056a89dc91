#pragma once

#include "periodica/numtheory.hpp"
#include "periodica/polynomial.hpp"

#include <vector>

namespace periodica {

// Phi_n, monic of degree phi(n).
const ZPoly& cyclotomic_poly(u64 n);

// Element of Q(zeta_e) reduced mod Phi_e.
class CyclotomicNumber {
public:
    CyclotomicNumber();
    CyclotomicNumber(u64 e, QPoly coeffs);

    static CyclotomicNumber rational(const mpq_class& q, u64 e = 1);
    // zeta_e^k.
    static CyclotomicNumber zeta(u64 e, i64 k = 1);

    u64 conductor() const { return e_; }
    const QPoly& coeffs() const { return c_; }

    // Same element viewed in Q(zeta_f), e | f.
    CyclotomicNumber lift(u64 f) const;

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    mpq_class rational_value() const;

    CyclotomicNumber inverse() const;

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

private:
    u64 e_;
    QPoly c_;
};

struct RealCyclotomicField {
    u64 m;
    // [K:Q] = phi(m)/2 for m >= 3.
    u64 degree() const;
};

// Character on (Z/f)^x with values zeta_order^exps[a]; exps[a] = -1 off the units.
struct DirichletCharacter {
    u64 modulus;
    u64 order;
    std::vector<i64> exps;
    bool even;

    bool is_trivial() const { return order == 1; }
    CyclotomicNumber value(u64 a) const;
};

// Even characters mod m, each reduced to its primitive conductor.
std::vector<DirichletCharacter> characters_of_real_subfield(u64 m);

// B_{2,chi} for an even primitive character.
CyclotomicNumber bernoulli_B2_chi(const DirichletCharacter& chi);

// zeta_K(-1) for K = Q(zeta_m)^+.
mpq_class zeta_minus_one(const RealCyclotomicField& field);

// |N_{Q(zeta_m)/Q}(1 - zeta_m^2)| in closed form.
mpz_class norm_one_minus_zeta_squared(u64 m);

// |Delta_K| for K = Q(zeta_m)^+.
mpz_class disc_real_cyclotomic(const RealCyclotomicField& field);

} // namespace periodica
