#include "periodica/cyclotomic.hpp"

#include "periodica/errors.hpp"

#include <map>
#include <mutex>

namespace periodica {

namespace {

std::recursive_mutex g_phi_mutex;
std::map<u64, ZPoly> g_phi_cache;

QPoly reduce(const QPoly& f, u64 e)
{
    return qpoly_mod(f, to_qpoly(cyclotomic_poly(e)));
}

} // namespace

const ZPoly& cyclotomic_poly(u64 n)
{
    require(n >= 1, "cyclotomic_poly: n must be positive");
    std::lock_guard<std::recursive_mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end())
        return it->second;
    ZPoly f(n + 1, 0);
    f[0] = -1;
    f[n] = 1;
    for (u64 d : divisors(n)) {
        if (d != n)
            f = zpoly_exact_div(f, cyclotomic_poly(d));
    }
    return g_phi_cache.emplace(n, std::move(f)).first->second;
}

CyclotomicNumber::CyclotomicNumber() : e_(1) {}

CyclotomicNumber::CyclotomicNumber(u64 e, QPoly coeffs) : e_(e), c_(reduce(coeffs, e)) {}

CyclotomicNumber CyclotomicNumber::rational(const mpq_class& q, u64 e)
{
    return CyclotomicNumber(e, QPoly{q});
}

CyclotomicNumber CyclotomicNumber::zeta(u64 e, i64 k)
{
    QPoly x(mod(k, e) + 1, 0);
    x.back() = 1;
    return CyclotomicNumber(e, std::move(x));
}

CyclotomicNumber CyclotomicNumber::lift(u64 f) const
{
    require(f % e_ == 0, "lift: target conductor must be a multiple");
    if (f == e_)
        return *this;
    u64 s = f / e_;
    QPoly g(c_.empty() ? 0 : (c_.size() - 1) * s + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        g[i * s] = c_[i];
    return CyclotomicNumber(f, std::move(g));
}

mpq_class CyclotomicNumber::rational_value() const
{
    ensure(is_rational(), "cyclotomic number is not rational");
    return c_.empty() ? mpq_class(0) : c_[0];
}

CyclotomicNumber CyclotomicNumber::inverse() const
{
    require(!is_zero(), "inverse of zero");
    return CyclotomicNumber(e_, qpoly_inverse_mod(c_, to_qpoly(cyclotomic_poly(e_))));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    u64 f = lcm(a.e_, b.e_);
    return CyclotomicNumber(f, qpoly_add(a.lift(f).c_, b.lift(f).c_));
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    u64 f = lcm(a.e_, b.e_);
    return CyclotomicNumber(f, qpoly_sub(a.lift(f).c_, b.lift(f).c_));
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    u64 f = lcm(a.e_, b.e_);
    return CyclotomicNumber(f, qpoly_mul(a.lift(f).c_, b.lift(f).c_));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    u64 f = lcm(a.e_, b.e_);
    return a.lift(f).c_ == b.lift(f).c_;
}

u64 RealCyclotomicField::degree() const
{
    require(m >= 3, "real cyclotomic field requires m >= 3");
    return euler_phi(m) / 2;
}

CyclotomicNumber DirichletCharacter::value(u64 a) const
{
    u64 r = a % modulus;
    if (gcd(r, modulus) != 1)
        return CyclotomicNumber();
    return CyclotomicNumber::zeta(order, exps[r]);
}

namespace {

struct UnitGenerator {
    u64 g;
    u64 order;
};

u64 primitive_root_prime_power(u64 p, unsigned k)
{
    u64 pk = 1;
    for (unsigned i = 0; i < k; ++i)
        pk *= p;
    u64 ph = pk / p * (p - 1);
    for (u64 g = 2; g < pk; ++g) {
        if (gcd(g, p) == 1 && mult_order(g, pk) == ph)
            return g;
    }
    throw InternalError("no primitive root found");
}

std::vector<UnitGenerator> unit_generators(u64 m)
{
    std::vector<UnitGenerator> gens;
    auto fac = factor(m);
    for (auto [p, k] : fac) {
        u64 pk = 1;
        for (unsigned i = 0; i < k; ++i)
            pk *= p;
        u64 rest = m / pk;
        auto embed = [&](u64 local) {
            if (rest == 1)
                return local % pk;
            return crt({{local % pk, pk}, {1, rest}});
        };
        if (p == 2) {
            if (k >= 2)
                gens.push_back({embed(pk - 1), 2});
            if (k >= 3)
                gens.push_back({embed(5), pk / 4});
        } else {
            gens.push_back({embed(primitive_root_prime_power(p, k)), pk / p * (p - 1)});
        }
    }
    return gens;
}

} // namespace

std::vector<DirichletCharacter> characters_of_real_subfield(u64 m)
{
    require(m >= 3, "characters_of_real_subfield: m must be >= 3");
    auto gens = unit_generators(m);
    u64 E = 1;
    for (auto& g : gens)
        E = lcm(E, g.order);

    // dlog[a][i] = exponent of generator i in a.
    std::vector<std::vector<u64>> dlog(m);
    std::vector<u64> idx(gens.size(), 0);
    u64 count = 0;
    for (;;) {
        u64 a = 1 % m;
        for (std::size_t i = 0; i < gens.size(); ++i)
            a = mulmod(a, powmod(gens[i].g, idx[i], m), m);
        ensure(dlog[a].empty(), "unit generators are not independent");
        dlog[a] = idx;
        ++count;
        std::size_t i = 0;
        while (i < gens.size() && ++idx[i] == gens[i].order)
            idx[i++] = 0;
        if (i == gens.size())
            break;
    }
    ensure(count == euler_phi(m), "unit generators do not span (Z/m)^x");

    std::vector<DirichletCharacter> out;
    std::vector<u64> ks(gens.size(), 0);
    for (;;) {
        auto chi_exp = [&](u64 a) {
            u64 s = 0;
            for (std::size_t i = 0; i < gens.size(); ++i)
                s += ks[i] * dlog[a][i] * (E / gens[i].order);
            return s % E;
        };
        if (chi_exp(m - 1) == 0) {
            u64 f = m;
            for (u64 d : divisors(m)) {
                bool trivial_on_kernel = true;
                for (u64 a = 1; a < m && trivial_on_kernel; a += d) {
                    if (gcd(a, m) == 1 && chi_exp(a) != 0)
                        trivial_on_kernel = false;
                }
                if (trivial_on_kernel) {
                    f = d;
                    break;
                }
            }
            std::vector<i64> exps(f, -1);
            u64 g = E;
            for (u64 b = 0; b < f; ++b) {
                if (gcd(b, f) != 1)
                    continue;
                u64 a = b;
                while (gcd(a, m) != 1)
                    a += f;
                u64 x = chi_exp(a % m);
                exps[b] = static_cast<i64>(x);
                g = gcd(g, x);
            }
            u64 ord = E / g;
            for (auto& x : exps) {
                if (x >= 0)
                    x = x / static_cast<i64>(g);
            }
            out.push_back({f, ord, std::move(exps), true});
        }
        std::size_t i = 0;
        while (i < gens.size() && ++ks[i] == gens[i].order)
            ks[i++] = 0;
        if (i == gens.size())
            break;
    }
    ensure(out.size() == euler_phi(m) / 2, "wrong number of even characters");
    return out;
}

CyclotomicNumber bernoulli_B2_chi(const DirichletCharacter& chi)
{
    require(chi.even, "bernoulli_B2_chi: character must be even");
    const u64 f = chi.modulus;
    QPoly acc(chi.order, 0);
    mpq_class f6(static_cast<long>(f), 6);
    for (u64 a = 1; a <= f; ++a) {
        u64 r = a % f;
        if (gcd(r, f) != 1)
            continue;
        mpq_class term = mpq_class(static_cast<long>(a * a), static_cast<long>(f)) - static_cast<long>(a) + f6;
        term.canonicalize();
        acc[static_cast<u64>(chi.exps[r]) % chi.order] += term;
    }
    trim(acc);
    return CyclotomicNumber(chi.order, std::move(acc));
}

mpq_class zeta_minus_one(const RealCyclotomicField& field)
{
    require(field.m >= 3, "zeta_minus_one: m must be >= 3");
    CyclotomicNumber prod = CyclotomicNumber::rational(1);
    for (const auto& chi : characters_of_real_subfield(field.m)) {
        CyclotomicNumber L = bernoulli_B2_chi(chi) * CyclotomicNumber::rational(mpq_class(-1, 2));
        prod = prod * L;
    }
    ensure(prod.is_rational(), "zeta_K(-1) product is not rational");
    return prod.rational_value();
}

namespace {

u64 reduced_conductor(u64 m)
{
    return m % 4 == 2 ? m / 2 : m;
}

// Phi_n(1) for n >= 2.
u64 phi_at_one(u64 n)
{
    auto fac = factor(n);
    return fac.size() == 1 ? fac[0].first : 1;
}

// |Phi_n(-1)| for n >= 3, n not 2 mod 4.
u64 phi_at_minus_one(u64 n)
{
    if (n % 2 == 1)
        return 1;
    return phi_at_one(n / 2);
}

} // namespace

mpz_class norm_one_minus_zeta_squared(u64 m)
{
    require(m >= 3, "norm_one_minus_zeta_squared: m must be >= 3");
    u64 mp = reduced_conductor(m);
    return mpz_class(static_cast<unsigned long>(phi_at_one(mp) * phi_at_minus_one(mp)));
}

mpz_class disc_real_cyclotomic(const RealCyclotomicField& field)
{
    require(field.m >= 3, "disc_real_cyclotomic: m must be >= 3");
    u64 mp = reduced_conductor(field.m);
    u64 ph = euler_phi(mp);
    mpz_class num, den = 1, t;
    mpz_ui_pow_ui(num.get_mpz_t(), mp, ph);
    for (u64 p : prime_divisors(mp)) {
        mpz_ui_pow_ui(t.get_mpz_t(), p, ph / (p - 1));
        den *= t;
    }
    den *= norm_one_minus_zeta_squared(field.m);
    ensure(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0, "discriminant quotient is not integral");
    mpz_class sq = num / den;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
    ensure(root * root == sq, "discriminant square is not a perfect square");
    return root;
}

} // namespace periodica
