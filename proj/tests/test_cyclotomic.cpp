#include "oracles.hpp"

#include "periodica/cyclotomic.hpp"
#include "periodica/errors.hpp"

#include <doctest.h>

#include <random>

using namespace periodica;

TEST_CASE("cyclotomic polynomials match brute-force division")
{
    CHECK(cyclotomic_poly(1) == ZPoly{-1, 1});
    CHECK(cyclotomic_poly(12) == ZPoly{1, 0, -1, 0, 1});
    CHECK(cyclotomic_poly(14) == ZPoly{1, -1, 1, -1, 1, -1, 1});
    for (u64 n = 1; n <= 60; ++n) {
        const auto& f = cyclotomic_poly(n);
        CHECK(f == oracle::cyclotomic(n));
        CHECK(static_cast<u64>(degree(f)) == oracle::phi(n));
    }
}

TEST_CASE("product of Phi_d over d | n is x^n - 1")
{
    for (u64 n = 1; n <= 200; ++n) {
        ZPoly prod{1};
        for (u64 d : oracle::divisors(n))
            prod = zpoly_mul(prod, cyclotomic_poly(d));
        ZPoly want(n + 1, 0);
        want[0] = -1;
        want[n] = 1;
        CHECK(prod == want);
    }
    CHECK_THROWS_AS(cyclotomic_poly(0), ValidationError);
}

TEST_CASE("cyclotomic number arithmetic")
{
    auto z = CyclotomicNumber::zeta(12);
    auto one = CyclotomicNumber::rational(1);
    auto p = one;
    for (int i = 0; i < 12; ++i)
        p = p * z;
    CHECK(p == one);
    CHECK(CyclotomicNumber::zeta(12, 6) == CyclotomicNumber::rational(-1));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (u64 e : {5, 8, 9, 12, 15}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto rnd = [&] {
                QPoly c;
                for (u64 i = 0; i < euler_phi(e); ++i)
                    c.push_back(coef(rng));
                return CyclotomicNumber(e, c);
            };
            auto a = rnd(), b = rnd(), c = rnd();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero())
                CHECK(a * a.inverse() == one);
        }
    }
    auto w = CyclotomicNumber::zeta(3) + CyclotomicNumber::zeta(4);
    CHECK(w.conductor() == 12);
    CHECK(CyclotomicNumber::zeta(3).lift(12) == CyclotomicNumber::zeta(12, 4));
}

TEST_CASE("even characters of the real subfield")
{
    CHECK(characters_of_real_subfield(3).size() == 1);
    CHECK(characters_of_real_subfield(5).size() == 2);
    auto chars8 = characters_of_real_subfield(8);
    REQUIRE(chars8.size() == 2);
    int trivial = 0;
    for (const auto& chi : chars8) {
        if (chi.is_trivial()) {
            ++trivial;
            continue;
        }
        CHECK(chi.modulus == 8);
        CHECK(chi.value(3) == CyclotomicNumber::rational(-1));
        CHECK(chi.value(5) == CyclotomicNumber::rational(-1));
        CHECK(chi.value(7) == CyclotomicNumber::rational(1));
        CHECK(chi.value(2).is_zero());
    }
    CHECK(trivial == 1);
    for (u64 m = 3; m <= 60; ++m) {
        auto cs = characters_of_real_subfield(m);
        CHECK(cs.size() == euler_phi(m) / 2);
        for (const auto& chi : cs) {
            CHECK(chi.even);
            for (u64 a = 1; a < chi.modulus; ++a) {
                for (u64 b = 1; b < chi.modulus; ++b)
                    CHECK(chi.value(a * b % chi.modulus) == chi.value(a) * chi.value(b));
            }
        }
    }
}

TEST_CASE("generalized Bernoulli numbers")
{
    for (const auto& chi : characters_of_real_subfield(8)) {
        auto b = bernoulli_B2_chi(chi);
        REQUIRE(b.is_rational());
        CHECK(b.rational_value() == (chi.is_trivial() ? mpq_class(1, 6) : mpq_class(2)));
    }
}

TEST_CASE("zeta_K(-1) against the real quadratic divisor-sum formula")
{
    CHECK(zeta_minus_one({5}) == oracle::real_quadratic_zeta_minus_one(5));
    CHECK(zeta_minus_one({8}) == oracle::real_quadratic_zeta_minus_one(8));
    CHECK(zeta_minus_one({12}) == oracle::real_quadratic_zeta_minus_one(12));
    CHECK(zeta_minus_one({10}) == oracle::real_quadratic_zeta_minus_one(5));
    CHECK(zeta_minus_one({16}) == mpq_class(5, 6));
    CHECK(zeta_minus_one({28}) == mpq_class(416, 21));
    CHECK(zeta_minus_one({3}) == mpq_class(-1, 12));
    CHECK_THROWS_AS(zeta_minus_one({2}), ValidationError);
}

TEST_CASE("real cyclotomic discriminants against the polynomial discriminant")
{
    CHECK(disc_real_cyclotomic({5}) == 5);
    CHECK(disc_real_cyclotomic({8}) == 8);
    CHECK(disc_real_cyclotomic({12}) == 12);
    CHECK(disc_real_cyclotomic({7}) == 49);
    for (u64 m = 3; m <= 60; ++m) {
        mpz_class d = disc_real_cyclotomic({m});
        mpz_class poly = abs(oracle::discriminant(oracle::real_minimal_polynomial(m)));
        REQUIRE(d > 0);
        CHECK(mpz_divisible_p(poly.get_mpz_t(), d.get_mpz_t()) != 0);
        mpz_class q = poly / d;
        CHECK(mpz_perfect_square_p(q.get_mpz_t()) != 0);
    }
}
