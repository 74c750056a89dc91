#include "oracles.hpp"

#include "periodica/errors.hpp"
#include "periodica/fixtures.hpp"
#include "periodica/mass_formula.hpp"

#include <doctest.h>

#include <cmath>

using namespace periodica;

TEST_CASE("Eichler constants")
{
    CHECK(eichler_constant({16}) == mpq_class(5, 48));
    CHECK(eichler_constant({22}) == mpq_class(5, 132));
    CHECK(eichler_constant({26}) == mpq_class(19, 156));
    CHECK(eichler_constant({28}) == mpq_class(13, 21));
    CHECK(eichler_constant({36}) == mpq_class(31, 36));
    CHECK(eichler_constant({42}) == mpq_class(1, 6));
    for (u64 m = 3; m <= 70; ++m)
        CHECK(eichler_constant({m}) > 0);
}

TEST_CASE("Eichler constants of real quadratic fields from the divisor-sum formula")
{
    // d = 2: ei = zeta_K(-1) / 2.
    for (auto [m, D] : {std::pair<u64, long>{5, 5}, {8, 8}, {12, 12}, {10, 5}}) {
        mpq_class want = oracle::real_quadratic_zeta_minus_one(D) / 2;
        CHECK(eichler_constant({m}) == want);
    }
}

TEST_CASE("numerator power-of-two test")
{
    for (u64 m : {16, 22, 26, 28, 36})
        CHECK_FALSE(numerator_power_of_two_test({m}));
    CHECK(numerator_power_of_two_test({42}));
    CHECK(numerator_power_of_two_test({8}));
}

TEST_CASE("mass of the class set")
{
    auto m = mass_class_set({16, std::vector<u64>{}}, 1);
    CHECK(m.value == mpq_class(5, 48));
    CHECK(mass_class_set({16, std::vector<u64>{3}}, 1).value == mpq_class(5, 24));
    CHECK(mass_class_set({16, std::vector<u64>{}}, 2).value == mpq_class(5, 24));
    auto d = mass_class_set({28, std::vector<u64>{3, 5}}, 3);
    CHECK(d.value == d.eichler_constant * d.class_number_factor * d.ramification_factor);
    CHECK(d.ramification_factor == 8);
    CHECK_THROWS_AS(mass_class_set({16, std::nullopt}, 1), FixtureRequiredError);
    CHECK_THROWS_AS(mass_class_set({16, std::vector<u64>{}}, 0), ValidationError);
}

TEST_CASE("degree obstruction")
{
    CHECK(sfc_degree_obstruction({26}));
    CHECK_FALSE(sfc_degree_obstruction({32}));
    CHECK(sfc_degree_obstruction({4}));
    for (u64 m = 3; m <= 100; ++m)
        CHECK(sfc_degree_obstruction({m}) == (oracle::phi(m) / 2 <= 6));
}

TEST_CASE("class-set lower bound")
{
    auto b16 = class_set_lower_bound(16);
    CHECK(b16.value.certainly_less(Interval::exact(mpz_class(1))));
    CHECK(b16.certified_count == 1);
    CHECK(class_set_lower_bound(102).log_value.certainly_less(class_set_lower_bound(202).log_value));
    CHECK_THROWS_AS(class_set_lower_bound(15), ValidationError);
    CHECK_THROWS_AS(class_set_lower_bound(4), ValidationError);

    const double log4pi = std::log(4 * M_PI);
    for (u64 m = 6; m <= 60; m += 2) {
        auto b = class_set_lower_bound(m);
        mpz_class disc = abs(oracle::discriminant(oracle::real_minimal_polynomial(m)));
        double want = std::log(2.0) + 1.5 * std::log(disc.get_d()) - static_cast<double>(oracle::phi(m)) * log4pi;
        CHECK(b.log_value.lo.to_double() <= want + 1e-9);
        CHECK(b.log_value.hi.to_double() >= want - 1e-9);
        CHECK(b.log_value.hi.to_double() - b.log_value.lo.to_double() < 1e-30 + 1e-12 * std::abs(want));
    }
}

TEST_CASE("ambiguous class number")
{
    for (u64 p = 3; p <= 100; ++p) {
        if (oracle::is_prime(p))
            CHECK(ambiguous_class_number(p) == 1);
    }
    CHECK_THROWS_AS(ambiguous_class_number(9), ValidationError);
    CHECK_THROWS_AS(ambiguous_class_number(2), ValidationError);
}

TEST_CASE("bundled field table agrees with the computation")
{
    auto fields = load_fields();
    CHECK(fields.size() >= 6);
    for (const auto& [m, rec] : fields) {
        CHECK(rec.h_K == 1);
        if (rec.eichler_constant)
            CHECK(*rec.eichler_constant == eichler_constant({m}));
    }
}
