#include "oracles.hpp"

#include "periodica/errors.hpp"
#include "periodica/mass_formula.hpp"
#include "periodica/swan.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

using namespace periodica;

namespace {

// Orbits of a set of permutations of {0..n-1}, by union-find.
std::size_t orbit_count(std::size_t n, const std::vector<std::vector<std::size_t>>& perms)
{
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x];
        return x;
    };
    for (const auto& p : perms) {
        for (std::size_t i = 0; i < n; ++i)
            parent[root(i)] = root(p[i]);
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i)
        roots.insert(root(i));
    return roots.size();
}

double lo(const Interval& x)
{
    return x.lo.to_double();
}

} // namespace

TEST_CASE("swan products and induction")
{
    CHECK(swan_product(SwanClass(28, 3), SwanClass(28, 5)) == SwanClass(28, 15));
    auto free = swan_product(SwanClass(28, 3), SwanClass(28, 19));
    CHECK(free.is_free());
    CHECK(free.r == 1);
    CHECK(swan_product(SwanClass(28, 1), SwanClass(28, 9)) == SwanClass(28, 9));
    CHECK(induce_swan(SwanClass(84, 11), 28) == SwanClass(28, 11));
    CHECK(induce_swan(SwanClass(56, 29), 28).is_free());
    CHECK(SwanClass(28, -1).r == 27);
    CHECK_THROWS_AS(SwanClass(28, 2), ValidationError);
    CHECK_THROWS_AS(swan_product(SwanClass(28, 3), SwanClass(12, 5)), ValidationError);
    CHECK_THROWS_AS(induce_swan(SwanClass(28, 3), 5), ValidationError);
}

TEST_CASE("swan classes form (Z/N)^x and induction is a homomorphism")
{
    for (u64 N = 1; N <= 100; ++N) {
        std::vector<u64> units;
        for (u64 r = 0; r < N; ++r) {
            if (std::gcd(r, N) == 1)
                units.push_back(r);
        }
        if (N == 1)
            units = {0};
        CHECK(units.size() == oracle::phi(N));
        for (u64 a : units) {
            bool has_inverse = false;
            for (u64 b : units) {
                auto prod = swan_product(SwanClass(N, a), SwanClass(N, b));
                CHECK(prod == swan_product(SwanClass(N, b), SwanClass(N, a)));
                CHECK(prod.r == (a * b) % N);
                has_inverse = has_inverse || prod.is_free();
                for (u64 M : oracle::divisors(N)) {
                    auto lhs = induce_swan(prod, M);
                    auto rhs = swan_product(induce_swan(SwanClass(N, a), M), induce_swan(SwanClass(N, b), M));
                    CHECK(lhs == rhs);
                }
            }
            CHECK(has_inverse);
        }
    }
}

TEST_CASE("induction composes")
{
    for (u64 N = 1; N <= 100; ++N) {
        for (u64 M : oracle::divisors(N)) {
            for (u64 L : oracle::divisors(M)) {
                for (u64 r = 1; r < N; r += 2) {
                    if (std::gcd(r, N) != 1)
                        continue;
                    SwanClass a(N, static_cast<i64>(r));
                    CHECK(induce_swan(induce_swan(a, M), L) == induce_swan(a, L));
                }
            }
        }
    }
}

TEST_CASE("trivialization under the augmentation")
{
    CHECK(swan_trivializes_under(2, 3));
    CHECK(swan_trivializes_under(2, 27));
    CHECK_FALSE(swan_trivializes_under(7, 14));
    CHECK_FALSE(swan_trivializes_under(2, 4));
}

TEST_CASE("cancellation predicate")
{
    auto q28 = cancellation_predicate_swan_class(Quaternion{28});
    CHECK_FALSE(q28.cancellation);
    CHECK(q28.m_H == 3);
    auto q16 = cancellation_predicate_swan_class(Quaternion{16});
    CHECK(q16.cancellation);
    CHECK(q16.m_H == 2);
    auto c11 = cancellation_predicate_swan_class(Cyclic{11});
    CHECK(c11.cancellation);
    CHECK(c11.m_H == 0);
    CHECK(c11.reason.find("Eichler") != std::string::npos);
}

TEST_CASE("fork cancellation")
{
    GradedStableClass nontrivial{{"1+2j", "1+4j"}, {{1, 0}}, 0};
    CHECK_FALSE(fork_cancellation(nontrivial));
    CHECK(fork_cancellation_mod_action(nontrivial));
    GradedStableClass trivial{{"1", "1+j"}, {{0, 1}}, 0};
    CHECK_FALSE(fork_cancellation(trivial));
    CHECK_FALSE(fork_cancellation_mod_action(trivial));
    GradedStableClass single{{"P"}, {}, 3};
    CHECK(fork_cancellation(single));
    CHECK(fork_cancellation_mod_action(single));
    CHECK_THROWS_AS(fork_cancellation(GradedStableClass{{}, {}, 0}), ValidationError);
    CHECK_THROWS_AS(fork_orbit_count(GradedStableClass{{"a", "b"}, {{0, 0}}, 0}), ValidationError);
    CHECK_THROWS_AS(fork_orbit_count(GradedStableClass{{"a", "b"}, {{0}}, 0}), ValidationError);
    int separated = 0;
    for (const auto& c : {trivial, nontrivial})
        separated += !fork_cancellation(c) && fork_cancellation_mod_action(c);
    CHECK(separated == 1);
}

TEST_CASE("fork verdicts are relabeling invariant and depend only on orbits")
{
    std::vector<std::vector<std::size_t>> perms{{1, 0, 2, 3, 4}, {0, 1, 3, 4, 2}};
    GradedStableClass cls{{"a", "b", "c", "d", "e"}, perms, 0};
    std::vector<std::size_t> sigma{0, 1, 2, 3, 4};
    do {
        // Conjugate every action by the relabeling sigma.
        GradedStableClass re{std::vector<std::string>(5), {}, 0};
        for (std::size_t i = 0; i < 5; ++i)
            re.vertices[sigma[i]] = cls.vertices[i];
        for (const auto& p : perms) {
            std::vector<std::size_t> q(5);
            for (std::size_t i = 0; i < 5; ++i)
                q[sigma[i]] = sigma[p[i]];
            re.action.push_back(q);
        }
        CHECK(fork_orbit_count(re) == 2);
        CHECK(fork_cancellation(re) == fork_cancellation(cls));
        CHECK(fork_cancellation_mod_action(re) == fork_cancellation_mod_action(cls));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    CHECK(fork_orbit_count(cls) == orbit_count(5, perms));
    GradedStableClass transitive{{"a", "b", "c"}, {{1, 2, 0}}, 0};
    CHECK(fork_cancellation_mod_action(transitive));
}

TEST_CASE("C23 action on the Z/3 class group")
{
    // theta_i swaps the two nonzero classes exactly when i is a non-residue mod 23.
    std::set<u64> squares;
    for (u64 x = 1; x < 23; ++x)
        squares.insert(x * x % 23);
    std::vector<std::vector<std::size_t>> perms;
    std::size_t swaps = 0;
    for (u64 i = 1; i < 23; ++i) {
        bool residue = squares.count(i) > 0;
        perms.push_back(residue ? std::vector<std::size_t>{0, 1, 2} : std::vector<std::size_t>{0, 2, 1});
        swaps += !residue;
    }
    CHECK(swaps == 11);
    GradedStableClass cls{{"0", "1", "2"}, perms, 0};
    CHECK(fork_orbit_count(cls) == 2);
}

TEST_CASE("recorded class group facts")
{
    for (const char* g : {"Q8", "Q12", "Q16", "Q28"})
        CHECK(tg_fact(g).has_value());
    CHECK_FALSE(tg_fact("Q100").has_value());
}

TEST_CASE("N lower bound")
{
    auto b3 = N_lower_bound(3);
    CHECK(b3.n0 == 6);
    CHECK(b3.certified >= 1);
    CHECK(b3.argmin_n >= b3.n0);
    CHECK_THROWS_AS(N_lower_bound(2), ValidationError);

    auto b50 = N_lower_bound(50);
    auto b30 = N_lower_bound(30);
    CHECK(b50.n0 == 34);
    CHECK(b30.log_bound.certainly_less(b50.log_bound));

    std::vector<double> adjusted;
    for (u64 m : {60, 120, 240}) {
        auto b = N_lower_bound(m);
        adjusted.push_back(lo(b.log_bound) - 0.1 * static_cast<double>(m));
    }
    CHECK(adjusted[0] < adjusted[1]);
    CHECK(adjusted[1] < adjusted[2]);

    double prev = -1e300;
    for (u64 m = 40; m <= 400; m += 9) {
        auto b = N_lower_bound(m);
        CHECK(lo(b.log_bound) >= prev - 1e-12);
        prev = lo(b.log_bound);
        CHECK(b.tail_log_min >= lo(b.log_bound) - 1e-9);
    }
}

TEST_CASE("N lower bound never exceeds the value at any admissible n")
{
    for (u64 m : {3, 10, 25, 50, 90}) {
        auto b = N_lower_bound(m);
        for (u64 n = b.n0; n < b.n0 + 40; ++n) {
            auto cs = class_set_lower_bound(2 * n);
            double v = cs.log_value.hi.to_double() - std::log(2.0 * n * oracle::phi(2 * n));
            CHECK(lo(b.log_bound) <= v + 1e-9);
        }
        auto at = class_set_lower_bound(2 * b.argmin_n);
        double v = at.log_value.lo.to_double() - std::log(2.0 * b.argmin_n * oracle::phi(2 * b.argmin_n));
        CHECK(std::abs(lo(b.log_bound) - v) < 1e-6);
    }
}
