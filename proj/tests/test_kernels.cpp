#include "periodica/finite_ring.hpp"
#include "periodica/kernels.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

using namespace periodica;
using namespace periodica::kernels;

namespace {

using Poly = std::vector<std::uint64_t>;

// Schoolbook product followed by long division by the monic modulus.
Poly reference_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p)
{
    std::size_t d = f.size() - 1;
    Poly prod(2 * d, 0);
    for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y)
            prod[x + y] = (prod[x + y] + a[x] * b[y]) % p;
    }
    for (std::size_t k = 2 * d; k-- > d;) {
        std::uint64_t c = prod[k];
        for (std::size_t j = 0; j <= d; ++j)
            prod[k - d + j] = (prod[k - d + j] + (p - c) * f[j]) % p;
    }
    prod.resize(d);
    return prod;
}

struct Batch {
    std::uint32_t p;
    unsigned d;
    std::size_t count;
    std::vector<std::uint32_t> a, b, f;
};

Batch random_batch(std::mt19937_64& rng, std::uint32_t p, unsigned d, std::size_t count)
{
    Batch t{p, d, count, std::vector<std::uint32_t>(d * count), std::vector<std::uint32_t>(d * count),
            std::vector<std::uint32_t>(d + 1)};
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    for (auto& x : t.a)
        x = coef(rng);
    for (auto& x : t.b)
        x = coef(rng);
    for (unsigned k = 0; k < d; ++k)
        t.f[k] = coef(rng);
    t.f[d] = 1;
    return t;
}

std::vector<std::uint32_t> run(const Batch& t, Backend backend)
{
    std::vector<std::uint32_t> out(t.d * t.count);
    polymul_mod(t.a.data(), t.b.data(), out.data(), t.count, t.p, t.f.data(), t.d, backend);
    return out;
}

void check_against_reference(const Batch& t, const std::vector<std::uint32_t>& out)
{
    Poly f(t.f.begin(), t.f.end());
    for (std::size_t i = 0; i < t.count; ++i) {
        Poly a(t.d), b(t.d);
        for (unsigned k = 0; k < t.d; ++k) {
            a[k] = t.a[k * t.count + i];
            b[k] = t.b[k * t.count + i];
        }
        Poly want = reference_mulmod(a, b, f, t.p);
        for (unsigned k = 0; k < t.d; ++k)
            CHECK(out[k * t.count + i] == want[k]);
    }
}

} // namespace

TEST_CASE("scalar kernel matches the reference")
{
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 7u, 101u, 2039u, 32749u}) {
        for (unsigned d : {1u, 2u, 3u, 4u, 9u, 17u}) {
            auto t = random_batch(rng, p, d, 13);
            check_against_reference(t, run(t, Backend::Scalar));
        }
    }
}

TEST_CASE("avx2 kernel agrees with scalar")
{
    if (!avx2_available()) {
        MESSAGE("avx2 not available; dispatch falls back to scalar");
    }
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u, 257u, 1021u, 2039u}) {
        for (unsigned d = 1; d <= 12; ++d) {
            for (std::size_t count : {std::size_t{1}, std::size_t{7}, std::size_t{8}, std::size_t{33}}) {
                auto t = random_batch(rng, p, d, count);
                CHECK(run(t, Backend::Avx2) == run(t, Backend::Scalar));
            }
        }
    }
}

TEST_CASE("large primes take the scalar path")
{
    std::mt19937_64 rng(13);
    for (std::uint32_t p : {2053u, 4099u, 32749u}) {
        auto t = random_batch(rng, p, 4, 40);
        std::vector<std::uint32_t> out(t.d * t.count);
        polymul_mod_avx2(t.a.data(), t.b.data(), out.data(), t.count, t.p, t.f.data(), t.d);
        CHECK(out == run(t, Backend::Scalar));
        check_against_reference(t, out);
    }
}

TEST_CASE("backend selection honours PERIODICA_SCALAR")
{
    const char* old = std::getenv("PERIODICA_SCALAR");
    std::string saved = old ? old : "";
    setenv("PERIODICA_SCALAR", "1", 1);
    CHECK(default_backend() == Backend::Scalar);
    unsetenv("PERIODICA_SCALAR");
    CHECK(default_backend() == (avx2_available() ? Backend::Avx2 : Backend::Scalar));
    if (old)
        setenv("PERIODICA_SCALAR", saved.c_str(), 1);
    CHECK(std::string(backend_name(Backend::Scalar)) == "scalar");
    CHECK(std::string(backend_name(Backend::Avx2)) == "avx2");
}

TEST_CASE("ring tables agree across backends")
{
    FiniteQuotientRing a(5, {2, 0, 1, 1}, "x", Backend::Scalar);
    FiniteQuotientRing b(5, {2, 0, 1, 1}, "x", Backend::Avx2);
    for (u32 x = 0; x < a.size(); ++x) {
        for (u32 y = 0; y < a.size(); ++y)
            CHECK(a.mul(x, y) == b.mul(x, y));
    }
}
