#include "periodica/swan.hpp"

#include "periodica/errors.hpp"
#include "periodica/mass_formula.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace periodica {

SwanClass::SwanClass(u64 N_, i64 r_) : N(N_), r(0)
{
    require(N >= 1, "SwanClass: N must be positive");
    r = mod(r_, N);
    require(gcd(r, N) == 1, "SwanClass: r = " + std::to_string(r_) + " is not a unit mod " + std::to_string(N));
}

SwanClass swan_product(const SwanClass& a, const SwanClass& b)
{
    require(a.N == b.N, "swan_product: group orders differ (" + std::to_string(a.N) + " vs " + std::to_string(b.N) + ")");
    return SwanClass(a.N, static_cast<i64>(mulmod(a.r, b.r, a.N)));
}

SwanClass induce_swan(const SwanClass& a, u64 M)
{
    require(M >= 1 && a.N % M == 0, "induce_swan: " + std::to_string(M) + " does not divide " + std::to_string(a.N));
    return SwanClass(M, static_cast<i64>(a.r % M));
}

bool swan_trivializes_under(i64 psi_augmentation, i64 r)
{
    u64 e = static_cast<u64>(psi_augmentation < 0 ? -psi_augmentation : psi_augmentation);
    u64 rr = static_cast<u64>(r < 0 ? -r : r);
    return gcd(e, rr) == 1;
}

CancellationVerdict cancellation_predicate_swan_class(const PeriodicGroupSpec& spec)
{
    validate(spec);
    CancellationVerdict v;
    v.m_H = m_H(spec);
    v.cancellation = v.m_H <= 2;
    if (v.m_H == 0)
        v.reason = "m_H = 0: Eichler condition holds, projective cancellation";
    else if (v.cancellation)
        v.reason = "m_H = " + std::to_string(v.m_H) + " <= 2: cancellation";
    else
        v.reason = "m_H = " + std::to_string(v.m_H) + " > 2: non-cancellation";
    return v;
}

namespace {

void validate_fork(const GradedStableClass& cls)
{
    require(!cls.vertices.empty(), "stable class must have at least one minimal vertex");
    std::size_t n = cls.vertices.size();
    for (const auto& perm : cls.action) {
        require(perm.size() == n, "action must permute the minimal vertices");
        std::vector<bool> hit(n, false);
        for (std::size_t i : perm) {
            require(i < n && !hit[i], "action must permute the minimal vertices");
            hit[i] = true;
        }
    }
}

} // namespace

std::size_t fork_orbit_count(const GradedStableClass& cls)
{
    validate_fork(cls);
    std::size_t n = cls.vertices.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& perm : cls.action) {
        for (std::size_t i = 0; i < n; ++i)
            parent[find(i)] = find(perm[i]);
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        count += find(i) == i;
    return count;
}

bool fork_cancellation(const GradedStableClass& cls)
{
    validate_fork(cls);
    return cls.vertices.size() == 1;
}

bool fork_cancellation_mod_action(const GradedStableClass& cls)
{
    return fork_orbit_count(cls) == 1;
}

std::optional<SwanFact> tg_fact(const std::string& group)
{
    static const std::map<std::string, std::string> facts = {
        {"Q8", "C(ZG) = T_G"},
        {"Q12", "T_G = 0"},
        {"Q16", "C(ZG) = T_G"},
        {"Q28", "T_G = 0"},
    };
    auto it = facts.find(group);
    if (it == facts.end())
        return std::nullopt;
    return SwanFact{it->first, it->second};
}

namespace {

constexpr u64 kMaxCut = u64{1} << 20;
constexpr long double kTailMargin = 1e-6L;

std::mutex cache_mutex;
std::map<u64, Interval> log_cache;

// log(class_set_lower_bound(2n) / (2n phi(2n))).
Interval log_term(u64 n)
{
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = log_cache.find(n); it != log_cache.end())
            return it->second;
    }
    u64 M = 2 * n;
    auto b = class_set_lower_bound(M);
    mpz_class denom = mpz_class(static_cast<unsigned long>(M)) * static_cast<unsigned long>(euler_phi(M));
    Interval v = b.log_value - Interval::exact(denom).log();
    std::lock_guard<std::mutex> lock(cache_mutex);
    return log_cache.emplace(n, v).first->second;
}

// Lower bound for log of the term at every even M in [lo, hi) with at most k prime factors:
// log 2 + M c_k A_k(M) - 2.75 log M, A_k(M) = (3/4)(log(M/2) - S_k) - log(4 pi),
// valid when A_k(lo) >= 0 and the bound increases on [lo, hi).
std::optional<long double> tail_segment(long double lo, long double c_k, long double S_k)
{
    const long double log4pi = std::log(4.0L * 3.14159265358979323846264338327950288L);
    long double A = 0.75L * (std::log(lo / 2) - S_k) - log4pi;
    if (A < 0)
        return std::nullopt;
    if (c_k * (A + 0.75L) - 2.75L / lo <= 0)
        return std::nullopt;
    return std::log(2.0L) + lo * c_k * A - 2.75L * std::log(lo) - kTailMargin;
}

// Minimum over the tail n >= n_cut, up to n < 2^63; nullopt if not certified.
std::optional<long double> tail_bound(u64 n_cut)
{
    static const u64 primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    long double start = 2.0L * static_cast<long double>(n_cut);
    long double c = 1, S = 0, P = 1;
    std::optional<long double> best;
    for (int k = 1; k <= 15; ++k) {
        long double p = static_cast<long double>(primes[k - 1]);
        c *= 1 - 1 / p;
        S += std::log(p) / (p - 1);
        P *= p;
        long double next = P * static_cast<long double>(primes[k]);
        if (next <= start)
            continue;
        auto seg = tail_segment(std::max(P, start), c, S);
        if (!seg)
            return std::nullopt;
        best = best ? std::min(*best, *seg) : *seg;
    }
    return best;
}

} // namespace

NLowerBound N_lower_bound(u64 m_H)
{
    require(m_H >= 3, "N_lower_bound: m_H must be >= 3");
    NLowerBound out;
    out.m_H = m_H;
    out.n0 = std::max<u64>((2 * m_H + 2) / 3, 6);
    u64 n_cut = std::max<u64>(600, 4 * out.n0);
    u64 evaluated = out.n0;
    std::optional<Interval> best;
    u64 best_n = out.n0;
    while (true) {
        for (; evaluated < n_cut; ++evaluated) {
            Interval v = log_term(evaluated);
            if (!best || mpfr_less_p(v.lo.get(), best->lo.get())) {
                best = v;
                best_n = evaluated;
            }
        }
        auto tail = tail_bound(n_cut);
        if (tail && *tail >= static_cast<long double>(mpfr_get_ld(best->lo.get(), MPFR_RNDD))) {
            out.tail_log_min = static_cast<double>(*tail);
            break;
        }
        if (n_cut >= kMaxCut)
            throw InternalError("N_lower_bound: tail estimate not certified below n = " + std::to_string(kMaxCut));
        n_cut *= 2;
    }
    out.n_cut = n_cut;
    out.argmin_n = best_n;
    out.log_bound = *best;

    BigFloat e;
    mpfr_exp(e.get(), best->lo.get(), MPFR_RNDD);
    mpz_class c;
    mpfr_get_z(c.get_mpz_t(), e.get(), MPFR_RNDU);
    out.certified = c < 1 ? mpz_class(1) : c;
    return out;
}

} // namespace periodica
