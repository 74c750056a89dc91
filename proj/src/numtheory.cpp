#include "periodica/numtheory.hpp"

#include "periodica/errors.hpp"

#include <algorithm>
#include <numeric>

namespace periodica {

u64 gcd(u64 a, u64 b)
{
    return std::gcd(a, b);
}

u64 lcm(u64 a, u64 b)
{
    if (a == 0 || b == 0)
        return 0;
    return a / gcd(a, b) * b;
}

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m)
{
    if (m == 1)
        return 0;
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

u64 mod(i64 a, u64 m)
{
    i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::pair<u64, unsigned>> factor(u64 n)
{
    require(n >= 1, "factor: n must be positive");
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<u64> prime_divisors(u64 n)
{
    std::vector<u64> out;
    for (auto [p, e] : factor(n))
        out.push_back(p);
    return out;
}

std::vector<u64> divisors(u64 n)
{
    std::vector<u64> out{1};
    for (auto [p, e] : factor(n)) {
        std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 euler_phi(u64 n)
{
    u64 r = n;
    for (auto [p, e] : factor(n))
        r = r / p * (p - 1);
    return r;
}

int moebius(u64 n)
{
    int r = 1;
    for (auto [p, e] : factor(n)) {
        if (e > 1)
            return 0;
        r = -r;
    }
    return r;
}

unsigned nu2(u64 n)
{
    require(n != 0, "nu2: n must be nonzero");
    return static_cast<unsigned>(__builtin_ctzll(n));
}

u64 mult_order(u64 a, u64 m)
{
    require(gcd(a, m) == 1, "mult_order: a not a unit");
    if (m == 1)
        return 1;
    u64 ord = euler_phi(m);
    for (auto [p, e] : factor(ord)) {
        for (unsigned i = 0; i < e && powmod(a, ord / p, m) == 1; ++i)
            ord /= p;
    }
    return ord;
}

u64 invmod(u64 a, u64 m)
{
    i64 t = 0, nt = 1;
    i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
    while (nr) {
        i64 q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    require(r == 1 || m == 1, "invmod: not invertible");
    return mod(t, m);
}

u64 crt(const std::vector<std::pair<u64, u64>>& residues)
{
    u64 x = 0, M = 1;
    for (auto [r, m] : residues) {
        require(gcd(M, m) == 1, "crt: moduli not coprime");
        u64 t = mulmod(mod(static_cast<i64>(r % m) - static_cast<i64>(x % m), m), invmod(M % m, m), m);
        x += M * t;
        M *= m;
    }
    return M == 1 ? 0 : x % M;
}

u64 isqrt(u64 n)
{
    u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

bool is_quadratic_residue(u64 n, u64 p)
{
    return powmod(n % p, (p - 1) / 2, p) == 1;
}

} // namespace periodica
