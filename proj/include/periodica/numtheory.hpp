#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace periodica {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 b, u64 e, u64 m);

// Least non-negative residue of a mod m.
u64 mod(i64 a, u64 m);

bool is_prime(u64 n);

// Prime factorization as (p, e) pairs in increasing p.
std::vector<std::pair<u64, unsigned>> factor(u64 n);
std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);
int moebius(u64 n);
unsigned nu2(u64 n);

// Multiplicative order of a mod m; requires gcd(a, m) = 1.
u64 mult_order(u64 a, u64 m);

// Inverse of a mod m; requires gcd(a, m) = 1.
u64 invmod(u64 a, u64 m);

// Solve x = r_i mod m_i for pairwise coprime m_i.
u64 crt(const std::vector<std::pair<u64, u64>>& residues);

u64 isqrt(u64 n);

// (n mod p) is a square in F_p^x; p odd prime, n coprime to p.
bool is_quadratic_residue(u64 n, u64 p);

} // namespace periodica
