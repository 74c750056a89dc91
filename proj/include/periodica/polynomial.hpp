#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace periodica {

using ExactRational = mpq_class;

// Dense polynomials, coefficient i multiplies x^i. Trailing zeros trimmed.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

template <class P>
void trim(P& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

template <class P>
int degree(const P& f)
{
    return static_cast<int>(f.size()) - 1;
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
// Exact quotient a / b for monic b dividing a.
ZPoly zpoly_exact_div(const ZPoly& a, const ZPoly& b);
mpz_class zpoly_eval(const ZPoly& f, const mpz_class& x);

QPoly to_qpoly(const ZPoly& f);
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly qpoly_mod(const QPoly& a, const QPoly& b);

// Returns s with s*a = 1 mod m; requires gcd(a, m) = 1.
QPoly qpoly_inverse_mod(const QPoly& a, const QPoly& m);

std::string rational_string(const mpq_class& q);

} // namespace periodica
