#include "periodica/polynomial.hpp"

#include "periodica/errors.hpp"

#include <algorithm>

namespace periodica {

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

ZPoly zpoly_exact_div(const ZPoly& a, const ZPoly& b)
{
    ensure(!b.empty() && b.back() == 1, "zpoly_exact_div: divisor not monic");
    ZPoly r = a;
    trim(r);
    if (r.size() < b.size())
        ensure(r.empty(), "zpoly_exact_div: nonzero remainder");
    if (r.empty())
        return {};
    std::size_t db = b.size() - 1;
    ZPoly q(r.size() - db, 0);
    for (std::size_t k = r.size(); k-- > db;) {
        mpz_class c = r[k];
        q[k - db] = c;
        if (c == 0)
            continue;
        for (std::size_t i = 0; i <= db; ++i)
            r[k - db + i] -= c * b[i];
    }
    trim(r);
    ensure(r.empty(), "zpoly_exact_div: nonzero remainder");
    trim(q);
    return q;
}

mpz_class zpoly_eval(const ZPoly& f, const mpz_class& x)
{
    mpz_class v = 0;
    for (std::size_t i = f.size(); i-- > 0;)
        v = v * x + f[i];
    return v;
}

QPoly to_qpoly(const ZPoly& f)
{
    return QPoly(f.begin(), f.end());
}

QPoly qpoly_add(const QPoly& a, const QPoly& b)
{
    QPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] += b[i];
    trim(c);
    return c;
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b)
{
    QPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] -= b[i];
    trim(c);
    return c;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r)
{
    QPoly d = b;
    trim(d);
    ensure(!d.empty(), "qpoly_divmod: division by zero");
    r = a;
    trim(r);
    q.clear();
    if (r.size() < d.size())
        return;
    std::size_t db = d.size() - 1;
    q.assign(r.size() - db, 0);
    mpq_class lead = d.back();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0)
            continue;
        mpq_class c = r[k] / lead;
        q[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i)
            r[k - db + i] -= c * d[i];
    }
    trim(r);
    trim(q);
}

QPoly qpoly_mod(const QPoly& a, const QPoly& b)
{
    QPoly q, r;
    qpoly_divmod(a, b, q, r);
    return r;
}

QPoly qpoly_inverse_mod(const QPoly& a, const QPoly& m)
{
    QPoly r0 = m, r1 = qpoly_mod(a, m);
    QPoly s0, s1{1};
    require(!r1.empty(), "inverse of zero");
    while (degree(r1) > 0) {
        QPoly q, r;
        qpoly_divmod(r0, r1, q, r);
        QPoly s = qpoly_sub(s0, qpoly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        require(!r1.empty(), "element is not invertible");
    }
    mpq_class c = r1[0];
    for (auto& x : s1)
        x /= c;
    return qpoly_mod(s1, m);
}

std::string rational_string(const mpq_class& q)
{
    mpq_class c(q);
    c.canonicalize();
    return c.get_str();
}

} // namespace periodica
