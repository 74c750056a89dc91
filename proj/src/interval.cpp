#include "periodica/interval.hpp"

#include "periodica/errors.hpp"

#include <vector>

namespace periodica {

BigFloat::BigFloat()
{
    mpfr_init2(v_, kIntervalPrecision);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o)
{
    mpfr_init2(v_, kIntervalPrecision);
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat& BigFloat::operator=(const BigFloat& o)
{
    if (this != &o)
        mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(v_);
}

double BigFloat::to_double() const
{
    return mpfr_get_d(v_, MPFR_RNDN);
}

std::string BigFloat::to_string(int digits) const
{
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

Interval Interval::exact(const mpq_class& q)
{
    Interval r;
    mpfr_set_q(r.lo.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::exact(const mpz_class& z)
{
    Interval r;
    mpfr_set_z(r.lo.get(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi.get(), z.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::pi()
{
    Interval r;
    mpfr_const_pi(r.lo.get(), MPFR_RNDD);
    mpfr_const_pi(r.hi.get(), MPFR_RNDU);
    return r;
}

bool Interval::contains_zero() const
{
    return mpfr_sgn(lo.get()) <= 0 && mpfr_sgn(hi.get()) >= 0;
}

bool Interval::positive() const
{
    return mpfr_sgn(lo.get()) > 0;
}

Interval Interval::operator*(const Interval& o) const
{
    ensure(positive() && o.positive(), "interval product expects positive operands");
    Interval r;
    mpfr_mul(r.lo.get(), lo.get(), o.lo.get(), MPFR_RNDD);
    mpfr_mul(r.hi.get(), hi.get(), o.hi.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator/(const Interval& o) const
{
    ensure(positive() && o.positive(), "interval quotient expects positive operands");
    Interval r;
    mpfr_div(r.lo.get(), lo.get(), o.hi.get(), MPFR_RNDD);
    mpfr_div(r.hi.get(), hi.get(), o.lo.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const
{
    Interval r;
    mpfr_add(r.lo.get(), lo.get(), o.lo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), hi.get(), o.hi.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const
{
    Interval r;
    mpfr_sub(r.lo.get(), lo.get(), o.hi.get(), MPFR_RNDD);
    mpfr_sub(r.hi.get(), hi.get(), o.lo.get(), MPFR_RNDU);
    return r;
}

Interval Interval::pow(unsigned long k) const
{
    ensure(positive() || k == 0, "interval power expects positive base");
    Interval r;
    mpfr_pow_ui(r.lo.get(), lo.get(), k, MPFR_RNDD);
    mpfr_pow_ui(r.hi.get(), hi.get(), k, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const
{
    ensure(mpfr_sgn(lo.get()) >= 0, "interval sqrt of negative value");
    Interval r;
    mpfr_sqrt(r.lo.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi.get(), hi.get(), MPFR_RNDU);
    return r;
}

Interval Interval::log() const
{
    ensure(positive(), "interval log of non-positive value");
    Interval r;
    mpfr_log(r.lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(r.hi.get(), hi.get(), MPFR_RNDU);
    return r;
}

bool Interval::certainly_less(const Interval& o) const
{
    return mpfr_less_p(hi.get(), o.lo.get()) != 0;
}

} // namespace periodica
