#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace periodica {

constexpr mpfr_prec_t kIntervalPrecision = 192;

// RAII holder for an mpfr_t.
class BigFloat {
public:
    BigFloat();
    BigFloat(const BigFloat& o);
    BigFloat& operator=(const BigFloat& o);
    ~BigFloat();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const;
    std::string to_string(int digits = 20) const;

private:
    mpfr_t v_;
};

// Closed interval [lo, hi] with outward rounding.
struct Interval {
    BigFloat lo, hi;

    static Interval exact(const mpq_class& q);
    static Interval exact(const mpz_class& z);
    static Interval pi();

    bool contains_zero() const;
    bool positive() const;

    // Requires positive operands where noted.
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;
    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval pow(unsigned long k) const;
    Interval sqrt() const;
    Interval log() const;

    // Every point of this interval lies below every point of o.
    bool certainly_less(const Interval& o) const;
};

} // namespace periodica
