#pragma once

// RAII wrapper over an MPFR float with an explicit bit precision.

#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace arithgenus {

class BigReal {
public:
    explicit BigReal(long bits = 128);
    BigReal(long value, long bits);
    BigReal(const mpz_class& value, long bits);
    BigReal(const mpq_class& value, long bits);
    ~BigReal();

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;

    static BigReal pi(long bits);

    long precision() const noexcept { return static_cast<long>(mpfr_get_prec(value_)); }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_ptr get() noexcept { return value_; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Shortest of fixed or scientific notation with `digits` significant digits.
    std::string to_decimal(int digits) const;
    int sign() const noexcept { return mpfr_sgn(value_); }

    BigReal& operator+=(const BigReal& rhs);
    BigReal& operator-=(const BigReal& rhs);
    BigReal& operator*=(const BigReal& rhs);
    BigReal& operator/=(const BigReal& rhs);

    friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
    friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
    friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
    friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.value_, b.value_); }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.value_, b.value_); }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_); }

    /// Same value rounded to `bits`.
    BigReal with_precision(long bits) const;

private:
    mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal pow(const BigReal& x, unsigned long n);

/// |a - b| / |a|.
BigReal relative_difference(const BigReal& a, const BigReal& b);

}  // namespace arithgenus
