#include "arithgenus/big_real.hpp"

#include <algorithm>

namespace arithgenus {

BigReal::BigReal(long bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, long bits) {
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, long bits) {
    mpfr_init2(value_, bits);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, long bits) {
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::~BigReal() {
    mpfr_clear(value_);
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(value_, other.value_);
    }
    return *this;
}

BigReal BigReal::pi(long bits) {
    BigReal out(bits);
    mpfr_const_pi(out.value_, MPFR_RNDN);
    return out;
}

std::string BigReal::to_decimal(int digits) const {
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Rg", digits, value_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

namespace {
long joint_precision(const BigReal& a, const BigReal& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

BigReal& BigReal::operator+=(const BigReal& rhs) {
    mpfr_prec_round(value_, joint_precision(*this, rhs), MPFR_RNDN);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
    mpfr_prec_round(value_, joint_precision(*this, rhs), MPFR_RNDN);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
    mpfr_prec_round(value_, joint_precision(*this, rhs), MPFR_RNDN);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
    mpfr_prec_round(value_, joint_precision(*this, rhs), MPFR_RNDN);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal BigReal::with_precision(long bits) const {
    BigReal out(bits);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

BigReal abs(const BigReal& x) {
    BigReal out(x.precision());
    mpfr_abs(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigReal log(const BigReal& x) {
    BigReal out(x.precision());
    mpfr_log(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigReal sin(const BigReal& x) {
    BigReal out(x.precision());
    mpfr_sin(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigReal sqrt(const BigReal& x) {
    BigReal out(x.precision());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigReal pow(const BigReal& x, unsigned long n) {
    BigReal out(x.precision());
    mpfr_pow_ui(out.get(), x.get(), n, MPFR_RNDN);
    return out;
}

BigReal relative_difference(const BigReal& a, const BigReal& b) {
    return abs(a - b) / abs(a);
}

}  // namespace arithgenus
