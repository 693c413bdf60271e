#include "dyadic/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dyadic {

namespace {

unsigned checked_precision(unsigned precision) {
    if (precision < BigFloat::min_precision) {
        throw std::invalid_argument("precision must be at least 16 bits");
    }
    return precision;
}

} // namespace

BigFloat::BigFloat(unsigned precision) {
    mpfr_init2(value_, checked_precision(precision));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(value_);
}

BigFloat BigFloat::from_rational(const Rational& q, unsigned precision) {
    BigFloat r(precision);
    mpfr_set_q(r.value_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_integer(long n, unsigned precision) {
    BigFloat r(precision);
    mpfr_set_si(r.value_, n, MPFR_RNDN);
    return r;
}

unsigned BigFloat::precision() const {
    return static_cast<unsigned>(mpfr_get_prec(value_));
}

bool BigFloat::is_zero() const {
    return mpfr_zero_p(value_) != 0;
}

int BigFloat::sign() const {
    return mpfr_sgn(value_);
}

BigFloat BigFloat::operator+(const BigFloat& rhs) const {
    BigFloat r(std::max(precision(), rhs.precision()));
    mpfr_add(r.value_, value_, rhs.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-(const BigFloat& rhs) const {
    BigFloat r(std::max(precision(), rhs.precision()));
    mpfr_sub(r.value_, value_, rhs.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator*(const BigFloat& rhs) const {
    BigFloat r(std::max(precision(), rhs.precision()));
    mpfr_mul(r.value_, value_, rhs.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator/(const BigFloat& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("BigFloat division by zero");
    BigFloat r(std::max(precision(), rhs.precision()));
    mpfr_div(r.value_, value_, rhs.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.value_, value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::root(unsigned long n) const {
    if (n == 0) throw std::invalid_argument("0-th root");
    BigFloat r(precision());
    mpfr_rootn_ui(r.value_, value_, n, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_rational(const Rational& e) const {
    const mpz_class& num = e.get_num();
    const mpz_class& den = e.get_den();
    if (!num.fits_slong_p() || !den.fits_ulong_p()) {
        throw std::invalid_argument("exponent out of range");
    }
    if (sign() < 0 && den != 1) {
        throw std::domain_error("rational power of a negative base");
    }
    if (is_zero()) {
        if (num < 0) throw std::domain_error("zero base with negative exponent");
        if (num == 0) return from_integer(1, precision());
        return BigFloat(precision());
    }
    BigFloat r(precision());
    mpfr_pow_si(r.value_, value_, num.get_si(), MPFR_RNDN);
    if (den != 1) {
        mpfr_rootn_ui(r.value_, r.value_, den.get_ui(), MPFR_RNDN);
    }
    return r;
}

int BigFloat::compare(const BigFloat& rhs) const {
    return mpfr_cmp(value_, rhs.value_);
}

Rational BigFloat::to_rational() const {
    if (!mpfr_number_p(value_)) {
        throw std::domain_error("cannot convert non-finite BigFloat to rational");
    }
    if (is_zero()) return Rational(0);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
    Rational r(m);
    return r * pow2(static_cast<long>(e));
}

double BigFloat::to_double() const {
    return mpfr_get_d(value_, MPFR_RNDN);
}

std::string BigFloat::to_string(int digits) const {
    if (digits <= 0) {
        digits = std::max(2, static_cast<int>(std::ceil(precision() * 0.30103)));
    }
    char* buf = nullptr;
    int n = mpfr_asprintf(&buf, "%.*Rg", digits, value_);
    if (n < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

BigFloat rational_pow_rational(const Rational& base, const Rational& exponent,
                               unsigned precision) {
    if (base < 0) throw std::domain_error("rational power of a negative base");
    if (base == 0) {
        if (exponent <= 0) throw std::domain_error("zero base with nonpositive exponent");
        return BigFloat(precision);
    }
    const mpz_class& num = exponent.get_num();
    const mpz_class& den = exponent.get_den();
    if (num == 0) return BigFloat::from_integer(1, precision);
    mpz_class abs_num = ::abs(num);
    if (!abs_num.fits_ulong_p() || !den.fits_ulong_p()) {
        throw std::invalid_argument("exponent out of range");
    }
    Rational t = rational_pow(base, abs_num.get_ui());
    BigFloat r = BigFloat::from_rational(t, precision);
    if (den != 1) r = r.root(den.get_ui());
    if (num < 0) r = BigFloat::from_integer(1, precision) / r;
    return r;
}

BigFloat pow2_float(const Rational& exponent, unsigned precision) {
    return rational_pow_rational(Rational(2), exponent, precision);
}

} // namespace dyadic
