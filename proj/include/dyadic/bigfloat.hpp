#pragma once

#include <cstdarg>
#include <cstdio>

#include <mpfr.h>

#include <string>

#include "dyadic/rational.hpp"

namespace dyadic {

/// Arbitrary-precision binary float, a value-semantic wrapper over mpfr_t.
///
/// Every operation rounds to nearest at the result's precision; binary
/// operations produce a result at the larger of the two operand precisions.
/// All sequencing is left to the caller, so a fixed evaluation order gives
/// bit-identical results on every run.
class BigFloat {
public:
    static constexpr unsigned min_precision = 16;

    explicit BigFloat(unsigned precision = 64);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const Rational& q, unsigned precision);
    static BigFloat from_integer(long n, unsigned precision);

    unsigned precision() const;
    bool is_zero() const;
    int sign() const;

    BigFloat operator+(const BigFloat& rhs) const;
    BigFloat operator-(const BigFloat& rhs) const;
    BigFloat operator*(const BigFloat& rhs) const;
    BigFloat operator/(const BigFloat& rhs) const;
    BigFloat operator-() const;

    BigFloat abs() const;

    /// this^(n/d): one correctly rounded integer power followed by one
    /// correctly rounded d-th root. Requires a positive base unless the
    /// exponent is an integer.
    BigFloat pow_rational(const Rational& e) const;

    /// n-th root, n >= 1.
    BigFloat root(unsigned long n) const;

    int compare(const BigFloat& rhs) const;
    bool operator==(const BigFloat& rhs) const { return compare(rhs) == 0; }
    bool operator!=(const BigFloat& rhs) const { return compare(rhs) != 0; }
    bool operator<(const BigFloat& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const BigFloat& rhs) const { return compare(rhs) <= 0; }
    bool operator>(const BigFloat& rhs) const { return compare(rhs) > 0; }
    bool operator>=(const BigFloat& rhs) const { return compare(rhs) >= 0; }

    /// Exact conversion; every finite BigFloat is a dyadic rational.
    Rational to_rational() const;

    double to_double() const;

    /// Decimal rendering with the given number of significant digits;
    /// digits <= 0 derives the count from the precision (~prec * log10 2).
    std::string to_string(int digits = -1) const;

private:
    mpfr_t value_;
};

/// base^exponent for rational base > 0 (or base = 0 with exponent > 0) and
/// rational exponent, rounded to `precision` bits. At most three correctly
/// rounded steps, so the relative error is below 2^(1-precision).
BigFloat rational_pow_rational(const Rational& base, const Rational& exponent,
                               unsigned precision);

/// 2^exponent at the given precision (exact when the exponent is an integer).
BigFloat pow2_float(const Rational& exponent, unsigned precision);

} // namespace dyadic
