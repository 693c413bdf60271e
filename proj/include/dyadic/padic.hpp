#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dyadic/rational.hpp"

namespace dyadic {

/// p-adic valuation of a rational: the exponent of p in its factorization,
/// extended by subtraction to fractions. The value +infinity occurs exactly
/// for the input 0.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    explicit Valuation(long v) : infinite_(false), value_(v) {}

    bool is_infinity() const { return infinite_; }
    long value() const;

    bool operator==(const Valuation& rhs) const {
        return infinite_ == rhs.infinite_ && (infinite_ || value_ == rhs.value_);
    }
    bool operator!=(const Valuation& rhs) const { return !(*this == rhs); }
    bool operator<(const Valuation& rhs) const {
        if (infinite_) return false;
        if (rhs.infinite_) return true;
        return value_ < rhs.value_;
    }
    bool operator>=(const Valuation& rhs) const { return !(*this < rhs); }

private:
    Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long value_;
};

/// p-adic norm: 0 or an integer power of p. Plain rational by design so
/// norms compose directly with the rest of the exact arithmetic.
using PAdicNorm = Rational;

/// Dyadic cell: the residue class index + 2^level * Z_2, of measure
/// 2^(-level). The 2^level cells of a fixed level partition Z_2.
struct Cell {
    unsigned level;
    mpz_class index;

    Rational measure() const { return pow2(-static_cast<long>(level)); }

    bool operator==(const Cell& rhs) const {
        return level == rhs.level && index == rhs.index;
    }
};

/// Canonical digit expansion x = p^valuation * (d0 + d1*p + d2*p^2 + ...)
/// with d0 > 0 and 0 <= di < p.
struct DigitExpansion {
    long valuation;
    std::vector<unsigned long> digits;
};

/// gamma(x): throws std::invalid_argument unless p is prime.
Valuation valuation(const Rational& x, unsigned long p);

/// |x|_p = p^(-gamma(x)), with |0|_p = 0.
PAdicNorm padic_norm(const Rational& x, unsigned long p);

/// d(x, y) = |x - y|_p.
PAdicNorm padic_distance(const Rational& x, const Rational& y, unsigned long p);

/// First `count` canonical digits of a nonzero rational, computed by
/// modular inversion of the (p-free) denominator. Throws std::domain_error
/// for x = 0.
DigitExpansion digits(const Rational& x, unsigned long p, std::size_t count);

/// The unique level-j cell containing x; requires |x|_2 <= 1.
Cell cell_of(const Rational& x, unsigned level);

/// The two children of a cell: indices k and k + 2^level at level+1.
std::pair<Cell, Cell> cell_children(const Cell& c);

} // namespace dyadic
