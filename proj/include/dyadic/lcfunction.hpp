#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/bigfloat.hpp"
#include "dyadic/rational.hpp"

namespace dyadic {

/// A locally constant real-valued function on Z_2 at finite resolution J:
/// entry k of the value table is the constant value on the cell
/// k + 2^J * Z_2. Immutable after construction.
class LCFunction {
public:
    static constexpr unsigned max_resolution = 24;

    LCFunction(unsigned resolution, std::vector<Rational> values);

    static LCFunction constant(const Rational& c, unsigned resolution = 0);

    unsigned resolution() const { return resolution_; }
    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    const Rational& operator[](std::size_t k) const { return values_[k]; }

    /// Pointwise equality as functions on Z_2 (resolutions may differ).
    bool operator==(const LCFunction& rhs) const;

    LCFunction operator+(const LCFunction& rhs) const;
    LCFunction operator-(const LCFunction& rhs) const;
    LCFunction operator*(const Rational& c) const;

private:
    unsigned resolution_;
    std::vector<Rational> values_;
};

/// Martingale decomposition of an LCFunction: the global mean together with
/// the difference blocks, block j living at resolution j + 1 and integrating
/// to zero over every level-j cell.
struct BlockSequence {
    Rational mean;
    std::vector<LCFunction> blocks;
};

/// Value of f at a point x of Z_2 (odd-denominator rational).
Rational eval(const LCFunction& f, const Rational& x);

/// Haar integral over Z_2 (total measure 1).
Rational integral(const LCFunction& f);

/// Integral of |f|^p for integer p >= 1, exact.
Rational lp_norm_pow(const LCFunction& f, unsigned long p);

/// Essential supremum of |f|.
Rational linf_norm(const LCFunction& f);

/// (Integral of |f|^p)^(1/p) for rational p >= 1, rounded at `precision`
/// bits. Terms are accumulated in ascending index order so results are
/// reproducible bit for bit. Rejects precision < 16.
BigFloat lp_norm_float(const LCFunction& f, const Rational& p, unsigned precision);

/// Same function expressed on the finer grid of the given resolution.
LCFunction refine(const LCFunction& f, unsigned resolution);

/// Conditional expectation at scale j: the average of f over each level-j
/// cell. Resolution of the result is min(j, J); for j >= J this is f itself.
LCFunction project(const LCFunction& f, unsigned level);

/// Martingale difference at scale j: project(f, j+1) - project(f, j).
LCFunction block(const LCFunction& f, unsigned level);

/// Full decomposition: mean plus blocks 0 .. J-1. Exact and exactly
/// invertible by reconstruct().
BlockSequence decompose(const LCFunction& f);

/// Inverse of decompose: mean + sum of blocks at the maximal resolution.
/// Throws std::invalid_argument when block j does not have resolution j+1.
LCFunction reconstruct(const BlockSequence& b);

/// Pointwise sum of the squared blocks (the square of the Littlewood-Paley
/// square function, kept squared to stay rational).
LCFunction square_function_sq(const LCFunction& f);

/// Deterministic pseudo-random function for test corpora: values have
/// numerators in [-value_bound, value_bound] and denominators in
/// [1, value_bound]. Requires resolution <= 24.
LCFunction random_lc(unsigned resolution, std::uint64_t seed, unsigned value_bound);

} // namespace dyadic
