#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyadic/bigfloat.hpp"
#include "dyadic/lcfunction.hpp"
#include "dyadic/rational.hpp"

namespace dyadic {

/// A Lebesgue-type index: an integer >= 1 or +infinity.
class LqIndex {
public:
    static LqIndex infinity() { return LqIndex(true, 0); }
    static LqIndex finite(unsigned long v);

    /// Parses "inf" or a positive integer.
    static LqIndex parse(const std::string& text);

    bool is_infinity() const { return infinite_; }
    unsigned long value() const;

    bool operator==(const LqIndex& rhs) const {
        return infinite_ == rhs.infinite_ && (infinite_ || value_ == rhs.value_);
    }

    std::string str() const;

private:
    LqIndex(bool inf, unsigned long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    unsigned long value_;
};

/// Besov space parameters: smoothness s, integrability p, summation index q,
/// and whether the norm is the homogeneous variant (no mean term).
struct BesovParams {
    Rational s;
    LqIndex p = LqIndex::infinity();
    LqIndex q = LqIndex::infinity();
    bool homogeneous = false;
};

/// Result of a Besov norm evaluation.
///
/// `exact` is available when the term sequence is rational (s integer,
/// p in {1, inf}) and the l^q stage stays rational: for q = inf it is the
/// norm itself, for finite q the q-th power of the block part
/// (exact_is_qth_power set; only when the mean term does not interfere).
/// `value` always carries the norm at the requested precision.
struct NormReport {
    std::optional<Rational> exact;
    bool exact_is_qth_power = false;
    BigFloat value;
    std::vector<BigFloat> terms;
    std::vector<Rational> exact_terms; // empty when the exact path is unavailable
    std::optional<Rational> mean_term; // |S_0 f| term, inhomogeneous norms only
};

/// Besov norm of f: the mean term (unless homogeneous) plus the l^q norm of
/// the sequence 2^(j*s) * ||Delta_j f||_{L^p}, j = 0 .. J-1.
NormReport besov_norm(const LCFunction& f, const BesovParams& params,
                      unsigned precision);

/// Same arithmetic when the per-block L^p norms are already known; the mean
/// term is taken as zero (a bare norm sequence carries no S_0 information).
NormReport besov_norm_from_block_norms(const std::vector<Rational>& block_lp_norms,
                                       const BesovParams& params,
                                       unsigned precision);

/// ||f||_{L^2}^2 / (||f||_{B^{1,q}_1, homogeneous} *
/// ||f||_{B^{-1,inf}_inf, homogeneous}). Throws std::domain_error when the
/// denominator vanishes (f has no blocks).
BigFloat inequality_ratio(const LCFunction& f, const LqIndex& q, unsigned precision);

struct InterpolationReport {
    BigFloat lhs;   // homogeneous B^{s,1}_p norm at s = (1-theta)s0 + theta*s1
    BigFloat rhs;   // product of the two homogeneous B^{si,inf}_p norms
    BigFloat ratio; // lhs / rhs, defined as 0 when both sides vanish
};

/// Two-norm product estimate: compares the intermediate-smoothness norm
/// against the theta-weighted product of the two endpoint norms. Throws
/// std::invalid_argument for s0 = s1 or theta outside (0, 1).
InterpolationReport interpolation_check(const LCFunction& f, const Rational& s0,
                                        const Rational& s1, const Rational& theta,
                                        const LqIndex& p, unsigned precision);

/// Upper bound for interpolation_check's ratio, from splitting the term sum
/// at the crossover index of the two dominating geometric sequences:
///
///   C = 1/(1 - 2^(-theta*d)) + 1/(1 - 2^(-(1-theta)*d)),  d = |s0 - s1|.
///
/// Each tail is a geometric series starting at the crossover value, which
/// equals the theta-weighted product of the endpoint suprema. For
/// (s0, s1, theta) = (1, -1, 1/2) the bound is exactly 4.
BigFloat interpolation_splitting_constant(const Rational& s0, const Rational& s1,
                                          const Rational& theta, unsigned precision);

} // namespace dyadic
