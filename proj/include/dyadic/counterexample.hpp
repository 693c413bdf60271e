#pragma once

#include <string>
#include <vector>

#include "dyadic/besov.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/lcfunction.hpp"

namespace dyadic {

/// Recipe for the amplitude sequence: eps_j is (1+j)^(-exponent) rounded to
/// `precision` bits (an exact dyadic rational), clamped to be non-increasing,
/// with eps_0 = 1. exponent = 0 gives the constant sequence.
struct EpsilonSpec {
    Rational exponent;
    unsigned precision = 64;
};

/// Parameters of one member of the extremal family. The companion scale is
/// fixed to j1 = 2*j0 and beta/alpha = 2^(2*j0); those are the extreme
/// choices for which every pair count below stays a positive integer.
struct CounterexampleConfig {
    unsigned j0 = 1;
    Rational alpha = Rational(1);
    LqIndex q = LqIndex::infinity();
    EpsilonSpec eps;

    unsigned j1() const { return 2 * j0; }
    Rational beta() const { return alpha * pow2(2L * j0); }

    /// Throws std::invalid_argument on j0 = 0, alpha <= 0, finite q <= 2,
    /// negative exponent, or precision < 16.
    void validate() const;
};

/// One difference block of the construction: at level j the block takes the
/// values +amplitude / -amplitude on the two children of each of the first
/// pair_count level-j cells and 0 elsewhere.
struct BlockSpec {
    unsigned level;
    Rational amplitude;    // eps_j * alpha * 2^j
    mpz_class pair_count;  // N_j, a positive integer <= 2^j
};

/// Run-length description of the whole function: blocks j = 0 .. j1 plus the
/// epsilon sequence they were built from. The mean is zero by construction.
struct SparseBlockFunction {
    CounterexampleConfig config;
    std::vector<Rational> epsilon;
    std::vector<BlockSpec> blocks;
};

/// eps_0 .. eps_jmax per the EpsilonSpec recipe.
std::vector<Rational> make_epsilon(const EpsilonSpec& spec, unsigned jmax);

/// N_j: 1 at j = 0, 2^j for 0 < j < j0, 2^(2*j0-j) for j0 <= j <= j1.
/// Throws std::invalid_argument for j > j1.
mpz_class pair_count(unsigned j, const CounterexampleConfig& config);

SparseBlockFunction build_blocks(const CounterexampleConfig& config);

/// Dense table of a single block, at resolution level + 1.
LCFunction materialize_block(const BlockSpec& spec);

/// Dense table of the whole function at resolution j1 + 1. Throws
/// capacity_error when j1 + 1 > 24; use the closed-form path instead.
LCFunction materialize(const SparseBlockFunction& sbf);

struct ClosedFormNorms {
    Rational l2_sq;            // sum of eps_j^2 alpha^2 2^j N_j
    Rational b_1q1_exact;      // q-th power of the B^{1,q}_1 norm, or the
                               // supremum itself when q = inf
    bool b_1q1_is_qth_power;
    BigFloat b_1q1;            // the norm at the configured precision
    Rational b_neg1_inf_inf;   // sup_j 2^(-j) ||Delta_j||_inf; equals alpha
};

/// Norms from the run-length description alone; no resolution bound.
ClosedFormNorms closed_form_norms(const CounterexampleConfig& config);

struct RatioResult {
    BigFloat value;
    std::optional<Rational> exact; // available when q = inf
};

/// l2_sq / (b_1q1 * b_neg1_inf_inf) for the given configuration.
RatioResult ratio(const CounterexampleConfig& config);

struct SweepRow {
    CounterexampleConfig config;
    ClosedFormNorms norms;
    RatioResult ratio;
};

/// One closed-form row per j0; rows are independent and deterministic.
std::vector<SweepRow> sweep(const std::vector<unsigned>& j0_values,
                            const LqIndex& q, const EpsilonSpec& eps,
                            const Rational& alpha);

struct CrossValidationReport {
    unsigned j0;
    unsigned resolution;
    std::vector<std::string> checks; // description of each comparison made
};

/// Materializes the function (requires j1 + 1 <= 20, else capacity_error)
/// and compares every closed-form quantity against the dense path:
/// per-level block extraction, Parseval L^2, and both Besov factors, all as
/// exact rational equalities. Throws validation_error naming the offending
/// level on any mismatch.
CrossValidationReport cross_validate(const CounterexampleConfig& config);

} // namespace dyadic
