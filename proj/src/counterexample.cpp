#include "dyadic/counterexample.hpp"

#include <stdexcept>

namespace dyadic {

void CounterexampleConfig::validate() const {
    if (j0 == 0) throw std::invalid_argument("j0 must be >= 1");
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    if (!q.is_infinity() && q.value() <= 2) {
        throw std::invalid_argument("q must be an integer > 2 or inf");
    }
    if (eps.exponent < 0) throw std::invalid_argument("exponent must be >= 0");
    if (eps.precision < BigFloat::min_precision) {
        throw std::invalid_argument("precision must be at least 16 bits");
    }
}

std::vector<Rational> make_epsilon(const EpsilonSpec& spec, unsigned jmax) {
    if (spec.exponent < 0) throw std::invalid_argument("exponent must be >= 0");
    std::vector<Rational> out;
    out.reserve(jmax + 1);
    Rational prev(1);
    for (unsigned j = 0; j <= jmax; ++j) {
        Rational e(1);
        if (spec.exponent != 0 && j > 0) {
            e = rational_pow_rational(Rational(1 + j), -spec.exponent,
                                      spec.precision)
                    .to_rational();
            if (e > prev) e = prev; // rounding may not break monotonicity
        }
        out.push_back(e);
        prev = e;
    }
    return out;
}

mpz_class pair_count(unsigned j, const CounterexampleConfig& config) {
    if (j > config.j1()) {
        throw std::invalid_argument("level " + std::to_string(j) +
                                    " outside 0.." + std::to_string(config.j1()));
    }
    mpz_class n = 1;
    if (j == 0) return n;
    const unsigned e = j < config.j0 ? j : 2 * config.j0 - j;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), e);
    return n;
}

SparseBlockFunction build_blocks(const CounterexampleConfig& config) {
    config.validate();
    SparseBlockFunction out;
    out.config = config;
    out.epsilon = make_epsilon(config.eps, config.j1());
    out.blocks.reserve(config.j1() + 1);
    for (unsigned j = 0; j <= config.j1(); ++j) {
        BlockSpec b;
        b.level = j;
        b.amplitude = out.epsilon[j] * config.alpha * pow2(j);
        b.pair_count = pair_count(j, config);
        if (b.pair_count < 1 || b.pair_count > pow2(j).get_num()) {
            throw std::invalid_argument("pair count out of range at level " +
                                        std::to_string(j));
        }
        out.blocks.push_back(std::move(b));
    }
    return out;
}

LCFunction materialize_block(const BlockSpec& spec) {
    if (spec.level + 1 > LCFunction::max_resolution) {
        throw capacity_error("block resolution " + std::to_string(spec.level + 1) +
                             " exceeds the dense limit of 24");
    }
    const std::size_t half = std::size_t{1} << spec.level;
    const std::size_t n = spec.pair_count.get_ui();
    std::vector<Rational> v(half * 2, Rational(0));
    for (std::size_t m = 0; m < n; ++m) {
        v[m] = spec.amplitude;          // first child of cell (level, m)
        v[m + half] = -spec.amplitude;  // its sibling
    }
    return LCFunction(spec.level + 1, std::move(v));
}

LCFunction materialize(const SparseBlockFunction& sbf) {
    const unsigned J = static_cast<unsigned>(sbf.blocks.size());
    if (J > LCFunction::max_resolution) {
        throw capacity_error(
            "resolution " + std::to_string(J) +
            " exceeds the dense limit of 24; use the closed-form path");
    }
    for (std::size_t i = 0; i < sbf.blocks.size(); ++i) {
        if (sbf.blocks[i].level != i) {
            throw std::invalid_argument("blocks must cover levels 0..j1 in order");
        }
    }
    std::vector<Rational> v(std::size_t{1} << J, Rational(0));
    for (const BlockSpec& b : sbf.blocks) {
        const std::size_t period = std::size_t{1} << (b.level + 1);
        const std::size_t half = period / 2;
        const std::size_t n = b.pair_count.get_ui();
        for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t k = m; k < v.size(); k += period) {
                v[k] += b.amplitude;
                v[k + half] -= b.amplitude;
            }
        }
    }
    return LCFunction(J, std::move(v));
}

ClosedFormNorms closed_form_norms(const CounterexampleConfig& config) {
    SparseBlockFunction sbf = build_blocks(config);

    ClosedFormNorms out{Rational(0), Rational(0), false,
                        BigFloat(config.eps.precision), Rational(0)};
    std::vector<Rational> l1_norms; // ||Delta_j||_{L^1} = eps_j alpha N_j
    l1_norms.reserve(sbf.blocks.size());
    for (unsigned j = 0; j <= config.j1(); ++j) {
        const Rational& eps = sbf.epsilon[j];
        const Rational n(sbf.blocks[j].pair_count);
        out.l2_sq += eps * eps * config.alpha * config.alpha * pow2(j) * n;
        l1_norms.push_back(eps * config.alpha * n);
        Rational sup_term = eps * config.alpha; // 2^(-j) * ||Delta_j||_inf
        if (sup_term > out.b_neg1_inf_inf) out.b_neg1_inf_inf = sup_term;
    }

    NormReport b1 = besov_norm_from_block_norms(
        l1_norms, {Rational(1), LqIndex::finite(1), config.q, true},
        config.eps.precision);
    out.b_1q1_exact = *b1.exact;
    out.b_1q1_is_qth_power = b1.exact_is_qth_power;
    out.b_1q1 = b1.value;
    return out;
}

RatioResult ratio(const CounterexampleConfig& config) {
    ClosedFormNorms n = closed_form_norms(config);
    const unsigned prec = config.eps.precision;
    RatioResult out{BigFloat(prec), std::nullopt};
    out.value = BigFloat::from_rational(n.l2_sq, prec) /
                (n.b_1q1 * BigFloat::from_rational(n.b_neg1_inf_inf, prec));
    if (config.q.is_infinity()) {
        out.exact = n.l2_sq / (n.b_1q1_exact * n.b_neg1_inf_inf);
    }
    return out;
}

std::vector<SweepRow> sweep(const std::vector<unsigned>& j0_values,
                            const LqIndex& q, const EpsilonSpec& eps,
                            const Rational& alpha) {
    std::vector<SweepRow> rows;
    rows.reserve(j0_values.size());
    for (unsigned j0 : j0_values) {
        CounterexampleConfig cfg{j0, alpha, q, eps};
        cfg.validate();
        rows.push_back(SweepRow{cfg, closed_form_norms(cfg), ratio(cfg)});
    }
    return rows;
}

CrossValidationReport cross_validate(const CounterexampleConfig& config) {
    config.validate();
    const unsigned J = config.j1() + 1;
    if (J > 20) {
        throw capacity_error("cross-validation materializes densely; needs 2*j0+1 <= 20");
    }

    SparseBlockFunction sbf = build_blocks(config);
    LCFunction f = materialize(sbf);
    ClosedFormNorms cf = closed_form_norms(config);
    CrossValidationReport report{config.j0, J, {}};

    // every extracted block must equal the dense form of its BlockSpec
    for (unsigned j = 0; j <= config.j1(); ++j) {
        if (!(block(f, j) == materialize_block(sbf.blocks[j]))) {
            throw validation_error(
                "extracted block differs from its specification at level " +
                    std::to_string(j),
                j);
        }
    }
    report.checks.push_back("block extraction: levels 0.." +
                            std::to_string(config.j1()) + " identical");

    if (lp_norm_pow(f, 2) != cf.l2_sq) {
        throw validation_error("dense L^2 norm differs from the closed form");
    }
    report.checks.push_back("l2_sq: dense == closed form");

    NormReport binf = besov_norm(
        f, {Rational(-1), LqIndex::infinity(), LqIndex::infinity(), true},
        config.eps.precision);
    if (!binf.exact || *binf.exact != cf.b_neg1_inf_inf) {
        throw validation_error("dense B^{-1,inf}_inf differs from the closed form");
    }
    report.checks.push_back("besov_neg1_inf_inf: dense == closed form");

    NormReport b1 = besov_norm(
        f, {Rational(1), LqIndex::finite(1), config.q, true},
        config.eps.precision);
    if (!b1.exact || *b1.exact != cf.b_1q1_exact ||
        b1.exact_is_qth_power != cf.b_1q1_is_qth_power) {
        throw validation_error("dense B^{1,q}_1 differs from the closed form");
    }
    report.checks.push_back(cf.b_1q1_is_qth_power
                                ? "besov_1q1 (q-th power): dense == closed form"
                                : "besov_1q1 (supremum): dense == closed form");
    return report;
}

} // namespace dyadic
