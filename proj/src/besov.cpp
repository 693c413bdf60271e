#include "dyadic/besov.hpp"

#include <stdexcept>

namespace dyadic {

LqIndex LqIndex::finite(unsigned long v) {
    if (v < 1) throw std::invalid_argument("index must be >= 1");
    return LqIndex(false, v);
}

LqIndex LqIndex::parse(const std::string& text) {
    if (text == "inf" || text == "+inf" || text == "infinity") return infinity();
    Rational r = parse_rational(text);
    if (r.get_den() != 1 || r < 1 || !r.get_num().fits_ulong_p()) {
        throw std::invalid_argument("index must be a positive integer or 'inf': '" +
                                    text + "'");
    }
    return finite(r.get_num().get_ui());
}

unsigned long LqIndex::value() const {
    if (infinite_) throw std::domain_error("infinite index has no finite value");
    return value_;
}

std::string LqIndex::str() const {
    return infinite_ ? "inf" : std::to_string(value_);
}

namespace {

bool rational_terms_available(const BesovParams& params) {
    // 2^(j*s) rational for all j needs integer s; the block L^p norm stays
    // rational only for p = 1 and p = inf
    return params.s.get_den() == 1 &&
           (params.p.is_infinity() || params.p.value() == 1);
}

Rational block_lp_norm_exact(const LCFunction& blk, const LqIndex& p) {
    return p.is_infinity() ? linf_norm(blk) : lp_norm_pow(blk, 1);
}

BigFloat block_lp_norm_float(const LCFunction& blk, const LqIndex& p,
                             unsigned precision) {
    if (p.is_infinity()) {
        return BigFloat::from_rational(linf_norm(blk), precision);
    }
    return lp_norm_float(blk, Rational(p.value()), precision);
}

/// Shared l^q stage over a prepared term sequence.
NormReport assemble_report(std::vector<Rational> exact_terms,
                           std::vector<BigFloat> float_terms,
                           std::optional<Rational> mean_term,
                           const LqIndex& q, unsigned precision) {
    NormReport out;
    out.terms = std::move(float_terms);
    out.exact_terms = std::move(exact_terms);
    out.mean_term = mean_term;

    const bool have_exact_terms =
        out.exact_terms.size() == out.terms.size() || out.terms.empty();

    BigFloat lq(precision);
    if (q.is_infinity()) {
        if (have_exact_terms) {
            Rational sup(0);
            for (const Rational& t : out.exact_terms)
                if (t > sup) sup = t;
            out.exact = mean_term.value_or(Rational(0)) + sup;
            out.exact_is_qth_power = false;
            lq = BigFloat::from_rational(sup, precision);
        } else {
            for (const BigFloat& t : out.terms)
                if (t > lq) lq = t;
        }
    } else {
        const unsigned long qv = q.value();
        if (have_exact_terms) {
            Rational sum(0);
            for (const Rational& t : out.exact_terms) sum += rational_pow(t, qv);
            if (sum == 0) {
                // norm reduces to the mean term alone
                out.exact = mean_term.value_or(Rational(0));
                out.exact_is_qth_power = false;
            } else if (!mean_term || *mean_term == 0) {
                out.exact = sum;
                out.exact_is_qth_power = true;
            }
            lq = BigFloat::from_rational(sum, precision)
                     .pow_rational(Rational(1, qv));
        } else {
            BigFloat sum(precision);
            for (const BigFloat& t : out.terms)
                sum = sum + t.pow_rational(Rational(qv));
            lq = sum.pow_rational(Rational(1, qv));
        }
    }

    out.value = mean_term
                    ? BigFloat::from_rational(*mean_term, precision) + lq
                    : lq;
    return out;
}

} // namespace

NormReport besov_norm(const LCFunction& f, const BesovParams& params,
                      unsigned precision) {
    BlockSequence dec = decompose(f);
    const bool exact_terms_ok = rational_terms_available(params);

    std::vector<Rational> exact_terms;
    std::vector<BigFloat> float_terms;
    float_terms.reserve(dec.blocks.size());
    for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
        if (exact_terms_ok) {
            Rational t = pow2(params.s.get_num().get_si() * static_cast<long>(j)) *
                         block_lp_norm_exact(dec.blocks[j], params.p);
            float_terms.push_back(BigFloat::from_rational(t, precision));
            exact_terms.push_back(std::move(t));
        } else {
            BigFloat t =
                pow2_float(params.s * static_cast<long>(j), precision) *
                block_lp_norm_float(dec.blocks[j], params.p, precision);
            float_terms.push_back(std::move(t));
        }
    }

    std::optional<Rational> mean_term;
    if (!params.homogeneous) mean_term = abs(dec.mean);
    return assemble_report(std::move(exact_terms), std::move(float_terms),
                           mean_term, params.q, precision);
}

NormReport besov_norm_from_block_norms(const std::vector<Rational>& block_lp_norms,
                                       const BesovParams& params,
                                       unsigned precision) {
    const bool exact_scale = params.s.get_den() == 1;
    std::vector<Rational> exact_terms;
    std::vector<BigFloat> float_terms;
    float_terms.reserve(block_lp_norms.size());
    for (std::size_t j = 0; j < block_lp_norms.size(); ++j) {
        if (block_lp_norms[j] < 0) {
            throw std::invalid_argument("block norms must be nonnegative");
        }
        if (exact_scale) {
            Rational t = pow2(params.s.get_num().get_si() * static_cast<long>(j)) *
                         block_lp_norms[j];
            float_terms.push_back(BigFloat::from_rational(t, precision));
            exact_terms.push_back(std::move(t));
        } else {
            BigFloat t = pow2_float(params.s * static_cast<long>(j), precision) *
                         BigFloat::from_rational(block_lp_norms[j], precision);
            float_terms.push_back(std::move(t));
        }
    }
    return assemble_report(std::move(exact_terms), std::move(float_terms),
                           std::nullopt, params.q, precision);
}

BigFloat inequality_ratio(const LCFunction& f, const LqIndex& q,
                          unsigned precision) {
    if (!q.is_infinity() && q.value() <= 2) {
        throw std::invalid_argument("inequality ratio is defined for q > 2");
    }
    NormReport b1 = besov_norm(f, {Rational(1), LqIndex::finite(1), q, true},
                               precision);
    NormReport binf = besov_norm(
        f, {Rational(-1), LqIndex::infinity(), LqIndex::infinity(), true},
        precision);
    if (b1.value.is_zero() || binf.value.is_zero()) {
        throw std::domain_error("inequality ratio needs a function with blocks");
    }
    BigFloat l2 = BigFloat::from_rational(lp_norm_pow(f, 2), precision);
    return l2 / (b1.value * binf.value);
}

InterpolationReport interpolation_check(const LCFunction& f, const Rational& s0,
                                        const Rational& s1, const Rational& theta,
                                        const LqIndex& p, unsigned precision) {
    if (s0 == s1 || theta <= 0 || theta >= 1) {
        throw std::invalid_argument("need s0 != s1 and 0 < theta < 1");
    }
    const Rational s = (1 - theta) * s0 + theta * s1;
    NormReport mid = besov_norm(f, {s, p, LqIndex::finite(1), true}, precision);
    NormReport end0 = besov_norm(f, {s0, p, LqIndex::infinity(), true}, precision);
    NormReport end1 = besov_norm(f, {s1, p, LqIndex::infinity(), true}, precision);

    InterpolationReport out{mid.value, BigFloat(precision), BigFloat(precision)};
    if (!end0.value.is_zero() && !end1.value.is_zero()) {
        out.rhs = end0.value.pow_rational(1 - theta) *
                  end1.value.pow_rational(theta);
    }
    out.ratio = out.lhs.is_zero() ? BigFloat(precision) : out.lhs / out.rhs;
    return out;
}

BigFloat interpolation_splitting_constant(const Rational& s0, const Rational& s1,
                                          const Rational& theta,
                                          unsigned precision) {
    if (s0 == s1 || theta <= 0 || theta >= 1) {
        throw std::invalid_argument("need s0 != s1 and 0 < theta < 1");
    }
    const Rational delta = abs(s0 - s1);
    const BigFloat one = BigFloat::from_integer(1, precision);
    BigFloat a = one - pow2_float(-theta * delta, precision);
    BigFloat b = one - pow2_float(-(1 - theta) * delta, precision);
    return one / a + one / b;
}

} // namespace dyadic
