#include "dyadic/lcfunction.hpp"

#include "dyadic/padic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dyadic {

LCFunction::LCFunction(unsigned resolution, std::vector<Rational> values)
    : resolution_(resolution), values_(std::move(values)) {
    if (resolution > 30) {
        throw std::invalid_argument("resolution too large");
    }
    if (values_.size() != (std::size_t{1} << resolution)) {
        throw std::invalid_argument("value table must have exactly 2^J entries");
    }
}

LCFunction LCFunction::constant(const Rational& c, unsigned resolution) {
    return LCFunction(resolution,
                      std::vector<Rational>(std::size_t{1} << resolution, c));
}

bool LCFunction::operator==(const LCFunction& rhs) const {
    const unsigned j = std::max(resolution_, rhs.resolution());
    if (resolution_ == rhs.resolution()) return values_ == rhs.values();
    return refine(*this, j).values() == refine(rhs, j).values();
}

LCFunction LCFunction::operator+(const LCFunction& rhs) const {
    const unsigned j = std::max(resolution_, rhs.resolution());
    LCFunction a = refine(*this, j), b = refine(rhs, j);
    std::vector<Rational> out(a.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
    return LCFunction(j, std::move(out));
}

LCFunction LCFunction::operator-(const LCFunction& rhs) const {
    const unsigned j = std::max(resolution_, rhs.resolution());
    LCFunction a = refine(*this, j), b = refine(rhs, j);
    std::vector<Rational> out(a.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
    return LCFunction(j, std::move(out));
}

LCFunction LCFunction::operator*(const Rational& c) const {
    std::vector<Rational> out(values_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = values_[k] * c;
    return LCFunction(resolution_, std::move(out));
}

Rational eval(const LCFunction& f, const Rational& x) {
    Cell c = cell_of(x, f.resolution());
    return f[c.index.get_ui()];
}

Rational integral(const LCFunction& f) {
    Rational sum(0);
    for (const Rational& v : f.values()) sum += v;
    return sum * pow2(-static_cast<long>(f.resolution()));
}

Rational lp_norm_pow(const LCFunction& f, unsigned long p) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    Rational sum(0);
    for (const Rational& v : f.values()) sum += rational_pow(abs(v), p);
    return sum * pow2(-static_cast<long>(f.resolution()));
}

Rational linf_norm(const LCFunction& f) {
    Rational m(0);
    for (const Rational& v : f.values()) {
        Rational a = abs(v);
        if (a > m) m = a;
    }
    return m;
}

BigFloat lp_norm_float(const LCFunction& f, const Rational& p, unsigned precision) {
    if (precision < BigFloat::min_precision) {
        throw std::invalid_argument("precision must be at least 16 bits");
    }
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    BigFloat sum(precision);
    for (const Rational& v : f.values()) { // ascending index, fixed order
        if (v == 0) continue;
        sum = sum + rational_pow_rational(abs(v), p, precision);
    }
    sum = sum * BigFloat::from_rational(pow2(-static_cast<long>(f.resolution())),
                                        precision);
    return sum.pow_rational(1 / p);
}

LCFunction refine(const LCFunction& f, unsigned resolution) {
    if (resolution < f.resolution()) {
        throw std::invalid_argument("refine cannot lower the resolution");
    }
    if (resolution == f.resolution()) return f;
    const std::size_t mask = (std::size_t{1} << f.resolution()) - 1;
    std::vector<Rational> out(std::size_t{1} << resolution);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f[k & mask];
    return LCFunction(resolution, std::move(out));
}

LCFunction project(const LCFunction& f, unsigned level) {
    if (level >= f.resolution()) return f;
    const std::size_t cells = std::size_t{1} << level;
    std::vector<Rational> out(cells, Rational(0));
    for (std::size_t k = 0; k < f.size(); ++k) out[k & (cells - 1)] += f[k];
    const Rational scale = pow2(-static_cast<long>(f.resolution() - level));
    for (Rational& v : out) v *= scale;
    return LCFunction(level, std::move(out));
}

LCFunction block(const LCFunction& f, unsigned level) {
    return project(f, level + 1) - project(f, level);
}

BlockSequence decompose(const LCFunction& f) {
    const unsigned J = f.resolution();
    // pyramid of successive averages: level[j] holds S_j f
    std::vector<std::vector<Rational>> level(J + 1);
    level[J] = f.values();
    for (unsigned j = J; j > 0; --j) {
        const std::size_t half = std::size_t{1} << (j - 1);
        level[j - 1].resize(half);
        for (std::size_t k = 0; k < half; ++k) {
            level[j - 1][k] = (level[j][k] + level[j][k + half]) / 2;
        }
    }
    BlockSequence out;
    out.mean = level[0][0];
    out.blocks.reserve(J);
    for (unsigned j = 0; j < J; ++j) {
        const std::size_t half = std::size_t{1} << j;
        std::vector<Rational> d(half * 2);
        for (std::size_t k = 0; k < half * 2; ++k) {
            d[k] = level[j + 1][k] - level[j][k & (half - 1)];
        }
        out.blocks.emplace_back(j + 1, std::move(d));
    }
    return out;
}

LCFunction reconstruct(const BlockSequence& b) {
    for (std::size_t j = 0; j < b.blocks.size(); ++j) {
        if (b.blocks[j].resolution() != j + 1) {
            throw std::invalid_argument("block " + std::to_string(j) +
                                        " must have resolution " +
                                        std::to_string(j + 1));
        }
    }
    std::vector<Rational> cur{b.mean};
    for (std::size_t j = 0; j < b.blocks.size(); ++j) {
        const std::size_t half = std::size_t{1} << j;
        std::vector<Rational> next(half * 2);
        for (std::size_t k = 0; k < half * 2; ++k) {
            next[k] = cur[k & (half - 1)] + b.blocks[j][k];
        }
        cur = std::move(next);
    }
    return LCFunction(static_cast<unsigned>(b.blocks.size()), std::move(cur));
}

LCFunction square_function_sq(const LCFunction& f) {
    const unsigned J = f.resolution();
    BlockSequence b = decompose(f);
    std::vector<Rational> acc(std::size_t{1} << J, Rational(0));
    for (const LCFunction& blk : b.blocks) {
        LCFunction fine = refine(blk, J);
        for (std::size_t k = 0; k < acc.size(); ++k) {
            acc[k] += fine[k] * fine[k];
        }
    }
    return LCFunction(J, std::move(acc));
}

LCFunction random_lc(unsigned resolution, std::uint64_t seed, unsigned value_bound) {
    if (resolution > LCFunction::max_resolution) {
        throw std::invalid_argument("resolution must be <= 24");
    }
    if (value_bound == 0) throw std::invalid_argument("value_bound must be >= 1");
    std::mt19937_64 rng(seed);
    const std::uint64_t span = 2 * std::uint64_t{value_bound} + 1;
    std::vector<Rational> out;
    out.reserve(std::size_t{1} << resolution);
    for (std::size_t k = 0; k < (std::size_t{1} << resolution); ++k) {
        const long num = static_cast<long>(rng() % span) - static_cast<long>(value_bound);
        const unsigned long den = 1 + rng() % value_bound;
        Rational v(num, den);
        v.canonicalize();
        out.push_back(std::move(v));
    }
    return LCFunction(resolution, std::move(out));
}

} // namespace dyadic
