#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "dyadic/lcfunction.hpp"

using namespace dyadic;

namespace {

std::vector<Rational> rationals(std::vector<long> v) {
    return std::vector<Rational>(v.begin(), v.end());
}

// The resolution-3 table used across these tests; its three blocks have
// amplitudes 1, 2, 4 and pair counts 1, 2, 1.
LCFunction sample_table() {
    return LCFunction(3, rationals({7, 1, -1, -3, -1, 1, -1, -3}));
}

LCFunction indicator(unsigned level, std::size_t index) {
    std::vector<Rational> v(std::size_t{1} << level, Rational(0));
    v[index] = 1;
    return LCFunction(level, std::move(v));
}

// Independent oracle for the conditional expectation: averages the
// descendants of each coarse cell by explicit strided enumeration.
LCFunction project_oracle(const LCFunction& f, unsigned level) {
    if (level >= f.resolution()) return f;
    const std::size_t cells = std::size_t{1} << level;
    const std::size_t descendants = f.size() / cells;
    std::vector<Rational> out(cells, Rational(0));
    for (std::size_t k = 0; k < cells; ++k) {
        for (std::size_t i = k; i < f.size(); i += cells) out[k] += f[i];
        out[k] /= static_cast<unsigned long>(descendants);
    }
    return LCFunction(level, std::move(out));
}

Rational integral_over_cell(const LCFunction& f, unsigned level, std::size_t k) {
    LCFunction fine = refine(f, std::max(level, f.resolution()));
    const std::size_t cells = std::size_t{1} << level;
    Rational sum(0);
    for (std::size_t i = k; i < fine.size(); i += cells) sum += fine[i];
    return sum * pow2(-static_cast<long>(fine.resolution()));
}

} // namespace

TEST_CASE("construction validates the table size") {
    CHECK_THROWS_AS(LCFunction(2, rationals({1, 2})), std::invalid_argument);
    CHECK_NOTHROW(LCFunction(1, rationals({1, 2})));
}

TEST_CASE("eval picks the value of the containing cell") {
    CHECK(eval(LCFunction::constant(Rational(5, 7), 4), Rational(9, 11)) ==
          Rational(5, 7));
    CHECK(eval(sample_table(), Rational(4)) == -1);
    CHECK(eval(indicator(2, 1), Rational(5)) == 1);
    CHECK_THROWS_AS(eval(sample_table(), Rational(1, 2)), std::domain_error);
}

TEST_CASE("integral") {
    CHECK(integral(LCFunction::constant(Rational(-2, 3), 5)) == Rational(-2, 3));
    for (unsigned j : {0u, 1u, 4u}) {
        CHECK(integral(indicator(j, (1u << j) - 1)) == pow2(-long(j)));
    }
    CHECK(integral(sample_table()) == 0);
}

TEST_CASE("lp_norm_pow") {
    CHECK(lp_norm_pow(indicator(3, 2), 1) == Rational(1, 8));
    CHECK(lp_norm_pow(sample_table(), 2) == 9);
    CHECK(lp_norm_pow(LCFunction::constant(Rational(0), 2), 5) == 0);
}

TEST_CASE("linf_norm") {
    LCFunction f = sample_table();
    CHECK(linf_norm(f) == 7);
    CHECK(linf_norm(LCFunction::constant(Rational(-9, 4))) == Rational(9, 4));
    CHECK(linf_norm(f * Rational(-1)) == linf_norm(f));
}

TEST_CASE("lp_norm_float") {
    const unsigned prec = 64;
    BigFloat sqrt_half = lp_norm_float(indicator(1, 0), Rational(2), prec);
    BigFloat expected = pow2_float(Rational(-1, 2), prec);
    BigFloat err = (sqrt_half - expected).abs();
    CHECK(err <= expected * pow2_float(Rational(-int(prec) + 4), prec));

    LCFunction f = sample_table();
    BigFloat l1 = lp_norm_float(f, Rational(1), prec);
    Rational l1_exact = lp_norm_pow(f, 1);
    CHECK((l1.to_rational() - l1_exact) * pow2(prec - 4) <= l1_exact);
    CHECK((l1_exact - l1.to_rational()) * pow2(prec - 4) <= l1_exact);

    BigFloat one = lp_norm_float(LCFunction(1, rationals({1, -1})), Rational(3), prec);
    CHECK(one == BigFloat::from_integer(1, prec));

    CHECK_THROWS_AS(lp_norm_float(f, Rational(1), 8), std::invalid_argument);
    CHECK_THROWS_AS(lp_norm_float(f, Rational(1, 2), prec), std::invalid_argument);
}

TEST_CASE("project") {
    LCFunction f = sample_table();
    CHECK(project(f, 0) == LCFunction::constant(integral(f)));
    CHECK(project(LCFunction::constant(Rational(3, 2), 4), 2) ==
          LCFunction::constant(Rational(3, 2)));
    LCFunction p2 = project(f, 2);
    CHECK(p2.resolution() == 2);
    CHECK(p2.values() == rationals({3, 1, -1, -3}));
    CHECK(p2 == project_oracle(f, 2));
    CHECK(project(f, 7) == f);
}

TEST_CASE("block") {
    CHECK(block(LCFunction::constant(Rational(9)), 3) ==
          LCFunction::constant(Rational(0)));
    LCFunction f = sample_table();
    CHECK(block(f, 5) == LCFunction::constant(Rational(0)));
    LCFunction b2 = block(f, 2);
    CHECK(b2.values() == rationals({4, 0, 0, 0, -4, 0, 0, 0}));
}

TEST_CASE("decompose on the documented examples") {
    BlockSequence c = decompose(LCFunction::constant(Rational(5), 3));
    CHECK(c.mean == 5);
    CHECK(c.blocks.size() == 3);
    for (const LCFunction& b : c.blocks) {
        CHECK(b == LCFunction::constant(Rational(0)));
    }

    BlockSequence t = decompose(sample_table());
    CHECK(t.mean == 0);
    CHECK(t.blocks.size() == 3);
    CHECK(reconstruct(t) == sample_table());

    BlockSequence h = decompose(indicator(1, 0));
    CHECK(h.mean == Rational(1, 2));
    CHECK(h.blocks.size() == 1);
    CHECK(h.blocks[0] == LCFunction(1, {Rational(1, 2), Rational(-1, 2)}));
}

TEST_CASE("reconstruct validates block resolutions") {
    BlockSequence bad;
    bad.mean = 0;
    bad.blocks.push_back(LCFunction(2, rationals({1, -1, 1, -1})));
    CHECK_THROWS_AS(reconstruct(bad), std::invalid_argument);

    BlockSequence empty;
    empty.mean = Rational(7, 3);
    CHECK(reconstruct(empty) == LCFunction::constant(Rational(7, 3)));
}

TEST_CASE("square function") {
    CHECK(square_function_sq(LCFunction::constant(Rational(4), 2)) ==
          LCFunction::constant(Rational(0)));
    // a single-block function: the square function is that block squared
    LCFunction single(1, {Rational(3), Rational(-3)});
    CHECK(square_function_sq(single) == LCFunction::constant(Rational(9)));
    LCFunction f = sample_table();
    CHECK(integral(square_function_sq(f)) == 9);
}

TEST_CASE("random_lc is deterministic and bounded") {
    LCFunction a = random_lc(6, 42, 50);
    LCFunction b = random_lc(6, 42, 50);
    CHECK(a == b);
    LCFunction c = random_lc(6, 43, 50);
    CHECK_FALSE(a == c);
    CHECK(random_lc(0, 1, 9).size() == 1);
    for (const Rational& v : a.values()) {
        CHECK(abs(v.get_num()) <= 50);
        CHECK(v.get_den() <= 50);
    }
    CHECK_THROWS_AS(random_lc(25, 1, 9), std::invalid_argument);
}

TEST_CASE("exact reconstruction and martingale identities on a corpus") {
    std::mt19937_64 seeds(101);
    for (int t = 0; t < 30; ++t) {
        const unsigned J = t % 9;
        LCFunction f = random_lc(J, seeds(), 60);
        BlockSequence d = decompose(f);

        LCFunction r = reconstruct(d);
        CHECK(r.resolution() == f.resolution());
        CHECK(r == f);

        // mean-zero over every coarse cell
        for (unsigned j = 0; j < J; ++j) {
            for (std::size_t k = 0; k < (std::size_t{1} << j); ++k) {
                CHECK(integral_over_cell(d.blocks[j], j, k) == 0);
            }
        }

        // Parseval and the square-function identity
        Rational blocks_l2(0);
        for (const LCFunction& b : d.blocks) blocks_l2 += lp_norm_pow(b, 2);
        CHECK(lp_norm_pow(f, 2) == d.mean * d.mean + blocks_l2);
        CHECK(integral(square_function_sq(f)) ==
              lp_norm_pow(f, 2) - integral(f) * integral(f));

        // pairwise orthogonality of blocks
        for (std::size_t i = 0; i + 1 < d.blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
                LCFunction a = refine(d.blocks[i], J);
                LCFunction b = refine(d.blocks[j], J);
                Rational dot(0);
                for (std::size_t k = 0; k < a.size(); ++k) dot += a[k] * b[k];
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("projection laws") {
    std::mt19937_64 seeds(202);
    for (int t = 0; t < 10; ++t) {
        LCFunction f = random_lc(6, seeds(), 40);
        LCFunction g = random_lc(6, seeds(), 40);
        for (unsigned j : {0u, 2u, 5u, 6u, 9u}) {
            CHECK(project(f, j) == project_oracle(f, j));
            for (unsigned jp : {1u, 3u, 6u}) {
                CHECK(project(project(f, j), jp) == project(f, std::min(j, jp)));
            }
            CHECK(project(f + g, j) == project(f, j) + project(g, j));
            CHECK(lp_norm_pow(project(f, j), 1) <= lp_norm_pow(f, 1));
            CHECK(linf_norm(project(f, j)) <= linf_norm(f));
        }
    }
}

TEST_CASE("refinement changes no result") {
    std::mt19937_64 seeds(303);
    LCFunction f = random_lc(5, seeds(), 30);
    LCFunction fine = refine(f, 8);
    CHECK(integral(fine) == integral(f));
    CHECK(lp_norm_pow(fine, 2) == lp_norm_pow(f, 2));
    CHECK(lp_norm_pow(fine, 3) == lp_norm_pow(f, 3));
    CHECK(linf_norm(fine) == linf_norm(f));
    for (unsigned j = 0; j <= 8; ++j) {
        CHECK(project(fine, j) == project(f, j));
        CHECK(block(fine, j) == block(f, j));
    }
    CHECK(square_function_sq(fine) == square_function_sq(f));
    CHECK_THROWS_AS(refine(f, 3), std::invalid_argument);
}
