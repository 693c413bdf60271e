#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "dyadic/counterexample.hpp"

using namespace dyadic;

namespace {

CounterexampleConfig flat_config(unsigned j0, Rational alpha = Rational(1)) {
    return CounterexampleConfig{j0, alpha, LqIndex::infinity(),
                                EpsilonSpec{Rational(0), 64}};
}

CounterexampleConfig decaying_config(unsigned j0, unsigned long q = 4,
                                     Rational a = Rational(3, 8)) {
    return CounterexampleConfig{j0, Rational(1), LqIndex::finite(q),
                                EpsilonSpec{a, 64}};
}

std::vector<Rational> rationals(std::vector<long> v) {
    return std::vector<Rational>(v.begin(), v.end());
}

} // namespace

TEST_CASE("config validation") {
    CHECK_NOTHROW(flat_config(1).validate());
    CHECK_THROWS_AS(flat_config(0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(flat_config(2, Rational(0)).validate(), std::invalid_argument);
    CHECK_THROWS_AS(decaying_config(2, 2).validate(), std::invalid_argument);
    CounterexampleConfig low_prec{1, Rational(1), LqIndex::infinity(),
                                  EpsilonSpec{Rational(0), 8}};
    CHECK_THROWS_AS(low_prec.validate(), std::invalid_argument);
}

TEST_CASE("make_epsilon") {
    std::vector<Rational> flat = make_epsilon({Rational(0), 64}, 5);
    CHECK(flat == std::vector<Rational>(6, Rational(1)));

    std::vector<Rational> half = make_epsilon({Rational(1, 2), 64}, 3);
    CHECK(half[0] == 1);
    CHECK(half[3] == Rational(1, 2)); // 4^(-1/2) is exactly representable

    std::vector<Rational> dec = make_epsilon({Rational(3, 8), 64}, 15);
    CHECK(dec[0] == 1);
    for (std::size_t j = 1; j < dec.size(); ++j) {
        CHECK(dec[j] <= dec[j - 1]);
        CHECK(dec[j] > 0);
        CHECK(is_dyadic(dec[j]));
    }
    // eps_15 rounds 16^(-3/8) = 2^(-3/2): check the square against 1/8
    Rational sq_err = abs(dec[15] * dec[15] - Rational(1, 8));
    CHECK(sq_err <= pow2(-62));

    CHECK_THROWS_AS(make_epsilon({Rational(-1), 64}, 3), std::invalid_argument);
}

TEST_CASE("pair_count follows the two-regime definition") {
    CounterexampleConfig cfg = flat_config(4);
    CHECK(pair_count(0, cfg) == 1);
    CHECK(pair_count(2, cfg) == 4);
    CHECK(pair_count(5, cfg) == 8);  // 2^(8-5)
    CHECK(pair_count(8, cfg) == 1);  // j = j1 = 2*j0
    CHECK_THROWS_AS(pair_count(9, cfg), std::invalid_argument);

    for (unsigned j0 : {1u, 3u, 6u}) {
        CounterexampleConfig c = flat_config(j0);
        for (unsigned j = 0; j <= c.j1(); ++j) {
            mpz_class n = pair_count(j, c);
            CHECK(n >= 1);
            CHECK(n <= pow2(j).get_num());
        }
    }
}

TEST_CASE("build_blocks for the smallest flat configuration") {
    SparseBlockFunction sbf = build_blocks(flat_config(1));
    REQUIRE(sbf.blocks.size() == 3);
    CHECK(sbf.blocks[0].amplitude == 1);
    CHECK(sbf.blocks[0].pair_count == 1);
    CHECK(sbf.blocks[1].amplitude == 2);
    CHECK(sbf.blocks[1].pair_count == 2);
    CHECK(sbf.blocks[2].amplitude == 4);
    CHECK(sbf.blocks[2].pair_count == 1);

    CHECK(materialize_block(sbf.blocks[0]).values() == rationals({1, -1}));
    CHECK(materialize_block(sbf.blocks[1]).values() == rationals({2, 2, -2, -2}));
    CHECK(materialize_block(sbf.blocks[2]).values() ==
          rationals({4, 0, 0, 0, -4, 0, 0, 0}));
}

TEST_CASE("materialized blocks integrate to zero over every parent cell") {
    SparseBlockFunction sbf = build_blocks(decaying_config(3));
    for (const BlockSpec& spec : sbf.blocks) {
        LCFunction blk = materialize_block(spec);
        const std::size_t half = std::size_t{1} << spec.level;
        for (std::size_t k = 0; k < half; ++k) {
            CHECK(blk[k] + blk[k + half] == 0);
        }
    }
}

TEST_CASE("materialize") {
    LCFunction f = materialize(build_blocks(flat_config(1)));
    CHECK(f.resolution() == 3);
    CHECK(f.values() == rationals({7, 1, -1, -3, -1, 1, -1, -3}));
    CHECK(integral(f) == 0);

    // a lone level-0 block
    SparseBlockFunction single;
    single.blocks.push_back(BlockSpec{0, Rational(5, 2), 1});
    LCFunction g = materialize(single);
    CHECK(g.values() == std::vector<Rational>{Rational(5, 2), Rational(-5, 2)});

    CHECK(integral(materialize(build_blocks(decaying_config(4)))) == 0);

    CHECK_THROWS_AS(materialize(build_blocks(flat_config(12))), capacity_error);
}

TEST_CASE("closed forms match the dense path on the anchor configuration") {
    CounterexampleConfig cfg = flat_config(1);
    ClosedFormNorms n = closed_form_norms(cfg);
    CHECK(n.l2_sq == 9);
    CHECK(n.l2_sq == lp_norm_pow(materialize(build_blocks(cfg)), 2));
    CHECK(n.b_neg1_inf_inf == 1);
    CHECK_FALSE(n.b_1q1_is_qth_power);
    CHECK(n.b_1q1_exact == 4);
}

TEST_CASE("block norm identities hold exactly") {
    for (unsigned j0 : {1u, 2u, 4u}) {
        for (const CounterexampleConfig& cfg :
             {flat_config(j0, Rational(3, 5)), decaying_config(j0)}) {
            SparseBlockFunction sbf = build_blocks(cfg);
            for (unsigned j = 0; j <= cfg.j1(); ++j) {
                LCFunction blk = materialize_block(sbf.blocks[j]);
                const Rational eps = sbf.epsilon[j];
                const Rational n(sbf.blocks[j].pair_count);
                CHECK(linf_norm(blk) == eps * cfg.alpha * pow2(j));
                CHECK(lp_norm_pow(blk, 1) == eps * cfg.alpha * n);
                CHECK(lp_norm_pow(blk, 2) ==
                      eps * eps * cfg.alpha * cfg.alpha * pow2(j) * n);
            }
        }
    }
}

TEST_CASE("extracted blocks equal their specifications") {
    CounterexampleConfig cfg = decaying_config(2);
    SparseBlockFunction sbf = build_blocks(cfg);
    LCFunction f = materialize(sbf);
    for (unsigned j = 0; j <= cfg.j1(); ++j) {
        CHECK(block(f, j) == materialize_block(sbf.blocks[j]));
    }
}

TEST_CASE("ratio") {
    RatioResult anchor = ratio(flat_config(1));
    REQUIRE(anchor.exact.has_value());
    CHECK(*anchor.exact == Rational(9, 4));
    CHECK(anchor.value == BigFloat::from_rational(Rational(9, 4), 64));

    // invariance under alpha scaling: exact for q = inf
    RatioResult scaled = ratio(flat_config(1, Rational(3, 5)));
    CHECK(*scaled.exact == Rational(9, 4));

    // and bit-exact for the float path when alpha is a power of two
    RatioResult r1 = ratio(decaying_config(3));
    CounterexampleConfig c4 = decaying_config(3);
    c4.alpha = Rational(4);
    CHECK(ratio(c4).value == r1.value);

    RatioResult two = ratio(flat_config(2));
    CHECK(*two.exact == Rational(53, 16));
    CHECK(*two.exact > *anchor.exact);
}

TEST_CASE("sweep") {
    EpsilonSpec flat{Rational(0), 64};
    std::vector<SweepRow> rows = sweep({2, 3, 4, 5, 6}, LqIndex::infinity(), flat,
                                       Rational(1));
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].config.j0 == i + 2);
        RatioResult direct = ratio(rows[i].config);
        CHECK(*rows[i].ratio.exact == *direct.exact);
        if (i > 0) CHECK(*rows[i].ratio.exact > *rows[i - 1].ratio.exact);
    }

    EpsilonSpec dec{Rational(3, 8), 64};
    std::vector<unsigned> j0s;
    for (unsigned j0 = 2; j0 <= 12; ++j0) j0s.push_back(j0);
    std::vector<SweepRow> drows = sweep(j0s, LqIndex::finite(4), dec, Rational(1));
    for (std::size_t i = 1; i < drows.size(); ++i) {
        CHECK(drows[i].ratio.value > drows[i - 1].ratio.value);
    }
}

TEST_CASE("cross_validate") {
    for (unsigned j0 : {1u, 3u}) {
        CrossValidationReport flat_report = cross_validate(flat_config(j0));
        CHECK(flat_report.checks.size() == 4);
        CHECK(flat_report.resolution == 2 * j0 + 1);
        CrossValidationReport dec_report = cross_validate(decaying_config(j0));
        CHECK(dec_report.checks.size() == 4);
    }
    CHECK_THROWS_AS(cross_validate(flat_config(10)), capacity_error);
}
