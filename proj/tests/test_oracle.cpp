#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmoments/oracle.hpp"
#include "qmoments/qseries.hpp"

using namespace qmoments;

TEST_CASE("enumeration counts") {
    CHECK(enumerate_overpartitions(0).size() == 1);
    CHECK(enumerate_overpartitions(0)[0].parts.empty());
    CHECK(enumerate_overpartitions(4).size() == 14);
    CHECK(enumerate_overpartitions(5).size() == 24);
    CHECK_THROWS_AS(enumerate_overpartitions(41), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_overpartitions(-1), std::invalid_argument);
}

TEST_CASE("enumeration matches the generating function") {
    const QSeries pbar = pbar_series(12);
    for (std::int64_t n = 0; n <= 12; ++n) {
        CHECK(Rational(static_cast<long>(enumerate_overpartitions(n).size())) == pbar.coeff(n));
    }
}

TEST_CASE("dyson rank examples") {
    Overpartition op;
    op.parts = {3, 1};
    CHECK(dyson_rank(op) == 1);
    op.parts = {1, 1, 1, 1};
    op.overlined = {1};
    CHECK(dyson_rank(op) == -3);
    CHECK(dyson_rank(Overpartition{}) == 0);
}

TEST_CASE("m2 rank examples") {
    Overpartition op;
    op.parts = {3};
    CHECK(m2_rank(op) == 1);  // ceil(3/2) - 1 + 1 - 1
    op.overlined = {3};
    CHECK(m2_rank(op) == 1);  // ceil(3/2) - 1 + 0 - 0
    CHECK(m2_rank(Overpartition{}) == 0);
}

TEST_CASE("statistic tables are symmetric and total correctly") {
    for (std::int64_t n = 0; n <= 10; ++n) {
        const std::int64_t pbar_n =
            static_cast<std::int64_t>(enumerate_overpartitions(n).size());
        for (StatKind kind :
             {StatKind::Rank, StatKind::M2Rank, StatKind::Crank1, StatKind::Crank2}) {
            const StatisticTable table = statistic_table(kind, n);
            CHECK(table.total() == pbar_n);
            if (kind == StatKind::Rank || kind == StatKind::M2Rank) {
                for (const auto& [m, c] : table.counts) {
                    const auto it = table.counts.find(-m);
                    REQUIRE(it != table.counts.end());
                    CHECK(it->second == c);
                }
            }
        }
    }
}

TEST_CASE("residual crank special configurations") {
    Overpartition op;
    op.parts = {7, 5, 2, 1};
    op.overlined = {7, 5, 2};
    const auto contributions = residual_crank1_contributions(op);
    REQUIRE(contributions.size() == 3);
    CHECK(contributions[0].value == 0);
    CHECK(contributions[0].weight == -1);
    CHECK(contributions[1].value == -1);
    CHECK(contributions[1].weight == 1);
    CHECK(contributions[2].value == 1);
    CHECK(contributions[2].weight == 1);

    Overpartition four;
    four.parts = {4};
    const auto plain = residual_crank1_contributions(four);
    REQUIRE(plain.size() == 1);
    CHECK(plain[0].value == 4);
    CHECK(plain[0].weight == 1);

    Overpartition two;
    two.parts = {2};
    const auto halved = residual_crank2_contributions(two);
    REQUIRE(halved.size() == 3);
    CHECK(halved[0].value == 0);
    CHECK(halved[0].weight == -1);

    Overpartition mixed;
    mixed.parts = {3, 1};
    mixed.overlined = {3};
    const auto empty_sub = residual_crank2_contributions(mixed);
    REQUIRE(empty_sub.size() == 1);
    CHECK(empty_sub[0].value == 0);
    CHECK(empty_sub[0].weight == 1);
}

TEST_CASE("moments at n = 4") {
    CHECK(oracle_moment(StatKind::Crank1, 2, 4) == 70);
    CHECK(oracle_moment(StatKind::Crank2, 2, 4) == 14);
    CHECK(oracle_moment(StatKind::Rank, 2, 4) == 44);
    CHECK(oracle_moment(StatKind::M2Rank, 2, 4) == 8);
    for (StatKind kind : {StatKind::Rank, StatKind::M2Rank, StatKind::Crank1, StatKind::Crank2})
        for (std::int64_t n = 0; n <= 8; ++n) {
            CHECK(oracle_moment(kind, 1, n) == 0);
            CHECK(oracle_moment(kind, 3, n) == 0);
        }
}

TEST_CASE("smallest part statistics") {
    const SptTriple four = spt_statistics(4);
    CHECK(four.spt1 == 20);
    CHECK(four.spt2 == 6);
    CHECK(four.spt == 26);
    const SptTriple zero = spt_statistics(0);
    CHECK(zero.spt == 0);
    for (std::int64_t n = 0; n <= 10; ++n) {
        const SptTriple t = spt_statistics(n);
        CHECK(t.spt == t.spt1 + t.spt2);
    }
}

TEST_CASE("overlined and non-overlined part sums") {
    const auto [nov4, ov4] = nov_ov(4);
    CHECK(nov4 == 35);
    CHECK(ov4 == 21);
    const auto [nov0, ov0] = nov_ov(0);
    CHECK(nov0 == 0);
    CHECK(ov0 == 0);
    const QSeries pbar = pbar_series(12);
    for (std::int64_t n = 0; n <= 12; ++n) {
        const auto [nov, ov] = nov_ov(n);
        CHECK(Rational(nov + ov) == Rational(static_cast<long>(n)) * pbar.coeff(n));
    }
}

TEST_CASE("spt over plain partitions matches the unflagged restriction") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        Integer restricted = 0;
        for (const auto& op : enumerate_overpartitions(n)) {
            if (!op.overlined.empty() || op.parts.empty()) continue;
            const std::int64_t smallest = op.parts.back();
            restricted += static_cast<long>(
                std::count(op.parts.begin(), op.parts.end(), smallest));
        }
        CHECK(restricted == andrews_spt(n));
    }
}

TEST_CASE("alpha from enumeration") {
    CHECK(oracle_alpha(0) == 1);
    CHECK(oracle_alpha(1) == 2);
    CHECK(oracle_alpha(2) == -4);
    CHECK(oracle_alpha(3) == 8);
    CHECK(oracle_alpha(4) == -10);
}
