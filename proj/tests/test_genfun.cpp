#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmoments/genfun.hpp"
#include "qmoments/oracle.hpp"

using namespace qmoments;

namespace {

LaurentPoly table_to_poly(const StatisticTable& t) {
    LaurentPoly p;
    for (const auto& [m, c] : t.counts) p.add_term(m, Rational(static_cast<long>(c)));
    return p;
}

}  // namespace

TEST_CASE("two-variable generating functions match enumeration") {
    const std::int64_t n = 14;
    const ZQSeries rank = rank_gf(RankVariant::Dyson, n);
    const ZQSeries m2 = rank_gf(RankVariant::M2, n);
    const ZQSeries crank1 = crank_gf(CrankVariant::Residual1, n);
    const ZQSeries crank2 = crank_gf(CrankVariant::Residual2, n);
    for (std::int64_t i = 0; i <= n; ++i) {
        CHECK(rank.coeff(i) == table_to_poly(statistic_table(StatKind::Rank, i)));
        CHECK(m2.coeff(i) == table_to_poly(statistic_table(StatKind::M2Rank, i)));
        CHECK(crank1.coeff(i) == table_to_poly(statistic_table(StatKind::Crank1, i)));
        CHECK(crank2.coeff(i) == table_to_poly(statistic_table(StatKind::Crank2, i)));
    }
}

TEST_CASE("laurent windows stay within [-n, n]") {
    const std::int64_t n = 12;
    for (const ZQSeries& s : {rank_gf(RankVariant::Dyson, n), rank_gf(RankVariant::M2, n),
                              crank_gf(CrankVariant::Residual1, n)}) {
        for (std::int64_t i = 0; i <= n; ++i) {
            if (s.coeff(i).is_zero()) continue;
            CHECK(s.coeff(i).min_exp() >= -i);
            CHECK(s.coeff(i).max_exp() <= i);
        }
    }
}

TEST_CASE("z = 1 collapses every statistic to the overpartition counts") {
    const std::int64_t n = 12;
    const QSeries pbar = pbar_series(n);
    CHECK(eval_z(rank_gf(RankVariant::Dyson, n), 1) == pbar);
    CHECK(eval_z(rank_gf(RankVariant::M2, n), 1) == pbar);
    CHECK(eval_z(crank_gf(CrankVariant::Residual1, n), 1) == pbar);
    CHECK(eval_z(crank_gf(CrankVariant::Residual2, n), 1) == pbar);
}

TEST_CASE("moment families agree with the expanded two-variable route") {
    const std::int64_t n = 16;
    const ZQSeries crank1 = crank_gf(CrankVariant::Residual1, n);
    ZQSeries dz = crank1;
    const auto family = moment_family(MomentFamily::Crank1, 4, n);
    CHECK(eval_z(crank1, 1) == family[0]);
    for (int j = 1; j <= 4; ++j) {
        dz = delta_z(dz);
        CHECK(eval_z(dz, 1) == family[static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("odd moments vanish and odd k is refused") {
    for (MomentFamily f : {MomentFamily::Rank, MomentFamily::M2Rank, MomentFamily::Crank1,
                           MomentFamily::Crank2}) {
        const auto family = moment_family(f, 7, 20);
        for (int j = 1; j <= 7; j += 2) CHECK(family[static_cast<std::size_t>(j)].is_zero());
        CHECK_THROWS_AS(moment_series(f, 3, 10), std::invalid_argument);
    }
}

TEST_CASE("moment values at q^4") {
    CHECK(moment_series(MomentFamily::Crank1, 2, 6).series.coeff(4) == 70);
    CHECK(moment_series(MomentFamily::Crank2, 2, 6).series.coeff(4) == 14);
    CHECK(moment_series(MomentFamily::Rank, 2, 6).series.coeff(4) == 44);
    CHECK(moment_series(MomentFamily::M2Rank, 2, 6).series.coeff(4) == 8);
    CHECK(moment_series(MomentFamily::Crank1, 0, 6).series == pbar_series(6));
}

TEST_CASE("oracle equivalence across all families and moments") {
    const std::int64_t n = 12;
    for (const auto& [family, kind] :
         std::vector<std::pair<MomentFamily, StatKind>>{{MomentFamily::Rank, StatKind::Rank},
                                                        {MomentFamily::M2Rank, StatKind::M2Rank},
                                                        {MomentFamily::Crank1, StatKind::Crank1},
                                                        {MomentFamily::Crank2, StatKind::Crank2}}) {
        const auto fam = moment_family(family, 8, n);
        for (std::int64_t i = 0; i <= n; ++i) {
            for (int k = 0; k <= 8; k += 2) {
                CHECK(fam[static_cast<std::size_t>(k)].coeff(i) ==
                      Rational(oracle_moment(kind, k, i)));
            }
        }
    }
}

TEST_CASE("alpha series") {
    const QSeries alpha = alpha_series(25);
    for (std::int64_t n = 0; n <= 25; ++n)
        CHECK(alpha.coeff(n) == Rational(oracle_alpha(n)));
    // matches the two-variable evaluation as well
    const QSeries alpha_zq = eval_z(rank_gf(RankVariant::Dyson, 16), -1);
    for (std::int64_t n = 0; n <= 16; ++n) CHECK(alpha.coeff(n) == alpha_zq.coeff(n));
    CHECK(alpha.coeff(1) == 2);
}

TEST_CASE("nov and ov series") {
    const auto [nov, ov] = nov_ov_series(50);
    CHECK(nov.coeff(0) == 0);
    CHECK(ov.coeff(0) == 0);
    CHECK(nov.coeff(4) == 35);
    CHECK(ov.coeff(4) == 21);
    for (std::int64_t n = 0; n <= 12; ++n) {
        const auto [en, eo] = nov_ov(n);
        CHECK(nov.coeff(n) == Rational(en));
        CHECK(ov.coeff(n) == Rational(eo));
    }
    // nov = half the second crank moment
    const QSeries crank2nd = moment_series(MomentFamily::Crank1, 2, 50).series;
    for (std::int64_t n = 0; n <= 50; ++n)
        CHECK(qs_scale(crank2nd, make_rational(1, 2)).coeff(n) == nov.coeff(n));
    // ov = half crank1 second moment minus crank2 second moment
    const QSeries crank2_2nd = moment_series(MomentFamily::Crank2, 2, 50).series;
    for (std::int64_t n = 0; n <= 50; ++n)
        CHECK(ov.coeff(n) ==
              make_rational(1, 2) * crank2nd.coeff(n) - crank2_2nd.coeff(n));
}

TEST_CASE("spt series") {
    const SptSeries s = spt_series(20);
    CHECK(s.spt1.coeff(4) == 20);
    CHECK(s.spt2.coeff(4) == 6);
    CHECK(s.spt.coeff(4) == 26);
    CHECK(s.spt.coeff(0) == 0);
    for (std::int64_t n = 0; n <= 20; ++n) {
        const SptTriple t = spt_statistics(n);
        CHECK(s.spt1.coeff(n) == Rational(t.spt1));
        CHECK(s.spt2.coeff(n) == Rational(t.spt2));
        CHECK(s.spt.coeff(n) == Rational(t.spt));
    }
}

TEST_CASE("combination coefficients") {
    CHECK(combination_leading_coeff(4) == 6);
    CHECK(combination_delta_coeff(RankVariant::Dyson, 4, 1) == 48);
    CHECK(combination_delta_coeff(RankVariant::M2, 4, 1) == 12);
    CHECK(combination_plain_coeff(4, 1) == 6);
    CHECK(combination_delta_coeff(RankVariant::Dyson, 6, 1) == 120);
    CHECK(combination_delta_coeff(RankVariant::Dyson, 6, 2) == 1920);
    CHECK(combination_plain_coeff(6, 1) == 275);
    CHECK(combination_plain_coeff(6, 2) == 215);
    CHECK(combination_plain_coeff(8, 1) == 1596);
    CHECK(combination_plain_coeff(8, 2) == 7014);
    CHECK(combination_plain_coeff(8, 3) == 2940);
    CHECK(combination_delta_coeff(RankVariant::Dyson, 8, 3) == 37184);
    CHECK_THROWS_AS(rank_combination(RankVariant::Dyson, 1, 10), std::invalid_argument);
}

TEST_CASE("differential identities hold through q^18") {
    for (RankVariant v : {RankVariant::Dyson, RankVariant::M2}) {
        const PdeReport report = verify_pde(v, 18);
        CHECK(report.pass);
    }
}

TEST_CASE("perturbed rank series breaks the differential identity") {
    const std::int64_t n = 10;
    ZQSeries rank = rank_gf(RankVariant::Dyson, n);
    rank.coeff_mut(7).add_term(2, Rational(1));
    const PdeReport report =
        pde_report_from_residual(RankVariant::Dyson, pde_residual(RankVariant::Dyson, rank, n));
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.failures.empty());
    CHECK(report.failures.front().n == 7);
}

TEST_CASE("cusp companion expansion") {
    const QSeries f = cusp_f_series(8);
    CHECK(f.coeff(0) == 0);
    CHECK(f.coeff(1) == 1);
}
