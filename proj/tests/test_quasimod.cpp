#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmoments/genfun.hpp"
#include "qmoments/linalg.hpp"
#include "qmoments/quasimod.hpp"
#include "qmoments/relations.hpp"

using namespace qmoments;

TEST_CASE("row echelon solver") {
    RowEchelonSolver solver(2);
    CHECK(solver.add_row({Rational(1), Rational(1), Rational(3)}) ==
          RowEchelonSolver::AddResult::NewPivot);
    CHECK(solver.add_row({Rational(2), Rational(2), Rational(6)}) ==
          RowEchelonSolver::AddResult::Dependent);
    CHECK(solver.add_row({Rational(1), Rational(-1), Rational(1)}) ==
          RowEchelonSolver::AddResult::NewPivot);
    REQUIRE(solver.solved());
    const auto x = solver.solution();
    CHECK(x[0] == 2);
    CHECK(x[1] == 1);
    RowEchelonSolver bad(2);
    bad.add_row({Rational(1), Rational(0), Rational(1)});
    CHECK(bad.add_row({Rational(2), Rational(0), Rational(3)}) ==
          RowEchelonSolver::AddResult::Inconsistent);
}

TEST_CASE("dependency witness") {
    std::vector<Row> rows = {{Rational(1), Rational(2)},
                             {Rational(0), Rational(1)},
                             {Rational(2), Rational(7)}};
    const auto w = find_dependency(rows);
    REQUIRE(w.has_value());
    CHECK(w->row_index == 2);
    CHECK(w->combination[0] == 2);
    CHECK(w->combination[1] == 3);
    rows.pop_back();
    CHECK_FALSE(find_dependency(rows).has_value());
}

TEST_CASE("basis dimensions follow the expected sequence") {
    const std::int64_t dims[] = {2, 6, 12, 21, 33, 49};
    for (int k = 1; k <= 4; ++k) {
        const QuasiBasis basis = build_basis(k);
        CHECK(basis.dimension() == dims[k - 1]);
    }
}

TEST_CASE("membership basics") {
    const QuasiBasis basis = build_basis(1);
    const std::int64_t depth = basis.n_work + basis.margin;

    // dq(P)/P sits in the weight-2 slice
    const QSeries pbar = pbar_series(depth);
    const QSeries candidate = qs_mul(delta_q(pbar), qs_invert(pbar));
    const RelationReport yes = membership(candidate, basis, "dq(P)/P");
    CHECK(yes.exact_member);

    // the constant series 1 is not (constant terms were removed)
    const RelationReport no = membership(QSeries::constant(Rational(1), depth), basis);
    CHECK_FALSE(no.exact_member);
    CHECK(no.first_failure == 0);

    // a random series is not a member
    QSeries junk(depth);
    junk.coeff_mut(1) = 1;
    junk.coeff_mut(2) = make_rational(22, 7);
    junk.coeff_mut(5) = -3;
    const RelationReport no2 = membership(junk, basis, "junk");
    CHECK_FALSE(no2.exact_member);
    CHECK(no2.first_failure > 0);

    CHECK_THROWS_AS(membership(QSeries(3), basis), std::invalid_argument);
}

TEST_CASE("crank moments over pbar are members") {
    const QuasiBasis basis = build_basis(2);
    const std::int64_t depth = basis.n_work + basis.margin;
    const QSeries pbar_inv = qs_invert(pbar_series(depth));
    const QSeries c2 = moment_series(MomentFamily::Crank1, 2, depth).series;
    CHECK(membership(qs_mul(c2, pbar_inv), build_basis(1), "C_2/P").exact_member);
    const QSeries c4 = moment_series(MomentFamily::Crank1, 4, depth).series;
    CHECK(membership(qs_mul(c4, pbar_inv), basis, "C_4/P").exact_member);
}

TEST_CASE("delta_q maps each slice into the next") {
    for (int k = 1; k <= 2; ++k) {
        const QuasiBasis from = build_basis(k);
        const QuasiBasis to = build_basis(k + 1);
        for (std::size_t i = 0; i < from.expansions.size(); ++i) {
            QSeries d = delta_q(from.expansions[i].truncated(to.n_work + to.margin));
            const RelationReport r = membership(d, to, "dq(" + from.monomials[i].name() + ")");
            CHECK(r.exact_member);
        }
    }
}

TEST_CASE("relation reconstruction matches the stored tables") {
    const SolvedRelation k2d = reconstruct_relation(2, RankVariant::Dyson);
    CHECK(diff_against_reference(k2d, reference::k2_dyson()).empty());
    const SolvedRelation k2m = reconstruct_relation(2, RankVariant::M2);
    CHECK(diff_against_reference(k2m, reference::k2_m2()).empty());
}

TEST_CASE("solve refuses k = 5") {
    CHECK_THROWS_AS(reconstruct_relation(5, RankVariant::Dyson), std::invalid_argument);
}

TEST_CASE("npoly helpers") {
    const NPoly p = {Rational(1), Rational(2)};   // 1 + 2n
    const NPoly q = {Rational(0), Rational(1)};   // n
    const NPoly prod = npoly_mul(p, q);           // n + 2n^2
    CHECK(npoly_eval(prod, 3) == 21);
    CHECK(npoly_eval(npoly_add(p, q), 5) == 16);
    CHECK(npoly_is_zero(npoly_add(p, npoly_scale(p, Rational(-1)))));
}

TEST_CASE("congruence reduction of the fourth-moment m2 relation mod 3") {
    const CongruenceStatement st = congruence_reduce(reference::k2_m2(), 3);
    CHECK(st.equivalent_to(reference::mod3_m2()));
}

TEST_CASE("congruence reduction of the crank relations") {
    CHECK(congruence_reduce(reference::k3_dyson(), 5).equivalent_to(reference::mod5_crank()));
    CHECK(congruence_reduce(reference::k2_dyson(), 7).equivalent_to(reference::mod7_crank()));
}

TEST_CASE("congruence statements compare up to units") {
    CongruenceStatement a;
    a.p = 5;
    a.polys[TermKey::moment(MomentFamily::Crank1, 2)] = {2, 1};
    CongruenceStatement b;
    b.p = 5;
    b.polys[TermKey::moment(MomentFamily::Crank1, 2)] = {4, 2};
    CHECK(a.equivalent_to(b));
    b.polys[TermKey::moment(MomentFamily::Crank1, 2)] = {4, 3};
    CHECK_FALSE(a.equivalent_to(b));
}

TEST_CASE("relation report json round trip") {
    RelationReport r;
    r.target = "demo";
    r.exact_member = true;
    r.residual_checked_to = 42;
    r.coordinates.emplace_back("E2", make_rational(-5376, 3565));
    r.coordinates.emplace_back("V2", make_rational(1, 2));
    const RelationReport back = RelationReport::from_json(r.to_json());
    CHECK(back.target == r.target);
    CHECK(back.exact_member == r.exact_member);
    CHECK(back.residual_checked_to == r.residual_checked_to);
    REQUIRE(back.coordinates.size() == 2);
    CHECK(back.coordinates[0].second == r.coordinates[0].second);
}
