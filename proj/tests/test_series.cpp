#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qmoments/laurent.hpp"
#include "qmoments/qseries.hpp"
#include "qmoments/zqseries.hpp"

using namespace qmoments;

namespace {

std::mt19937_64 rng(20240817);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return make_rational(num(rng), den(rng));
}

QSeries random_series(std::int64_t order, bool unit_constant = false) {
    QSeries s(order);
    for (std::int64_t i = 0; i <= order; ++i) s.coeff_mut(i) = random_rational();
    if (unit_constant) s.coeff_mut(0) = 1;
    return s;
}

ZQSeries random_zq(std::int64_t order) {
    ZQSeries s(order);
    std::uniform_int_distribution<std::int64_t> zexp(-3, 3);
    for (std::int64_t i = 0; i <= order; ++i) {
        LaurentPoly p;
        for (int t = 0; t < 3; ++t) p.add_term(zexp(rng), random_rational());
        s.coeff_mut(i) = p;
    }
    return s;
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(to_fraction_string(make_rational(-6, 4)) == "-3/2");
    CHECK(rational_from_string("-3/2") == make_rational(-3, 2));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK(p_valuation(make_rational(50, 3), 5) == 2);
    CHECK(p_valuation(make_rational(3, 25), 5) == -2);
    CHECK(mod_p(make_rational(1, 2), 5) == 3);
    CHECK_THROWS_AS(mod_p(make_rational(1, 5), 5), std::domain_error);
}

TEST_CASE("basic products") {
    // (1 + q)(1 - q) = 1 - q^2
    QSeries a(5), b(5);
    a.coeff_mut(0) = 1;
    a.coeff_mut(1) = 1;
    b.coeff_mut(0) = 1;
    b.coeff_mut(1) = -1;
    const QSeries p = qs_mul(a, b);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == -1);
    CHECK(p.coeff(3) == 0);
    CHECK(p.coeff(5) == 0);
}

TEST_CASE("overpartition generating function") {
    const QSeries pbar = pbar_series(10);
    const long expected[] = {1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232};
    for (std::int64_t n = 0; n <= 10; ++n) CHECK(pbar.coeff(n) == Rational(expected[n]));
}

TEST_CASE("eisenstein series coefficients") {
    const QSeries e2 = eisenstein_e2(6);
    CHECK(e2.coeff(0) == 1);
    CHECK(e2.coeff(1) == -24);
    CHECK(e2.coeff(2) == -72);   // -24 sigma_1(2)
    CHECK(e2.coeff(3) == -96);
    CHECK(e2.coeff(4) == -168);
    const QSeries sq = qs_mul(e2, e2);
    CHECK(sq.coeff(1) == -48);
    const QSeries e4 = eisenstein_e4(3);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);  // 240 sigma_3(2)
}

TEST_CASE("inversion") {
    // 1/(1-q) is the geometric series
    QSeries a(6);
    a.coeff_mut(0) = 1;
    a.coeff_mut(1) = -1;
    const QSeries inv = qs_invert(a);
    for (std::int64_t i = 0; i <= 6; ++i) CHECK(inv.coeff(i) == 1);

    // partition counts from inverting (q;q)
    const QSeries parts = partition_series(6);
    const long p[] = {1, 1, 2, 3, 5, 7, 11};
    for (std::int64_t i = 0; i <= 6; ++i) CHECK(parts.coeff(i) == Rational(p[i]));

    const QSeries pbar = pbar_series(8);
    const QSeries one = qs_mul(pbar, qs_invert(pbar));
    CHECK(one.coeff(0) == 1);
    for (std::int64_t i = 1; i <= 8; ++i) CHECK(one.coeff(i) == 0);

    QSeries zero_const(3);
    CHECK_THROWS_AS(qs_invert(zero_const), std::domain_error);
}

TEST_CASE("pentagonal pattern of the euler product") {
    const EtaFactor f[] = {{1, 1}};
    const QSeries euler = eta_product(f, 0, 5);
    const long expected[] = {1, -1, -1, 0, 0, 1};
    for (std::int64_t i = 0; i <= 5; ++i) CHECK(euler.coeff(i) == Rational(expected[i]));
}

TEST_CASE("eta product shift") {
    // q(q;q)^6(q^2;q^2)^9 starts at q^1 with coefficient 1
    const EtaFactor f[] = {{1, 6}, {2, 9}};
    const QSeries s = eta_product(f, 1, 6);
    CHECK(s.coeff(0) == 0);
    CHECK(s.coeff(1) == 1);
}

TEST_CASE("substitute and delta operators") {
    const QSeries e2 = eisenstein_e2(8);
    const QSeries e2q2 = substitute_q_power(e2, 2);
    CHECK(e2q2.coeff(2) == -24);
    CHECK(e2q2.coeff(1) == 0);
    CHECK(substitute_q_power(e2, 1) == e2);

    QSeries one_plus_q(6);
    one_plus_q.coeff_mut(0) = 1;
    one_plus_q.coeff_mut(1) = 1;
    const QSeries cubed = substitute_q_power(one_plus_q, 3);
    CHECK(cubed.coeff(0) == 1);
    CHECK(cubed.coeff(3) == 1);
    CHECK(cubed.coeff(1) == 0);

    CHECK(delta_q(QSeries::constant(Rational(5), 4)).is_zero());
    const QSeries dpbar = delta_q(pbar_series(5));
    CHECK(dpbar.coeff(4) == 56);  // 4 * 14
    CHECK(delta_q(e2).coeff(1) == -24);
}

TEST_CASE("truncation discipline") {
    const QSeries a = pbar_series(5);
    CHECK_THROWS_AS(a.coeff(6), std::out_of_range);
    const QSeries b = pbar_series(9);
    CHECK(qs_add(a, b).trunc_order() == 5);
    CHECK(qs_mul(a, b).trunc_order() == 5);
}

TEST_CASE("ring axioms on random series") {
    for (int trial = 0; trial < 30; ++trial) {
        const QSeries a = random_series(12), b = random_series(12), c = random_series(12);
        CHECK(qs_mul(qs_mul(a, b), c) == qs_mul(a, qs_mul(b, c)));
        CHECK(qs_mul(a, qs_add(b, c)) == qs_add(qs_mul(a, b), qs_mul(a, c)));
    }
}

TEST_CASE("leibniz rule for delta_q") {
    for (int trial = 0; trial < 15; ++trial) {
        const QSeries a = random_series(20), b = random_series(20);
        const QSeries lhs = delta_q(qs_mul(a, b));
        const QSeries rhs = qs_add(qs_mul(delta_q(a), b), qs_mul(a, delta_q(b)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("double inversion is the identity") {
    for (int trial = 0; trial < 10; ++trial) {
        const QSeries a = random_series(15, true);
        CHECK(qs_invert(qs_invert(a)) == a);
    }
}

TEST_CASE("serial and parallel multiplication agree") {
    const QSeries a = random_series(300);
    const QSeries b = random_series(300);
    CHECK(qs_mul(a, b) == qs_mul_serial(a, b));
    const QSeries ai = pbar_series(400);
    const QSeries bi = partition_series(400);
    CHECK(qs_mul(ai, bi) == qs_mul_serial(ai, bi));
}

TEST_CASE("laurent polynomials") {
    LaurentPoly p;
    p.add_term(-2, Rational(3));
    p.add_term(1, Rational(-1));
    CHECK(p.eval(1) == 2);
    CHECK(p.eval(-1) == 4);  // 3*(-1)^-2 - (-1)
    CHECK(p.delta_z().coeff(-2) == -6);
    CHECK(p.shifted(2).coeff(0) == 3);
    LaurentPoly q = p;
    q -= p;
    CHECK(q.is_zero());
}

TEST_CASE("zq series operators") {
    for (int trial = 0; trial < 8; ++trial) {
        const ZQSeries a = random_zq(8);
        // eval_z and substitute_q_power commute
        for (int z0 : {1, -1}) {
            const QSeries lhs = eval_z(substitute_q_power(a, 2), z0);
            const QSeries rhs = substitute_q_power(eval_z(a, z0), 2);
            CHECK(lhs == rhs);
        }
        const ZQSeries b = random_zq(8);
        CHECK(zq_mul(a, b) == zq_mul_serial(a, b));
    }
    // delta_z kills z-free series
    const ZQSeries zfree = ZQSeries::constant(Rational(7), 4);
    CHECK(delta_z(zfree).is_zero());
}

TEST_CASE("binomial and geometric in-place factors") {
    // (1 - q) * geometric(1/(1-q)) = identity
    ZQSeries a = random_zq(10);
    ZQSeries b = a;
    zq_mul_geometric(b, 2, 1);
    zq_mul_binomial(b, 2, 1, -1);
    CHECK(a == b);
}
