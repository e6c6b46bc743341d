#include "qmoments/genfun.hpp"

#include <stdexcept>

#include "jets.hpp"

namespace qmoments {

namespace {

void check_limit(std::int64_t n, std::int64_t max_n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative truncation order");
    if (n > max_n)
        throw std::invalid_argument(std::string(what) + ": N = " + std::to_string(n) +
                                    " exceeds the configured maximum " + std::to_string(max_n));
}

}  // namespace

ZQSeries crank_gf(CrankVariant variant, std::int64_t n, std::int64_t max_n) {
    check_limit(n, max_n, "crank_gf");
    ZQSeries r = ZQSeries::constant(Rational(1), n);
    switch (variant) {
        case CrankVariant::Partition:
            for (std::int64_t m = 1; m <= n; ++m) {
                zq_mul_binomial(r, m, 0, -1);
                zq_mul_geometric(r, m, +1);
                zq_mul_geometric(r, m, -1);
            }
            break;
        case CrankVariant::Residual1:
            for (std::int64_t m = 1; m <= n; ++m) {
                if (2 * m <= n) zq_mul_binomial(r, 2 * m, 0, -1);
                zq_mul_geometric(r, m, +1);
                zq_mul_geometric(r, m, -1);
            }
            break;
        case CrankVariant::Residual2:
            for (std::int64_t m = 1; m <= n; ++m) {
                if (2 * m <= n) {
                    zq_mul_binomial(r, 2 * m, 0, -1);
                    zq_mul_binomial(r, 2 * m, 0, -1);
                    zq_mul_binomial(r, 2 * m, 0, -1);
                    zq_mul_geometric(r, 2 * m, +1);
                    zq_mul_geometric(r, 2 * m, -1);
                }
                zq_mul_geometric(r, m, 0);
                zq_mul_geometric(r, m, 0);
            }
            break;
    }
    return r;
}

ZQSeries rank_gf(RankVariant variant, std::int64_t n, std::int64_t max_n) {
    check_limit(n, max_n, "rank_gf");
    ZQSeries res = ZQSeries::constant(Rational(1), n);
    ZQSeries rp = ZQSeries::constant(Rational(1), n);
    ZQSeries tail(n);
    for (std::int64_t big = 1; big <= n; ++big) {
        const bool odd_m2 = variant == RankVariant::M2 && big % 2 == 1;
        // tail[t] = sum_{m>=1} (copies of the largest size) applied to rp,
        // i.e. tail[t] = zfac * (rp[t-big] + tail[t-big]).
        for (std::int64_t t = big; t <= n; ++t) {
            LaurentPoly comb = rp.coeff(t - big);
            if (t - big >= big) comb += tail.coeff(t - big);
            tail.coeff_mut(t) = odd_m2 ? comb : comb.shifted(-1);
        }
        std::int64_t wexp;
        if (variant == RankVariant::Dyson)
            wexp = big;
        else
            wexp = big % 2 == 0 ? big / 2 : (big - 1) / 2;
        for (std::int64_t t = big; t <= n; ++t) {
            if (tail.coeff(t).is_zero()) continue;
            res.coeff_mut(t) += tail.coeff(t).shifted(wexp).scaled(Rational(2));
        }
        // smaller-size factor for later iterations:
        // (1 + z^-1 q^s)/(1 - z^-1 q^s), or (1 + z^-1 q^s)/(1 - q^s) for odd
        // sizes in the M2 statistic.
        zq_mul_binomial(rp, big, -1, +1);
        zq_mul_geometric(rp, big, odd_m2 ? 0 : -1);
    }
    return res;
}

namespace {

using detail::JetSeries;
using detail::JetWeights;

std::vector<QSeries> extract_moments(const JetSeries& js) {
    std::vector<QSeries> out;
    for (int j = 0; j <= js.jet_order(); ++j) {
        QSeries s(js.trunc_order());
        for (std::int64_t t = 0; t <= js.trunc_order(); ++t)
            s.coeff_mut(t) = Rational(js.slot(t)[j]);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<QSeries> rank_moment_family(RankVariant variant, int k_max, std::int64_t n) {
    JetSeries res(k_max, n), rp(k_max, n), tail(k_max, n);
    res.set_unit();
    rp.set_unit();
    const JetWeights wneg = JetWeights::make(k_max, -1, 1);
    const JetWeights wzero = JetWeights::make(k_max, 0, 1);
    for (std::int64_t big = 1; big <= n; ++big) {
        const bool odd_m2 = variant == RankVariant::M2 && big % 2 == 1;
        const JetWeights& copy_w = odd_m2 ? wzero : wneg;
        for (std::int64_t t = big; t <= n; ++t) {
            Integer* dst = tail.slot(t);
            for (int j = 0; j <= k_max; ++j) dst[j] = 0;
            jet_addmul(dst, rp.slot(t - big), copy_w);
            if (t - big >= big) jet_addmul(dst, tail.slot(t - big), copy_w);
        }
        std::int64_t wexp;
        if (variant == RankVariant::Dyson)
            wexp = big;
        else
            wexp = big % 2 == 0 ? big / 2 : (big - 1) / 2;
        const JetWeights wbig = JetWeights::make(k_max, wexp, 2);
        for (std::int64_t t = big; t <= n; ++t) jet_addmul(res.slot(t), tail.slot(t), wbig);
        detail::jet_mul_binomial(rp, big, wneg);
        detail::jet_mul_geometric(rp, big, copy_w);
    }
    return extract_moments(res);
}

std::vector<QSeries> crank_moment_family(CrankVariant variant, int k_max, std::int64_t n) {
    JetSeries rp(k_max, n);
    rp.set_unit();
    const JetWeights wneg = JetWeights::make(k_max, -1, 1);
    const JetWeights wpos = JetWeights::make(k_max, +1, 1);
    const JetWeights wzero = JetWeights::make(k_max, 0, 1);
    const JetWeights wminus = JetWeights::make(k_max, 0, -1);
    switch (variant) {
        case CrankVariant::Partition:
            for (std::int64_t m = 1; m <= n; ++m) {
                detail::jet_mul_binomial(rp, m, wminus);
                detail::jet_mul_geometric(rp, m, wpos);
                detail::jet_mul_geometric(rp, m, wneg);
            }
            break;
        case CrankVariant::Residual1:
            for (std::int64_t m = 1; m <= n; ++m) {
                if (2 * m <= n) detail::jet_mul_binomial(rp, 2 * m, wminus);
                detail::jet_mul_geometric(rp, m, wpos);
                detail::jet_mul_geometric(rp, m, wneg);
            }
            break;
        case CrankVariant::Residual2:
            for (std::int64_t m = 1; m <= n; ++m) {
                if (2 * m <= n) {
                    detail::jet_mul_binomial(rp, 2 * m, wminus);
                    detail::jet_mul_binomial(rp, 2 * m, wminus);
                    detail::jet_mul_binomial(rp, 2 * m, wminus);
                    detail::jet_mul_geometric(rp, 2 * m, wpos);
                    detail::jet_mul_geometric(rp, 2 * m, wneg);
                }
                detail::jet_mul_geometric(rp, m, wzero);
                detail::jet_mul_geometric(rp, m, wzero);
            }
            break;
    }
    return extract_moments(rp);
}

}  // namespace

std::vector<QSeries> moment_family(MomentFamily family, int k_max, std::int64_t n,
                                   std::int64_t max_n) {
    check_limit(n, max_n, "moment_family");
    if (k_max < 0) throw std::invalid_argument("moment_family: k_max must be >= 0");
    switch (family) {
        case MomentFamily::Rank:
            return rank_moment_family(RankVariant::Dyson, k_max, n);
        case MomentFamily::M2Rank:
            return rank_moment_family(RankVariant::M2, k_max, n);
        case MomentFamily::Crank1:
            return crank_moment_family(CrankVariant::Residual1, k_max, n);
        case MomentFamily::Crank2:
            return crank_moment_family(CrankVariant::Residual2, k_max, n);
    }
    throw std::logic_error("moment_family: unreachable");
}

MomentSeries moment_series(MomentFamily family, int k, std::int64_t n, std::int64_t max_n) {
    if (k < 0 || k % 2 == 1)
        throw std::invalid_argument(
            "moment_series: k must be even and nonnegative (odd moments vanish identically)");
    auto fam = moment_family(family, k, n, max_n);
    return MomentSeries{family, k, std::move(fam[static_cast<std::size_t>(k)])};
}

QSeries alpha_series(std::int64_t n, std::int64_t max_n) {
    check_limit(n, max_n, "alpha_series");
    // Dyson rank DP at z = -1: z^m collapses to the sign (-1)^m.
    std::vector<Integer> res(static_cast<std::size_t>(n) + 1);
    std::vector<Integer> rp(static_cast<std::size_t>(n) + 1);
    std::vector<Integer> tail(static_cast<std::size_t>(n) + 1);
    res[0] = 1;
    rp[0] = 1;
    for (std::int64_t big = 1; big <= n; ++big) {
        for (std::int64_t t = big; t <= n; ++t) {
            tail[t] = -rp[t - big];
            if (t - big >= big) tail[t] -= tail[t - big];
        }
        const long sign = big % 2 == 0 ? 2 : -2;
        for (std::int64_t t = big; t <= n; ++t) {
            if (tail[t] != 0) res[t] += sign * tail[t];
        }
        for (std::int64_t t = n; t >= big; --t) rp[t] -= rp[t - big];
        for (std::int64_t t = big; t <= n; ++t) rp[t] -= rp[t - big];
    }
    QSeries out(n);
    for (std::int64_t t = 0; t <= n; ++t) out.coeff_mut(t) = Rational(res[t]);
    return out;
}

std::pair<QSeries, QSeries> nov_ov_series(std::int64_t n) {
    const QSeries pbar = pbar_series(n);
    const QSeries l1 = lambert_series(1, 1, n);
    const QSeries l2 = lambert_series(1, 2, n);
    QSeries nov = qs_mul(pbar, l1);
    // sum n q^n/(1+q^n) = sum n q^n/(1-q^n) - 2 sum n q^{2n}/(1-q^{2n})
    QSeries ov = qs_mul(pbar, qs_sub(l1, qs_scale(l2, Rational(2))));
    return {std::move(nov), std::move(ov)};
}

SptSeries spt_series(std::int64_t n, std::int64_t max_n) {
    const QSeries pbar = pbar_series(n);
    const QSeries rank2 = moment_series(MomentFamily::Rank, 2, n, max_n).series;
    const QSeries m2rank2 = moment_series(MomentFamily::M2Rank, 2, n, max_n).series;
    SptSeries out{QSeries(n), QSeries(n), QSeries(n)};
    out.spt = qs_sub(qs_mul(pbar, qs_scale(lambert_series(1, 1, n), Rational(2))), rank2);
    out.spt2 = qs_sub(qs_mul(pbar, qs_scale(lambert_series(1, 2, n), Rational(2))), m2rank2);
    out.spt1 = qs_sub(out.spt, out.spt2);
    return out;
}

Rational combination_leading_coeff(int a) {
    return Rational(static_cast<long>(a) * a - 3 * a + 2);
}

Rational combination_delta_coeff(RankVariant variant, int a, int i) {
    const Integer pow3 = int_pow(Integer(3), static_cast<unsigned long>(2 * i));
    const Integer pow2 = int_pow(Integer(2), static_cast<unsigned long>(2 * i));
    const Rational base = Rational(binomial(static_cast<unsigned long>(a),
                                            static_cast<unsigned long>(2 * i)) *
                                   (pow3 - pow2 - 1));
    if (variant == RankVariant::Dyson) return base * 2;
    return base / 2;
}

Rational combination_plain_coeff(int a, int i) {
    const unsigned long ua = static_cast<unsigned long>(a);
    const Integer p2i = int_pow(Integer(2), static_cast<unsigned long>(2 * i));
    const Integer p2i1 = int_pow(Integer(2), static_cast<unsigned long>(2 * i + 1));
    const Integer p3i2 = int_pow(Integer(3), static_cast<unsigned long>(2 * i + 2));
    const Integer p2i2 = int_pow(Integer(2), static_cast<unsigned long>(2 * i + 2));
    Rational r = Rational(binomial(ua, static_cast<unsigned long>(2 * i)) * (p2i + 1));
    r += Rational(2 * binomial(ua, static_cast<unsigned long>(2 * i + 1)) * (1 - p2i1));
    r += Rational(binomial(ua, static_cast<unsigned long>(2 * i + 2)) * (p3i2 - p2i2 - 1)) / 2;
    return r;
}

QSeries rank_combination(RankVariant variant, int k, std::int64_t n) {
    if (k < 2) throw std::invalid_argument("rank_combination: k must be >= 2");
    const int a = 2 * k;
    const auto family =
        moment_family(variant == RankVariant::Dyson ? MomentFamily::Rank : MomentFamily::M2Rank,
                      a, n, std::max(n, kOneVariableMax));
    QSeries res = qs_scale(family[static_cast<std::size_t>(a)], combination_leading_coeff(a));
    for (int i = 1; i <= a / 2 - 1; ++i) {
        const QSeries& r = family[static_cast<std::size_t>(a - 2 * i)];
        res = qs_add(res, qs_scale(delta_q(r), combination_delta_coeff(variant, a, i)));
        res = qs_add(res, qs_scale(r, combination_plain_coeff(a, i)));
    }
    return res;
}

namespace {

/// (-zq;q)_inf (-q/z;q)_inf as a two-variable product.
ZQSeries theta_like_product(std::int64_t n) {
    ZQSeries a = ZQSeries::constant(Rational(1), n);
    for (std::int64_t m = 1; m <= n; ++m) {
        zq_mul_binomial(a, m, +1, +1);
        zq_mul_binomial(a, m, -1, +1);
    }
    return a;
}

LaurentPoly poly_from_terms(std::initializer_list<std::pair<std::int64_t, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
    return p;
}

}  // namespace

ZQSeries pde_residual(RankVariant variant, const ZQSeries& rank_series, std::int64_t n) {
    if (rank_series.trunc_order() < n)
        throw std::invalid_argument("pde_residual: rank series shorter than requested order");

    // z(1+z) and the (1+z)(1-z)^2 combinations that appear in the operators.
    const LaurentPoly z_z2 = poly_from_terms({{1, 1}, {2, 1}});
    const LaurentPoly cubefree = poly_from_terms({{0, 1}, {1, -1}, {2, -1}, {3, 1}});

    ZQSeries lhs(n), rhs(n);
    if (variant == RankVariant::Dyson) {
        const ZQSeries c = crank_gf(CrankVariant::Partition, n, n);
        const ZQSeries c3 = zq_mul(zq_mul(c, c), c);
        const EtaFactor ef[] = {{1, 3}, {2, -1}};  // (q;q)^2 / (-q;q)
        const QSeries onevar = eta_product(ef, 0, n);
        lhs = zq_scale(zq_mul(zq_mul(c3, theta_like_product(n)), onevar), z_z2);

        const ZQSeries dq = delta_q(rank_series);
        const ZQSeries dz = delta_z(rank_series);
        const ZQSeries dz2 = delta_z(dz);
        rhs = zq_add(zq_scale(dq, cubefree.scaled(Rational(2))), zq_scale(rank_series, z_z2));
        rhs = zq_add(rhs, zq_scale(dz, poly_from_terms({{1, 2}, {2, -2}})));
        rhs = zq_add(rhs, zq_scale(dz2, cubefree.scaled(make_rational(1, 2))));
    } else {
        const ZQSeries c2 = substitute_q_power(crank_gf(CrankVariant::Partition, n, n), 2);
        const ZQSeries c3 = zq_mul(zq_mul(c2, c2), c2);
        const EtaFactor ef[] = {{2, 2}};  // (q^2;q^2)^2
        const QSeries onevar = eta_product(ef, 0, n);
        lhs = zq_scale(zq_mul(zq_mul(c3, theta_like_product(n)), onevar),
                       z_z2.scaled(Rational(2)));

        const ZQSeries dq = delta_q(rank_series);
        const ZQSeries dz = delta_z(rank_series);
        const ZQSeries dz2 = delta_z(dz);
        rhs = zq_add(zq_scale(dq, cubefree), zq_scale(rank_series, z_z2.scaled(Rational(2))));
        rhs = zq_add(rhs, zq_scale(dz, poly_from_terms({{1, 4}, {2, -4}})));
        rhs = zq_add(rhs, zq_scale(dz2, cubefree));
    }
    return zq_sub(lhs, rhs);
}

PdeReport pde_report_from_residual(RankVariant variant, const ZQSeries& residual) {
    PdeReport report{variant, residual.trunc_order(), true, {}};
    for (std::int64_t t = 0; t <= residual.trunc_order(); ++t) {
        for (const auto& [e, c] : residual.coeff(t).terms()) {
            report.pass = false;
            report.failures.push_back({t, e, c});
            if (report.failures.size() >= 8) return report;
        }
    }
    return report;
}

PdeReport verify_pde(RankVariant variant, std::int64_t n) {
    if (n > 30 + 10)
        throw std::invalid_argument("verify_pde: two-variable cost grows fast; N capped at 40");
    const ZQSeries rank = rank_gf(variant, n, n);
    return pde_report_from_residual(variant, pde_residual(variant, rank, n));
}

QSeries cusp_f_series(std::int64_t n) {
    const EtaFactor f[] = {{1, 6}, {2, 9}};
    return eta_product(f, 1, n);
}

}  // namespace qmoments
