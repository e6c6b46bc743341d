#include "qmoments/zqseries.hpp"

#include <algorithm>

namespace qmoments {

namespace {
std::int64_t min_order(const ZQSeries& a, const ZQSeries& b) {
    return std::min(a.trunc_order(), b.trunc_order());
}
}  // namespace

ZQSeries zq_add(const ZQSeries& a, const ZQSeries& b) {
    const std::int64_t n = min_order(a, b);
    ZQSeries r(n);
    for (std::int64_t i = 0; i <= n; ++i) r.coeff_mut(i) = a.coeff(i) + b.coeff(i);
    return r;
}

ZQSeries zq_sub(const ZQSeries& a, const ZQSeries& b) {
    const std::int64_t n = min_order(a, b);
    ZQSeries r(n);
    for (std::int64_t i = 0; i <= n; ++i) r.coeff_mut(i) = a.coeff(i) - b.coeff(i);
    return r;
}

ZQSeries zq_scale(const ZQSeries& a, const LaurentPoly& p) {
    ZQSeries r(a.trunc_order());
    for (std::int64_t i = 0; i <= a.trunc_order(); ++i) r.coeff_mut(i) = a.coeff(i) * p;
    return r;
}

ZQSeries zq_mul_serial(const ZQSeries& a, const ZQSeries& b) {
    const std::int64_t n = min_order(a, b);
    ZQSeries r(n);
    for (std::int64_t i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (std::int64_t j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.coeff_mut(i + j) += a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

ZQSeries zq_mul(const ZQSeries& a, const ZQSeries& b) {
    const std::int64_t n = min_order(a, b);
    if (n < 24) return zq_mul_serial(a, b);
    ZQSeries r(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k <= n; ++k) {
        LaurentPoly acc;
        for (std::int64_t i = 0; i <= k; ++i) {
            if (a.coeff(i).is_zero() || b.coeff(k - i).is_zero()) continue;
            acc += a.coeff(i) * b.coeff(k - i);
        }
        r.coeff_mut(k) = std::move(acc);
    }
    return r;
}

ZQSeries zq_mul(const ZQSeries& a, const QSeries& b) {
    const std::int64_t n = std::min(a.trunc_order(), b.trunc_order());
    ZQSeries r(n);
    for (std::int64_t i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (std::int64_t j = 0; i + j <= n; ++j) {
            if (b.coeff(j) == 0) continue;
            r.coeff_mut(i + j) += a.coeff(i).scaled(b.coeff(j));
        }
    }
    return r;
}

ZQSeries delta_q(const ZQSeries& a) {
    ZQSeries r(a.trunc_order());
    for (std::int64_t i = 1; i <= a.trunc_order(); ++i)
        r.coeff_mut(i) = a.coeff(i).scaled(Rational(static_cast<long>(i)));
    return r;
}

ZQSeries delta_z(const ZQSeries& a) {
    ZQSeries r(a.trunc_order());
    for (std::int64_t i = 0; i <= a.trunc_order(); ++i) r.coeff_mut(i) = a.coeff(i).delta_z();
    return r;
}

ZQSeries substitute_q_power(const ZQSeries& a, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("substitute_q_power: m must be >= 1");
    const std::int64_t n = a.trunc_order();
    ZQSeries r(n);
    for (std::int64_t i = 0; i * m <= n; ++i) r.coeff_mut(i * m) = a.coeff(i);
    return r;
}

QSeries eval_z(const ZQSeries& a, int z0) {
    QSeries r(a.trunc_order());
    for (std::int64_t i = 0; i <= a.trunc_order(); ++i) r.coeff_mut(i) = a.coeff(i).eval(z0);
    return r;
}

void zq_mul_binomial(ZQSeries& a, std::int64_t qexp, std::int64_t zexp, int sign) {
    if (qexp < 1) throw std::invalid_argument("zq_mul_binomial: qexp must be >= 1");
    const std::int64_t n = a.trunc_order();
    for (std::int64_t t = n; t >= qexp; --t) {
        LaurentPoly add = a.coeff(t - qexp).shifted(zexp);
        if (sign < 0)
            a.coeff_mut(t) -= add;
        else
            a.coeff_mut(t) += add;
    }
}

void zq_mul_geometric(ZQSeries& a, std::int64_t qexp, std::int64_t zexp) {
    if (qexp < 1) throw std::invalid_argument("zq_mul_geometric: qexp must be >= 1");
    const std::int64_t n = a.trunc_order();
    // Ascending pass: a[t] += z^zexp * a[t - qexp] picks up the whole
    // geometric tail because lower slots are already updated.
    for (std::int64_t t = qexp; t <= n; ++t) a.coeff_mut(t) += a.coeff(t - qexp).shifted(zexp);
}

void zq_div_binomial(ZQSeries& a, std::int64_t qexp, std::int64_t zexp) {
    if (qexp < 1) throw std::invalid_argument("zq_div_binomial: qexp must be >= 1");
    const std::int64_t n = a.trunc_order();
    for (std::int64_t t = qexp; t <= n; ++t) a.coeff_mut(t) -= a.coeff(t - qexp).shifted(zexp);
}

}  // namespace qmoments
