#include "qmoments/qseries.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmoments {

namespace {

std::int64_t min_order(const QSeries& a, const QSeries& b) {
    return std::min(a.trunc_order(), b.trunc_order());
}

bool all_integral(const QSeries& a) {
    for (std::int64_t i = 0; i <= a.trunc_order(); ++i)
        if (!is_integer(a.coeff(i))) return false;
    return true;
}

}  // namespace

QSeries QSeries::truncated(std::int64_t order) const {
    if (order > trunc_order())
        throw std::invalid_argument("QSeries::truncated: cannot extend truncation order");
    QSeries r(order);
    for (std::int64_t i = 0; i <= order; ++i) r.coeff_mut(i) = coeff(i);
    return r;
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
    const std::int64_t n = min_order(a, b);
    QSeries r(n);
    for (std::int64_t i = 0; i <= n; ++i) r.coeff_mut(i) = a.coeff(i) + b.coeff(i);
    return r;
}

QSeries qs_sub(const QSeries& a, const QSeries& b) {
    const std::int64_t n = min_order(a, b);
    QSeries r(n);
    for (std::int64_t i = 0; i <= n; ++i) r.coeff_mut(i) = a.coeff(i) - b.coeff(i);
    return r;
}

QSeries qs_scale(const QSeries& a, const Rational& c) {
    QSeries r(a.trunc_order());
    for (std::int64_t i = 0; i <= a.trunc_order(); ++i) r.coeff_mut(i) = a.coeff(i) * c;
    return r;
}

QSeries qs_mul_serial(const QSeries& a, const QSeries& b) {
    const std::int64_t n = min_order(a, b);
    QSeries r(n);
    Rational tmp;
    for (std::int64_t i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::int64_t j = 0; i + j <= n; ++j) {
            if (b.coeff(j) == 0) continue;
            tmp = a.coeff(i) * b.coeff(j);
            r.coeff_mut(i + j) += tmp;
        }
    }
    return r;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
    const std::int64_t n = min_order(a, b);
    if (n < 256) return qs_mul_serial(a, b);

    QSeries r(n);
    if (all_integral(a) && all_integral(b)) {
        // Integer fast path: accumulate numerators with mpz_addmul.
        std::vector<Integer> out(static_cast<std::size_t>(n) + 1);
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t k = 0; k <= n; ++k) {
            Integer acc = 0;
            for (std::int64_t i = 0; i <= k; ++i) {
                const Rational& ai = a.coeff(i);
                if (ai == 0) continue;
                mpz_addmul(acc.get_mpz_t(), ai.get_num().get_mpz_t(),
                           b.coeff(k - i).get_num().get_mpz_t());
            }
            out[static_cast<std::size_t>(k)] = std::move(acc);
        }
        for (std::int64_t k = 0; k <= n; ++k)
            r.coeff_mut(k) = Rational(out[static_cast<std::size_t>(k)]);
        return r;
    }

#pragma omp parallel for schedule(dynamic, 32)
    for (std::int64_t k = 0; k <= n; ++k) {
        Rational acc = 0;
        for (std::int64_t i = 0; i <= k; ++i) {
            if (a.coeff(i) == 0 || b.coeff(k - i) == 0) continue;
            acc += a.coeff(i) * b.coeff(k - i);
        }
        r.coeff_mut(k) = std::move(acc);
    }
    return r;
}

QSeries qs_invert(const QSeries& a) {
    if (a.coeff(0) == 0)
        throw std::domain_error("qs_invert: constant term is zero");
    const std::int64_t n = a.trunc_order();
    QSeries r(n);
    const Rational inv0 = make_rational(Integer(1), Integer(1)) / a.coeff(0);
    r.coeff_mut(0) = inv0;
    Rational acc, tmp;
    for (std::int64_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::int64_t i = 1; i <= k; ++i) {
            if (a.coeff(i) == 0 || r.coeff(k - i) == 0) continue;
            tmp = a.coeff(i) * r.coeff(k - i);
            acc += tmp;
        }
        r.coeff_mut(k) = -acc * inv0;
    }
    return r;
}

QSeries delta_q(const QSeries& a) {
    QSeries r(a.trunc_order());
    for (std::int64_t i = 1; i <= a.trunc_order(); ++i)
        r.coeff_mut(i) = a.coeff(i) * Rational(static_cast<long>(i));
    return r;
}

QSeries substitute_q_power(const QSeries& a, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("substitute_q_power: m must be >= 1");
    const std::int64_t n = a.trunc_order();
    QSeries r(n);
    for (std::int64_t i = 0; i * m <= n; ++i) r.coeff_mut(i * m) = a.coeff(i);
    return r;
}

namespace {

/// prod_{j>=1} (1 - q^{m j}) truncated at n, built one binomial at a time.
QSeries euler_factor(std::int64_t m, std::int64_t n) {
    QSeries r = QSeries::constant(Rational(1), n);
    for (std::int64_t j = m; j <= n; j += m) {
        for (std::int64_t t = n; t >= j; --t) r.coeff_mut(t) -= r.coeff(t - j);
    }
    return r;
}

}  // namespace

QSeries eta_product(std::span<const EtaFactor> factors, std::int64_t shift, std::int64_t n) {
    const std::int64_t pad = shift < 0 ? -shift : 0;
    const std::int64_t work = n + pad;
    QSeries num = QSeries::constant(Rational(1), work);
    QSeries den = QSeries::constant(Rational(1), work);
    for (const auto& f : factors) {
        if (f.scale < 1) throw std::invalid_argument("eta_product: scale must be >= 1");
        if (f.exponent == 0) continue;
        const QSeries base = euler_factor(f.scale, work);
        QSeries& dst = f.exponent > 0 ? num : den;
        for (std::int64_t e = 0; e < std::abs(f.exponent); ++e) dst = qs_mul(dst, base);
    }
    QSeries prod = qs_mul(num, qs_invert(den));
    QSeries r(n);
    for (std::int64_t i = 0; i <= n; ++i) {
        const std::int64_t src = i - shift;
        if (src < 0) continue;
        if (src > work) break;
        r.coeff_mut(i) = prod.coeff(src);
    }
    if (shift > 0) {
        // nothing below q^shift; already zero-initialized
    } else if (shift < 0) {
        for (std::int64_t i = 0; i < -shift; ++i) {
            if (prod.coeff(i) != 0)
                throw std::domain_error("eta_product: negative shift drops a nonzero coefficient");
        }
    }
    return r;
}

QSeries lambert_series(int weight, std::int64_t scale, std::int64_t n) {
    if (weight < 0) throw std::invalid_argument("lambert_series: negative weight");
    if (scale < 1) throw std::invalid_argument("lambert_series: scale must be >= 1");
    QSeries r(n);
    for (std::int64_t k = 1; k * scale <= n; ++k) {
        const Integer kw = int_pow(Integer(static_cast<long>(k)), static_cast<unsigned long>(weight));
        for (std::int64_t t = k * scale; t <= n; t += k * scale) {
            r.coeff_mut(t) += Rational(kw);
        }
    }
    return r;
}

QSeries pbar_series(std::int64_t n) {
    const EtaFactor f[] = {{1, -2}, {2, 1}};
    return eta_product(f, 0, n);
}

QSeries partition_series(std::int64_t n) {
    const EtaFactor f[] = {{1, -1}};
    return eta_product(f, 0, n);
}

QSeries eisenstein_e2(std::int64_t n) {
    QSeries r = qs_scale(lambert_series(1, 1, n), make_rational(-24));
    r.coeff_mut(0) = 1;
    return r;
}

QSeries eisenstein_e4(std::int64_t n) {
    QSeries r = qs_scale(lambert_series(3, 1, n), make_rational(240));
    r.coeff_mut(0) = 1;
    return r;
}

QSeries theta_series(std::int64_t n) {
    QSeries r(n);
    r.coeff_mut(0) = 1;
    for (std::int64_t k = 1; k * k <= n; ++k) r.coeff_mut(k * k) = 2;
    return r;
}

std::string to_string(const QSeries& a, std::int64_t max_terms) {
    std::ostringstream os;
    std::int64_t shown = 0;
    for (std::int64_t i = 0; i <= a.trunc_order() && shown < max_terms; ++i) {
        if (a.coeff(i) == 0) continue;
        if (shown > 0) os << " + ";
        os << "(" << to_fraction_string(a.coeff(i)) << ")q^" << i;
        ++shown;
    }
    if (shown == 0) os << "0";
    os << " + O(q^" << a.trunc_order() + 1 << ")";
    return os.str();
}

}  // namespace qmoments
