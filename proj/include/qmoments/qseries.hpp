#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qmoments/rational.hpp"

namespace qmoments {

/// Truncated formal power series in q over Rational. Coefficients of
/// q^0 .. q^trunc_order are tracked; extraction beyond the truncation order
/// throws instead of returning zero. Binary operations on series with
/// different truncation orders produce the minimum order; for products and
/// inverses the full tracked prefix is exact.
///
/// Values are immutable after construction in normal use; every operation
/// below returns a fresh series, so instances may be shared freely across
/// threads.
class QSeries {
public:
    explicit QSeries(std::int64_t trunc_order)
        : coeffs_(static_cast<std::size_t>(check_order(trunc_order)) + 1) {}

    static QSeries constant(const Rational& value, std::int64_t trunc_order) {
        QSeries s(trunc_order);
        s.coeffs_[0] = value;
        return s;
    }

    static QSeries monomial(const Rational& value, std::int64_t exponent,
                            std::int64_t trunc_order) {
        QSeries s(trunc_order);
        if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
        if (exponent <= trunc_order) s.coeffs_[static_cast<std::size_t>(exponent)] = value;
        return s;
    }

    std::int64_t trunc_order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    const Rational& coeff(std::int64_t n) const {
        if (n < 0 || n > trunc_order())
            throw std::out_of_range("QSeries::coeff: exponent " + std::to_string(n) +
                                    " beyond truncation order " + std::to_string(trunc_order()));
        return coeffs_[static_cast<std::size_t>(n)];
    }

    Rational& coeff_mut(std::int64_t n) {
        return coeffs_[static_cast<std::size_t>(check_index(n))];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    /// Copy truncated to a smaller order.
    QSeries truncated(std::int64_t order) const;

    bool operator==(const QSeries& o) const = default;

private:
    std::int64_t check_order(std::int64_t n) const {
        if (n < 0) throw std::invalid_argument("QSeries: negative truncation order");
        return n;
    }
    std::int64_t check_index(std::int64_t n) const {
        if (n < 0 || n > trunc_order()) throw std::out_of_range("QSeries: index out of range");
        return n;
    }

    std::vector<Rational> coeffs_;
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_scale(const QSeries& a, const Rational& c);

/// Cauchy product; exact on the full min-order prefix. Dispatches to an
/// OpenMP kernel for large inputs, with an integer fast path when both
/// operands have denominator 1 throughout.
QSeries qs_mul(const QSeries& a, const QSeries& b);
/// Plain reference implementation kept for testing and benchmarking.
QSeries qs_mul_serial(const QSeries& a, const QSeries& b);

/// Multiplicative inverse; requires a nonzero constant term.
QSeries qs_invert(const QSeries& a);

/// q d/dq: multiplies the coefficient of q^n by n.
QSeries delta_q(const QSeries& a);

/// q -> q^m, m >= 1. The result keeps the operand's truncation order.
QSeries substitute_q_power(const QSeries& a, std::int64_t m);

struct EtaFactor {
    std::int64_t scale;     // m in (q^m; q^m)_inf
    std::int64_t exponent;  // may be negative
};

/// q^shift * prod_m ( prod_{n>=1} (1 - q^{mn}) )^{e_m} truncated at N.
/// Negative exponents go through one exact inversion of the assembled
/// positive-exponent product.
QSeries eta_product(std::span<const EtaFactor> factors, std::int64_t shift, std::int64_t n);

/// sum_{k>=1} k^weight q^{scale*k} / (1 - q^{scale*k}); equals
/// sum_n sigma_weight(n) q^{scale*n} rearranged as a Lambert series.
QSeries lambert_series(int weight, std::int64_t scale, std::int64_t n);

/// Generating function for overpartitions, (q^2;q^2)_inf / (q;q)_inf^2.
QSeries pbar_series(std::int64_t n);

/// Generating function for ordinary partitions, 1/(q;q)_inf.
QSeries partition_series(std::int64_t n);

/// 1 - 24 sum sigma_1(n) q^n, quasimodular of weight 2.
QSeries eisenstein_e2(std::int64_t n);

/// 1 + 240 sum sigma_3(n) q^n, modular of weight 4.
QSeries eisenstein_e4(std::int64_t n);

/// sum_{k in Z} q^{k^2}.
QSeries theta_series(std::int64_t n);

std::string to_string(const QSeries& a, std::int64_t max_terms = 8);

}  // namespace qmoments
