#pragma once

#include <cstdint>
#include <vector>

#include "qmoments/laurent.hpp"
#include "qmoments/qseries.hpp"

namespace qmoments {

/// Truncated series in q whose coefficients are Laurent polynomials in z.
/// Same truncation conventions as QSeries.
class ZQSeries {
public:
    explicit ZQSeries(std::int64_t trunc_order)
        : coeffs_(static_cast<std::size_t>(check_order(trunc_order)) + 1) {}

    static ZQSeries constant(const Rational& v, std::int64_t trunc_order) {
        ZQSeries s(trunc_order);
        s.coeffs_[0] = LaurentPoly(v);
        return s;
    }

    std::int64_t trunc_order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    const LaurentPoly& coeff(std::int64_t n) const {
        if (n < 0 || n > trunc_order())
            throw std::out_of_range("ZQSeries::coeff: exponent beyond truncation order");
        return coeffs_[static_cast<std::size_t>(n)];
    }

    LaurentPoly& coeff_mut(std::int64_t n) {
        if (n < 0 || n > trunc_order()) throw std::out_of_range("ZQSeries: index out of range");
        return coeffs_[static_cast<std::size_t>(n)];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool operator==(const ZQSeries& o) const = default;

private:
    std::int64_t check_order(std::int64_t n) const {
        if (n < 0) throw std::invalid_argument("ZQSeries: negative truncation order");
        return n;
    }

    std::vector<LaurentPoly> coeffs_;
};

ZQSeries zq_add(const ZQSeries& a, const ZQSeries& b);
ZQSeries zq_sub(const ZQSeries& a, const ZQSeries& b);
ZQSeries zq_scale(const ZQSeries& a, const LaurentPoly& p);
ZQSeries zq_mul(const ZQSeries& a, const ZQSeries& b);
ZQSeries zq_mul_serial(const ZQSeries& a, const ZQSeries& b);
ZQSeries zq_mul(const ZQSeries& a, const QSeries& b);
ZQSeries delta_q(const ZQSeries& a);
ZQSeries delta_z(const ZQSeries& a);
ZQSeries substitute_q_power(const ZQSeries& a, std::int64_t m);

/// Evaluate at z0 in {1, -1}; keeps the truncation order.
QSeries eval_z(const ZQSeries& a, int z0);

/// In-place multiplication by (1 + sign * z^zexp * q^qexp).
void zq_mul_binomial(ZQSeries& a, std::int64_t qexp, std::int64_t zexp, int sign);

/// In-place multiplication by 1 / (1 - z^zexp * q^qexp), qexp >= 1.
void zq_mul_geometric(ZQSeries& a, std::int64_t qexp, std::int64_t zexp);

/// In-place multiplication by 1 / (1 + z^zexp * q^qexp), qexp >= 1.
void zq_div_binomial(ZQSeries& a, std::int64_t qexp, std::int64_t zexp);

}  // namespace qmoments
