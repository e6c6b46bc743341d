#pragma once

// Internal machinery for moment specializations at z = 1. A jet stores, for
// each q-exponent, the vector (sum_m c_m, sum_m c_m m, ..., sum_m c_m m^K)
// of a Laurent coefficient sum c_m z^m; equivalently the expansion of
// z = e^w truncated at w^K in the basis {w^j / j!}. Multiplying a term by
// z^m maps slot vectors through the lower-triangular binomial table below,
// so product DPs over q never need the Laurent window.

#include <cstdint>
#include <vector>

#include "qmoments/rational.hpp"

namespace qmoments::detail {

struct JetWeights {
    int k;
    std::vector<Integer> w;  // (k+1) x (k+1) lower triangular, row-major

    // scale * z^m: W[r][i] = scale * C(r,i) * m^(r-i)
    static JetWeights make(int k, std::int64_t m, long scale) {
        JetWeights jw;
        jw.k = k;
        jw.w.assign(static_cast<std::size_t>(k + 1) * (k + 1), Integer(0));
        for (int r = 0; r <= k; ++r) {
            for (int i = 0; i <= r; ++i) {
                Integer pw = int_pow(Integer(static_cast<long>(m < 0 ? -m : m)),
                                     static_cast<unsigned long>(r - i));
                if (m < 0 && (r - i) % 2 == 1) pw = -pw;
                jw.at(r, i) = binomial(static_cast<unsigned long>(r),
                                       static_cast<unsigned long>(i)) *
                              pw * Integer(scale);
            }
        }
        return jw;
    }

    Integer& at(int r, int i) { return w[static_cast<std::size_t>(r) * (k + 1) + i]; }
    const Integer& at(int r, int i) const {
        return w[static_cast<std::size_t>(r) * (k + 1) + i];
    }
};

class JetSeries {
public:
    JetSeries(int jet_order, std::int64_t trunc)
        : k_(jet_order),
          n_(trunc),
          s_(static_cast<std::size_t>(trunc + 1) * (jet_order + 1)) {}

    int jet_order() const { return k_; }
    std::int64_t trunc_order() const { return n_; }

    Integer* slot(std::int64_t n) { return s_.data() + static_cast<std::size_t>(n) * (k_ + 1); }
    const Integer* slot(std::int64_t n) const {
        return s_.data() + static_cast<std::size_t>(n) * (k_ + 1);
    }

    void set_unit() { s_[0] = 1; }

private:
    int k_;
    std::int64_t n_;
    std::vector<Integer> s_;
};

// dst[r] += sum_i W[r][i] * src[i]
inline void jet_addmul(Integer* dst, const Integer* src, const JetWeights& w) {
    for (int r = 0; r <= w.k; ++r) {
        for (int i = 0; i <= r; ++i) {
            const Integer& c = w.at(r, i);
            if (c == 0) continue;
            mpz_addmul(dst[r].get_mpz_t(), c.get_mpz_t(), src[i].get_mpz_t());
        }
    }
}

// In-place multiply by (1 + scaled z^m q^qexp): descending pass.
inline void jet_mul_binomial(JetSeries& a, std::int64_t qexp, const JetWeights& w) {
    for (std::int64_t t = a.trunc_order(); t >= qexp; --t)
        jet_addmul(a.slot(t), a.slot(t - qexp), w);
}

// In-place multiply by 1 / (1 - scaled z^m q^qexp): ascending pass.
inline void jet_mul_geometric(JetSeries& a, std::int64_t qexp, const JetWeights& w) {
    for (std::int64_t t = qexp; t <= a.trunc_order(); ++t)
        jet_addmul(a.slot(t), a.slot(t - qexp), w);
}

}  // namespace qmoments::detail
