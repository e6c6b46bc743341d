#pragma once

#include <cstdint>
#include <vector>

#include "qmoments/qseries.hpp"
#include "qmoments/zqseries.hpp"

namespace qmoments {

enum class MomentFamily { Rank, M2Rank, Crank1, Crank2 };
enum class RankVariant { Dyson, M2 };
enum class CrankVariant { Partition, Residual1, Residual2 };

inline constexpr std::int64_t kTwoVariableMax = 60;
inline constexpr std::int64_t kOneVariableMax = 2500;

/// Two-variable crank generating function as a product expansion:
///   Partition:  (q;q)/((zq;q)(q/z;q))
///   Residual1:  (q^2;q^2)/((zq;q)(q/z;q))
///   Residual2:  (q^2;q^2)^3/(q;q)^2 * 1/((zq^2;q^2)(q^2/z;q^2))
/// (all Pochhammer products taken to infinity, truncated at q^N).
ZQSeries crank_gf(CrankVariant variant, std::int64_t n, std::int64_t max_n = kTwoVariableMax);

/// Two-variable rank generating function sum N(m,n) z^m q^n, built by
/// dynamic programming over the largest part: every part contributes z^-1,
/// the largest part contributes z^l (Dyson) or z^(ceil(l/2)-chi) (M2), odd
/// non-overlined parts contribute z^+1 (M2 only).
ZQSeries rank_gf(RankVariant variant, std::int64_t n, std::int64_t max_n = kTwoVariableMax);

/// All moment series of one statistic family for j = 0..k_max, computed by a
/// dedicated z=1 specialization of the same part-by-part decomposition
/// (coefficients track sum_m count*m^j jointly for all j). Odd-j entries
/// come out identically zero; element j is sum_n (sum_m m^j stat(m,n)) q^n.
std::vector<QSeries> moment_family(MomentFamily family, int k_max, std::int64_t n,
                                   std::int64_t max_n = kOneVariableMax);

struct MomentSeries {
    MomentFamily family;
    int k;
    QSeries series;
};

/// k even (k = 0 returns the overpartition generating function). Odd k is
/// refused: those moments vanish identically.
MomentSeries moment_series(MomentFamily family, int k, std::int64_t n,
                           std::int64_t max_n = kOneVariableMax);

/// z = -1 specialization of the Dyson rank generating function; coefficient
/// of q^n counts even-rank minus odd-rank overpartitions.
QSeries alpha_series(std::int64_t n, std::int64_t max_n = kOneVariableMax);

/// Generating functions for the sums of non-overlined / overlined parts:
/// Pbar * sum n q^n/(1-q^n) and Pbar * sum n q^n/(1+q^n).
std::pair<QSeries, QSeries> nov_ov_series(std::int64_t n);

struct SptSeries {
    QSeries spt1;
    QSeries spt2;
    QSeries spt;
};

/// Smallest-parts series: spt = Pbar * sum 2n q^n/(1-q^n) - Rank_2,
/// spt2 = Pbar * sum 2n q^{2n}/(1-q^{2n}) - M2Rank_2, spt1 = spt - spt2.
SptSeries spt_series(std::int64_t n, std::int64_t max_n = kOneVariableMax);

/// The weighted rank-moment combination (a = 2k) that lands in the
/// quasimodular space: (a^2-3a+2) R_a
///   + c_v * sum_i C(a,2i)(3^{2i}-2^{2i}-1) delta_q R_{a-2i}
///   + sum_i [C(a,2i)(2^{2i}+1) + 2C(a,2i+1)(1-2^{2i+1})
///            + (1/2)C(a,2i+2)(3^{2i+2}-2^{2i+2}-1)] R_{a-2i},
/// with c_v = 2 for the Dyson variant and 1/2 for the M2 variant.
QSeries rank_combination(RankVariant variant, int k, std::int64_t n);

/// Integer coefficient helpers for the combination above; exposed for the
/// relation solver. delta_coeff multiplies delta_q R_{a-2i}, plain_coeff
/// multiplies R_{a-2i}, and leading_coeff multiplies R_a.
Rational combination_leading_coeff(int a);
Rational combination_delta_coeff(RankVariant variant, int a, int i);
Rational combination_plain_coeff(int a, int i);

struct PdeFailure {
    std::int64_t n;
    std::int64_t zexp;
    Rational value;
};

struct PdeReport {
    RankVariant variant;
    std::int64_t n;
    bool pass;
    std::vector<PdeFailure> failures;
};

/// LHS - RHS of the two-variable differential identity for the given rank
/// generating function; zero through q^N when rank_series is the genuine
/// rank_gf output. Taking the series as input lets callers probe perturbed
/// data.
ZQSeries pde_residual(RankVariant variant, const ZQSeries& rank_series, std::int64_t n);

PdeReport verify_pde(RankVariant variant, std::int64_t n);
PdeReport pde_report_from_residual(RankVariant variant, const ZQSeries& residual);

/// q (q;q)^6 (q^2;q^2)^9, the cusp-form companion used to extend the k = 4
/// spanning set.
QSeries cusp_f_series(std::int64_t n);

}  // namespace qmoments
