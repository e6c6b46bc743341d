#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qmoments/rational.hpp"

namespace qmoments {

/// A partition with a flag per distinct part size marking whether its first
/// occurrence is overlined.
struct Overpartition {
    std::vector<std::int64_t> parts;   // weakly decreasing
    std::set<std::int64_t> overlined;  // sizes whose first occurrence is overlined

    std::int64_t weight() const {
        std::int64_t w = 0;
        for (auto p : parts) w += p;
        return w;
    }
};

inline constexpr std::int64_t kDefaultEnumerationCap = 40;

/// Exhaustive, duplicate-free enumeration; n = 0 yields the single empty
/// overpartition. Refuses n beyond the cap.
std::vector<Overpartition> enumerate_overpartitions(std::int64_t n,
                                                    std::int64_t cap = kDefaultEnumerationCap);

/// Largest part minus number of parts; 0 for the empty overpartition.
std::int64_t dyson_rank(const Overpartition& op);

/// ceil(l/2) - n(lambda) + n(lambda_o) - chi(lambda), where lambda_o is the
/// subpartition of odd non-overlined parts and chi = 1 iff the largest part
/// is odd and non-overlined.
std::int64_t m2_rank(const Overpartition& op);

/// Andrews-Garvan crank of an ordinary partition (weakly decreasing parts).
/// Empty partition has crank 0.
std::int64_t partition_crank(const std::vector<std::int64_t>& parts);

struct WeightedValue {
    std::int64_t value;
    int weight;  // +-1
};

/// Crank contributions of the non-overlined subpartition. The subpartition
/// (1) contributes {(0,-1), (-1,+1), (+1,+1)}; anything else contributes its
/// crank with weight +1.
std::vector<WeightedValue> residual_crank1_contributions(const Overpartition& op);

/// Same for the halved even non-overlined subpartition.
std::vector<WeightedValue> residual_crank2_contributions(const Overpartition& op);

enum class StatKind { Rank, M2Rank, Crank1, Crank2 };

/// Signed counts of a statistic over all overpartitions of n:
/// value m -> count (counts may be negative for the residual cranks).
struct StatisticTable {
    StatKind kind;
    std::int64_t n;
    std::map<std::int64_t, std::int64_t> counts;

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [m, c] : counts) t += c;
        return t;
    }
};

StatisticTable statistic_table(StatKind kind, std::int64_t n,
                               std::int64_t cap = kDefaultEnumerationCap);

/// k-th moment sum_m m^k * count(m, n) from the table.
Integer oracle_moment(const StatisticTable& table, int k);
Integer oracle_moment(StatKind kind, int k, std::int64_t n,
                      std::int64_t cap = kDefaultEnumerationCap);

struct SptTriple {
    Integer spt1;  // smallest part odd
    Integer spt2;  // smallest part even
    Integer spt;   // spt1 + spt2
};

/// Occurrence counts of the smallest part, split by its parity, summed over
/// all overpartitions of n.
SptTriple spt_statistics(std::int64_t n, std::int64_t cap = kDefaultEnumerationCap);

/// (sum of non-overlined parts, sum of overlined parts) over all
/// overpartitions of n.
std::pair<Integer, Integer> nov_ov(std::int64_t n, std::int64_t cap = kDefaultEnumerationCap);

/// Andrews' smallest-parts function over ordinary partitions of n.
Integer andrews_spt(std::int64_t n, std::int64_t cap = kDefaultEnumerationCap);

/// Number of overpartitions of n with even rank minus those with odd rank.
Integer oracle_alpha(std::int64_t n, std::int64_t cap = kDefaultEnumerationCap);

}  // namespace qmoments
