#include "qmoments/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qmoments {

namespace {

void gen_partitions_impl(std::int64_t remaining, std::int64_t max_part,
                         std::vector<std::int64_t>& current,
                         const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    if (remaining == 0) {
        emit(current);
        return;
    }
    for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        gen_partitions_impl(remaining - p, p, current, emit);
        current.pop_back();
    }
}

void for_each_partition(std::int64_t n,
                        const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    std::vector<std::int64_t> current;
    gen_partitions_impl(n, n == 0 ? 1 : n, current, emit);
}

void check_cap(std::int64_t n, std::int64_t cap) {
    if (n < 0) throw std::invalid_argument("enumeration: n must be >= 0");
    if (n > cap)
        throw std::invalid_argument("enumeration: n = " + std::to_string(n) +
                                    " exceeds the configured cap " + std::to_string(cap));
}

void for_each_overpartition(std::int64_t n, std::int64_t cap,
                            const std::function<void(const Overpartition&)>& emit) {
    check_cap(n, cap);
    for_each_partition(n, [&](const std::vector<std::int64_t>& parts) {
        std::vector<std::int64_t> distinct;
        for (auto p : parts)
            if (distinct.empty() || distinct.back() != p) distinct.push_back(p);
        const std::size_t d = distinct.size();
        Overpartition op;
        op.parts = parts;
        for (std::uint64_t mask = 0; mask < (1ull << d); ++mask) {
            op.overlined.clear();
            for (std::size_t i = 0; i < d; ++i)
                if (mask & (1ull << i)) op.overlined.insert(distinct[i]);
            emit(op);
        }
    });
}

}  // namespace

std::vector<Overpartition> enumerate_overpartitions(std::int64_t n, std::int64_t cap) {
    std::vector<Overpartition> out;
    for_each_overpartition(n, cap, [&](const Overpartition& op) { out.push_back(op); });
    return out;
}

std::int64_t dyson_rank(const Overpartition& op) {
    if (op.parts.empty()) return 0;
    return op.parts.front() - static_cast<std::int64_t>(op.parts.size());
}

std::int64_t m2_rank(const Overpartition& op) {
    if (op.parts.empty()) return 0;
    const std::int64_t largest = op.parts.front();
    std::int64_t odd_non_overlined = 0;
    for (auto p : op.parts)
        if (p % 2 == 1) ++odd_non_overlined;
    // The overlined copy of an odd size is one specific part; subtract it.
    for (auto s : op.overlined)
        if (s % 2 == 1) --odd_non_overlined;
    const bool chi = (largest % 2 == 1) && !op.overlined.contains(largest);
    return (largest + 1) / 2 - static_cast<std::int64_t>(op.parts.size()) + odd_non_overlined -
           (chi ? 1 : 0);
}

std::int64_t partition_crank(const std::vector<std::int64_t>& parts) {
    if (parts.empty()) return 0;
    const std::int64_t ones =
        static_cast<std::int64_t>(std::count(parts.begin(), parts.end(), 1));
    if (ones == 0) return parts.front();
    std::int64_t larger = 0;
    for (auto p : parts)
        if (p > ones) ++larger;
    return larger - ones;
}

namespace {

std::vector<WeightedValue> crank_contributions(const std::vector<std::int64_t>& sub) {
    if (sub.size() == 1 && sub[0] == 1) {
        return {{0, -1}, {-1, +1}, {+1, +1}};
    }
    return {{partition_crank(sub), +1}};
}

}  // namespace

std::vector<WeightedValue> residual_crank1_contributions(const Overpartition& op) {
    std::vector<std::int64_t> sub;
    // Non-overlined parts: the overlined copy of each flagged size is removed once.
    std::set<std::int64_t> pending = op.overlined;
    for (auto p : op.parts) {
        if (pending.contains(p)) {
            pending.erase(p);
            continue;
        }
        sub.push_back(p);
    }
    return crank_contributions(sub);
}

std::vector<WeightedValue> residual_crank2_contributions(const Overpartition& op) {
    std::vector<std::int64_t> sub;
    std::set<std::int64_t> pending = op.overlined;
    for (auto p : op.parts) {
        if (pending.contains(p)) {
            pending.erase(p);
            continue;
        }
        if (p % 2 == 0) sub.push_back(p / 2);
    }
    return crank_contributions(sub);
}

StatisticTable statistic_table(StatKind kind, std::int64_t n, std::int64_t cap) {
    StatisticTable table{kind, n, {}};
    for_each_overpartition(n, cap, [&](const Overpartition& op) {
        switch (kind) {
            case StatKind::Rank:
                table.counts[dyson_rank(op)] += 1;
                break;
            case StatKind::M2Rank:
                table.counts[m2_rank(op)] += 1;
                break;
            case StatKind::Crank1:
                for (const auto& wv : residual_crank1_contributions(op))
                    table.counts[wv.value] += wv.weight;
                break;
            case StatKind::Crank2:
                for (const auto& wv : residual_crank2_contributions(op))
                    table.counts[wv.value] += wv.weight;
                break;
        }
    });
    std::erase_if(table.counts, [](const auto& kv) { return kv.second == 0; });
    return table;
}

Integer oracle_moment(const StatisticTable& table, int k) {
    if (k < 0) throw std::invalid_argument("oracle_moment: k must be >= 0");
    Integer total = 0;
    for (const auto& [m, c] : table.counts) {
        Integer mk = int_pow(Integer(static_cast<long>(m < 0 ? -m : m)),
                             static_cast<unsigned long>(k));
        if (m < 0 && k % 2 == 1) mk = -mk;
        total += mk * Integer(static_cast<long>(c));
    }
    return total;
}

Integer oracle_moment(StatKind kind, int k, std::int64_t n, std::int64_t cap) {
    return oracle_moment(statistic_table(kind, n, cap), k);
}

SptTriple spt_statistics(std::int64_t n, std::int64_t cap) {
    SptTriple t{0, 0, 0};
    for_each_overpartition(n, cap, [&](const Overpartition& op) {
        if (op.parts.empty()) return;
        const std::int64_t smallest = op.parts.back();
        const std::int64_t occurrences =
            static_cast<std::int64_t>(std::count(op.parts.begin(), op.parts.end(), smallest));
        if (smallest % 2 == 1)
            t.spt1 += occurrences;
        else
            t.spt2 += occurrences;
    });
    t.spt = t.spt1 + t.spt2;
    return t;
}

std::pair<Integer, Integer> nov_ov(std::int64_t n, std::int64_t cap) {
    Integer nov = 0, ov = 0;
    for_each_overpartition(n, cap, [&](const Overpartition& op) {
        std::set<std::int64_t> pending = op.overlined;
        for (auto p : op.parts) {
            if (pending.contains(p)) {
                pending.erase(p);
                ov += p;
            } else {
                nov += p;
            }
        }
    });
    return {nov, ov};
}

Integer andrews_spt(std::int64_t n, std::int64_t cap) {
    check_cap(n, cap);
    Integer total = 0;
    for_each_partition(n, [&](const std::vector<std::int64_t>& parts) {
        if (parts.empty()) return;
        const std::int64_t smallest = parts.back();
        total += static_cast<long>(std::count(parts.begin(), parts.end(), smallest));
    });
    return total;
}

Integer oracle_alpha(std::int64_t n, std::int64_t cap) {
    Integer alpha = 0;
    for_each_overpartition(n, cap, [&](const Overpartition& op) {
        alpha += (dyson_rank(op) % 2 == 0) ? 1 : -1;
    });
    return alpha;
}

}  // namespace qmoments
