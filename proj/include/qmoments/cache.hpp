#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qmoments/qseries.hpp"

namespace qmoments {

/// On-disk cache of expensive expansions. One JSON file per entry, keyed by
/// the canonical construction descriptor and the truncation order; rationals
/// travel as "num/den" strings, so a round trip is lossless.
class SeriesCache {
public:
    /// An empty directory disables the cache.
    explicit SeriesCache(std::filesystem::path dir = {}) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }

    std::optional<QSeries> get(const std::string& descriptor, std::int64_t trunc_order) const;
    void put(const std::string& descriptor, const QSeries& series) const;

    /// Cache lookup wrapped around a computation.
    template <typename Fn>
    QSeries get_or_compute(const std::string& descriptor, std::int64_t trunc_order,
                           Fn&& compute) const {
        if (auto hit = get(descriptor, trunc_order)) return *std::move(hit);
        QSeries s = compute();
        put(descriptor, s);
        return s;
    }

private:
    std::filesystem::path entry_path(const std::string& descriptor,
                                     std::int64_t trunc_order) const;
    std::filesystem::path dir_;
};

}  // namespace qmoments
