#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qmoments/cache.hpp"
#include "qmoments/genfun.hpp"
#include "qmoments/relations.hpp"
#include "qmoments/report.hpp"

namespace qmoments {

/// Shared lazily-computed series, memoized in memory and (for the expensive
/// deep expansions) through the optional on-disk cache.
class Workspace {
public:
    explicit Workspace(SeriesCache cache = SeriesCache{}) : cache_(std::move(cache)) {}

    QSeries pbar(std::int64_t n);
    QSeries alpha(std::int64_t n);
    QSeries moment(MomentFamily family, int k, std::int64_t n);
    SptSeries spt(std::int64_t n);
    std::pair<QSeries, QSeries> nov_ov(std::int64_t n);
    QSeries cusp_f(std::int64_t n);

    const SeriesCache& cache() const { return cache_; }

private:
    QSeries memoized(const std::string& desc, std::int64_t n, bool disk,
                     const std::function<QSeries(std::int64_t)>& compute);

    SeriesCache cache_;
    std::map<std::string, QSeries> memo_;  // desc -> longest series computed
};

/// Moment/cusp series bundle consumed by the sweep verifiers; tests feed
/// perturbed copies through the same functions.
struct MomentData {
    std::map<TermKey, QSeries> series;

    const QSeries& at(const TermKey& key) const;
};

MomentData collect_moment_data(Workspace& ws, int k_max, std::int64_t n);

/// Coefficientwise check of target(n) = sum poly(n) * term(n) for 0..n_max.
Report sweep_relation(const SolvedRelation& rel, const MomentData& data, std::int64_t n_max,
                      const std::string& suite_name);

/// Check sum poly(n) * term(n) == 0 (mod p) for 0..n_max.
Report sweep_congruence(const CongruenceStatement& st, const MomentData& data,
                        std::int64_t n_max, const std::string& suite_name);

Report suite_oracle_equivalence(Workspace& ws, std::int64_t n_max);
Report suite_dimensions(Workspace& ws);
Report suite_corollary(Workspace& ws, int which, std::int64_t n_max);
Report suite_theorem1(Workspace& ws, int k_max);
Report suite_theorem2(Workspace& ws, std::int64_t n_max);
Report suite_theorem3(Workspace& ws, std::int64_t n_max);
Report suite_theorem4(Workspace& ws, std::int64_t n_max);
Report suite_pde(Workspace& ws, std::int64_t n_max);
Report suite_dictionary(Workspace& ws, std::int64_t n_max);
Report suite_hecke_exact(Workspace& ws, const std::vector<int>& ells, std::int64_t n_max);
Report suite_hecke_mod3(Workspace& ws, const std::vector<int>& ells, std::int64_t n_max);

struct SuiteOptions {
    std::int64_t n_max = 0;  // 0 = suite default
    int k_max = 4;
    std::vector<int> ells = {5, 7};
};

/// Dispatch by CLI suite name; throws std::invalid_argument for unknown
/// suites.
Report run_suite(Workspace& ws, const std::string& suite, const SuiteOptions& options);

std::vector<std::string> known_suites();

}  // namespace qmoments
