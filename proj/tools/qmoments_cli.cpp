// Command-line front end: moment/statistic tables, verification suites with
// machine-readable reports, and exact reconstruction of the published
// moment relations.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#ifdef _OPENMP
#include <omp.h>
#endif

#include "qmoments/classnum.hpp"
#include "qmoments/oracle.hpp"
#include "qmoments/suites.hpp"

namespace {

using namespace qmoments;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct TableRow {
    std::int64_t n;
    std::string value;
    std::string oracle;  // empty when not cross-checked
};

int run_table(Workspace& ws, const std::string& kind, int k, std::int64_t n_max,
              const std::string& format) {
    const bool moment_kind =
        kind == "rank" || kind == "m2rank" || kind == "crank1" || kind == "crank2";
    if (moment_kind && k % 2 == 1) {
        std::cerr << "error: odd moments vanish identically; choose an even k\n";
        return kExitUsage;
    }

    QSeries series(0);
    if (kind == "rank") series = ws.moment(MomentFamily::Rank, k, n_max);
    else if (kind == "m2rank") series = ws.moment(MomentFamily::M2Rank, k, n_max);
    else if (kind == "crank1") series = ws.moment(MomentFamily::Crank1, k, n_max);
    else if (kind == "crank2") series = ws.moment(MomentFamily::Crank2, k, n_max);
    else if (kind == "sptbar") series = ws.spt(n_max).spt;
    else if (kind == "spt1bar") series = ws.spt(n_max).spt1;
    else if (kind == "spt2bar") series = ws.spt(n_max).spt2;
    else if (kind == "nov") series = ws.nov_ov(n_max).first;
    else if (kind == "ov") series = ws.nov_ov(n_max).second;
    else if (kind == "alpha") series = ws.alpha(n_max);
    else if (kind == "pbar") series = ws.pbar(n_max);
    else {
        std::cerr << "error: unknown table kind '" << kind << "'\n";
        return kExitUsage;
    }

    const bool cross_check = n_max <= kDefaultEnumerationCap && n_max <= 25;
    std::vector<TableRow> rows;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        TableRow row{n, to_fraction_string(series.coeff(n)), ""};
        if (cross_check) {
            Integer expected;
            if (kind == "rank") expected = oracle_moment(StatKind::Rank, k, n);
            else if (kind == "m2rank") expected = oracle_moment(StatKind::M2Rank, k, n);
            else if (kind == "crank1") expected = oracle_moment(StatKind::Crank1, k, n);
            else if (kind == "crank2") expected = oracle_moment(StatKind::Crank2, k, n);
            else if (kind == "sptbar") expected = spt_statistics(n).spt;
            else if (kind == "spt1bar") expected = spt_statistics(n).spt1;
            else if (kind == "spt2bar") expected = spt_statistics(n).spt2;
            else if (kind == "nov") expected = nov_ov(n).first;
            else if (kind == "ov") expected = nov_ov(n).second;
            else if (kind == "alpha") expected = oracle_alpha(n);
            else expected = Integer(static_cast<long>(enumerate_overpartitions(n).size()));
            row.oracle = expected.get_str();
        }
        rows.push_back(std::move(row));
    }

    if (format == "json") {
        std::cout << "{\"kind\":\"" << kind << "\",\"k\":" << k << ",\"rows\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << "{\"n\":" << rows[i].n << ",\"value\":\"" << rows[i].value << "\"";
            if (!rows[i].oracle.empty()) std::cout << ",\"oracle\":\"" << rows[i].oracle << "\"";
            std::cout << "}";
        }
        std::cout << "]}\n";
    } else if (format == "csv") {
        std::cout << "n,value" << (cross_check ? ",oracle" : "") << "\n";
        for (const auto& r : rows) {
            std::cout << r.n << "," << r.value;
            if (cross_check) std::cout << "," << r.oracle;
            std::cout << "\n";
        }
    } else {
        for (const auto& r : rows) {
            std::cout << r.n << "\t" << r.value;
            if (cross_check) std::cout << "\t(enumeration: " << r.oracle << ")";
            std::cout << "\n";
        }
    }

    if (cross_check) {
        for (const auto& r : rows) {
            if (!r.oracle.empty() && r.oracle != r.value) {
                std::cerr << "cross-check mismatch at n=" << r.n << "\n";
                return kExitFail;
            }
        }
    }
    return kExitPass;
}

int run_solve(int k, const std::string& variant_name, const std::string& substitute,
              bool compare_reference, bool as_json) {
    const RankVariant variant = variant_name == "m2" ? RankVariant::M2 : RankVariant::Dyson;
    std::vector<Substitution> subs;
    if (substitute == "mod5") subs = substitutions_mod5_path();
    else if (substitute == "mod7") subs = substitutions_mod7_path();
    else if (!substitute.empty()) {
        std::cerr << "error: unknown substitution preset '" << substitute << "'\n";
        return kExitUsage;
    }

    SolvedRelation rel;
    try {
        rel = reconstruct_relation(k, variant, subs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (as_json) {
        std::cout << rel.to_json() << "\n";
    } else {
        std::cout << rel.target.name() << "(n) =\n";
        for (const auto& [key, poly] : rel.rhs)
            std::cout << "  + [" << npoly_to_string(poly) << "] * " << key.name() << "(n)\n";
    }

    if (compare_reference) {
        if (!subs.empty()) {
            std::cerr << "error: --compare-paper applies to the plain relations only\n";
            return kExitUsage;
        }
        SolvedRelation expected;
        if (k == 2) expected = variant == RankVariant::Dyson ? reference::k2_dyson()
                                                             : reference::k2_m2();
        else if (k == 3) expected = variant == RankVariant::Dyson ? reference::k3_dyson()
                                                                  : reference::k3_m2();
        else if (k == 4 && variant == RankVariant::Dyson) expected = reference::k4_dyson();
        else {
            std::cerr << "error: no stored reference for k=" << k << " variant=" << variant_name
                      << "\n";
            return kExitUsage;
        }
        const auto diffs = diff_against_reference(rel, expected);
        if (diffs.empty()) {
            std::cout << "reference comparison: exact match\n";
        } else {
            for (const auto& d : diffs) std::cout << "reference diff: " << d << "\n";
            return kExitFail;
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rank/crank moment computations for overpartitions"};
    app.require_subcommand(1);

    int jobs = 1;
    std::string cache_dir;
    if (const char* env = std::getenv("QMOMENTS_CACHE_DIR")) cache_dir = env;
    app.add_option("--jobs", jobs, "worker threads for parallel sweeps (0 = hardware)");
    app.add_option("--cache-dir", cache_dir,
                   "directory for the expansion cache (env QMOMENTS_CACHE_DIR)");

    auto* table = app.add_subcommand("table", "print a moment or statistic table");
    std::string kind = "rank";
    int k = 2;
    std::int64_t table_n_max = 20;
    std::string format = "text";
    table->add_option("--kind", kind,
                      "rank|m2rank|crank1|crank2|sptbar|spt1bar|spt2bar|nov|ov|alpha|pbar")
        ->required();
    table->add_option("--k", k, "moment order (even; moment kinds only)");
    table->add_option("--n-max", table_n_max, "largest n");
    table->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    SuiteOptions options;
    bool as_json = false;
    verify->add_option("suite", suite, "one of: corollary1 corollary2 corollary3 theorem1 "
                                       "theorem2 theorem3 theorem4 pde dictionary hecke-exact "
                                       "hecke-mod3 dimensions oracle")
        ->required();
    verify->add_option("--n-max", options.n_max, "sweep depth (0 = suite default)");
    verify->add_option("--k-max", options.k_max, "largest k for the membership suite");
    verify->add_option("--ell", options.ells, "primes for the Hecke suites");
    verify->add_flag("--json", as_json, "emit the JSON report");

    auto* solve = app.add_subcommand("solve", "reconstruct a moment relation exactly");
    int solve_k = 2;
    std::string variant = "dyson";
    std::string substitute;
    bool compare_reference = false;
    bool solve_json = false;
    solve->add_option("--k", solve_k, "half-weight (2, 3, or 4)")->required();
    solve->add_option("--variant", variant, "dyson|m2")
        ->check(CLI::IsMember({"dyson", "m2"}));
    solve->add_option("--substitute", substitute,
                      "replace derivative basis elements: mod5 (k=3) or mod7 (k=4) path");
    solve->add_flag("--compare-paper", compare_reference,
                    "diff the coefficients against the stored reference tables");
    solve->add_flag("--json", solve_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

#ifdef _OPENMP
    omp_set_num_threads(jobs <= 0 ? omp_get_num_procs() : jobs);
#endif

    Workspace ws{SeriesCache{cache_dir}};
    try {
        if (table->parsed()) return run_table(ws, kind, k, table_n_max, format);
        if (solve->parsed())
            return run_solve(solve_k, variant, substitute, compare_reference, solve_json);
        const Report report = run_suite(ws, suite, options);
        if (as_json)
            std::cout << report.to_json() << "\n";
        else
            std::cout << report.summary() << "\n";
        return report.pass ? kExitPass : kExitFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
