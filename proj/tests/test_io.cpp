#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>

#include "qmoments/cache.hpp"
#include "qmoments/report.hpp"
#include "qmoments/suites.hpp"

using namespace qmoments;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("qmoments-test-" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::string strip_wall_time(std::string json) {
    const auto pos = json.find("\"wall_time_ms\"");
    if (pos != std::string::npos) json.erase(pos);
    return json;
}

}  // namespace

TEST_CASE("report json shape") {
    Report rep;
    rep.suite = "demo";
    rep.parameters["n_max"] = "10";
    CHECK(rep.to_json().find("\"status\": \"pass\"") != std::string::npos);
    rep.add_failure("n=3", "0", "1");
    CHECK_FALSE(rep.pass);
    const std::string j = rep.to_json();
    CHECK(j.find("\"status\": \"fail\"") != std::string::npos);
    CHECK(j.find("\"location\": \"n=3\"") != std::string::npos);
    CHECK(rep.summary().find("FAIL") == 0);
}

TEST_CASE("series cache round trip and determinism") {
    TempDir dir;
    SeriesCache cache(dir.path);
    const QSeries pbar = pbar_series(40);
    CHECK_FALSE(cache.get("pbar", 40).has_value());
    cache.put("pbar", pbar);
    const auto hit = cache.get("pbar", 40);
    REQUIRE(hit.has_value());
    CHECK(*hit == pbar);
    CHECK_FALSE(cache.get("pbar", 41).has_value());

    // rationals with denominators survive the round trip
    QSeries frac(3);
    frac.coeff_mut(0) = make_rational(-22, 7);
    frac.coeff_mut(2) = make_rational(1, 3);
    cache.put("frac-demo", frac);
    CHECK(*cache.get("frac-demo", 3) == frac);
}

TEST_CASE("cold and warm workspace runs produce identical reports") {
    TempDir dir;
    SuiteOptions opts;
    opts.n_max = 12;
    std::string cold, warm;
    {
        Workspace ws{SeriesCache{dir.path}};
        cold = strip_wall_time(run_suite(ws, "theorem4", opts).to_json());
    }
    {
        Workspace ws{SeriesCache{dir.path}};
        warm = strip_wall_time(run_suite(ws, "theorem4", opts).to_json());
    }
    CHECK(cold == warm);
    // workspace memoization serves prefixes of longer series
    Workspace ws{SeriesCache{dir.path}};
    const QSeries long_alpha = ws.alpha(30);
    const QSeries short_alpha = ws.alpha(12);
    CHECK(short_alpha.trunc_order() == 12);
    for (std::int64_t n = 0; n <= 12; ++n)
        CHECK(short_alpha.coeff(n) == long_alpha.coeff(n));
}

TEST_CASE("unknown suite is rejected") {
    Workspace ws;
    CHECK_THROWS_AS(run_suite(ws, "nope", SuiteOptions{}), std::invalid_argument);
}
