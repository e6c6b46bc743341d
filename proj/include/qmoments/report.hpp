#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qmoments {

struct Failure {
    std::string location;
    std::string expected;
    std::string actual;
};

/// Outcome of one verification suite. A failed report always carries the
/// exact offending values.
struct Report {
    std::string suite;
    std::map<std::string, std::string> parameters;
    bool pass = true;
    std::vector<Failure> failures;
    double wall_time_ms = 0.0;

    void add_failure(std::string location, std::string expected, std::string actual) {
        pass = false;
        failures.push_back({std::move(location), std::move(expected), std::move(actual)});
    }

    /// Deterministic apart from the wall-time field.
    std::string to_json() const;
    std::string summary() const;
};

}  // namespace qmoments
