#include "qmoments/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qmoments {

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "qmoments.report/1";
    j["suite"] = suite;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    j["status"] = pass ? "pass" : "fail";
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        fails.push_back(
            {{"location", f.location}, {"expected", f.expected}, {"actual", f.actual}});
    }
    j["failures"] = fails;
    j["wall_time_ms"] = wall_time_ms;
    return j.dump(2);
}

std::string Report::summary() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " " << suite;
    for (const auto& [k, v] : parameters) os << " " << k << "=" << v;
    if (!pass) {
        os << " (" << failures.size() << " failure" << (failures.size() == 1 ? "" : "s");
        if (!failures.empty())
            os << ", first at " << failures.front().location << ": expected "
               << failures.front().expected << ", got " << failures.front().actual;
        os << ")";
    }
    return os.str();
}

}  // namespace qmoments
