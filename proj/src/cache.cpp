#include "qmoments/cache.hpp"

#include <fstream>

#include "json.hpp"

namespace qmoments {

namespace {

std::string sanitize(const std::string& descriptor) {
    std::string out;
    for (char c : descriptor) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')
            out.push_back(c);
        else
            out.push_back('_');
    }
    return out;
}

}  // namespace

std::filesystem::path SeriesCache::entry_path(const std::string& descriptor,
                                              std::int64_t trunc_order) const {
    return dir_ / (sanitize(descriptor) + "_N" + std::to_string(trunc_order) + ".json");
}

std::optional<QSeries> SeriesCache::get(const std::string& descriptor,
                                        std::int64_t trunc_order) const {
    if (!enabled()) return std::nullopt;
    const auto path = entry_path(descriptor, trunc_order);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("schema").get<std::string>() != "qmoments.series-cache/1") return std::nullopt;
        if (j.at("descriptor").get<std::string>() != descriptor) return std::nullopt;
        if (j.at("trunc_order").get<std::int64_t>() != trunc_order) return std::nullopt;
        const auto& coeffs = j.at("coeffs");
        if (static_cast<std::int64_t>(coeffs.size()) != trunc_order + 1) return std::nullopt;
        QSeries s(trunc_order);
        for (std::int64_t i = 0; i <= trunc_order; ++i)
            s.coeff_mut(i) = rational_from_string(coeffs[static_cast<std::size_t>(i)]
                                                      .get<std::string>());
        return s;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable entries behave like a miss
    }
}

void SeriesCache::put(const std::string& descriptor, const QSeries& series) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    nlohmann::ordered_json j;
    j["schema"] = "qmoments.series-cache/1";
    j["descriptor"] = descriptor;
    j["trunc_order"] = series.trunc_order();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (std::int64_t i = 0; i <= series.trunc_order(); ++i)
        coeffs.push_back(to_fraction_string(series.coeff(i)));
    j["coeffs"] = coeffs;
    std::ofstream out(entry_path(descriptor, series.trunc_order()));
    out << j.dump() << "\n";
}

}  // namespace qmoments
