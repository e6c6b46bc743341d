#include "qmoments/quasimod.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qmoments/linalg.hpp"

namespace qmoments {

std::string QuasiMonomial::name() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const char* sym, int e) {
        if (e == 0) return;
        if (!first) os << "*";
        os << sym;
        if (e > 1) os << "^" << e;
        first = false;
    };
    emit("E2", a);
    emit("V2", b);
    emit("E4", c);
    if (first) os << "1";
    return os.str();
}

std::int64_t expected_dimension(int k) {
    static constexpr std::array<std::int64_t, 6> dims = {2, 6, 12, 21, 33, 49};
    if (k < 1 || k > 6) throw std::invalid_argument("expected_dimension: k must be in 1..6");
    return dims[static_cast<std::size_t>(k - 1)];
}

QuasiBasis build_basis(int k, std::int64_t n_work, std::int64_t margin) {
    if (k < 1 || k > 6) throw std::invalid_argument("build_basis: k must be in 1..6");
    const std::int64_t dim = expected_dimension(k);
    if (n_work <= 0) n_work = 3 * dim;
    if (n_work < 2 * dim + 10)
        throw std::invalid_argument("build_basis: n_work must be at least 2*dim + 10");

    QuasiBasis basis;
    basis.k = k;
    basis.n_work = n_work;
    basis.margin = margin;

    const std::int64_t depth = n_work + margin;
    const QSeries e2 = eisenstein_e2(depth);
    const QSeries v2 = qs_sub(qs_scale(substitute_q_power(e2, 2), Rational(2)), e2);
    const QSeries e4 = eisenstein_e4(depth);

    // power tables
    auto powers = [&](const QSeries& base, int max_e) {
        std::vector<QSeries> p;
        p.push_back(QSeries::constant(Rational(1), depth));
        for (int e = 1; e <= max_e; ++e) p.push_back(qs_mul(p.back(), base));
        return p;
    };
    const auto e2p = powers(e2, k);
    const auto v2p = powers(v2, k);
    const auto e4p = powers(e4, k / 2);

    for (int c = 0; 2 * c <= k; ++c) {
        for (int b = 0; b + 2 * c <= k; ++b) {
            for (int a = 0; a + b + 2 * c <= k; ++a) {
                if (a == 0 && b == 0 && c == 0) continue;
                QuasiMonomial mono{a, b, c};
                QSeries exp = qs_mul(qs_mul(e2p[static_cast<std::size_t>(a)],
                                            v2p[static_cast<std::size_t>(b)]),
                                     e4p[static_cast<std::size_t>(c)]);
                if (exp.coeff(0) != 1)
                    throw std::logic_error("build_basis: monomial constant term is not 1");
                exp.coeff_mut(0) = 0;
                basis.monomials.push_back(mono);
                basis.expansions.push_back(std::move(exp));
            }
        }
    }

    if (static_cast<std::int64_t>(basis.monomials.size()) != dim)
        throw std::logic_error("build_basis: monomial count " +
                               std::to_string(basis.monomials.size()) +
                               " disagrees with the expected dimension " + std::to_string(dim));

    std::vector<Row> rows;
    for (const auto& exp : basis.expansions) {
        Row r;
        for (std::int64_t t = 1; t <= n_work; ++t) r.push_back(exp.coeff(t));
        rows.push_back(std::move(r));
    }
    const std::size_t rank = matrix_rank(rows);
    if (static_cast<std::int64_t>(rank) != dim)
        throw std::logic_error("build_basis: rank " + std::to_string(rank) +
                               " disagrees with the expected dimension " + std::to_string(dim) +
                               " for k = " + std::to_string(k));
    return basis;
}

RelationReport membership(const QSeries& candidate, const QuasiBasis& basis,
                          const std::string& target_name) {
    const std::int64_t need = basis.n_work + basis.margin;
    if (candidate.trunc_order() < need)
        throw std::invalid_argument("membership: candidate truncation order " +
                                    std::to_string(candidate.trunc_order()) +
                                    " is below n_work + margin = " + std::to_string(need));

    RelationReport report;
    report.target = target_name;
    report.residual_checked_to = need;

    // Basis elements have no constant term, so neither may the candidate.
    if (candidate.coeff(0) != 0) {
        report.exact_member = false;
        report.first_failure = 0;
        return report;
    }

    const std::size_t d = basis.expansions.size();
    RowEchelonSolver solver(d);
    for (std::int64_t t = 1; t <= basis.n_work; ++t) {
        Row row;
        row.reserve(d + 1);
        for (const auto& exp : basis.expansions) row.push_back(exp.coeff(t));
        row.push_back(candidate.coeff(t));
        if (solver.add_row(std::move(row)) == RowEchelonSolver::AddResult::Inconsistent) {
            report.exact_member = false;
            report.first_failure = t;
            return report;
        }
    }
    if (!solver.solved())
        throw std::logic_error("membership: basis rank deficient on the working range");

    const std::vector<Rational> x = solver.solution();
    for (std::size_t i = 0; i < d; ++i)
        report.coordinates.emplace_back(basis.monomials[i].name(), x[i]);

    // margin re-check
    for (std::int64_t t = basis.n_work + 1; t <= need; ++t) {
        Rational acc = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            acc += x[i] * basis.expansions[i].coeff(t);
        }
        if (acc != candidate.coeff(t)) {
            report.exact_member = false;
            report.first_failure = t;
            return report;
        }
    }
    report.exact_member = true;
    return report;
}

std::string RelationReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "qmoments.relation/1";
    j["target"] = target;
    j["exact_member"] = exact_member;
    j["residual_checked_to"] = residual_checked_to;
    j["first_failure"] = first_failure;
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const auto& [name, value] : coordinates) {
        coords.push_back({{"basis", name}, {"value", to_fraction_string(value)}});
    }
    j["coordinates"] = coords;
    return j.dump(2);
}

RelationReport RelationReport::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema").get<std::string>() != "qmoments.relation/1")
        throw std::invalid_argument("RelationReport: unknown schema");
    RelationReport r;
    r.target = j.at("target").get<std::string>();
    r.exact_member = j.at("exact_member").get<bool>();
    r.residual_checked_to = j.at("residual_checked_to").get<std::int64_t>();
    r.first_failure = j.at("first_failure").get<std::int64_t>();
    for (const auto& c : j.at("coordinates")) {
        r.coordinates.emplace_back(c.at("basis").get<std::string>(),
                                   rational_from_string(c.at("value").get<std::string>()));
    }
    return r;
}

}  // namespace qmoments
