#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmoments/qseries.hpp"

namespace qmoments {

/// Monomial E2(q)^a V2(q)^b E4(q)^c where V2 = 2 E2(q^2) - E2(q); weight
/// 2(a + b + 2c). V2 and E4 generate the modular forms on the level-2 group,
/// and multiplying in powers of E2 fills out the quasimodular ring.
struct QuasiMonomial {
    int a = 0;
    int b = 0;
    int c = 0;

    int weight() const { return 2 * (a + b + 2 * c); }
    std::string name() const;
};

/// Expected dimension of the weight <= 2k slice with constant terms removed,
/// for k = 1..6: {2, 6, 12, 21, 33, 49}.
std::int64_t expected_dimension(int k);

/// Spanning set of constant-removed q-expansions of the quasimodular
/// monomials with 0 < a + b + 2c <= k; rank-verified at construction.
struct QuasiBasis {
    int k = 0;
    std::int64_t n_work = 0;
    std::int64_t margin = 0;
    std::vector<QuasiMonomial> monomials;
    std::vector<QSeries> expansions;  // to n_work + margin, constant removed

    std::int64_t dimension() const { return static_cast<std::int64_t>(monomials.size()); }
};

inline constexpr std::int64_t kDefaultMembershipMargin = 20;

/// Build the basis for weight <= 2k, 1 <= k <= 6. n_work = 0 picks the
/// default 3 * dimension. Throws if the expansion rank disagrees with the
/// expected dimension.
QuasiBasis build_basis(int k, std::int64_t n_work = 0,
                       std::int64_t margin = kDefaultMembershipMargin);

struct RelationReport {
    std::string target;
    std::vector<std::pair<std::string, Rational>> coordinates;
    std::int64_t residual_checked_to = 0;
    bool exact_member = false;
    std::int64_t first_failure = -1;  // q-exponent of the first failing coefficient

    std::string to_json() const;
    static RelationReport from_json(const std::string& text);
};

/// Exact solve of candidate = sum x_i basis_i on exponents 1..n_work, then a
/// re-check on the margin exponents; exact-member only when the margin
/// residual is identically zero. The candidate must carry at least
/// n_work + margin coefficients.
RelationReport membership(const QSeries& candidate, const QuasiBasis& basis,
                          const std::string& target_name = "candidate");

}  // namespace qmoments
