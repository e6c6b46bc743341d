#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qmoments/rational.hpp"

namespace qmoments {

using Row = std::vector<Rational>;

/// Incremental exact Gaussian elimination over the rationals on an augmented
/// system [A | b]. Rows are fed in caller order (q-exponent order in the
/// callers here), so the first inconsistent row identifies the first failing
/// coefficient. Within a row the pivot column is chosen by the smallest
/// numerator*denominator bit size, which keeps entries from blowing up.
class RowEchelonSolver {
public:
    explicit RowEchelonSolver(std::size_t unknowns) : d_(unknowns) {}

    enum class AddResult { NewPivot, Dependent, Inconsistent };

    /// row has d+1 entries, the last being the right-hand side.
    AddResult add_row(Row row);

    std::size_t rank() const { return pivots_.size(); }
    bool solved() const { return rank() == d_; }

    /// Unique solution; requires solved().
    std::vector<Rational> solution() const;

private:
    std::size_t d_;
    struct Pivot {
        std::size_t col;
        Row row;  // normalized: row[col] == 1
    };
    std::vector<Pivot> pivots_;
};

/// Rank of a rational matrix given as rows.
std::size_t matrix_rank(const std::vector<Row>& rows);

struct DependencyWitness {
    std::size_t row_index;              // first row dependent on its predecessors
    std::vector<Rational> combination;  // row[row_index] = sum combination[i] * row[i]
};

/// First linear dependency among the rows, if any.
std::optional<DependencyWitness> find_dependency(const std::vector<Row>& rows);

}  // namespace qmoments
