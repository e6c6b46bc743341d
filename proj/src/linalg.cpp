#include "qmoments/linalg.hpp"

#include <stdexcept>

namespace qmoments {

namespace {

std::size_t entry_bits(const Rational& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

}  // namespace

RowEchelonSolver::AddResult RowEchelonSolver::add_row(Row row) {
    if (row.size() != d_ + 1)
        throw std::invalid_argument("RowEchelonSolver: row has wrong width");

    for (const auto& p : pivots_) {
        const Rational factor = row[p.col];
        if (factor == 0) continue;
        for (std::size_t j = 0; j <= d_; ++j) {
            if (p.row[j] == 0) continue;
            row[j] -= factor * p.row[j];
        }
    }

    std::size_t best = d_;  // d_ means "no coefficient column left"
    for (std::size_t j = 0; j < d_; ++j) {
        if (row[j] == 0) continue;
        if (best == d_ || entry_bits(row[j]) < entry_bits(row[best])) best = j;
    }
    if (best == d_) {
        return row[d_] == 0 ? AddResult::Dependent : AddResult::Inconsistent;
    }

    const Rational inv = Rational(1) / row[best];
    for (std::size_t j = 0; j <= d_; ++j) row[j] *= inv;
    for (auto& p : pivots_) {
        const Rational factor = p.row[best];
        if (factor == 0) continue;
        for (std::size_t j = 0; j <= d_; ++j) {
            if (row[j] == 0) continue;
            p.row[j] -= factor * row[j];
        }
    }
    pivots_.push_back({best, std::move(row)});
    return AddResult::NewPivot;
}

std::vector<Rational> RowEchelonSolver::solution() const {
    if (!solved()) throw std::logic_error("RowEchelonSolver: system not of full rank");
    std::vector<Rational> x(d_);
    for (const auto& p : pivots_) x[p.col] = p.row[d_];
    return x;
}

std::size_t matrix_rank(const std::vector<Row>& rows) {
    if (rows.empty()) return 0;
    const std::size_t width = rows[0].size();
    RowEchelonSolver solver(width);
    std::size_t rank = 0;
    for (const auto& r : rows) {
        Row aug = r;
        aug.push_back(Rational(0));
        if (solver.add_row(std::move(aug)) == RowEchelonSolver::AddResult::NewPivot) ++rank;
    }
    return rank;
}

std::optional<DependencyWitness> find_dependency(const std::vector<Row>& rows) {
    if (rows.empty()) return std::nullopt;
    const std::size_t width = rows[0].size();
    // Augment each row with tracking columns over the original rows; a row
    // that eliminates to zero exposes the combination in its tracker.
    const std::size_t m = rows.size();
    std::vector<Row> work;
    std::vector<std::size_t> pivot_col;
    for (std::size_t idx = 0; idx < m; ++idx) {
        Row row = rows[idx];
        row.resize(width + m, Rational(0));
        row[width + idx] = 1;
        for (std::size_t pi = 0; pi < work.size(); ++pi) {
            const Rational factor = row[pivot_col[pi]];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < width + m; ++j) {
                if (work[pi][j] == 0) continue;
                row[j] -= factor * work[pi][j];
            }
        }
        std::size_t best = width;
        for (std::size_t j = 0; j < width; ++j) {
            if (row[j] != 0) {
                best = j;
                break;
            }
        }
        if (best == width) {
            DependencyWitness w;
            w.row_index = idx;
            w.combination.assign(idx, Rational(0));
            // row tracker: row[idx] accumulated as 1 * original + combo of earlier
            const Rational self = row[width + idx];
            for (std::size_t j = 0; j < idx; ++j) w.combination[j] = -row[width + j] / self;
            return w;
        }
        const Rational inv = Rational(1) / row[best];
        for (std::size_t j = 0; j < width + m; ++j) row[j] *= inv;
        work.push_back(std::move(row));
        pivot_col.push_back(best);
    }
    return std::nullopt;
}

}  // namespace qmoments
