#pragma once

#include "cr/gauss_rat.hpp"

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace cr {

using SparseRow = std::vector<std::pair<int, Rat>>;  // sorted by column, no zeros

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseRow> row;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);
    // Entries must be added in increasing column order within a row; zeros are skipped.
    void push(int r, int c, const Rat& v);
    std::size_t nnz() const;
    std::vector<Rat> apply(const std::vector<Rat>& x) const;
};

// Incremental fraction-free row echelon form. Rows are scaled to primitive integer vectors and
// eliminated by cross-multiplication, so no fractions appear during elimination.
class RowEchelon {
public:
    explicit RowEchelon(int cols);

    // Reduces the row against the current pivots; returns true when it was independent.
    bool insert(const SparseRow& row);
    int rank() const { return rank_; }
    int cols() const { return cols_; }
    std::vector<int> pivot_columns() const;
    // One kernel vector per non-pivot column c, with x[c] = 1 and zeros on the other free columns.
    std::vector<std::vector<Rat>> kernel() const;

private:
    using IntRow = std::vector<std::pair<int, mpz_class>>;
    static IntRow to_primitive(const SparseRow& row);
    static void make_primitive(IntRow& r);

    int cols_;
    int rank_ = 0;
    std::vector<std::optional<IntRow>> pivot_;
};

// Rows are fed shortest first; optionally only the given columns are kept.
RowEchelon echelon(const SparseMatrix& m, const std::vector<bool>* keep_cols = nullptr);
int rank(const SparseMatrix& m, const std::vector<bool>* keep_cols = nullptr);

}  // namespace cr
