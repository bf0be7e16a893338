#pragma once

#include "dualcoh/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dualcoh::linalg {

struct SparseEntry {
    int col;
    Rational value;
};

// Entries sorted by ascending column, no zero values. Column 0 is the most
// significant column: row reduction pivots on the smallest column index.
using SparseVec = std::vector<SparseEntry>;

// y + a*x, both sorted.
SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Rational& a);
const Rational* find_entry(const SparseVec& v, int col);

/*
 * Reduced row echelon form of a row span.
 *
 * rows[i] has leading column pivots[i] with coefficient 1, pivots are strictly
 * increasing, and every pivot column is zero in every other row. The form is
 * unique for a given row space and column order, so the serial and parallel
 * kernels below agree bit for bit.
 */
struct Rref {
    int ncols = 0;
    std::vector<SparseVec> rows;
    std::vector<int> pivots;

    std::size_t rank() const { return rows.size(); }
    bool is_pivot(int col) const;
    std::vector<int> free_columns() const;
    // Fully reduces v against the rows; zero result iff v lies in the span.
    SparseVec reduce(const SparseVec& v) const;
};

enum class Kernel { serial, parallel };

// Reference kernel: one row at a time, Gauss-Jordan insertion.
Rref rref_serial(std::span<const SparseVec> rows, int ncols);

// OpenMP kernel: rows are reduced against the current basis in parallel
// batches; back-elimination into existing rows is also parallel.
Rref rref_parallel(std::span<const SparseVec> rows, int ncols, std::size_t batch = 64);

Rref rref(std::span<const SparseVec> rows, int ncols, Kernel kernel = Kernel::parallel);

// Solves sum_j equations[i][j] x_j = rhs[i]. Free variables are set to zero.
// Returns nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(std::span<const SparseVec> equations,
                                           std::span<const Rational> rhs, int nvars,
                                           Kernel kernel = Kernel::serial);

}  // namespace dualcoh::linalg
