#include "dualcoh/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dualcoh::linalg {

SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x)
{
    if (a == 0)
        return y;
    SparseVec out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin();
    auto ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->col < ix->col)) {
            out.push_back(*iy++);
        } else if (iy == y.end() || ix->col < iy->col) {
            out.push_back({ix->col, a * ix->value});
            ++ix;
        } else {
            Rational v = iy->value + a * ix->value;
            if (v != 0)
                out.push_back({iy->col, std::move(v)});
            ++iy;
            ++ix;
        }
    }
    return out;
}

SparseVec scaled(const SparseVec& x, const Rational& a)
{
    if (a == 0)
        return {};
    SparseVec out = x;
    for (auto& e : out)
        e.value *= a;
    return out;
}

const Rational* find_entry(const SparseVec& v, int col)
{
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const SparseEntry& e, int c) { return e.col < c; });
    if (it != v.end() && it->col == col)
        return &it->value;
    return nullptr;
}

bool Rref::is_pivot(int col) const
{
    return std::binary_search(pivots.begin(), pivots.end(), col);
}

std::vector<int> Rref::free_columns() const
{
    std::vector<int> out;
    std::size_t k = 0;
    for (int c = 0; c < ncols; ++c) {
        if (k < pivots.size() && pivots[k] == c)
            ++k;
        else
            out.push_back(c);
    }
    return out;
}

namespace {

// Gauss-Jordan basis under construction. pivot_row maps a column to the
// index of the row that owns it (or -1).
class Builder {
public:
    explicit Builder(int ncols) : ncols_(ncols), pivot_row_(static_cast<std::size_t>(ncols), -1) {}

    SparseVec reduce(const SparseVec& v) const
    {
        SparseVec out;
        out.reserve(v.size());
        for (const auto& e : v)
            if (pivot_row_[static_cast<std::size_t>(e.col)] < 0)
                out.push_back(e);
        for (const auto& e : v) {
            const int r = pivot_row_[static_cast<std::size_t>(e.col)];
            if (r < 0)
                continue;
            // rows_[r] is zero on every other pivot column, so the pivot
            // coefficients of v are not disturbed by earlier subtractions.
            SparseVec tail(rows_[static_cast<std::size_t>(r)].begin() + 1,
                           rows_[static_cast<std::size_t>(r)].end());
            out = axpy(out, -e.value, tail);
        }
        return out;
    }

    // v must already be reduced against the current rows and nonzero.
    void insert(SparseVec v, bool parallel)
    {
        const Rational inv = 1 / v.front().value;
        for (auto& e : v)
            e.value *= inv;
        const int pcol = v.front().col;
        const auto n = static_cast<long>(rows_.size());
        auto eliminate = [&](long i) {
            auto& row = rows_[static_cast<std::size_t>(i)];
            if (const Rational* c = find_entry(row, pcol)) {
                const Rational coef = -*c;
                row = axpy(row, coef, v);
            }
        };
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
            for (long i = 0; i < n; ++i)
                eliminate(i);
        } else {
            for (long i = 0; i < n; ++i)
                eliminate(i);
        }
        pivot_row_[static_cast<std::size_t>(pcol)] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
    }

    std::size_t rank() const { return rows_.size(); }

    Rref finish() &&
    {
        std::vector<std::size_t> order(rows_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return rows_[a].front().col < rows_[b].front().col;
        });
        Rref out;
        out.ncols = ncols_;
        for (auto i : order) {
            out.pivots.push_back(rows_[i].front().col);
            out.rows.push_back(std::move(rows_[i]));
        }
        return out;
    }

private:
    int ncols_;
    std::vector<int> pivot_row_;
    std::vector<SparseVec> rows_;
};

void check_columns(std::span<const SparseVec> rows, int ncols)
{
    for (const auto& r : rows)
        for (const auto& e : r)
            if (e.col < 0 || e.col >= ncols)
                throw std::out_of_range("sparse row column out of range");
}

}  // namespace

SparseVec Rref::reduce(const SparseVec& v) const
{
    SparseVec out;
    for (const auto& e : v)
        if (!is_pivot(e.col))
            out.push_back(e);
    for (const auto& e : v) {
        auto it = std::lower_bound(pivots.begin(), pivots.end(), e.col);
        if (it == pivots.end() || *it != e.col)
            continue;
        const auto& row = rows[static_cast<std::size_t>(it - pivots.begin())];
        SparseVec tail(row.begin() + 1, row.end());
        out = axpy(out, -e.value, tail);
    }
    return out;
}

Rref rref_serial(std::span<const SparseVec> rows, int ncols)
{
    check_columns(rows, ncols);
    Builder b(ncols);
    for (const auto& r : rows) {
        if (b.rank() == static_cast<std::size_t>(ncols))
            break;
        SparseVec v = b.reduce(r);
        if (!v.empty())
            b.insert(std::move(v), false);
    }
    return std::move(b).finish();
}

Rref rref_parallel(std::span<const SparseVec> rows, int ncols, std::size_t batch)
{
    check_columns(rows, ncols);
    if (batch == 0)
        batch = 1;
    Builder b(ncols);
    std::vector<SparseVec> reduced;
    for (std::size_t start = 0; start < rows.size(); start += batch) {
        if (b.rank() == static_cast<std::size_t>(ncols))
            break;
        const std::size_t stop = std::min(rows.size(), start + batch);
        reduced.assign(stop - start, {});
        const auto m = static_cast<long>(stop - start);
#pragma omp parallel for schedule(dynamic, 1)
        for (long j = 0; j < m; ++j)
            reduced[static_cast<std::size_t>(j)] = b.reduce(rows[start + static_cast<std::size_t>(j)]);
        for (auto& v : reduced) {
            if (v.empty())
                continue;
            // Rows inserted earlier in this batch may own columns of v.
            SparseVec w = b.reduce(v);
            if (!w.empty())
                b.insert(std::move(w), true);
        }
    }
    return std::move(b).finish();
}

Rref rref(std::span<const SparseVec> rows, int ncols, Kernel kernel)
{
    return kernel == Kernel::serial ? rref_serial(rows, ncols) : rref_parallel(rows, ncols);
}

std::optional<std::vector<Rational>> solve(std::span<const SparseVec> equations,
                                           std::span<const Rational> rhs, int nvars,
                                           Kernel kernel)
{
    if (equations.size() != rhs.size())
        throw std::invalid_argument("solve: equation/rhs count mismatch");
    std::vector<SparseVec> aug(equations.begin(), equations.end());
    for (std::size_t i = 0; i < aug.size(); ++i)
        if (rhs[i] != 0)
            aug[i].push_back({nvars, rhs[i]});
    const Rref r = rref(aug, nvars + 1, kernel);
    std::vector<Rational> x(static_cast<std::size_t>(nvars), Rational(0));
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (r.pivots[i] == nvars)
            return std::nullopt;
        if (const Rational* v = find_entry(r.rows[i], nvars))
            x[static_cast<std::size_t>(r.pivots[i])] = *v;
    }
    return x;
}

}  // namespace dualcoh::linalg
