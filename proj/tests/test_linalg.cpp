#include "dualcoh/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace dualcoh;
using namespace dualcoh::linalg;

namespace {

std::vector<SparseVec> random_rows(int nrows, int ncols, int density_pct, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<SparseVec> rows(static_cast<std::size_t>(nrows));
    for (auto& r : rows)
        for (int c = 0; c < ncols; ++c)
            if (static_cast<int>(rng() % 100) < density_pct) {
                const long v = static_cast<long>(rng() % 11) - 5;
                if (v != 0)
                    r.push_back({c, Rational(v)});
            }
    // dependent rows
    if (nrows >= 3) {
        rows.push_back(axpy(rows[0], Rational(-3, 2), rows[1]));
        rows.push_back(axpy(rows[2], Rational(5), rows[0]));
    }
    return rows;
}

// Dense Gaussian elimination, for rank only.
std::size_t dense_rank(const std::vector<SparseVec>& rows, int ncols)
{
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) {
        std::vector<Rational> d(static_cast<std::size_t>(ncols), 0);
        for (const auto& e : r)
            d[static_cast<std::size_t>(e.col)] = e.value;
        m.push_back(d);
    }
    std::size_t rank = 0;
    for (int c = 0; c < ncols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            const Rational f = m[i][c] / m[rank][c];
            for (int k = c; k < ncols; ++k)
                m[i][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

bool same(const Rref& a, const Rref& b)
{
    if (a.pivots != b.pivots || a.rows.size() != b.rows.size())
        return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].size() != b.rows[i].size())
            return false;
        for (std::size_t k = 0; k < a.rows[i].size(); ++k)
            if (a.rows[i][k].col != b.rows[i][k].col || a.rows[i][k].value != b.rows[i][k].value)
                return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rational serialization")
{
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(Rational(-2)) == "-2/1");
    CHECK(to_string(Rational(0)) == "0/1");
    CHECK(parse_rational("-2/4") == Rational(-1, 2));
    CHECK(to_string(parse_rational("6/-4")) == "-3/2");
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("serial and parallel kernels give the same reduced form")
{
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const int nrows = 5 + static_cast<int>(seed * 7 % 40);
        const int ncols = 4 + static_cast<int>(seed * 5 % 30);
        const auto rows = random_rows(nrows, ncols, 30, seed);
        const Rref s = rref_serial(rows, ncols);
        for (std::size_t batch : {std::size_t{1}, std::size_t{3}, std::size_t{64}})
            CHECK(same(s, rref_parallel(rows, ncols, batch)));
        CHECK(s.rank() == dense_rank(rows, ncols));
    }
}

TEST_CASE("reduced row echelon invariants")
{
    const auto rows = random_rows(30, 20, 25, 99);
    const Rref r = rref(rows, 20);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        REQUIRE(!r.rows[i].empty());
        CHECK(r.rows[i].front().col == r.pivots[i]);
        CHECK(r.rows[i].front().value == 1);
        if (i > 0)
            CHECK(r.pivots[i - 1] < r.pivots[i]);
        for (std::size_t k = 0; k < r.rows.size(); ++k)
            if (k != i)
                CHECK(find_entry(r.rows[k], r.pivots[i]) == nullptr);
    }
    // Every input row lies in the span.
    for (const auto& row : rows)
        CHECK(r.reduce(row).empty());
    CHECK(r.free_columns().size() + r.rank() == 20);
}

TEST_CASE("solve")
{
    // x + y = 3, y - z = 1; free z = 0 -> (2, 1, 0)
    const std::vector<SparseVec> eq{{{0, 1}, {1, 1}}, {{1, 1}, {2, -1}}};
    const std::vector<Rational> rhs{3, 1};
    for (auto k : {Kernel::serial, Kernel::parallel}) {
        const auto x = solve(eq, rhs, 3, k);
        REQUIRE(x);
        CHECK((*x)[0] == 2);
        CHECK((*x)[1] == 1);
        CHECK((*x)[2] == 0);
    }
    // x + y = 1, 2x + 2y = 3 has no solution
    const std::vector<SparseVec> bad{{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
    const std::vector<Rational> brhs{1, 3};
    CHECK_FALSE(solve(bad, brhs, 2).has_value());
}
