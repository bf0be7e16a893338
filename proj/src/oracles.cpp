#include "dualcoh/oracles.hpp"

#include <algorithm>
#include <functional>

namespace dualcoh::oracles {

Betti strict_partition_betti(int g)
{
    Betti out(static_cast<std::size_t>(g * (g + 1) + 1), 0);
    // Each subset of {1..g} is one strict partition.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
        int size = 0;
        for (int i = 0; i < g; ++i)
            if (mask >> i & 1)
                size += i + 1;
        ++out[static_cast<std::size_t>(2 * size)];
    }
    return out;
}

Betti box_partition_betti(int p, int q)
{
    Betti out(static_cast<std::size_t>(2 * p * q + 1), 0);
    // Partitions with at most p parts, each at most q, weakly decreasing.
    std::function<void(int, int, int)> walk = [&](int row, int bound, int size) {
        if (row == p) {
            ++out[static_cast<std::size_t>(2 * size)];
            return;
        }
        for (int part = 0; part <= bound; ++part)
            walk(row + 1, part, size + part);
    };
    walk(0, q, 0);
    return out;
}

Betti gaussian_binomial_betti(int n, int k)
{
    // [n,k] = [n-1,k-1] + t^{2k} [n-1,k]
    std::vector<std::vector<Betti>> table(static_cast<std::size_t>(n + 1));
    for (int m = 0; m <= n; ++m) {
        table[m].resize(static_cast<std::size_t>(m + 1));
        for (int j = 0; j <= m; ++j) {
            Betti& cur = table[m][j];
            cur.assign(static_cast<std::size_t>(2 * j * (m - j) + 1), 0);
            if (j == 0 || j == m) {
                cur[0] = 1;
                continue;
            }
            const Betti& a = table[m - 1][j - 1];
            const Betti& b = table[m - 1][j];
            for (std::size_t d = 0; d < a.size(); ++d)
                cur[d] += a[d];
            for (std::size_t d = 0; d < b.size(); ++d)
                cur[d + 2 * static_cast<std::size_t>(j)] += b[d];
        }
    }
    return table[n][k];
}

Betti product_of_binomials(const std::vector<int>& degrees)
{
    Betti out{1};
    for (int d : degrees) {
        Betti next(out.size() + static_cast<std::size_t>(d), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            next[i] += out[i];
            next[i + static_cast<std::size_t>(d)] += out[i];
        }
        out = std::move(next);
    }
    return out;
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

mpz_class standard_young_tableaux(const std::vector<int>& shape)
{
    int n = 0;
    for (int r : shape)
        n += r;
    mpz_class num = 1;
    for (int i = 2; i <= n; ++i)
        num *= i;
    mpz_class den = 1;
    for (std::size_t i = 0; i < shape.size(); ++i)
        for (int j = 0; j < shape[i]; ++j) {
            int below = 0;
            for (std::size_t k = i + 1; k < shape.size(); ++k)
                if (shape[k] > j)
                    ++below;
            den *= shape[i] - j - 1 + below + 1;
        }
    return num / den;
}

Poly poly_constant(int nvars, const mpq_class& c)
{
    Poly out;
    if (c != 0)
        out[Monomial(static_cast<std::size_t>(nvars), 0)] = c;
    return out;
}

Poly poly_variable(int nvars, int i)
{
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(i)] = 1;
    return Poly{{m, 1}};
}

Poly poly_add(const Poly& a, const Poly& b)
{
    Poly out = a;
    for (const auto& [m, c] : b) {
        mpq_class& slot = out[m];
        slot += c;
        if (slot == 0)
            out.erase(m);
    }
    return out;
}

Poly poly_scale(const Poly& a, const mpq_class& c)
{
    if (c == 0)
        return {};
    Poly out;
    for (const auto& [m, v] : a)
        out[m] = v * c;
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] += mb[i];
            out[m] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly poly_component(const Poly& a, int d)
{
    Poly out;
    for (const auto& [m, c] : a) {
        int deg = 0;
        for (int e : m)
            deg += e;
        if (deg == d)
            out[m] = c;
    }
    return out;
}

Poly elementary_symmetric(int nvars, int first, int count, int k)
{
    Poly out;
    if (k < 0 || k > count)
        return out;
    // Sum over k-subsets, as an explicit 0/1 mask.
    std::vector<int> pick(static_cast<std::size_t>(count), 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        Monomial m(static_cast<std::size_t>(nvars), 0);
        for (int i = 0; i < count; ++i)
            m[static_cast<std::size_t>(first + i)] = pick[static_cast<std::size_t>(i)];
        out[m] = 1;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

Poly lagrangian_root_component(int g, int m)
{
    Poly total = poly_constant(g, 1);
    for (int i = 0; i < g; ++i) {
        const Poly x = poly_variable(g, i);
        total = poly_mul(total, poly_add(poly_constant(g, 1), poly_scale(poly_mul(x, x), -1)));
    }
    return poly_component(total, m);
}

Poly grassmannian_root_component(int p, int q, int m)
{
    const int n = p + q;
    Poly total = poly_constant(n, 1);
    for (int i = 0; i < n; ++i)
        total = poly_mul(total, poly_add(poly_constant(n, 1), poly_variable(n, i)));
    return poly_component(total, m);
}

int sort_sign(std::vector<int> v)
{
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                sign = -sign;
            }
    return sign;
}

}  // namespace dualcoh::oracles
