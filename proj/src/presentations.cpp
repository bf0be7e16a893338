#include "dualcoh/presentations.hpp"

#include "dualcoh/errors.hpp"

namespace dualcoh::rings {

std::vector<Generator> lagrangian_generators(int g, const std::string& prefix)
{
    std::vector<Generator> gens;
    for (int i = 1; i <= g; ++i)
        gens.push_back({prefix + std::to_string(i), 2 * i});
    return gens;
}

std::vector<Polynomial> lagrangian_relations(int g)
{
    const FreeAlgebra F(lagrangian_generators(g));
    auto sigma = [&](int j) -> Polynomial {
        if (j == 0)
            return F.one();
        if (j > g)
            return {};
        return F.gen(static_cast<std::size_t>(j - 1));
    };
    std::vector<Polynomial> out;
    for (int m = 1; m <= 2 * g; ++m) {
        Polynomial r;
        for (int j = 0; j <= m; ++j) {
            const Polynomial t = F.mul(sigma(j), sigma(m - j));
            r = j % 2 == 0 ? F.add(r, t) : F.sub(r, t);
        }
        out.push_back(std::move(r));
    }
    return out;
}

AlgebraPtr lagrangian_ring(int g, const std::string& prefix, const BuildOptions& opts)
{
    if (g < 1)
        throw InvalidParameter("Lagrangian Grassmannian needs g >= 1");
    return polynomial_quotient_algebra(lagrangian_generators(g, prefix), lagrangian_relations(g), g * (g + 1),
                                       opts);
}

std::vector<Generator> grassmannian_generators(int p, int q, const std::string& sigma, const std::string& tau)
{
    std::vector<Generator> gens;
    for (int j = 1; j <= q; ++j)
        gens.push_back({tau + std::to_string(j), 2 * j});
    for (int i = 1; i <= p; ++i)
        gens.push_back({sigma + std::to_string(i), 2 * i});
    return gens;
}

std::vector<Polynomial> grassmannian_relations(int p, int q)
{
    const FreeAlgebra F(grassmannian_generators(p, q));
    auto tau = [&](int j) -> Polynomial {
        if (j == 0)
            return F.one();
        if (j > q)
            return {};
        return F.gen(static_cast<std::size_t>(j - 1));
    };
    auto sigma = [&](int i) -> Polynomial {
        if (i == 0)
            return F.one();
        if (i > p)
            return {};
        return F.gen(static_cast<std::size_t>(q + i - 1));
    };
    std::vector<Polynomial> out;
    for (int m = 1; m <= p + q; ++m) {
        Polynomial c;
        for (int i = 0; i <= m; ++i)
            c = F.add(c, F.mul(sigma(i), tau(m - i)));
        out.push_back(std::move(c));
    }
    return out;
}

AlgebraPtr grassmannian_ring(int p, int q, const std::string& sigma, const std::string& tau,
                             const BuildOptions& opts)
{
    if (p < 1 || q < 1)
        throw InvalidParameter("Grassmannian needs p, q >= 1");
    return polynomial_quotient_algebra(grassmannian_generators(p, q, sigma, tau), grassmannian_relations(p, q),
                                       2 * p * q, opts);
}

AlgebraPtr su_ring(int n, const BuildOptions& opts)
{
    if (n < 2)
        throw InvalidParameter("SU(n) needs n >= 2");
    std::vector<int> degrees;
    for (int i = 2; i <= n; ++i)
        degrees.push_back(2 * i - 1);
    return exterior_algebra(degrees, opts);
}

AlgebraPtr tensor_all(const std::vector<AlgebraPtr>& factors, const BuildOptions& opts)
{
    if (factors.empty())
        throw InvalidParameter("empty tensor product");
    AlgebraPtr out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        out = tensor_product(out, factors[i], opts);
    return out;
}

}  // namespace dualcoh::rings
