#include "dualcoh/sampling.hpp"

namespace dualcoh {

int Sampler::uniform(int lo, int hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng_() % span);
}

int Sampler::degree(const GradedAlgebra& a)
{
    std::vector<int> degrees;
    for (int d = 0; d <= a.top_degree(); ++d)
        if (a.dim(d) > 0)
            degrees.push_back(d);
    return degrees[static_cast<std::size_t>(uniform(0, static_cast<int>(degrees.size()) - 1))];
}

Element Sampler::homogeneous(const AlgebraPtr& a, int degree)
{
    std::map<int, Rational> t;
    for (int i = a->offset(degree); i < a->offset(degree + 1); ++i) {
        const int c = uniform(-3, 3);
        if (c != 0)
            t.emplace(i, Rational(c));
    }
    return Element(a, std::move(t));
}

Rational Sampler::nonzero_rational()
{
    int num = uniform(1, 9);
    if (uniform(0, 1) == 1)
        num = -num;
    Rational r(num, uniform(1, 7));
    r.canonicalize();
    return r;
}

}  // namespace dualcoh
