#include "dualcoh/morphism.hpp"

#include "dualcoh/errors.hpp"
#include "dualcoh/sampling.hpp"

namespace dualcoh {

namespace {

Element evaluate_monomial(const Exponents& m, const std::vector<Element>& images, const AlgebraPtr& target)
{
    Element out = unit(target);
    for (std::size_t g = 0; g < m.size(); ++g)
        for (int k = 0; k < m[g]; ++k) {
            out = multiply(out, images[g]);
            if (out.is_zero())
                return out;
        }
    return out;
}

}  // namespace

Morphism build_morphism(AlgebraPtr source, AlgebraPtr target, std::vector<Element> generator_images)
{
    const auto& gens = source->generators();
    if (generator_images.size() != gens.size())
        throw UsageMismatch("morphism needs one image per source generator");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const Element& img = generator_images[g];
        if (img.owner() != target)
            throw UsageMismatch("image of " + gens[g].name + " is not in the target algebra");
        if (!img.is_homogeneous() || (!img.is_zero() && *img.degree() != gens[g].degree))
            throw UsageMismatch("image of " + gens[g].name + " is not homogeneous of degree " +
                                std::to_string(gens[g].degree));
    }
    for (const auto& r : source->relations()) {
        Element img = zero(target);
        for (const auto& [m, c] : r.terms)
            img += c * evaluate_monomial(m, generator_images, target);
        if (!img.is_zero())
            throw RelationViolation("relation " + source->free().to_string(r) + " maps to " + img.to_string());
    }
    Morphism out;
    out.source_ = source;
    out.target_ = target;
    out.gen_images_ = std::move(generator_images);
    out.basis_images_.reserve(source->total_dimension());
    for (int i = 0; i < static_cast<int>(source->total_dimension()); ++i)
        out.basis_images_.push_back(evaluate_monomial(source->monomial(i), out.gen_images_, target));
    return out;
}

Morphism build_morphism_by_name(AlgebraPtr source, AlgebraPtr target, const std::map<std::string, Element>& images)
{
    std::vector<Element> v;
    for (const auto& g : source->generators()) {
        auto it = images.find(g.name);
        if (it == images.end())
            throw UsageMismatch("no image given for generator " + g.name);
        v.push_back(it->second);
    }
    if (images.size() != v.size())
        throw UsageMismatch("image table names a generator the source does not have");
    return build_morphism(std::move(source), std::move(target), std::move(v));
}

Morphism Morphism::from_basis_images(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images)
{
    if (images.size() != source->total_dimension())
        throw UsageMismatch("basis image table has the wrong size");
    Morphism out;
    out.source_ = std::move(source);
    out.target_ = std::move(target);
    for (std::size_t g = 0; g < out.source_->generators().size(); ++g)
        out.gen_images_.push_back(Element(out.target_));
    out.basis_images_ = std::move(images);
    return out;
}

Element Morphism::apply(const Element& v) const
{
    if (v.owner() != source_)
        throw UsageMismatch("apply: element is not in the morphism's source");
    Element out = zero(target_);
    for (const auto& [i, c] : v.terms())
        out += c * basis_images_[static_cast<std::size_t>(i)];
    return out;
}

Morphism identity_morphism(const AlgebraPtr& a)
{
    std::vector<Element> images;
    for (std::size_t g = 0; g < a->generators().size(); ++g)
        images.push_back(generator_element(a, g));
    return build_morphism(a, a, std::move(images));
}

Morphism compose(const Morphism& first, const Morphism& second)
{
    if (first.target() != second.source())
        throw UsageMismatch("compose: morphisms are not composable");
    std::vector<Element> images;
    for (const auto& img : first.generator_images())
        images.push_back(second.apply(img));
    return build_morphism(first.source(), second.target(), std::move(images));
}

FundamentalClass gysin_fundamental_class(const Morphism& m, const Rational& orientation)
{
    const AlgebraPtr& S = m.source();
    const AlgebraPtr& T = m.target();
    const int c = S->top_degree() - T->top_degree();
    if (c < 0)
        throw UsageMismatch("gysin: target has larger top degree than source");
    const int dt = T->top_degree();
    const std::size_t n = S->dim(c);
    const std::size_t k = S->dim(dt);
    std::vector<linalg::SparseVec> eqs(k);
    std::vector<Rational> rhs(k, Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
        const Element w = basis_element(S, S->offset(dt) + static_cast<int>(j));
        for (std::size_t i = 0; i < n; ++i) {
            const Element b = basis_element(S, S->offset(c) + static_cast<int>(i));
            const Rational p = pairing(b, w);
            if (p != 0)
                eqs[j].push_back({static_cast<int>(i), p});
        }
        rhs[j] = orientation * m.apply(w).coefficient(T->top_index());
    }
    if (linalg::rref(eqs, static_cast<int>(n), linalg::Kernel::serial).rank() != n)
        throw InconsistencyError("gysin: pairing between degrees " + std::to_string(c) + " and " +
                                 std::to_string(dt) + " is degenerate");
    auto sol = linalg::solve(eqs, rhs, static_cast<int>(n));
    if (!sol)
        throw InconsistencyError("gysin: defining system is infeasible");
    return {from_local(S, c, *sol), orientation};
}

std::optional<std::pair<Element, Element>> multiplicativity_counterexample(const Morphism& m, int sample_count,
                                                                          std::uint64_t seed)
{
    Sampler rng(seed);
    for (int i = 0; i < sample_count; ++i) {
        const Element a = rng.homogeneous(m.source());
        const Element b = rng.homogeneous(m.source());
        if (m.apply(multiply(a, b)) != multiply(m.apply(a), m.apply(b)))
            return std::make_pair(a, b);
    }
    return std::nullopt;
}

bool verify_multiplicativity(const Morphism& m, int sample_count, std::uint64_t seed)
{
    return !multiplicativity_counterexample(m, sample_count, seed).has_value();
}

}  // namespace dualcoh
