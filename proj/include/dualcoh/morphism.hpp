#pragma once

#include "dualcoh/algebra.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dualcoh {

// Degree-preserving ring homomorphism between graded algebras, given on
// generators and extended multiplicatively. Images of all source basis
// monomials are tabulated at construction.
class Morphism {
public:
    Morphism() = default;

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const std::vector<Element>& generator_images() const { return gen_images_; }
    const Element& basis_image(int index) const { return basis_images_.at(static_cast<std::size_t>(index)); }

    Element apply(const Element& v) const;

    // Linear map given directly on the source basis. No homomorphism check is
    // made; verify_multiplicativity is the way to test such a table.
    static Morphism from_basis_images(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images);

    friend Morphism build_morphism(AlgebraPtr, AlgebraPtr, std::vector<Element>);

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<Element> gen_images_;
    std::vector<Element> basis_images_;
};

// Checks that every image is zero or homogeneous of the generator's degree and
// that every source relation maps to zero; throws UsageMismatch or
// RelationViolation otherwise.
Morphism build_morphism(AlgebraPtr source, AlgebraPtr target, std::vector<Element> generator_images);
Morphism build_morphism_by_name(AlgebraPtr source, AlgebraPtr target, const std::map<std::string, Element>& images);

Morphism identity_morphism(const AlgebraPtr& a);
// second ∘ first
Morphism compose(const Morphism& first, const Morphism& second);

inline Element apply(const Morphism& m, const Element& v) { return m.apply(v); }

struct FundamentalClass {
    Element element;
    // Scalar applied to the target's canonical top monomial when integrating
    // over the target; 1 is the canonical-top convention.
    Rational orientation{1};
};

/*
 * The class xi of degree top(source) - top(target) with
 *
 *     pairing(xi, w) = orientation * topcoef_target(m(w))
 *
 * for every w of degree top(target). Solved exactly on the source basis;
 * throws InconsistencyError if the system is infeasible or the pairing is
 * degenerate.
 */
FundamentalClass gysin_fundamental_class(const Morphism& m, const Rational& orientation = 1);

// Checks m(a*b) = m(a)*m(b) on seeded random homogeneous pairs.
bool verify_multiplicativity(const Morphism& m, int sample_count, std::uint64_t seed);
std::optional<std::pair<Element, Element>> multiplicativity_counterexample(const Morphism& m, int sample_count,
                                                                          std::uint64_t seed);

}  // namespace dualcoh
