#pragma once

#include "dualcoh/algebra.hpp"

#include <cstdint>
#include <random>

namespace dualcoh {

// Seeded sampling for property checks. Only the raw engine output is used
// (no std distributions), so samples are identical across standard libraries.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }
    int uniform(int lo, int hi);  // inclusive
    // A degree with dim > 0.
    int degree(const GradedAlgebra& a);
    // Random homogeneous element with small integer coefficients; may be
    // zero only if every draw is zero.
    Element homogeneous(const AlgebraPtr& a, int degree);
    Element homogeneous(const AlgebraPtr& a) { return homogeneous(a, degree(*a)); }
    Rational nonzero_rational();

private:
    std::mt19937_64 rng_;
};

}  // namespace dualcoh
