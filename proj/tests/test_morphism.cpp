#include "dualcoh/errors.hpp"
#include "dualcoh/morphism.hpp"
#include "dualcoh/presentations.hpp"
#include "dualcoh/sampling.hpp"

#include <doctest.h>

using namespace dualcoh;

namespace {

Element E(const AlgebraPtr& a, const std::string& name) { return generator_element(a, name); }

bool plus_or_minus(const Element& x, const Element& y) { return x == y || x == -y; }

}  // namespace

TEST_CASE("restriction between exterior algebras")
{
    const auto G = exterior_algebra({3, 5, 7});
    const auto k = exterior_algebra({3});
    const Morphism m = build_morphism(G, k, {E(k, "e3"), zero(k), zero(k)});
    CHECK(m.apply(E(G, "e3") * E(G, "e5")).is_zero());
    CHECK(m.apply(E(G, "e3")) == E(k, "e3"));

    const auto H = exterior_algebra({3, 7});
    const Morphism r = build_morphism_by_name(G, H, {{"e3", E(H, "e3")}, {"e5", zero(H)}, {"e7", E(H, "e7")}});
    CHECK(r.apply(E(G, "e5")).is_zero());
    CHECK(r.apply(E(G, "e3") * E(G, "e7")) == E(H, "e3") * E(H, "e7"));
    CHECK(verify_multiplicativity(r, 100, 1));

    CHECK_THROWS_AS(build_morphism(G, H, std::vector<Element>{E(H, "e7"), zero(H), zero(H)}), UsageMismatch);
    CHECK_THROWS_AS(build_morphism(G, H, std::vector<Element>{E(H, "e3"), zero(H)}), UsageMismatch);
}

TEST_CASE("relation violations are rejected")
{
    // sigma1 -> sigma1, sigma2 -> 0 breaks sigma1^2 = 2 sigma2.
    const auto L = rings::lagrangian_ring(2);
    const auto L2 = rings::lagrangian_ring(2);
    CHECK_THROWS_AS(build_morphism(L, L2, std::vector<Element>{E(L2, "sigma1"), zero(L2)}), RelationViolation);
    CHECK_NOTHROW(build_morphism(L, L2, std::vector<Element>{E(L2, "sigma1"), E(L2, "sigma2")}));
    // Into Lagrangian(1) the same assignment is fine: sigma1^2 = 0 there.
    const auto L1 = rings::lagrangian_ring(1);
    CHECK_NOTHROW(build_morphism(L, L1, std::vector<Element>{E(L1, "sigma1"), zero(L1)}));
}

TEST_CASE("Grassmannian to Lagrangian")
{
    for (int g = 1; g <= 3; ++g) {
        const auto G = rings::grassmannian_ring(g, g);
        const auto L = rings::lagrangian_ring(g);
        std::vector<Element> images;
        for (int k = 1; k <= g; ++k)
            images.push_back(k % 2 ? -E(L, "sigma" + std::to_string(k)) : E(L, "sigma" + std::to_string(k)));
        for (int k = 1; k <= g; ++k)
            images.push_back(E(L, "sigma" + std::to_string(k)));
        const Morphism m = build_morphism(G, L, images);
        CHECK(verify_multiplicativity(m, 100, 7));
    }
}

TEST_CASE("Siegel restriction formula")
{
    const auto L = rings::lagrangian_ring(2);
    const auto T = tensor_product(rings::lagrangian_ring(1, "alpha"), rings::lagrangian_ring(1, "beta"));
    const Element a = E(T, "alpha1"), b = E(T, "beta1");
    const Morphism m = build_morphism(L, T, {a + b, a * b});
    CHECK(m.apply(E(L, "sigma1")) == a + b);
    CHECK(m.apply(E(L, "sigma2")) == a * b);
    const auto xi = gysin_fundamental_class(m);
    CHECK(xi.element == E(L, "sigma1"));
    CHECK(xi.element * E(L, "sigma2") == top_class(L));
}

TEST_CASE("identity and composition")
{
    const auto G = rings::grassmannian_ring(2, 3);
    const Morphism id = identity_morphism(G);
    Sampler rng(5);
    for (int s = 0; s < 40; ++s) {
        const Element x = rng.homogeneous(G);
        CHECK(id.apply(x) == x);
    }
    const auto a = exterior_algebra({3, 5, 7});
    const auto b = exterior_algebra({3, 5});
    const auto c = exterior_algebra({3});
    const Morphism f = build_morphism(a, b, {E(b, "e3"), E(b, "e5"), zero(b)});
    const Morphism g = build_morphism(b, c, {E(c, "e3"), zero(c)});
    const Morphism gf = compose(f, g);
    for (int s = 0; s < 40; ++s) {
        const Element x = rng.homogeneous(a);
        CHECK(gf.apply(x) == g.apply(f.apply(x)));
    }
}

TEST_CASE("Gysin classes of the SL examples")
{
    const auto G = exterior_algebra({3, 5, 7});
    const auto H = exterior_algebra({3, 7});
    const Morphism r = build_morphism(G, H, {E(H, "e3"), zero(H), E(H, "e7")});
    const auto xi = gysin_fundamental_class(r);
    CHECK(plus_or_minus(xi.element, E(G, "e5")));

    const auto G2 = exterior_algebra({3, 5, 7, 9});
    const auto H2 = exterior_algebra({5, 9});
    const Morphism r2 = build_morphism(G2, H2, {zero(H2), E(H2, "e5"), zero(H2), E(H2, "e9")});
    const auto xi2 = gysin_fundamental_class(r2);
    CHECK(plus_or_minus(xi2.element, E(G2, "e3") * E(G2, "e7")));

    // Defining identity on the full basis of degree top(H).
    for (int i = G->offset(H->top_degree()); i < G->offset(H->top_degree() + 1); ++i) {
        const Element w = basis_element(G, i);
        CHECK(pairing(xi.element, w) == r.apply(w).coefficient(H->top_index()));
    }

    // Orientation scales the class.
    const auto scaled = gysin_fundamental_class(r, Rational(-3, 7));
    CHECK(scaled.element == Rational(-3, 7) * xi.element);
}

TEST_CASE("zero restriction has zero fundamental class")
{
    const auto G = exterior_algebra({3, 5});
    const auto H = exterior_algebra({3});
    const Morphism z = build_morphism(G, H, {zero(H), zero(H)});
    const auto xi = gysin_fundamental_class(z);
    CHECK(xi.element.is_zero());
}

TEST_CASE("multiplicativity detects a corrupted table")
{
    const auto G = exterior_algebra({3, 5, 7});
    const auto H = exterior_algebra({3, 7});
    const Morphism r = build_morphism(G, H, {E(H, "e3"), zero(H), E(H, "e7")});
    std::vector<Element> table;
    for (int i = 0; i <= G->top_index(); ++i)
        table.push_back(r.basis_image(i));
    CHECK(verify_multiplicativity(Morphism::from_basis_images(G, H, table), 100, 3));
    // e3 e7 sent to zero while e3 and e7 survive.
    table[static_cast<std::size_t>(*G->index_of({1, 0, 1}))] = zero(H);
    CHECK_FALSE(verify_multiplicativity(Morphism::from_basis_images(G, H, table), 100, 3));

    // The augmentation is a ring map.
    const Morphism zero_map = build_morphism(G, H, {zero(H), zero(H), zero(H)});
    CHECK(verify_multiplicativity(zero_map, 100, 3));
}
