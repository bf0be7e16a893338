#include "dualcoh/algebra.hpp"
#include "dualcoh/errors.hpp"
#include "dualcoh/oracles.hpp"
#include "dualcoh/presentations.hpp"
#include "dualcoh/sampling.hpp"

#include <doctest.h>

using namespace dualcoh;

namespace {

Element E(const AlgebraPtr& a, const std::string& name) { return generator_element(a, name); }

std::vector<std::size_t> as_sizes(const oracles::Betti& b) { return {b.begin(), b.end()}; }

AlgebraPtr p1_generic()
{
    const std::vector<Generator> gens{{"sigma1", 2}, {"tau1", 2}};
    const FreeAlgebra F(gens);
    return polynomial_quotient_algebra(gens, {F.add(F.gen(0), F.gen(1)), F.mul(F.gen(0), F.gen(1))}, 2);
}

}  // namespace

TEST_CASE("exterior algebra construction")
{
    const auto a3 = exterior_algebra({3});
    CHECK(a3->poincare_polynomial() == std::vector<std::size_t>{1, 0, 0, 1});
    CHECK(a3->total_dimension() == 2);

    const auto a = exterior_algebra({3, 5, 7});
    CHECK(a->total_dimension() == 8);
    CHECK(a->top_degree() == 15);
    CHECK(a->poincare_polynomial() == as_sizes(oracles::product_of_binomials({3, 5, 7})));

    const auto b = exterior_algebra({5, 9});
    CHECK(b->top_degree() == 14);
    CHECK(top_class(b) == E(b, "e5") * E(b, "e9"));
    CHECK(b->poincare_polynomial() == as_sizes(oracles::product_of_binomials({5, 9})));

    CHECK_THROWS_AS(exterior_algebra({}), InvalidPresentation);
    CHECK_THROWS_AS(exterior_algebra({3, 4}), InvalidPresentation);
    CHECK_THROWS_AS(exterior_algebra({3, 3}), InvalidPresentation);
    CHECK_THROWS_AS(exterior_algebra({5, 3}), InvalidPresentation);
}

TEST_CASE("polynomial quotient construction")
{
    const auto L = rings::lagrangian_ring(2);
    REQUIRE(L->top_degree() == 6);
    CHECK(L->total_dimension() == 4);
    CHECK(L->basis(2) == std::vector<Exponents>{{1, 0}});
    CHECK(L->basis(4) == std::vector<Exponents>{{0, 1}});
    CHECK(L->basis(6) == std::vector<Exponents>{{1, 1}});
    CHECK(E(L, "sigma1") * E(L, "sigma1") == Rational(2) * E(L, "sigma2"));
    CHECK((E(L, "sigma2") * E(L, "sigma2")).is_zero());

    // Generic generator order: sigma1 leads, so tau1 is the standard monomial.
    const auto P = p1_generic();
    CHECK(P->total_dimension() == 2);
    CHECK(P->top_degree() == 2);
    CHECK(E(P, "tau1") == -E(P, "sigma1"));
    CHECK((E(P, "sigma1") * E(P, "sigma1")).is_zero());

    const std::vector<Generator> gens{{"x", 2}};
    const FreeAlgebra F(gens);
    CHECK_THROWS_AS(polynomial_quotient_algebra(gens, {F.one()}, 0), InvalidPresentation);
    CHECK_THROWS_AS(polynomial_quotient_algebra({{"x", 3}}, {}, 3), InvalidPresentation);
    // x^2 = 0 has top degree 2, not 4 or 6
    CHECK_THROWS_AS(polynomial_quotient_algebra(gens, {F.pow(F.gen(0), 2)}, 4), InconsistentPresentation);
    CHECK_THROWS_AS(polynomial_quotient_algebra(gens, {F.pow(F.gen(0), 3)}, 2), InconsistentPresentation);
    CHECK_THROWS_AS(rings::lagrangian_ring(4, "sigma", BuildOptions{.monomial_cap = 2}), ResourceError);
    CHECK_THROWS_AS(rings::lagrangian_ring(0), InvalidParameter);
    CHECK_THROWS_AS(rings::su_ring(1), InvalidParameter);
}

TEST_CASE("catalog Grassmannian rings")
{
    const auto G = rings::grassmannian_ring(1, 1);
    CHECK(G->total_dimension() == 2);
    CHECK(E(G, "tau1") == -E(G, "sigma1"));
    CHECK((E(G, "sigma1") * E(G, "sigma1")).is_zero());

    const auto P2 = rings::grassmannian_ring(1, 2);
    CHECK(E(P2, "tau2") == E(P2, "sigma1") * E(P2, "sigma1"));
    CHECK(top_class(P2) == E(P2, "sigma1") * E(P2, "sigma1"));

    const auto G25 = rings::grassmannian_ring(2, 3);
    CHECK(G25->poincare_polynomial() == std::vector<std::size_t>{1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 1, 0, 1});
    // Standard monomials are sigma-monomials.
    for (int i = 0; i <= G25->top_index(); ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(G25->monomial(i)[static_cast<std::size_t>(j)] == 0);
}

TEST_CASE("tensor products")
{
    const auto a = exterior_algebra({3});
    const auto t = tensor_product(a, a);
    CHECK(t->total_dimension() == 4);
    CHECK(t->top_degree() == 6);
    const Element x = E(t, "e3"), y = E(t, "e3'");
    CHECK(x * y == -(y * x));
    CHECK(!(x * y).is_zero());

    const auto l = rings::lagrangian_ring(1, "alpha");
    const auto ll = tensor_product(l, rings::lagrangian_ring(1, "beta"));
    CHECK(ll->poincare_polynomial() == std::vector<std::size_t>{1, 0, 2, 0, 1});
    CHECK(ll->generators()[1].name == "beta1");
}

TEST_CASE("multiplication")
{
    const auto a = exterior_algebra({3, 5, 7});
    const Element e35 = E(a, "e3") * E(a, "e5");
    CHECK(E(a, "e5") * E(a, "e3") == -e35);
    CHECK(e35.terms().size() == 1);
    CHECK(e35.coefficient(*a->index_of({1, 1, 0})) == 1);
    CHECK_THROWS_AS(multiply(E(a, "e3"), E(exterior_algebra({3}), "e3")), UsageMismatch);
}

TEST_CASE("pairing")
{
    const auto a = exterior_algebra({3, 5, 7});
    CHECK(pairing(E(a, "e3") * E(a, "e5"), E(a, "e7")) == 1);
    CHECK(pairing(E(a, "e7"), E(a, "e3") * E(a, "e5")) == 1);
    CHECK(pairing(E(a, "e5"), E(a, "e3") * E(a, "e7")) == -1);
    CHECK_THROWS_AS(pairing(E(a, "e3"), E(a, "e5")), UsageMismatch);

    const auto L = rings::lagrangian_ring(2);
    CHECK(pairing(E(L, "sigma1"), E(L, "sigma2")) == 1);
    CHECK(pairing(E(L, "sigma1") * E(L, "sigma2"), unit(L)) == 1);
    CHECK_THROWS_AS(pairing(E(L, "sigma1"), E(L, "sigma1") * E(L, "sigma2")), UsageMismatch);
    CHECK_THROWS_AS(pairing(E(L, "sigma2"), E(L, "sigma2")), UsageMismatch);
}

TEST_CASE("divisibility")
{
    const auto a = exterior_algebra({3, 5, 7});
    CHECK_FALSE(is_divisible(E(a, "e5"), E(a, "e7")).has_value());

    const auto b = exterior_algebra({3, 5});
    const auto w = is_divisible(E(b, "e5"), E(b, "e5"));
    REQUIRE(w);
    CHECK(*w == unit(b));

    const auto L = rings::lagrangian_ring(2);
    const Element v = E(L, "sigma1") * E(L, "sigma2");
    const auto w2 = is_divisible(v, E(L, "sigma2"));
    REQUIRE(w2);
    CHECK(E(L, "sigma2") * *w2 == v);
    CHECK(*w2 == E(L, "sigma1"));
    // By generator index.
    CHECK(is_divisible(v, std::size_t{1}).has_value());
}

TEST_CASE("ideal pieces")
{
    const auto a = exterior_algebra({3, 5, 7});
    const auto b10 = ideal_basis_in_degree({E(a, "e7")}, 10);
    REQUIRE(b10.size() == 1);
    CHECK(b10[0] == E(a, "e3") * E(a, "e7"));

    const auto L = rings::lagrangian_ring(2);
    const auto b4 = ideal_basis_in_degree({E(L, "sigma2")}, 4);
    REQUIRE(b4.size() == 1);
    CHECK(b4[0] == E(L, "sigma2"));
    CHECK(ideal_basis_in_degree({E(L, "sigma2")}, 2).empty());

    const auto P = p1_generic();
    CHECK(ideal_basis_in_degree({E(P, "sigma1"), E(P, "tau1")}, 2).size() == 1);
}

TEST_CASE("pairing against an ideal")
{
    const auto a = exterior_algebra({3, 5, 7});
    const auto u = pairs_nontrivially_with_ideal(E(a, "e5"), {E(a, "e7")});
    REQUIRE(u);
    CHECK((*u == E(a, "e3") * E(a, "e7") || *u == -(E(a, "e3") * E(a, "e7"))));
    CHECK(abs(pairing(E(a, "e5"), *u)) == 1);
    CHECK_FALSE(pairs_nontrivially_with_ideal(E(a, "e7"), {E(a, "e7")}).has_value());

    const auto P2 = rings::grassmannian_ring(1, 2);
    const Element s1 = E(P2, "sigma1");
    const auto w = pairs_nontrivially_with_ideal(s1, {s1, E(P2, "tau2")});
    REQUIRE(w);
    CHECK(pairing(s1, *w) != 0);
    CHECK(ideal_contains({s1, E(P2, "tau2")}, *w));
}

TEST_CASE("ring axioms on random samples")
{
    const auto R = tensor_product(rings::grassmannian_ring(2, 2), exterior_algebra({3, 5}));
    Sampler rng(2024);
    for (int s = 0; s < 60; ++s) {
        const Element x = rng.homogeneous(R), y = rng.homogeneous(R), z = rng.homogeneous(R);
        if (!x.is_zero() && !y.is_zero()) {
            const int sign = (*x.degree() * *y.degree()) % 2 ? -1 : 1;
            CHECK(x * y == Rational(sign) * (y * x));
        }
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
    const auto betti = R->poincare_polynomial();
    for (std::size_t d = 0; d < betti.size(); ++d)
        CHECK(betti[d] == betti[betti.size() - 1 - d]);
}

TEST_CASE("serial and parallel construction agree")
{
    const auto s = rings::grassmannian_ring(3, 3, "sigma", "tau", BuildOptions{.kernel = linalg::Kernel::serial});
    const auto p = rings::grassmannian_ring(3, 3, "sigma", "tau", BuildOptions{.kernel = linalg::Kernel::parallel});
    REQUIRE(s->total_dimension() == p->total_dimension());
    for (int i = 0; i <= s->top_index(); ++i)
        CHECK(s->monomial(i) == p->monomial(i));
    for (std::size_t g = 0; g < s->generators().size(); ++g)
        for (int i = 0; i <= s->top_index(); ++i) {
            const auto& a = s->left_multiplication(g, i);
            const auto& b = p->left_multiplication(g, i);
            REQUIRE(a.size() == b.size());
            for (std::size_t k = 0; k < a.size(); ++k)
                CHECK((a[k].col == b[k].col && a[k].value == b[k].value));
        }
}
