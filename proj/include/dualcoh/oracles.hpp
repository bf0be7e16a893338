#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

// Reference computations that share no code with the algebra engine. Tests
// compare engine output against these.
namespace dualcoh::oracles {

// Betti numbers indexed by cohomological degree.
using Betti = std::vector<std::uint64_t>;

// Strict partitions with parts in {1..g}: t^{2|lambda|}. Length g(g+1)+1.
Betti strict_partition_betti(int g);

// Partitions inside a p x q box: t^{2|lambda|}. Length 2pq+1.
Betti box_partition_betti(int p, int q);

// Gaussian binomial [n choose k] in t^2 via the q-Pascal rule.
Betti gaussian_binomial_betti(int n, int k);

// Coefficients of prod_i (1 + t^{d_i}).
Betti product_of_binomials(const std::vector<int>& degrees);

std::uint64_t binomial(int n, int k);

// Standard Young tableaux of a partition shape (hook length formula).
mpz_class standard_young_tableaux(const std::vector<int>& shape);

// Commutative polynomials over Q in named-by-position variables.
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, mpq_class>;

Poly poly_constant(int nvars, const mpq_class& c);
Poly poly_variable(int nvars, int i);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const mpq_class& c);
Poly poly_mul(const Poly& a, const Poly& b);
// Part of total (unweighted) degree d.
Poly poly_component(const Poly& a, int d);

// e_k(x_{first}, ..., x_{first+count-1}) in a ring with nvars variables.
Poly elementary_symmetric(int nvars, int first, int count, int k);

// Root-variable expansions: component m of prod_i (1 - x_i^2) over g roots,
// and of prod_i (1 + x_i) prod_j (1 + y_j) over p + q roots.
Poly lagrangian_root_component(int g, int m);
Poly grassmannian_root_component(int p, int q, int m);

// Sign of the permutation sorting a list of distinct integers.
int sort_sign(std::vector<int> v);

}  // namespace dualcoh::oracles
