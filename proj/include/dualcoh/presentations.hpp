#pragma once

#include "dualcoh/algebra.hpp"

#include <string>
#include <vector>

// Cohomology rings of the compact duals that occur in the catalog.
namespace dualcoh::rings {

// sigma_1..sigma_g, sigma_i in degree 2i.
std::vector<Generator> lagrangian_generators(int g, const std::string& prefix = "sigma");

// Graded pieces r_m = sum_{j+k=m} (-1)^j sigma_j sigma_k (sigma_0 = 1) of
// prod (1 + x_i)(1 - x_i) = 1, m = 1..2g. Odd m give the zero polynomial.
std::vector<Polynomial> lagrangian_relations(int g);

// Cohomology of the Lagrangian Grassmannian Sp(g)/U(g): top degree g(g+1).
AlgebraPtr lagrangian_ring(int g, const std::string& prefix = "sigma", const BuildOptions& opts = {});

// tau_1..tau_q then sigma_1..sigma_p. The tau block is declared first so that
// the standard monomials come out as sigma-monomials.
std::vector<Generator> grassmannian_generators(int p, int q, const std::string& sigma = "sigma",
                                               const std::string& tau = "tau");

// c_m = sum_{i+j=m} sigma_i tau_j, m = 1..p+q, graded pieces of
// (1 + sigma_1 + ... + sigma_p)(1 + tau_1 + ... + tau_q) = 1.
std::vector<Polynomial> grassmannian_relations(int p, int q);

// Cohomology of Gr(p, p+q): top degree 2pq.
AlgebraPtr grassmannian_ring(int p, int q, const std::string& sigma = "sigma", const std::string& tau = "tau",
                             const BuildOptions& opts = {});

// H*(SU(n)) = Λ(e3, e5, ..., e_{2n-1}), n >= 2.
AlgebraPtr su_ring(int n, const BuildOptions& opts = {});

AlgebraPtr tensor_all(const std::vector<AlgebraPtr>& factors, const BuildOptions& opts = {});

}  // namespace dualcoh::rings
