#pragma once

#include "dualcoh/catalog.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

// Oracle, property and identity suites over the ring engine and the catalog.
namespace dualcoh::checks {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = true;
    // Number of individual assertions evaluated.
    std::size_t cases = 0;
    // First failure, or a short summary of reported scalars.
    std::string detail;
};

struct CheckConfig {
    std::set<std::string> suites{"oracle", "properties", "identities", "catalog"};
    std::uint64_t seed = 42;
    int samples = 100;
    BuildOptions build;
};

std::vector<std::string> suite_names();

// Every instance the property suite runs over: SL families with
// n <= 5 (odd-real n <= 4), Siegel g <= 5 with any number of parts, unitary
// p <= q <= 4 with sum q_i <= q, sp-in-ugg g <= 4.
std::vector<catalog::FamilyParams> catalog_sweep();

std::vector<CheckResult> run_checks(const CheckConfig& config);

// Individual checks, also used by the acceptance binary.
CheckResult check_lagrangian_poincare(int max_g, const BuildOptions& opts = {});
CheckResult check_grassmannian_poincare(int max_q, const BuildOptions& opts = {});
CheckResult check_exterior_poincare(int max_n, const BuildOptions& opts = {});
CheckResult check_lagrangian_relations_roots(int max_g);
CheckResult check_grassmannian_relations_roots(int max_sum);

CheckResult check_lagrangian_vanishing(int max_g, const BuildOptions& opts = {});
CheckResult check_lagrangian_top(int max_g, const BuildOptions& opts = {});
CheckResult check_grassmannian_top_power(int max_q, const BuildOptions& opts = {});
CheckResult check_grassmannian_top_ratio(int max_q, const BuildOptions& opts = {});
CheckResult check_structural_relations(int max_g, int max_q, const BuildOptions& opts = {});
CheckResult check_kernel_crosscheck(int max_g, const BuildOptions& opts = {});

CheckResult check_closed_forms(int max_imag, int max_odd, const BuildOptions& opts = {});
CheckResult check_nonvanishing_certified(const BuildOptions& opts = {});
CheckResult check_theta_identity(int max_g, const BuildOptions& opts = {});
CheckResult check_ghosts(int max_imag, int max_odd, const BuildOptions& opts = {});

// Property checks over a list of instances.
std::vector<CheckResult> property_checks(const std::vector<catalog::FamilyParams>& instances,
                                         std::uint64_t seed, int samples, const BuildOptions& opts = {});

}  // namespace dualcoh::checks
