#pragma once

#include "dualcoh/catalog.hpp"
#include "dualcoh/checks.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

// Machine-readable certificates and the batch runners behind the CLI.
namespace dualcoh::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.3.0";

// Exit codes of the command-line tool.
enum ExitCode : int { ok = 0, usage = 2, resource = 3, inconsistency = 4 };
int exit_code_for(const std::exception& e);

struct RunConfig {
    catalog::FamilyParams params;
    BuildOptions build;
    bool timing = false;
};

// [[monomial, "a/b"], ...] in basis order.
Json element_to_json(const Element& v);
// Inverse of element_to_json. Throws std::invalid_argument on unknown
// monomials or malformed rationals.
Element element_from_json(const AlgebraPtr& a, const Json& j);

Json parameters_to_json(const catalog::FamilyParams& params);
Json verdict_to_json(const catalog::FamilyInstance& inst, const catalog::Verdict& verdict);

// Builds and decides one instance. Construction errors propagate.
Json run_family(const RunConfig& config);

struct SweepSpec {
    catalog::FamilyId id = catalog::FamilyId::sl_imag_sp;
    int lo = 0, hi = -1;      // n or g (or p for unitary)
    int q_lo = 0, q_hi = -1;  // unitary only
    // siegel: "two" (all 2-part partitions) or "all"; unitary: "exact"
    // (sum q_i = q), "all" (sum q_i <= q) or "single" (one part (p, q - deficit)).
    std::string parts_mode;
    int q_deficit = 0;
};

std::vector<catalog::FamilyParams> enumerate_sweep(const SweepSpec& spec);

struct SweepResult {
    Json document;  // schema header, instances in parameter order, summary
    std::size_t total = 0, nonvanishing = 0, vanishing = 0, errors = 0, ghosts = 0;
};

// Instances are evaluated concurrently; per-instance failures are recorded
// in the instance entry and the sweep continues.
SweepResult run_sweep(const SweepSpec& spec, const BuildOptions& build, bool timing = false);

Json checks_to_json(const std::vector<checks::CheckResult>& results, const checks::CheckConfig& config);

std::string family_text(const Json& report);
std::string sweep_text(const SweepResult& sweep);
std::string checks_text(const std::vector<checks::CheckResult>& results);
std::string ring_text(const Json& ring);

// Betti data of the rings of one instance.
Json ring_report(const catalog::FamilyParams& params, const BuildOptions& build);

}  // namespace dualcoh::report
