#pragma once

#include "dualcoh/algebra.hpp"
#include "dualcoh/morphism.hpp"

#include <optional>
#include <string>
#include <vector>

// The (G, H) families: compact-dual rings, restriction maps, the ideals whose
// orthogonal complements are the Borel-map kernels, and the decision
// procedures built on them.
namespace dualcoh::catalog {

enum class FamilyId { sl_imag_sp, sl_odd_real, siegel, unitary, sp_in_ugg };

std::string to_string(FamilyId id);
// Accepts the canonical ids and the aliases "siegel-product", "unitary-product".
std::optional<FamilyId> parse_family_id(const std::string& text);

struct UnitaryPart {
    int p = 0;
    int q = 0;
    friend bool operator==(const UnitaryPart&, const UnitaryPart&) = default;
};

struct FamilyParams {
    FamilyId id = FamilyId::sl_imag_sp;
    int n = 0;                       // sl-imag-sp, sl-odd-real
    int g = 0;                       // siegel, sp-in-ugg
    int p = 0;                       // unitary
    int q = 0;                       // unitary
    std::vector<int> parts;          // siegel: g_1 >= g_2 >= ...
    std::vector<UnitaryPart> uparts; // unitary: (p_i, q_i)

    std::string describe() const;
};

// Throws InvalidParameter on out-of-range parameters.
void validate(const FamilyParams& params);

struct LeviData {
    std::string description;      // e.g. "SU(3)"
    Morphism restriction;         // dual_G -> dual of the Levi
    std::vector<Element> franke_ideal;
    std::size_t top_generator = 0; // index in the Levi ring
};

struct FamilyInstance {
    FamilyParams params;
    AlgebraPtr dual_G;
    AlgebraPtr dual_H;
    Morphism restriction;
    std::vector<Element> franke_ideal;
    std::optional<std::vector<Element>> compact_support_ideal;
    std::optional<LeviData> levi;

    // Known closed form of the fundamental class, up to a scalar (SL families).
    std::optional<Element> closed_form;
    // Two-part Siegel: theta and sigma_1...sigma_g.
    std::optional<Element> theta;
    std::optional<Element> top_product;
    // Unitary: tensor product of the factors' top tau classes.
    std::optional<Element> shortcut_tau_image;

    // Decided computationally without a published argument.
    bool exploratory = false;
    std::string discrepancy_note;
};

FamilyInstance family_sl_imag_sp(int n, const BuildOptions& opts = {});
FamilyInstance family_sl_odd_real(int n, const BuildOptions& opts = {});
FamilyInstance family_siegel(int g, const std::vector<int>& parts, const BuildOptions& opts = {});
FamilyInstance family_unitary(int p, int q, const std::vector<UnitaryPart>& parts, const BuildOptions& opts = {});
FamilyInstance family_sp_in_ugg(int g, const BuildOptions& opts = {});
FamilyInstance make_family(const FamilyParams& params, const BuildOptions& opts = {});

// Partitions of g into at least min_parts parts, non-increasing, in
// lexicographically decreasing order.
std::vector<std::vector<int>> siegel_partitions(int g, int min_parts = 2);
// Multisets of parts (p_i, q_i) with sum p_i = p and sum q_i = q (exact) or
// sum q_i <= q, listed in a fixed canonical order.
std::vector<std::vector<UnitaryPart>> unitary_partitions(int p, int q, bool exact);

struct GhostCertificate {
    // Fundamental class outside the compact-support ideal.
    bool not_compactly_supported = false;
    // Image in the Levi dual divisible by the Levi's top generator.
    bool levi_restriction_in_levi_kernel = false;
    // Same condition phrased as orthogonality to the Levi's ideal; must agree.
    bool levi_orthogonality_agrees = false;
    bool is_ghost = false;
    Element levi_image;
    std::optional<Element> levi_divisibility_witness;
    std::string discrepancy_note;
};

struct Verdict {
    FundamentalClass fundamental_class;
    bool nonvanishing = false;
    std::optional<Element> witness;
    Rational witness_pairing{0};
    std::optional<GhostCertificate> ghost;
    std::vector<std::size_t> betti_G;
    std::vector<std::size_t> betti_H;
    std::optional<Rational> closed_form_scalar;  // xi = scalar * closed_form
    std::optional<Rational> theta_scalar;        // theta * xi = scalar * sigma_1...sigma_g
    std::optional<bool> shortcut_identity_holds;
};

// Non-vanishing of j([Y]) for an arbitrary candidate class.
Verdict decide_nonvanishing_for_class(const FamilyInstance& inst, const FundamentalClass& xi);
Verdict decide_nonvanishing(const FamilyInstance& inst);

// nullopt for families without compact-support and Levi data.
std::optional<GhostCertificate> decide_ghost(const FamilyInstance& inst, const Verdict& verdict);
std::optional<GhostCertificate> decide_ghost(const FamilyInstance& inst);

// Full evaluation: non-vanishing plus ghost certificate.
Verdict evaluate(const FamilyInstance& inst);

// Lagrangian(g) -> Lagrangian(g-1), sigma_k -> sigma_k (k < g), sigma_g -> 0:
// the restriction induced by x_1 -> 0.
Morphism lagrangian_substitution(int g, const BuildOptions& opts = {});
// Same map between given rings (generators named prefix1, prefix2, ...).
Morphism lagrangian_substitution(const AlgebraPtr& source, const AlgebraPtr& target);

}  // namespace dualcoh::catalog
