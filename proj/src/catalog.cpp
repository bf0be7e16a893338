#include "dualcoh/catalog.hpp"

#include "dualcoh/errors.hpp"
#include "dualcoh/presentations.hpp"

#include <algorithm>
#include <numeric>

namespace dualcoh::catalog {

std::string to_string(FamilyId id)
{
    switch (id) {
    case FamilyId::sl_imag_sp:
        return "sl-imag-sp";
    case FamilyId::sl_odd_real:
        return "sl-odd-real";
    case FamilyId::siegel:
        return "siegel";
    case FamilyId::unitary:
        return "unitary";
    case FamilyId::sp_in_ugg:
        return "sp-in-ugg";
    }
    return "unknown";
}

std::optional<FamilyId> parse_family_id(const std::string& text)
{
    if (text == "sl-imag-sp")
        return FamilyId::sl_imag_sp;
    if (text == "sl-odd-real")
        return FamilyId::sl_odd_real;
    if (text == "siegel" || text == "siegel-product")
        return FamilyId::siegel;
    if (text == "unitary" || text == "unitary-product")
        return FamilyId::unitary;
    if (text == "sp-in-ugg")
        return FamilyId::sp_in_ugg;
    return std::nullopt;
}

std::string FamilyParams::describe() const
{
    std::string out = to_string(id);
    switch (id) {
    case FamilyId::sl_imag_sp:
    case FamilyId::sl_odd_real:
        return out + " n=" + std::to_string(n);
    case FamilyId::sp_in_ugg:
        return out + " g=" + std::to_string(g);
    case FamilyId::siegel: {
        out += " g=" + std::to_string(g) + " parts=";
        for (std::size_t i = 0; i < parts.size(); ++i)
            out += (i ? "," : "") + std::to_string(parts[i]);
        return out;
    }
    case FamilyId::unitary: {
        out += " p=" + std::to_string(p) + " q=" + std::to_string(q) + " parts=";
        for (std::size_t i = 0; i < uparts.size(); ++i)
            out += (i ? "," : "") + std::to_string(uparts[i].p) + ":" + std::to_string(uparts[i].q);
        return out;
    }
    }
    return out;
}

void validate(const FamilyParams& P)
{
    switch (P.id) {
    case FamilyId::sl_imag_sp:
    case FamilyId::sl_odd_real:
        if (P.n < 1)
            throw InvalidParameter(to_string(P.id) + " needs n >= 1");
        return;
    case FamilyId::sp_in_ugg:
        if (P.g < 1)
            throw InvalidParameter("sp-in-ugg needs g >= 1");
        return;
    case FamilyId::siegel: {
        if (P.g < 2)
            throw InvalidParameter("siegel needs g >= 2");
        if (P.parts.size() < 2)
            throw InvalidParameter("siegel needs a partition of g into at least two parts");
        for (std::size_t i = 0; i < P.parts.size(); ++i) {
            if (P.parts[i] < 1)
                throw InvalidParameter("siegel parts must be positive");
            if (i > 0 && P.parts[i] > P.parts[i - 1])
                throw InvalidParameter("siegel parts must be non-increasing");
        }
        if (std::accumulate(P.parts.begin(), P.parts.end(), 0) != P.g)
            throw InvalidParameter("siegel parts must sum to g");
        return;
    }
    case FamilyId::unitary: {
        if (P.p < 1 || P.q < P.p)
            throw InvalidParameter("unitary needs q >= p >= 1");
        if (P.uparts.empty())
            throw InvalidParameter("unitary needs at least one part");
        int sp = 0, sq = 0;
        for (const auto& part : P.uparts) {
            if (part.p < 1 || part.q < 1)
                throw InvalidParameter("unitary parts need p_i, q_i >= 1");
            sp += part.p;
            sq += part.q;
        }
        if (sp != P.p)
            throw InvalidParameter("unitary parts must satisfy sum p_i = p");
        if (sq > P.q)
            throw InvalidParameter("unitary parts must satisfy sum q_i <= q");
        return;
    }
    }
}

namespace {

// Product of the named generators (the unit for an empty list).
Element product_of(const AlgebraPtr& a, const std::vector<std::string>& names)
{
    Element out = unit(a);
    for (const auto& n : names)
        out = multiply(out, generator_element(a, n));
    return out;
}

std::string e(int degree) { return "e" + std::to_string(degree); }

// Exterior restriction that keeps the generators present in the target.
Morphism keep_common_generators(const AlgebraPtr& source, const AlgebraPtr& target)
{
    std::vector<Element> images;
    for (const auto& gen : source->generators())
        images.push_back(target->generator_index(gen.name) ? generator_element(target, gen.name) : zero(target));
    return build_morphism(source, target, std::move(images));
}

LeviData su_levi(const AlgebraPtr& dual_G, int m, const BuildOptions& opts)
{
    const AlgebraPtr L = rings::su_ring(m, opts);
    const std::size_t top = L->generators().size() - 1;
    return LeviData{"SU(" + std::to_string(m) + ")", keep_common_generators(dual_G, L),
                    {generator_element(L, top)}, top};
}

std::string sl_discrepancy_note(int top_degree)
{
    return "compact support is tested by divisibility by the top generator " + e(top_degree) +
           "; the alternative reading with " + e(top_degree - 2) +
           " is not used since the fundamental class contains that generator";
}

const char* const kGreek[] = {"alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta"};

std::string factor_prefix(std::size_t i)
{
    if (i < std::size(kGreek))
        return kGreek[i];
    return "f" + std::to_string(i + 1) + ".sigma";
}

// Degree-k component (in root degree, i.e. cohomological degree 2k) of
// prod_i (1 + c^{(i)}_1 + c^{(i)}_2 + ...), where block[i] lists the generator
// indices of the i-th factor's total class.
Element total_class_component(const AlgebraPtr& H, const std::vector<std::vector<std::size_t>>& blocks, int k)
{
    const FreeAlgebra& F = H->free();
    Polynomial total = F.one();
    for (const auto& block : blocks) {
        Polynomial c = F.one();
        for (auto gi : block)
            c = F.add(c, F.gen(gi));
        total = F.mul(total, c);
    }
    return from_polynomial(H, F.component(total, 2 * k));
}

}  // namespace

FamilyInstance family_sl_imag_sp(int n, const BuildOptions& opts)
{
    validate(FamilyParams{.id = FamilyId::sl_imag_sp, .n = n});
    FamilyInstance inst;
    inst.params = FamilyParams{.id = FamilyId::sl_imag_sp, .n = n};
    inst.dual_G = rings::su_ring(2 * n, opts);
    std::vector<int> hdeg;
    for (int j = 1; j <= n; ++j)
        hdeg.push_back(4 * j - 1);
    inst.dual_H = exterior_algebra(hdeg, opts);
    inst.restriction = keep_common_generators(inst.dual_G, inst.dual_H);
    const int top = 4 * n - 1;
    inst.franke_ideal = {generator_element(inst.dual_G, e(top))};
    inst.compact_support_ideal = inst.franke_ideal;
    if (2 * n - 1 >= 2)
        inst.levi = su_levi(inst.dual_G, 2 * n - 1, opts);
    std::vector<std::string> names;
    for (int d = 5; d <= 4 * n - 3; d += 4)
        names.push_back(e(d));
    inst.closed_form = product_of(inst.dual_G, names);
    inst.discrepancy_note = sl_discrepancy_note(top);
    return inst;
}

FamilyInstance family_sl_odd_real(int n, const BuildOptions& opts)
{
    validate(FamilyParams{.id = FamilyId::sl_odd_real, .n = n});
    FamilyInstance inst;
    inst.params = FamilyParams{.id = FamilyId::sl_odd_real, .n = n};
    inst.dual_G = rings::su_ring(2 * n + 1, opts);
    std::vector<int> hdeg;
    for (int d = 5; d <= 4 * n + 1; d += 4)
        hdeg.push_back(d);
    inst.dual_H = exterior_algebra(hdeg, opts);
    inst.restriction = keep_common_generators(inst.dual_G, inst.dual_H);
    const int top = 4 * n + 1;
    inst.franke_ideal = {generator_element(inst.dual_G, e(top))};
    inst.compact_support_ideal = inst.franke_ideal;
    inst.levi = su_levi(inst.dual_G, 2 * n, opts);
    std::vector<std::string> names;
    for (int d = 3; d <= 4 * n - 1; d += 4)
        names.push_back(e(d));
    inst.closed_form = product_of(inst.dual_G, names);
    inst.discrepancy_note = sl_discrepancy_note(top);
    return inst;
}

FamilyInstance family_siegel(int g, const std::vector<int>& parts, const BuildOptions& opts)
{
    FamilyParams P{.id = FamilyId::siegel, .g = g, .parts = parts};
    validate(P);
    FamilyInstance inst;
    inst.params = P;
    inst.dual_G = rings::lagrangian_ring(g, "sigma", opts);
    std::vector<AlgebraPtr> factors;
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t next = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        factors.push_back(rings::lagrangian_ring(parts[i], factor_prefix(i), opts));
        std::vector<std::size_t> block;
        for (int k = 0; k < parts[i]; ++k)
            block.push_back(next++);
        blocks.push_back(std::move(block));
    }
    inst.dual_H = rings::tensor_all(factors, opts);
    std::vector<Element> images;
    for (int k = 1; k <= g; ++k)
        images.push_back(total_class_component(inst.dual_H, blocks, k));
    inst.restriction = build_morphism(inst.dual_G, inst.dual_H, std::move(images));
    inst.franke_ideal = {generator_element(inst.dual_G, "sigma" + std::to_string(g))};

    auto sigma = [&](int k) {
        return k == 0 ? unit(inst.dual_G) : generator_element(inst.dual_G, "sigma" + std::to_string(k));
    };
    Element top = unit(inst.dual_G);
    for (int k = 1; k <= g; ++k)
        top = multiply(top, sigma(k));
    inst.top_product = top;
    if (parts.size() == 2) {
        const int a = parts[0], b = parts[1];
        Element theta = unit(inst.dual_G);
        for (int k = 0; k <= b; ++k)
            theta = multiply(theta, sigma(g - 2 * k));
        for (int k = 1; k <= a - b - 1; ++k)
            theta = multiply(theta, sigma(k));
        inst.theta = theta;
    } else {
        inst.exploratory = true;
    }
    return inst;
}

FamilyInstance family_unitary(int p, int q, const std::vector<UnitaryPart>& parts, const BuildOptions& opts)
{
    FamilyParams P{.id = FamilyId::unitary, .p = p, .q = q, .uparts = parts};
    validate(P);
    FamilyInstance inst;
    inst.params = P;
    inst.dual_G = rings::grassmannian_ring(p, q, "sigma", "tau", opts);
    std::vector<AlgebraPtr> factors;
    std::vector<std::vector<std::size_t>> sigma_blocks, tau_blocks;
    std::size_t next = 0;
    int sum_q = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string f = "f" + std::to_string(i + 1) + ".";
        factors.push_back(rings::grassmannian_ring(parts[i].p, parts[i].q, f + "sigma", f + "tau", opts));
        std::vector<std::size_t> tb, sb;
        for (int j = 0; j < parts[i].q; ++j)
            tb.push_back(next++);
        for (int j = 0; j < parts[i].p; ++j)
            sb.push_back(next++);
        tau_blocks.push_back(std::move(tb));
        sigma_blocks.push_back(std::move(sb));
        sum_q += parts[i].q;
    }
    inst.dual_H = rings::tensor_all(factors, opts);
    std::vector<Element> images;
    for (int j = 1; j <= q; ++j)
        images.push_back(total_class_component(inst.dual_H, tau_blocks, j));
    for (int i = 1; i <= p; ++i)
        images.push_back(total_class_component(inst.dual_H, sigma_blocks, i));
    inst.restriction = build_morphism(inst.dual_G, inst.dual_H, std::move(images));
    inst.franke_ideal = {generator_element(inst.dual_G, "sigma" + std::to_string(p)),
                         generator_element(inst.dual_G, "tau" + std::to_string(q))};
    Element xi = unit(inst.dual_H);
    for (std::size_t i = 0; i < parts.size(); ++i)
        xi = multiply(xi, generator_element(inst.dual_H, tau_blocks[i].back()));
    inst.shortcut_tau_image = xi;
    inst.exploratory = sum_q < q;
    return inst;
}

FamilyInstance family_sp_in_ugg(int g, const BuildOptions& opts)
{
    validate(FamilyParams{.id = FamilyId::sp_in_ugg, .g = g});
    FamilyInstance inst;
    inst.params = FamilyParams{.id = FamilyId::sp_in_ugg, .g = g};
    inst.dual_G = rings::grassmannian_ring(g, g, "sigma", "tau", opts);
    inst.dual_H = rings::lagrangian_ring(g, "sigma", opts);
    std::vector<Element> images;
    for (int k = 1; k <= g; ++k) {
        Element s = generator_element(inst.dual_H, "sigma" + std::to_string(k));
        images.push_back(k % 2 == 0 ? s : -s);
    }
    for (int k = 1; k <= g; ++k)
        images.push_back(generator_element(inst.dual_H, "sigma" + std::to_string(k)));
    inst.restriction = build_morphism(inst.dual_G, inst.dual_H, std::move(images));
    inst.franke_ideal = {generator_element(inst.dual_G, "sigma" + std::to_string(g)),
                         generator_element(inst.dual_G, "tau" + std::to_string(g))};
    return inst;
}

FamilyInstance make_family(const FamilyParams& P, const BuildOptions& opts)
{
    switch (P.id) {
    case FamilyId::sl_imag_sp:
        return family_sl_imag_sp(P.n, opts);
    case FamilyId::sl_odd_real:
        return family_sl_odd_real(P.n, opts);
    case FamilyId::siegel:
        return family_siegel(P.g, P.parts, opts);
    case FamilyId::unitary:
        return family_unitary(P.p, P.q, P.uparts, opts);
    case FamilyId::sp_in_ugg:
        return family_sp_in_ugg(P.g, opts);
    }
    throw InvalidParameter("unknown family");
}

std::vector<std::vector<int>> siegel_partitions(int g, int min_parts)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto walk = [&](auto&& self, int rest, int bound) -> void {
        if (rest == 0) {
            if (static_cast<int>(cur.size()) >= min_parts)
                out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, bound); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    walk(walk, g, g);
    return out;
}

std::vector<std::vector<UnitaryPart>> unitary_partitions(int p, int q, bool exact)
{
    // Parts are listed non-increasing in (p_i, q_i) lexicographic order.
    std::vector<std::vector<UnitaryPart>> out;
    std::vector<UnitaryPart> cur;
    auto le = [](const UnitaryPart& a, const UnitaryPart& b) { return a.p < b.p || (a.p == b.p && a.q <= b.q); };
    auto walk = [&](auto&& self, int rest_p, int rest_q) -> void {
        if (rest_p == 0) {
            if (!cur.empty() && (!exact || rest_q == 0))
                out.push_back(cur);
            return;
        }
        for (int a = rest_p; a >= 1; --a)
            for (int b = rest_q; b >= 1; --b) {
                const UnitaryPart part{a, b};
                if (!cur.empty() && !le(part, cur.back()))
                    continue;
                cur.push_back(part);
                self(self, rest_p - a, rest_q - b);
                cur.pop_back();
            }
    };
    walk(walk, p, q);
    return out;
}

namespace {

// scalar with v = scalar * reference, if v is a multiple of reference.
std::optional<Rational> proportionality(const Element& v, const Element& reference)
{
    if (reference.is_zero())
        return std::nullopt;
    const auto& [i0, c0] = *reference.terms().begin();
    const Rational s = v.coefficient(i0) / c0;
    if (v != s * reference)
        return std::nullopt;
    return s;
}

}  // namespace

Verdict decide_nonvanishing_for_class(const FamilyInstance& inst, const FundamentalClass& xi)
{
    Verdict v;
    v.fundamental_class = xi;
    v.betti_G = inst.dual_G->poincare_polynomial();
    v.betti_H = inst.dual_H->poincare_polynomial();
    if (auto w = pairs_nontrivially_with_ideal(xi.element, inst.franke_ideal)) {
        v.nonvanishing = true;
        v.witness_pairing = pairing(xi.element, *w);
        v.witness = std::move(w);
    }
    if (inst.closed_form)
        v.closed_form_scalar = proportionality(xi.element, *inst.closed_form);
    if (inst.theta && inst.top_product) {
        const Element prod = multiply(*inst.theta, xi.element);
        v.theta_scalar = proportionality(prod, *inst.top_product);
    }
    if (inst.shortcut_tau_image) {
        const std::string tq = "tau" + std::to_string(inst.params.q);
        v.shortcut_identity_holds = inst.restriction.apply(generator_element(inst.dual_G, tq)) == *inst.shortcut_tau_image;
    }
    return v;
}

Verdict decide_nonvanishing(const FamilyInstance& inst)
{
    return decide_nonvanishing_for_class(inst, gysin_fundamental_class(inst.restriction));
}

std::optional<GhostCertificate> decide_ghost(const FamilyInstance& inst, const Verdict& verdict)
{
    if (!inst.compact_support_ideal || !inst.levi)
        return std::nullopt;
    const Element& xi = verdict.fundamental_class.element;
    GhostCertificate c;
    c.not_compactly_supported = !ideal_contains(*inst.compact_support_ideal, xi);
    c.levi_image = inst.levi->restriction.apply(xi);
    c.levi_divisibility_witness = is_divisible(c.levi_image, inst.levi->top_generator);
    c.levi_restriction_in_levi_kernel = c.levi_divisibility_witness.has_value();
    const bool orthogonal = !pairs_nontrivially_with_ideal(c.levi_image, inst.levi->franke_ideal).has_value();
    c.levi_orthogonality_agrees = orthogonal == c.levi_restriction_in_levi_kernel;
    c.is_ghost = c.not_compactly_supported && c.levi_restriction_in_levi_kernel && verdict.nonvanishing;
    c.discrepancy_note = inst.discrepancy_note;
    return c;
}

std::optional<GhostCertificate> decide_ghost(const FamilyInstance& inst)
{
    return decide_ghost(inst, decide_nonvanishing(inst));
}

Verdict evaluate(const FamilyInstance& inst)
{
    Verdict v = decide_nonvanishing(inst);
    v.ghost = decide_ghost(inst, v);
    return v;
}

Morphism lagrangian_substitution(int g, const BuildOptions& opts)
{
    if (g < 2)
        throw InvalidParameter("substitution map needs g >= 2");
    return lagrangian_substitution(rings::lagrangian_ring(g, "sigma", opts), rings::lagrangian_ring(g - 1, "sigma", opts));
}

Morphism lagrangian_substitution(const AlgebraPtr& source, const AlgebraPtr& target)
{
    const std::size_t g = source->generators().size();
    if (target->generators().size() + 1 != g)
        throw UsageMismatch("substitution map goes from rank g to rank g - 1");
    std::vector<Element> images;
    for (std::size_t k = 0; k + 1 < g; ++k)
        images.push_back(generator_element(target, k));
    images.push_back(zero(target));
    return build_morphism(source, target, std::move(images));
}

}  // namespace dualcoh::catalog
