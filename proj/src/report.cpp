#include "dualcoh/report.hpp"

#include "dualcoh/errors.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <unordered_map>

namespace dualcoh::report {

using catalog::FamilyId;
using catalog::FamilyParams;

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const InvalidParameter*>(&e) || dynamic_cast<const InvalidPresentation*>(&e) ||
        dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
        dynamic_cast<const nlohmann::json::exception*>(&e))
        return ExitCode::usage;
    if (dynamic_cast<const ResourceError*>(&e) || dynamic_cast<const std::bad_alloc*>(&e))
        return ExitCode::resource;
    return ExitCode::inconsistency;
}

Json element_to_json(const Element& v)
{
    Json out = Json::array();
    if (!v.owner())
        return out;
    const auto& gens = v.owner()->generators();
    for (const auto& [i, c] : v.terms())
        out.push_back(Json::array({monomial_string(v.owner()->monomial(i), gens), to_string(c)}));
    return out;
}

Element element_from_json(const AlgebraPtr& a, const Json& j)
{
    std::unordered_map<std::string, int> index;
    for (int i = 0; i <= a->top_index(); ++i)
        index.emplace(monomial_string(a->monomial(i), a->generators()), i);
    std::map<int, Rational> terms;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("element entries are [monomial, rational] pairs");
        const auto it = index.find(entry[0].get<std::string>());
        if (it == index.end())
            throw std::invalid_argument("not a standard monomial: " + entry[0].get<std::string>());
        terms[it->second] += parse_rational(entry[1].get<std::string>());
    }
    return Element(a, std::move(terms));
}

Json parameters_to_json(const FamilyParams& P)
{
    Json j = Json::object();
    switch (P.id) {
    case FamilyId::sl_imag_sp:
    case FamilyId::sl_odd_real:
        j["n"] = P.n;
        break;
    case FamilyId::sp_in_ugg:
        j["g"] = P.g;
        break;
    case FamilyId::siegel:
        j["g"] = P.g;
        j["parts"] = P.parts;
        if (P.parts.size() == 2) {
            j["a"] = P.parts[0];
            j["b"] = P.parts[1];
        }
        break;
    case FamilyId::unitary: {
        j["p"] = P.p;
        j["q"] = P.q;
        Json parts = Json::array();
        for (const auto& part : P.uparts)
            parts.push_back(Json{{"p_i", part.p}, {"q_i", part.q}});
        j["parts"] = parts;
        break;
    }
    }
    return j;
}

namespace {

Json ring_summary(const AlgebraPtr& a)
{
    Json gens = Json::array();
    for (const auto& g : a->generators())
        gens.push_back(Json{{"name", g.name}, {"degree", g.degree}});
    return Json{{"kind", to_string(a->kind())},
                {"generators", gens},
                {"top_degree", a->top_degree()},
                {"total_dimension", a->total_dimension()}};
}

Json family_checks(const catalog::FamilyInstance& inst, const catalog::Verdict& v)
{
    const Element& xi = v.fundamental_class.element;
    const AlgebraPtr& G = inst.dual_G;
    const AlgebraPtr& H = inst.dual_H;
    bool gysin = true;
    const int d = H->top_degree();
    for (int i = G->offset(d); i < G->offset(d + 1); ++i) {
        const Element w = basis_element(G, i);
        gysin = gysin && pairing(xi, w) == v.fundamental_class.orientation *
                                               inst.restriction.apply(w).coefficient(H->top_index());
    }
    Json out = Json::array();
    out.push_back(Json{{"name", "gysin-identity"}, {"passed", gysin}});
    if (v.witness) {
        const bool ok = ideal_contains(inst.franke_ideal, *v.witness) && pairing(xi, *v.witness) != 0;
        out.push_back(Json{{"name", "witness-roundtrip"}, {"passed", ok}});
    }
    if (v.ghost) {
        bool ok = v.ghost->levi_orthogonality_agrees;
        if (v.ghost->levi_divisibility_witness)
            ok = ok && generator_element(inst.levi->restriction.target(), inst.levi->top_generator) *
                               *v.ghost->levi_divisibility_witness ==
                           v.ghost->levi_image;
        out.push_back(Json{{"name", "ghost-witnesses"}, {"passed", ok}});
    }
    return out;
}

}  // namespace

Json verdict_to_json(const catalog::FamilyInstance& inst, const catalog::Verdict& v)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["family"] = catalog::to_string(inst.params.id);
    j["parameters"] = parameters_to_json(inst.params);
    j["exploratory"] = inst.exploratory;
    j["dual_G"] = ring_summary(inst.dual_G);
    j["dual_H"] = ring_summary(inst.dual_H);
    j["betti_G"] = v.betti_G;
    j["betti_H"] = v.betti_H;

    const Element& xi = v.fundamental_class.element;
    j["fundamental_class"] = Json{{"degree", inst.dual_G->top_degree() - inst.dual_H->top_degree()},
                                  {"orientation", to_string(v.fundamental_class.orientation)},
                                  {"terms", element_to_json(xi)}};
    if (inst.closed_form) {
        j["closed_form"] = Json{{"terms", element_to_json(*inst.closed_form)},
                                {"scalar", v.closed_form_scalar ? Json(to_string(*v.closed_form_scalar)) : Json()}};
    }

    Json ideal = Json::array();
    for (const auto& gen : inst.franke_ideal)
        ideal.push_back(element_to_json(gen));
    Json nv{{"verdict", v.nonvanishing}, {"franke_ideal", ideal}};
    if (v.witness) {
        nv["witness"] = element_to_json(*v.witness);
        nv["pairing"] = to_string(v.witness_pairing);
    } else {
        nv["witness"] = nullptr;
    }
    j["nonvanishing"] = nv;

    if (v.ghost) {
        const auto& c = *v.ghost;
        Json g{{"present", true},
               {"is_ghost_by_paper_argument", c.is_ghost},
               {"not_compactly_supported", c.not_compactly_supported},
               {"levi_restriction_in_levi_kernel", c.levi_restriction_in_levi_kernel},
               {"levi_orthogonality_agrees", c.levi_orthogonality_agrees},
               {"levi", inst.levi->description},
               {"levi_image", element_to_json(c.levi_image)}};
        g["levi_divisibility_witness"] =
            c.levi_divisibility_witness ? element_to_json(*c.levi_divisibility_witness) : Json();
        g["discrepancy_note"] = c.discrepancy_note;
        j["ghost"] = g;
    } else {
        j["ghost"] = Json{{"present", false}};
    }

    if (inst.theta) {
        j["theta"] = Json{{"terms", element_to_json(*inst.theta)},
                          {"scalar", v.theta_scalar ? Json(to_string(*v.theta_scalar)) : Json()}};
    }
    if (v.shortcut_identity_holds)
        j["shortcut_identity_holds"] = *v.shortcut_identity_holds;
    j["check_results"] = family_checks(inst, v);
    return j;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

}  // namespace

Json run_family(const RunConfig& config)
{
    catalog::validate(config.params);
    const auto t0 = std::chrono::steady_clock::now();
    const auto inst = catalog::make_family(config.params, config.build);
    const auto v = catalog::evaluate(inst);
    Json j = verdict_to_json(inst, v);
    // Wall-clock values break byte-identical output, so they are opt-in.
    if (config.timing)
        j["timing"] = Json{{"seconds", fixed(seconds_since(t0))}};
    return j;
}

std::vector<FamilyParams> enumerate_sweep(const SweepSpec& s)
{
    std::vector<FamilyParams> out;
    for (int x = s.lo; x <= s.hi; ++x) {
        switch (s.id) {
        case FamilyId::sl_imag_sp:
        case FamilyId::sl_odd_real:
            out.push_back({.id = s.id, .n = x});
            break;
        case FamilyId::sp_in_ugg:
            out.push_back({.id = s.id, .g = x});
            break;
        case FamilyId::siegel:
            if (s.parts_mode == "all") {
                for (auto& parts : catalog::siegel_partitions(x, 2))
                    out.push_back({.id = s.id, .g = x, .parts = parts});
            } else if (s.parts_mode.empty() || s.parts_mode == "two") {
                for (int b = 1; 2 * b <= x; ++b)
                    out.push_back({.id = s.id, .g = x, .parts = {x - b, b}});
            } else {
                throw std::invalid_argument("siegel parts mode is 'two' or 'all'");
            }
            break;
        case FamilyId::unitary:
            for (int q = std::max(s.q_lo, x); q <= s.q_hi; ++q) {
                if (s.parts_mode == "single") {
                    out.push_back({.id = s.id, .p = x, .q = q, .uparts = {{x, q - s.q_deficit}}});
                } else if (s.parts_mode.empty() || s.parts_mode == "exact" || s.parts_mode == "all") {
                    for (auto& parts : catalog::unitary_partitions(x, q, s.parts_mode != "all"))
                        out.push_back({.id = s.id, .p = x, .q = q, .uparts = parts});
                } else {
                    throw std::invalid_argument("unitary parts mode is 'exact', 'all' or 'single'");
                }
            }
            break;
        }
    }
    return out;
}

SweepResult run_sweep(const SweepSpec& spec, const BuildOptions& build, bool timing)
{
    const auto list = enumerate_sweep(spec);
    std::vector<Json> entries(list.size());
    const int count = static_cast<int>(list.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        try {
            entries[i] = run_family(RunConfig{list[i], build, timing});
        } catch (const std::exception& e) {
            entries[i] = Json{{"family", catalog::to_string(list[i].id)},
                              {"parameters", parameters_to_json(list[i])},
                              {"error", Json{{"message", e.what()}, {"exit_code", exit_code_for(e)}}}};
        }
    }

    SweepResult r;
    r.total = list.size();
    Json instances = Json::array();
    for (auto& e : entries) {
        if (e.contains("error"))
            ++r.errors;
        else if (e["nonvanishing"]["verdict"].get<bool>())
            ++r.nonvanishing;
        else
            ++r.vanishing;
        if (e.contains("ghost") && e["ghost"]["present"].get<bool>() &&
            e["ghost"]["is_ghost_by_paper_argument"].get<bool>())
            ++r.ghosts;
        instances.push_back(std::move(e));
    }
    r.document["schema_version"] = kSchemaVersion;
    r.document["tool_version"] = kToolVersion;
    r.document["family"] = catalog::to_string(spec.id);
    r.document["instances"] = std::move(instances);
    r.document["summary"] = Json{{"total", r.total},
                                 {"nonvanishing_true", r.nonvanishing},
                                 {"nonvanishing_false", r.vanishing},
                                 {"ghost_true", r.ghosts},
                                 {"errors", r.errors}};
    return r;
}

Json checks_to_json(const std::vector<checks::CheckResult>& results, const checks::CheckConfig& config)
{
    Json list = Json::array();
    std::size_t failed = 0;
    for (const auto& r : results) {
        list.push_back(Json{{"suite", r.suite},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"cases", r.cases},
                            {r.passed ? "detail" : "counterexample", r.detail}});
        failed += r.passed ? 0 : 1;
    }
    Json suites = Json::array();
    for (const auto& s : config.suites)
        suites.push_back(s);
    return Json{{"schema_version", kSchemaVersion},
                {"tool_version", kToolVersion},
                {"seed", config.seed},
                {"suites", suites},
                {"check_results", list},
                {"summary", Json{{"total", results.size()}, {"failed", failed}}}};
}

namespace {

std::string terms_text(const Json& terms)
{
    if (terms.is_null())
        return "-";
    if (terms.empty())
        return "0";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty())
            out += " + ";
        out += "(" + t[1].get<std::string>() + ")*" + t[0].get<std::string>();
    }
    return out;
}

std::string instance_label(const Json& r)
{
    std::string out = r["family"].get<std::string>();
    for (const auto& [k, v] : r["parameters"].items()) {
        if (k == "a" || k == "b")
            continue;
        out += " " + k + "=";
        if (v.is_array()) {
            std::string parts;
            for (const auto& x : v)
                parts += (parts.empty() ? "" : ",") +
                         (x.is_object() ? std::to_string(x["p_i"].get<int>()) + ":" + std::to_string(x["q_i"].get<int>())
                                        : std::to_string(x.get<int>()));
            out += parts;
        } else {
            out += v.dump();
        }
    }
    return out;
}

std::string betti_text(const Json& b)
{
    std::string out;
    for (std::size_t d = 0; d < b.size(); ++d)
        if (b[d].get<std::size_t>() != 0)
            out += (out.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(b[d].get<std::size_t>());
    return out;
}

}  // namespace

std::string family_text(const Json& r)
{
    std::ostringstream o;
    o << "instance        " << instance_label(r) << (r["exploratory"].get<bool>() ? "  (exploratory)" : "") << '\n';
    o << "betti G         " << betti_text(r["betti_G"]) << '\n';
    o << "betti H         " << betti_text(r["betti_H"]) << '\n';
    o << "[Y]             " << terms_text(r["fundamental_class"]["terms"]) << "  (degree "
      << r["fundamental_class"]["degree"].get<int>() << ")\n";
    if (r.contains("closed_form"))
        o << "closed form     " << terms_text(r["closed_form"]["terms"]) << ", scalar "
          << (r["closed_form"]["scalar"].is_null() ? "none" : r["closed_form"]["scalar"].get<std::string>()) << '\n';
    const auto& nv = r["nonvanishing"];
    o << "nonvanishing    " << (nv["verdict"].get<bool>() ? "true" : "false");
    if (!nv["witness"].is_null())
        o << ", witness " << terms_text(nv["witness"]) << ", pairing " << nv["pairing"].get<std::string>();
    o << '\n';
    const auto& g = r["ghost"];
    if (g["present"].get<bool>()) {
        o << "ghost           " << (g["is_ghost_by_paper_argument"].get<bool>() ? "true" : "false")
          << " (not compactly supported: " << g["not_compactly_supported"].get<bool>()
          << ", Levi " << g["levi"].get<std::string>() << " image divisible: "
          << g["levi_restriction_in_levi_kernel"].get<bool>() << ")\n";
        o << "note            " << g["discrepancy_note"].get<std::string>() << '\n';
    } else {
        o << "ghost           no data for this family\n";
    }
    if (r.contains("theta"))
        o << "theta*[Y]       " << (r["theta"]["scalar"].is_null() ? "not a multiple" : r["theta"]["scalar"].get<std::string>())
          << " * sigma_1...sigma_g\n";
    if (r.contains("shortcut_identity_holds"))
        o << "tau shortcut    " << (r["shortcut_identity_holds"].get<bool>() ? "holds" : "fails") << '\n';
    for (const auto& c : r["check_results"])
        o << "check           " << c["name"].get<std::string>() << ": " << (c["passed"].get<bool>() ? "pass" : "FAIL")
          << '\n';
    if (r.contains("timing"))
        o << "time            " << r["timing"]["seconds"].get<std::string>() << " s\n";
    return o.str();
}

std::string sweep_text(const SweepResult& s)
{
    std::ostringstream o;
    char line[256];
    std::snprintf(line, sizeof line, "%-36s %6s %6s %-8s %-6s %s\n", "instance", "dim G", "deg Y", "nonvan", "ghost",
                  "note");
    o << line;
    for (const auto& r : s.document["instances"]) {
        if (r.contains("error")) {
            std::snprintf(line, sizeof line, "%-36s %6s %6s %-8s %-6s error: %s\n", instance_label(r).c_str(), "-", "-",
                          "-", "-", r["error"]["message"].get<std::string>().c_str());
            o << line;
            continue;
        }
        const char* ghost = !r["ghost"]["present"].get<bool>() ? "-"
                            : r["ghost"]["is_ghost_by_paper_argument"].get<bool>() ? "true"
                                                                                  : "false";
        std::snprintf(line, sizeof line, "%-36s %6zu %6d %-8s %-6s %s\n", instance_label(r).c_str(),
                      r["dual_G"]["total_dimension"].get<std::size_t>(),
                      r["fundamental_class"]["degree"].get<int>(),
                      r["nonvanishing"]["verdict"].get<bool>() ? "true" : "false", ghost,
                      r["exploratory"].get<bool>() ? "exploratory" : "");
        o << line;
    }
    o << "total " << s.total << ", nonvanishing " << s.nonvanishing << ", vanishing " << s.vanishing << ", ghost "
      << s.ghosts << ", errors " << s.errors << '\n';
    return o.str();
}

std::string checks_text(const std::vector<checks::CheckResult>& results)
{
    std::ostringstream o;
    std::size_t failed = 0;
    for (const auto& r : results) {
        o << (r.passed ? "pass " : "FAIL ") << '[' << r.suite << "] " << r.name << " (" << r.cases << " cases)";
        if (!r.detail.empty())
            o << ": " << r.detail;
        o << '\n';
        failed += r.passed ? 0 : 1;
    }
    o << results.size() - failed << "/" << results.size() << " checks passed\n";
    return o.str();
}

Json ring_report(const FamilyParams& params, const BuildOptions& build)
{
    catalog::validate(params);
    const auto inst = catalog::make_family(params, build);
    auto ring = [](const AlgebraPtr& a) {
        Json j = ring_summary(a);
        j["poincare"] = a->poincare_polynomial();
        return j;
    };
    Json j{{"schema_version", kSchemaVersion},
           {"tool_version", kToolVersion},
           {"family", catalog::to_string(params.id)},
           {"parameters", parameters_to_json(params)},
           {"dual_G", ring(inst.dual_G)},
           {"dual_H", ring(inst.dual_H)}};
    if (inst.levi)
        j["levi"] = ring(inst.levi->restriction.target());
    return j;
}

std::string ring_text(const Json& r)
{
    std::ostringstream o;
    o << instance_label(r) << '\n';
    for (const char* key : {"dual_G", "dual_H", "levi"}) {
        if (!r.contains(key))
            continue;
        const auto& x = r[key];
        std::string gens;
        for (const auto& g : x["generators"])
            gens += (gens.empty() ? "" : ", ") + g["name"].get<std::string>() + ":" + std::to_string(g["degree"].get<int>());
        o << key << "  " << x["kind"].get<std::string>() << " on (" << gens << "), top degree "
          << x["top_degree"].get<int>() << ", total dimension " << x["total_dimension"].get<std::size_t>() << '\n';
        o << "  poincare " << betti_text(x["poincare"]) << '\n';
    }
    return o.str();
}

}  // namespace dualcoh::report
