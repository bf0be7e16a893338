// dualcoh: decide non-vanishing and ghost certificates for the catalog
// families, sweep parameter ranges, and run the check suites.

#include "dualcoh/errors.hpp"
#include "dualcoh/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace dualcoh;
using report::Json;

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int to_int(const std::string& s)
{
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size())
        throw std::invalid_argument("not an integer: " + s);
    return v;
}

// "a..b" or "a".
std::pair<int, int> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(s);
        return {v, v};
    }
    return {to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
}

struct ParamArgs {
    std::string family;
    int n = 0, g = 0, p = 0, q = 0;
    std::string parts;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("family", family, "sl-imag-sp | sl-odd-real | siegel | unitary | sp-in-ugg")->required();
        cmd->add_option("--n", n, "rank n (SL families)");
        cmd->add_option("--g", g, "genus g (siegel, sp-in-ugg)");
        cmd->add_option("--p", p, "p (unitary)");
        cmd->add_option("--q", q, "q (unitary)");
        cmd->add_option("--parts", parts, "siegel: a,b,...  unitary: p1:q1,p2:q2,...");
    }

    catalog::FamilyParams params() const
    {
        const auto id = catalog::parse_family_id(family);
        if (!id)
            throw std::invalid_argument("unknown family: " + family);
        catalog::FamilyParams P{.id = *id, .n = n, .g = g, .p = p, .q = q};
        if (!parts.empty()) {
            for (const auto& item : split(parts, ',')) {
                if (*id == catalog::FamilyId::unitary) {
                    const auto pq = split(item, ':');
                    if (pq.size() != 2)
                        throw std::invalid_argument("unitary parts are p_i:q_i pairs");
                    P.uparts.push_back({to_int(pq[0]), to_int(pq[1])});
                } else {
                    P.parts.push_back(to_int(item));
                }
            }
        }
        catalog::validate(P);
        return P;
    }
};

struct Settings {
    std::string config_path;
    long long cap = 0;
    std::string kernel;
    std::uint64_t seed = 42;
    bool seed_given = false;
};

// Precedence: flags, then the config file, then the environment, then defaults.
BuildOptions resolve_build(Settings& s)
{
    BuildOptions b;
    if (const char* env = std::getenv("DUALCOH_MONOMIAL_CAP"))
        b.monomial_cap = static_cast<std::size_t>(std::stoull(env));
    if (!s.config_path.empty()) {
        std::ifstream in(s.config_path);
        if (!in)
            throw std::invalid_argument("cannot read config file " + s.config_path);
        const Json cfg = Json::parse(in);
        if (cfg.contains("monomial_cap"))
            b.monomial_cap = cfg["monomial_cap"].get<std::size_t>();
        if (cfg.contains("kernel") && s.kernel.empty())
            s.kernel = cfg["kernel"].get<std::string>();
        if (cfg.contains("seed") && !s.seed_given)
            s.seed = cfg["seed"].get<std::uint64_t>();
    }
    if (s.cap > 0)
        b.monomial_cap = static_cast<std::size_t>(s.cap);
    if (s.kernel == "serial")
        b.kernel = linalg::Kernel::serial;
    else if (s.kernel.empty() || s.kernel == "parallel")
        b.kernel = linalg::Kernel::parallel;
    else
        throw std::invalid_argument("kernel is 'serial' or 'parallel'");
    return b;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology of compact duals: fundamental classes, non-vanishing and ghost certificates"};
    app.require_subcommand(1);
    Settings settings;
    app.add_option("--config", settings.config_path, "JSON file with monomial_cap, kernel, seed");
    app.add_option("--cap", settings.cap, "largest ambient monomial count per degree");
    app.add_option("--kernel", settings.kernel, "row reduction kernel: serial | parallel");

    bool json = false, timing = false;

    auto* family = app.add_subcommand("family", "decide one instance");
    ParamArgs fargs;
    fargs.add_to(family);
    family->add_flag("--json", json, "JSON certificate on stdout");
    family->add_flag("--timing", timing, "include wall-clock time");

    auto* sweep = app.add_subcommand("sweep", "decide a range of instances");
    std::string sweep_family, range = "1..0", q_range = "1..0", parts_mode;
    int q_deficit = 0;
    sweep->add_option("family", sweep_family)->required();
    sweep->add_option("--range", range, "n, g or p range, e.g. 2..4");
    sweep->add_option("--q-range", q_range, "q range (unitary)");
    sweep->add_option("--parts-mode", parts_mode, "siegel: two | all; unitary: exact | all | single");
    sweep->add_option("--q-deficit", q_deficit, "unitary single part (p, q - deficit)");
    sweep->add_flag("--json", json);
    sweep->add_flag("--timing", timing);

    auto* check = app.add_subcommand("check", "run the oracle, property and identity suites");
    std::vector<std::string> suites;
    int samples = 100;
    check->add_option("--suite", suites, "oracle | properties | identities | catalog (repeatable)");
    check->add_option("--seed", settings.seed, "seed for property sampling")->each([&](const std::string&) {
        settings.seed_given = true;
    });
    check->add_option("--samples", samples, "samples per property and morphism");
    check->add_flag("--json", json);

    auto* ring = app.add_subcommand("ring", "Betti data of an instance's rings");
    ParamArgs rargs;
    rargs.add_to(ring);
    bool poincare = false;
    ring->add_flag("--poincare", poincare, "print Poincare polynomials (default)");
    ring->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : report::ExitCode::usage;
    }

    try {
        const BuildOptions build = resolve_build(settings);
        if (family->parsed()) {
            const Json r = report::run_family({fargs.params(), build, timing});
            std::cout << (json ? r.dump(2) + "\n" : report::family_text(r));
            return 0;
        }
        if (sweep->parsed()) {
            const auto id = catalog::parse_family_id(sweep_family);
            if (!id)
                throw std::invalid_argument("unknown family: " + sweep_family);
            report::SweepSpec spec{.id = *id, .parts_mode = parts_mode, .q_deficit = q_deficit};
            std::tie(spec.lo, spec.hi) = parse_range(range);
            std::tie(spec.q_lo, spec.q_hi) = parse_range(q_range);
            const auto r = report::run_sweep(spec, build, timing);
            std::cout << (json ? r.document.dump(2) + "\n" : report::sweep_text(r));
            for (const auto& e : r.document["instances"])
                if (e.contains("error"))
                    std::cerr << "error: " << e["error"]["message"].get<std::string>() << '\n';
            return 0;
        }
        if (check->parsed()) {
            checks::CheckConfig cfg;
            if (!suites.empty()) {
                const auto known = checks::suite_names();
                for (const auto& s : suites)
                    if (std::find(known.begin(), known.end(), s) == known.end())
                        throw std::invalid_argument("unknown suite: " + s);
                cfg.suites = {suites.begin(), suites.end()};
            }
            cfg.seed = settings.seed;
            cfg.samples = samples;
            cfg.build = build;
            const auto results = checks::run_checks(cfg);
            std::cout << (json ? report::checks_to_json(results, cfg).dump(2) + "\n" : report::checks_text(results));
            return 0;
        }
        if (ring->parsed()) {
            const Json r = report::ring_report(rargs.params(), build);
            std::cout << (json ? r.dump(2) + "\n" : report::ring_text(r));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return report::exit_code_for(e);
    }
    return report::ExitCode::usage;
}
