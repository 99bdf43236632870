#include "qrcs/scenario.hpp"

#include "qrcs/caveats.hpp"
#include "qrcs/csv.hpp"
#include "qrcs/errors.hpp"
#include "qrcs/sparsity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace qrcs {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(Artifact a) {
    switch (a) {
        case Artifact::Crossover: return "crossover";
        case Artifact::Curves: return "curves";
        case Artifact::TableA1: return "table_a1";
        case Artifact::FigA2: return "fig_a2";
        case Artifact::Estimate: return "estimate";
        case Artifact::Sparsity: return "sparsity";
    }
    return "?";
}

Artifact parse_artifact(std::string_view tag) {
    for (Artifact a : {Artifact::Crossover, Artifact::Curves, Artifact::TableA1, Artifact::FigA2,
                       Artifact::Estimate, Artifact::Sparsity})
        if (tag == to_string(a)) return a;
    throw ParameterError("outputs", "unknown artifact '" + std::string(tag) +
                                        "' (expected crossover, curves, table_a1, fig_a2, estimate, sparsity)");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw ParameterError(path.empty() ? "scenario" : path, "must be a JSON object");
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
    require_object(obj, path);
    for (const auto& [key, _] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParameterError(join(path, key), "unknown field");
}

double read_number(const json& obj, std::string_view key, const std::string& path, double fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number()) throw ParameterError(join(path, key), "must be a number");
    return it->get<double>();
}

int read_int(const json& obj, std::string_view key, const std::string& path, int fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number()) throw ParameterError(join(path, key), "must be an integer");
    const double v = it->get<double>();
    if (v != std::floor(v) || std::abs(v) > 2e9) throw ParameterError(join(path, key), "must be an integer");
    return static_cast<int>(v);
}

std::string read_string(const json& obj, std::string_view key, const std::string& path,
                        std::string fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_string()) throw ParameterError(join(path, key), "must be a string");
    return it->get<std::string>();
}

// Re-labels a ParameterError raised by a domain constructor with the scenario path.
template <class F>
auto at_path(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const ParameterError& e) {
        throw ParameterError(path.empty() ? e.field() : join(path, e.field()), e.constraint());
    }
}

KappaScalingLaw parse_kappa_law(const json& j) {
    const std::string path = "kappa_law";
    if (j.is_string()) {
        const auto mode = j.get<std::string>();
        if (mode == "scherer2d") return KappaScalingLaw::scherer_2d();
        if (mode == "scherer3d") return KappaScalingLaw::scherer_3d();
        throw ParameterError(path, "string form must be scherer2d or scherer3d");
    }
    check_keys(j, path, {"mode", "value", "dims"});
    const std::string mode = read_string(j, "mode", path, "");
    if (mode == "fixed") {
        if (!j.contains("value")) throw ParameterError(path + ".value", "required for mode fixed");
        return at_path(path, [&] { return KappaScalingLaw::fixed(read_number(j, "value", path, 0)); });
    }
    if (mode == "unpreconditioned") {
        if (!j.contains("dims")) throw ParameterError(path + ".dims", "required for mode unpreconditioned");
        return at_path(path, [&] { return KappaScalingLaw::unpreconditioned(read_int(j, "dims", path, 0)); });
    }
    if (mode == "scherer2d") return KappaScalingLaw::scherer_2d();
    if (mode == "scherer3d") return KappaScalingLaw::scherer_3d();
    throw ParameterError(path + ".mode", "must be fixed, unpreconditioned, scherer2d or scherer3d");
}

std::string kappa_law_mode(const KappaScalingLaw& law) {
    switch (law.mode()) {
        case KappaScalingLaw::Mode::Fixed: return "fixed";
        case KappaScalingLaw::Mode::Unpreconditioned: return "unpreconditioned";
        case KappaScalingLaw::Mode::Scherer2D: return "scherer2d";
        case KappaScalingLaw::Mode::Scherer3D: return "scherer3d";
    }
    return "?";
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
    check_keys(doc, "", {"name", "cost_params", "kappa_law", "topology", "hardware", "outputs",
                         "curves", "precision", "estimate"});
    Scenario s;
    s.name = read_string(doc, "name", "", s.name);

    if (auto it = doc.find("cost_params"); it != doc.end()) {
        const std::string p = "cost_params";
        check_keys(*it, p, {"n", "d", "kappa", "epsilon", "c_cg", "c_cjs"});
        s.cost.n = read_number(*it, "n", p, s.cost.n);
        s.cost.d = read_int(*it, "d", p, s.cost.d);
        s.cost.kappa = read_number(*it, "kappa", p, s.cost.kappa);
        s.cost.epsilon = read_number(*it, "epsilon", p, s.cost.epsilon);
        s.cost.c_cg = read_number(*it, "c_cg", p, s.cost.c_cg);
        s.cost.c_cjs = read_number(*it, "c_cjs", p, s.cost.c_cjs);
    }
    if (auto it = doc.find("kappa_law"); it != doc.end()) s.kappa_law = parse_kappa_law(*it);
    if (auto it = doc.find("topology"); it != doc.end()) {
        check_keys(*it, "topology", {"kind", "m"});
        MeshTopology t;
        t.kind = at_path("", [&] { return parse_mesh_kind(read_string(*it, "kind", "topology", "square2d")); });
        t.m = read_int(*it, "m", "topology", t.m);
        s.topology = t;
    }
    if (auto it = doc.find("hardware"); it != doc.end()) {
        check_keys(*it, "hardware", {"seconds_per_logical_step"});
        s.hardware.seconds_per_logical_step =
            read_number(*it, "seconds_per_logical_step", "hardware", s.hardware.seconds_per_logical_step);
    }
    if (auto it = doc.find("outputs"); it != doc.end()) {
        if (!it->is_array()) throw ParameterError("outputs", "must be an array of artifact names");
        for (const auto& a : *it) {
            if (!a.is_string()) throw ParameterError("outputs", "entries must be strings");
            s.outputs.push_back(parse_artifact(a.get<std::string>()));
        }
    }
    if (auto it = doc.find("curves"); it != doc.end()) {
        const std::string p = "curves";
        check_keys(*it, p, {"n_min", "n_max", "points", "scale"});
        s.curves.n_min = read_number(*it, "n_min", p, s.curves.n_min);
        s.curves.n_max = read_number(*it, "n_max", p, s.curves.n_max);
        s.curves.points = read_int(*it, "points", p, s.curves.points);
        s.curves.scale = at_path(p, [&] { return parse_axis_scale(read_string(*it, "scale", p, "linear")); });
    }
    if (auto it = doc.find("precision"); it != doc.end()) {
        const std::string p = "precision";
        check_keys(*it, p, {"epsilons", "convention", "prefactor_ratio", "n_min", "n_max", "points"});
        if (auto e = it->find("epsilons"); e != it->end()) {
            if (!e->is_array()) throw ParameterError(p + ".epsilons", "must be an array of numbers");
            s.precision.epsilons.clear();
            for (const auto& v : *e) {
                if (!v.is_number()) throw ParameterError(p + ".epsilons", "entries must be numbers");
                s.precision.epsilons.push_back(v.get<double>());
            }
        }
        s.precision.convention =
            at_path(p, [&] { return parse_db_convention(read_string(*it, "convention", p, "worst_side")); });
        s.precision.prefactor_ratio = read_number(*it, "prefactor_ratio", p, s.precision.prefactor_ratio);
        s.precision.n_min = read_number(*it, "n_min", p, s.precision.n_min);
        s.precision.n_max = read_number(*it, "n_max", p, s.precision.n_max);
        s.precision.points = read_int(*it, "points", p, s.precision.points);
    }
    if (auto it = doc.find("estimate"); it != doc.end()) {
        const std::string p = "estimate";
        check_keys(*it, p, {"c_cjs", "variant", "improvement_orders"});
        if (it->contains("c_cjs")) s.estimate.c_cjs = read_number(*it, "c_cjs", p, 0.0);
        s.estimate.variant = at_path(p, [&] { return parse_model_variant(read_string(*it, "variant", p, "cjs")); });
        s.estimate.improvement_orders = read_number(*it, "improvement_orders", p, s.estimate.improvement_orders);
    }
    at_path("cost_params", [&] { return CostParams(s.cost); });
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError(path.string(), "cannot open scenario file");
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error& e) {
        throw IoError(path.string(), std::string("invalid JSON: ") + e.what());
    }
    return scenario_from_json(doc);
}

ordered_json to_json(const Scenario& s) {
    ordered_json j;
    j["name"] = s.name;
    j["cost_params"] = {{"n", s.cost.n},         {"d", s.cost.d},       {"kappa", s.cost.kappa},
                        {"epsilon", s.cost.epsilon}, {"c_cg", s.cost.c_cg}, {"c_cjs", s.cost.c_cjs}};
    if (s.kappa_law) {
        ordered_json law{{"mode", kappa_law_mode(*s.kappa_law)}};
        if (s.kappa_law->mode() == KappaScalingLaw::Mode::Fixed) law["value"] = s.kappa_law->value();
        if (s.kappa_law->mode() == KappaScalingLaw::Mode::Unpreconditioned) law["dims"] = s.kappa_law->dims();
        j["kappa_law"] = law;
    }
    if (s.topology) j["topology"] = {{"kind", to_string(s.topology->kind)}, {"m", s.topology->m}};
    j["hardware"] = {{"seconds_per_logical_step", s.hardware.seconds_per_logical_step}};
    j["outputs"] = ordered_json::array();
    for (Artifact a : s.outputs) j["outputs"].push_back(to_string(a));
    j["curves"] = {{"n_min", s.curves.n_min},
                   {"n_max", s.curves.n_max},
                   {"points", s.curves.points},
                   {"scale", to_string(s.curves.scale)}};
    j["precision"] = {{"epsilons", s.precision.epsilons},
                      {"convention", to_string(s.precision.convention)},
                      {"prefactor_ratio", s.precision.prefactor_ratio},
                      {"n_min", s.precision.n_min},
                      {"n_max", s.precision.n_max},
                      {"points", s.precision.points}};
    ordered_json est{{"variant", to_string(s.estimate.variant)},
                     {"improvement_orders", s.estimate.improvement_orders}};
    if (s.estimate.c_cjs) est["c_cjs"] = *s.estimate.c_cjs;
    j["estimate"] = est;
    return j;
}

// ---------------------------------------------------------------------------
// Running

namespace {

ordered_json wall_json(double steps, const WallClock& w) {
    return {{"steps", steps}, {"seconds", w.seconds}, {"years", w.years}, {"universe_ages", w.universe_ages}};
}

ordered_json counts_json(const ResourceCounts& c) {
    return {{"logical_qubits", c.logical_qubits}, {"steps", c.steps}, {"toffoli", c.toffoli}};
}

ordered_json histogram_json(const std::map<int, std::uint64_t>& h) {
    ordered_json j = ordered_json::object();
    for (const auto& [count, edges] : h) j[std::to_string(count)] = edges;
    return j;
}

std::string display(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string aligned_regime_table(const std::vector<PrecisionRegime>& rows) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %-12s %-16s %s\n", "epsilon", "delta_db", "range_error_pct",
                  "use_case");
    out += line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-10s %-12s %-16s %s\n", display(r.epsilon, 2).c_str(),
                      display(r.delta_db, 2).c_str(), display(r.range_error_pct, 2).c_str(),
                      r.use_case.c_str());
        out += line;
    }
    return out;
}

struct Context {
    const Scenario& scenario;
    CostParams params;
    std::optional<SparsityReport> sparsity;
    std::optional<std::uint64_t> mesh_edges;
    std::string adjacency;
};

ordered_json run_crossover(const Context& ctx, Report& report) {
    const CostParams& p = ctx.params;
    const CrossoverResult r = crossover_exact(p);
    ordered_json j;
    j["d"] = p.d();
    j["epsilon"] = p.epsilon();
    j["prefactor_ratio"] = p.c_cjs() / p.c_cg();
    j["x"] = r.x.value;
    j["regime"] = to_string(r.regime);
    j["n_star_exact"] = r.n_star_exact ? ordered_json(*r.n_star_exact) : ordered_json(nullptr);
    j["n_star_log_approx"] = r.n_star_log_approx;
    j["n_star_coarse"] = r.n_star_coarse;
    if (r.n_star_exact && *r.n_star_exact >= 2.0) {
        const CostParams at = p.with_n(*r.n_star_exact);
        j["runtime_at_n_star"] = {{"cg", cg_runtime(at)}, {"cjs", cjs_runtime(at)}};
    }
    if (p.d() == 7 && p.epsilon() == 1e-2 && p.c_cg() == p.c_cjs()) {
        j["published_coarse_value"] = 2.66e8;
        j["coarse_relative_gap"] = (2.66e8 - r.n_star_coarse) / r.n_star_coarse;
    }
    (void)report;
    return j;
}

ordered_json run_curves(const Context& ctx, Report& report) {
    const CurvesOptions& o = ctx.scenario.curves;
    const RuntimeSeries s = runtime_curves(ctx.params, o.n_min, o.n_max, o.points, o.scale);
    ordered_json changes = ordered_json::array();
    for (std::size_t i = 0; i + 1 < s.n_values.size(); ++i) {
        const bool a = s.t_cjs[i] < s.t_cg[i];
        const bool b = s.t_cjs[i + 1] < s.t_cg[i + 1];
        if (a != b) changes.push_back({s.n_values[i], s.n_values[i + 1]});
    }
    report.files.push_back({"runtime_curves.csv", csv_runtime_series(s)});
    return {{"scale", to_string(s.scale)}, {"points", s.n_values.size()}, {"n_min", s.n_values.front()},
            {"n_max", s.n_values.back()},  {"sign_changes", changes},     {"file", "runtime_curves.csv"}};
}

ordered_json run_table_a1(const Context& ctx, Report& report) {
    const PrecisionOptions& o = ctx.scenario.precision;
    const auto rows = regime_table(o.convention);
    ordered_json jrows = ordered_json::array();
    for (const auto& r : rows)
        jrows.push_back({{"epsilon", r.epsilon},
                         {"delta_db", r.delta_db},
                         {"range_error_pct", r.range_error_pct},
                         {"use_case", r.use_case},
                         {"delta_db_display", round_sig(r.delta_db, 2)},
                         {"range_error_pct_display", round_sig(r.range_error_pct, 2)}});
    report.files.push_back({"table_a1.csv", csv_regime_table(rows)});
    report.files.push_back({"table_a1.txt", aligned_regime_table(rows)});
    report.files.push_back({"fig_a1.csv", csv_delta_series(delta_db_series(1e-4, 1e-1, 61, o.convention))});
    return {{"convention", to_string(o.convention)}, {"rows", jrows},
            {"files", {"table_a1.csv", "table_a1.txt", "fig_a1.csv"}}};
}

ordered_json run_fig_a2(const Context& ctx, Report& report) {
    const PrecisionOptions& o = ctx.scenario.precision;
    const int d = ctx.params.d();
    const auto crossings = crossover_vs_precision(d, o.epsilons, o.prefactor_ratio);
    ordered_json rows = ordered_json::array();
    for (const auto& c : crossings)
        rows.push_back({{"epsilon", c.epsilon},
                        {"x", c.crossover.x.value},
                        {"regime", to_string(c.crossover.regime)},
                        {"n_star_exact", c.crossover.n_star_exact ? ordered_json(*c.crossover.n_star_exact)
                                                                  : ordered_json(nullptr)},
                        {"n_star_log_approx", c.crossover.n_star_log_approx},
                        {"n_star_coarse", c.crossover.n_star_coarse}});
    const auto curves = precision_curves(d, o.epsilons, o.prefactor_ratio, o.n_min, o.n_max, o.points);
    report.files.push_back({"fig_a2.csv", csv_precision_curves(curves)});
    return {{"d", d}, {"prefactor_ratio", o.prefactor_ratio}, {"crossovers", rows}, {"file", "fig_a2.csv"}};
}

ordered_json run_estimate(const Context& ctx, Report&) {
    const Scenario& s = ctx.scenario;
    const AnchorEstimate anchor = scherer_anchor();
    const double fitted = fit_prefactor(anchor);
    const double c_cjs = s.estimate.c_cjs.value_or(fitted);

    ordered_json j;
    j["anchor"] = {{"n", anchor.n},
                   {"kappa", anchor.kappa},
                   {"d", anchor.d},
                   {"epsilon", anchor.epsilon},
                   {"with_oracles", counts_json(anchor.with_oracles)},
                   {"without_oracles", counts_json(anchor.without_oracles)}};
    j["prefactor"] = {{"c_cjs", c_cjs},
                      {"source", s.estimate.c_cjs ? "scenario" : "anchor_fit"},
                      {"anchor_denominator", anchor_denominator(anchor)},
                      {"wall_clock", wall_json(c_cjs, wall_clock(c_cjs, s.hardware))}};

    const Extrapolation ex = extrapolate(c_cjs, ctx.params, s.estimate.variant);
    ordered_json jex = wall_json(ex.steps, wall_clock(ex.steps, s.hardware));
    jex["variant"] = to_string(ex.variant);
    jex["n"] = ctx.params.n();
    jex["caveats"] = ex.caveats;
    j["extrapolation"] = jex;

    const HamiltonianAccounting h = hamiltonian_accounting(ctx.params);
    j["hamiltonian"] = {{"subroutine_calls", h.subroutine_calls},
                        {"narrated_subroutine_calls", kNarratedSubroutineCalls},
                        {"dominant_term", h.dominant_term},
                        {"per_call_time_steps", h.per_call_time_steps},
                        {"total_sequential_steps", h.total_sequential_steps},
                        {"matrix_oracle_queries", h.matrix_oracle_queries},
                        {"oracle_circuit_steps", h.oracle_circuit_steps}};

    const ImprovementReport imp = improvement_scenario(ex.steps, s.estimate.improvement_orders, s.hardware);
    ordered_json jimp = wall_json(imp.steps, imp.wall);
    jimp["orders_of_magnitude"] = imp.orders_of_magnitude;
    jimp["base_steps"] = imp.base_steps;
    j["improvement"] = jimp;
    j["caveats"] = {caveats::kSinglePointFit, caveats::kNoErrorCorrection};
    return j;
}

ordered_json run_sparsity(const Context& ctx, Report& report) {
    if (!ctx.scenario.topology) throw ParameterError("topology", "required for the sparsity artifact");
    const MeshTopology& t = *ctx.scenario.topology;
    const SparsityReport& r = *ctx.sparsity;
    report.files.push_back({"sparsity.csv", csv_sparsity(r)});
    report.files.push_back({"mesh_adjacency.txt", ctx.adjacency});
    return {{"topology", to_string(t.kind)},
            {"m", t.m},
            {"edges", *ctx.mesh_edges},
            {"edge_count_closed_form", edge_count(t)},
            {"d", r.d},
            {"boundary_min", r.boundary_min},
            {"histogram", histogram_json(r.histogram)},
            {"files", {"sparsity.csv", "mesh_adjacency.txt"}}};
}

void add_caveat(Report& r, std::string_view c) {
    if (std::find(r.caveats.begin(), r.caveats.end(), c) == r.caveats.end()) r.caveats.emplace_back(c);
}

}  // namespace

Report run_scenario(const Scenario& s) {
    // Validation: every failure names its field.
    at_path("cost_params", [&] { return CostParams(s.cost); });
    if (!(s.hardware.seconds_per_logical_step > 0.0) || !std::isfinite(s.hardware.seconds_per_logical_step))
        throw ParameterError("hardware.seconds_per_logical_step", "must be finite and > 0");
    if (!(s.estimate.improvement_orders >= 0.0))
        throw ParameterError("estimate.improvement_orders", "must be >= 0");
    if (s.estimate.c_cjs && !(*s.estimate.c_cjs > 0.0))
        throw ParameterError("estimate.c_cjs", "must be > 0");
    if (!(s.precision.prefactor_ratio > 0.0)) throw ParameterError("precision.prefactor_ratio", "must be > 0");
    for (double e : s.precision.epsilons)
        if (!(e > 0.0 && e < 1.0)) throw ParameterError("precision.epsilons", "entries must lie strictly inside (0, 1)");

    CostInputs effective = s.cost;
    if (s.kappa_law) effective.kappa = at_path("kappa_law", [&] { return kappa_scaling(*s.kappa_law, s.cost.n); });

    std::optional<SparsityReport> sparsity;
    std::optional<std::uint64_t> mesh_edges;
    std::string adjacency;
    if (s.topology) {
        const Mesh mesh = at_path("topology", [&] { return build_mesh(*s.topology); });
        sparsity = sparsity_parameter(mesh);
        mesh_edges = mesh.edges().size();
        effective.d = sparsity->d;
        std::ostringstream os;
        write_adjacency(mesh, os);
        adjacency = os.str();
    }
    const CostParams params = at_path("cost_params", [&] { return CostParams(effective); });

    Report report;
    report.scenario = to_json(s);
    report.scenario["effective"] = {{"d_requested", s.cost.d},
                                    {"d_effective", params.d()},
                                    {"kappa_requested", s.cost.kappa},
                                    {"kappa_effective", params.kappa()}};
    // Model-wide caveats go on every report; artifact-specific ones are added below.
    add_caveat(report, caveats::kSinglePointFit);
    add_caveat(report, caveats::kNoErrorCorrection);

    const Context ctx{s, params, sparsity, mesh_edges, std::move(adjacency)};
    for (Artifact a : s.outputs) {
        const std::string name(to_string(a));
        try {
            ordered_json result;
            switch (a) {
                case Artifact::Crossover:
                    result = run_crossover(ctx, report);
                    add_caveat(report, caveats::kCoarseApproximation);
                    break;
                case Artifact::Curves: result = run_curves(ctx, report); break;
                case Artifact::TableA1:
                    result = run_table_a1(ctx, report);
                    add_caveat(report, caveats::kDbConvention);
                    add_caveat(report, caveats::kRangeErrorReconstructed);
                    break;
                case Artifact::FigA2: result = run_fig_a2(ctx, report); break;
                case Artifact::Estimate: result = run_estimate(ctx, report); break;
                case Artifact::Sparsity: result = run_sparsity(ctx, report); break;
            }
            report.results[name] = std::move(result);
        } catch (const std::exception& e) {
            report.errors.push_back(name + ": " + e.what());
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_json(const Report& r) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["scenario"] = r.scenario;
    j["results"] = r.results;
    j["errors"] = r.errors;
    j["caveats"] = r.caveats;
    return j.dump(2) + "\n";
}

namespace {

std::string scalar_text(const ordered_json& v) {
    if (v.is_number_float()) return display(v.get<double>(), 4);
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_scalar_array(const ordered_json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& e) { return e.is_primitive(); });
}

void text_tree(const ordered_json& v, int indent, std::string& out) {
    const std::string pad(indent, ' ');
    for (const auto& [key, val] : v.items()) {
        if (val.is_object()) {
            out += pad + key + ":\n";
            text_tree(val, indent + 2, out);
        } else if (val.is_array() && !is_scalar_array(val)) {
            out += pad + key + ":\n";
            for (const auto& e : val) {
                if (e.is_object()) {
                    std::string line;
                    for (const auto& [k, x] : e.items()) {
                        if (!line.empty()) line += ", ";
                        line += k + "=" + (x.is_primitive() ? scalar_text(x) : x.dump());
                    }
                    out += pad + "  - " + line + "\n";
                } else {
                    std::string line;
                    for (const auto& x : e) line += (line.empty() ? "" : " .. ") + scalar_text(x);
                    out += pad + "  - " + line + "\n";
                }
            }
        } else if (val.is_array()) {
            std::string line;
            for (const auto& x : val) line += (line.empty() ? "" : ", ") + scalar_text(x);
            out += pad + key + ": [" + line + "]\n";
        } else {
            out += pad + key + ": " + scalar_text(val) + "\n";
        }
    }
}

}  // namespace

std::string render_text(const Report& r, bool include_caveats) {
    std::string out = std::string(kToolName) + " " + std::string(kToolVersion) + "  scenario: " +
                      r.scenario.value("name", std::string()) + "\n";
    const auto& eff = r.scenario["effective"];
    out += "effective d = " + eff["d_effective"].dump() + " (requested " + eff["d_requested"].dump() +
           "), kappa = " + scalar_text(eff["kappa_effective"]) + "\n";
    for (const auto& [name, result] : r.results.items()) {
        out += "\n[" + name + "]\n";
        ordered_json shown = result;
        if (!include_caveats) shown.erase("caveats");
        if (!include_caveats && shown.contains("extrapolation")) shown["extrapolation"].erase("caveats");
        text_tree(shown, 2, out);
    }
    if (!r.errors.empty()) {
        out += "\nerrors:\n";
        for (const auto& e : r.errors) out += "  - " + e + "\n";
    }
    if (include_caveats && !r.caveats.empty()) {
        out += "\ncaveats:\n";
        for (const auto& c : r.caveats) out += "  - " + c + "\n";
    }
    return out;
}

void write_outputs(const Report& r, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError(dir.string(), "cannot create directory: " + ec.message());
    for (const auto& f : r.files) write_text_file(dir / f.name, f.contents);
}

}  // namespace qrcs
