// qrcs: classical-vs-quantum feasibility analyzer for RCS linear systems.
//
//   qrcs crossover --epsilon 1e-2 --d 7
//   qrcs sparsity  --topology square2d --mesh-size 6
//   qrcs estimate  [--variant cjs_cks] [--improvement-orders 5]
//   qrcs precision [--convention plus_side]
//   qrcs curves    --n-min 1e6 --n-max 1e10 --points 100 --scale linear
//   qrcs scenario  FILE.json [flags override file values]
//
// Common flags: --format text|json, --out DIR (CSV and dump files).
// Exit status: 0 success, 1 an artifact failed, 2 invalid input.

#include "qrcs/errors.hpp"
#include "qrcs/scenario.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct Overrides {
    std::optional<std::string> name;
    std::optional<double> n, kappa, epsilon, c_cg, c_cjs;
    std::optional<int> d;
    std::optional<std::string> kappa_law;
    std::optional<double> kappa_value;
    std::optional<int> dims;
    std::optional<std::string> topology;
    std::optional<int> mesh_size;
    std::optional<double> seconds_per_step;
    std::vector<std::string> outputs;
    std::optional<double> n_min, n_max;
    std::optional<int> points;
    std::optional<std::string> scale;
    std::vector<double> epsilons;
    std::optional<std::string> convention;
    std::optional<double> prefactor_ratio;
    std::optional<std::string> variant;
    std::optional<double> estimate_c_cjs;
    std::optional<double> improvement_orders;

    std::string format = "text";
    std::optional<std::string> out_dir;
};

void add_flags(CLI::App* app, Overrides& o) {
    app->add_option("--name", o.name, "Scenario name");
    app->add_option("--n", o.n, "Problem size N (edges)");
    app->add_option("--d", o.d, "Sparsity parameter d");
    app->add_option("--kappa", o.kappa, "Condition number");
    app->add_option("--epsilon", o.epsilon, "Relative precision, strictly inside (0, 1)");
    app->add_option("--c-cg", o.c_cg, "Classical prefactor C_CG");
    app->add_option("--c-cjs", o.c_cjs, "Quantum prefactor C_CJS used for crossover and curves");
    app->add_option("--kappa-law", o.kappa_law, "fixed | unpreconditioned | scherer2d | scherer3d");
    app->add_option("--kappa-value", o.kappa_value, "Value for --kappa-law fixed");
    app->add_option("--dims", o.dims, "Spatial dimensions for --kappa-law unpreconditioned");
    app->add_option("--topology", o.topology, "square2d | triangular2d | cubic3d | tet6 | tet5");
    app->add_option("--mesh-size", o.mesh_size, "Vertices per side of the mesh");
    app->add_option("--seconds-per-logical-step", o.seconds_per_step, "Hardware logical step time");
    app->add_option("--outputs", o.outputs, "Artifacts: crossover curves table_a1 fig_a2 estimate sparsity");
    app->add_option("--n-min", o.n_min, "Lower end of sampled N range");
    app->add_option("--n-max", o.n_max, "Upper end of sampled N range");
    app->add_option("--points", o.points, "Number of samples");
    app->add_option("--scale", o.scale, "linear | loglog");
    app->add_option("--epsilons", o.epsilons, "Precision values for the precision sweep");
    app->add_option("--convention", o.convention, "plus_side | worst_side");
    app->add_option("--prefactor-ratio", o.prefactor_ratio, "C_CJS / C_CG for the precision sweep");
    app->add_option("--variant", o.variant, "cg | cjs | cjs_with_correction | cjs_cks");
    app->add_option("--estimate-c-cjs", o.estimate_c_cjs, "Override the fitted C_CJS for estimates");
    app->add_option("--improvement-orders", o.improvement_orders, "Orders of magnitude removed");
    app->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app->add_option("--out", o.out_dir, "Directory for CSV and dump files");
}

void apply(const Overrides& o, qrcs::Scenario& s) {
    using namespace qrcs;
    if (o.name) s.name = *o.name;
    if (o.n) s.cost.n = *o.n;
    if (o.d) s.cost.d = *o.d;
    if (o.kappa) s.cost.kappa = *o.kappa;
    if (o.epsilon) s.cost.epsilon = *o.epsilon;
    if (o.c_cg) s.cost.c_cg = *o.c_cg;
    if (o.c_cjs) s.cost.c_cjs = *o.c_cjs;
    if (o.kappa_law) {
        const std::string& m = *o.kappa_law;
        if (m == "fixed")
            s.kappa_law = KappaScalingLaw::fixed(o.kappa_value.value_or(s.cost.kappa));
        else if (m == "unpreconditioned")
            s.kappa_law = KappaScalingLaw::unpreconditioned(o.dims.value_or(0));
        else if (m == "scherer2d")
            s.kappa_law = KappaScalingLaw::scherer_2d();
        else if (m == "scherer3d")
            s.kappa_law = KappaScalingLaw::scherer_3d();
        else
            throw ParameterError("kappa-law", "must be fixed, unpreconditioned, scherer2d or scherer3d");
    }
    if (o.topology || o.mesh_size) {
        MeshTopology t = s.topology.value_or(MeshTopology{MeshKind::Square2D, 8});
        if (o.topology) t.kind = parse_mesh_kind(*o.topology);
        if (o.mesh_size) t.m = *o.mesh_size;
        s.topology = t;
    }
    if (o.seconds_per_step) s.hardware.seconds_per_logical_step = *o.seconds_per_step;
    if (!o.outputs.empty()) {
        s.outputs.clear();
        for (const auto& a : o.outputs) s.outputs.push_back(parse_artifact(a));
    }
    if (o.n_min) s.curves.n_min = s.precision.n_min = *o.n_min;
    if (o.n_max) s.curves.n_max = s.precision.n_max = *o.n_max;
    if (o.points) s.curves.points = s.precision.points = *o.points;
    if (o.scale) s.curves.scale = parse_axis_scale(*o.scale);
    if (!o.epsilons.empty()) s.precision.epsilons = o.epsilons;
    if (o.convention) s.precision.convention = parse_db_convention(*o.convention);
    if (o.prefactor_ratio) s.precision.prefactor_ratio = *o.prefactor_ratio;
    if (o.variant) s.estimate.variant = parse_model_variant(*o.variant);
    if (o.estimate_c_cjs) s.estimate.c_cjs = *o.estimate_c_cjs;
    if (o.improvement_orders) s.estimate.improvement_orders = *o.improvement_orders;
}

bool caveats_suppressed() {
    const char* v = std::getenv("QRCS_NO_CAVEATS");
    return v != nullptr && std::string(v) == "1";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical-vs-quantum feasibility analyzer for radar-cross-section linear systems"};
    app.require_subcommand(1);

    Overrides o;
    std::string scenario_file;

    struct Command {
        const char* name;
        const char* help;
        std::vector<qrcs::Artifact> outputs;
    };
    const std::vector<Command> commands{
        {"crossover", "Crossover problem size N* between CG and CJS", {qrcs::Artifact::Crossover}},
        {"sparsity", "Sparsity parameter d of a regular mesh", {qrcs::Artifact::Sparsity}},
        {"estimate", "Anchored resource and wall-clock estimates", {qrcs::Artifact::Estimate}},
        {"precision", "Precision regimes and crossover vs precision", {qrcs::Artifact::TableA1, qrcs::Artifact::FigA2}},
        {"curves", "CG and CJS runtime curves over N", {qrcs::Artifact::Curves}},
        {"scenario", "Run a JSON scenario file", {}},
    };
    std::vector<CLI::App*> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_flags(sub, o);
        subs.push_back(sub);
    }
    subs.back()->add_option("file", scenario_file, "Scenario JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    qrcs::Report report;
    try {
        qrcs::Scenario s;
        for (std::size_t i = 0; i < commands.size(); ++i) {
            if (!subs[i]->parsed()) continue;
            if (i + 1 == commands.size()) {
                s = qrcs::load_scenario(scenario_file);
            } else {
                s.name = commands[i].name;
                s.outputs = commands[i].outputs;
                if (commands[i].outputs.front() == qrcs::Artifact::Sparsity && !s.topology)
                    s.topology = qrcs::MeshTopology{qrcs::MeshKind::Square2D, 8};
            }
        }
        apply(o, s);
        report = qrcs::run_scenario(s);
        if (o.out_dir) qrcs::write_outputs(report, *o.out_dir);
    } catch (const qrcs::Error& e) {
        std::cerr << "qrcs: " << e.what() << "\n";
        return 2;
    }

    if (o.format == "json")
        std::cout << qrcs::render_json(report);
    else
        std::cout << qrcs::render_text(report, !caveats_suppressed());
    for (const auto& e : report.errors) std::cerr << "qrcs: " << e << "\n";
    return report.ok() ? 0 : 1;
}
