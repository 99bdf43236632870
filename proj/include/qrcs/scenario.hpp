#pragma once

// Scenario files and the reports they produce.
//
// A scenario names the cost parameters, optional kappa law and mesh topology, a hardware
// profile, and the list of artifacts to compute. Running it yields a Report whose JSON
// rendering is deterministic: identical scenarios give byte-identical output.

#include "qrcs/cost_models.hpp"
#include "qrcs/crossover.hpp"
#include "qrcs/mesh.hpp"
#include "qrcs/precision.hpp"
#include "qrcs/resource_estimator.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qrcs {

enum class Artifact { Crossover, Curves, TableA1, FigA2, Estimate, Sparsity };

std::string_view to_string(Artifact a);
/// Accepts crossover, curves, table_a1, fig_a2, estimate, sparsity.
Artifact parse_artifact(std::string_view tag);

struct CurvesOptions {
    double n_min = 1e6;
    double n_max = 1e10;
    int points = 100;
    AxisScale scale = AxisScale::Linear;
};

struct PrecisionOptions {
    std::vector<double> epsilons{1e-1, 1e-2, 1e-3};
    DbConvention convention = DbConvention::WorstSide;
    double prefactor_ratio = 1.0;  // C_CJS / C_CG for the crossover sweep
    double n_min = 1e3;
    double n_max = 1e13;
    int points = 201;
};

struct EstimateOptions {
    std::optional<double> c_cjs;  // fitted from the anchor when absent
    ModelVariant variant = ModelVariant::CJS;
    double improvement_orders = 5.0;
};

struct Scenario {
    std::string name = "anchor";
    /// Defaults to the published 2D anchor instance with C_CG = C_CJS = 1.
    CostInputs cost{.n = 332020680.0, .d = 7, .kappa = 1e4, .epsilon = 1e-2, .c_cg = 1.0, .c_cjs = 1.0};
    std::optional<KappaScalingLaw> kappa_law;
    std::optional<MeshTopology> topology;
    HardwareProfile hardware;
    std::vector<Artifact> outputs;
    CurvesOptions curves;
    PrecisionOptions precision;
    EstimateOptions estimate;
};

/// Parses a scenario document. Unknown keys and bad values raise ParameterError naming
/// the offending field (dotted path, e.g. "cost_params.epsilon").
Scenario scenario_from_json(const nlohmann::json& doc);
Scenario load_scenario(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const Scenario& s);

struct OutputFile {
    std::string name;
    std::string contents;
};

struct Report {
    nlohmann::ordered_json scenario;  // echo, including requested and effective d / kappa
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    std::vector<std::string> errors;  // "<artifact>: <message>"
    std::vector<std::string> caveats;
    std::vector<OutputFile> files;    // CSV and text dumps, written by write_outputs

    bool ok() const noexcept { return errors.empty(); }
};

inline constexpr std::string_view kToolName = "qrcs";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Validates the scenario (ParameterError on failure), then computes every requested
/// artifact in declaration order. Per-artifact failures are collected in Report::errors.
Report run_scenario(const Scenario& s);

std::string render_json(const Report& r);
/// Human-readable summary with display rounding. Caveats are appended when requested.
std::string render_text(const Report& r, bool include_caveats);

/// Writes Report::files into `dir` (created if missing). Throws IoError.
void write_outputs(const Report& r, const std::filesystem::path& dir);

}  // namespace qrcs
