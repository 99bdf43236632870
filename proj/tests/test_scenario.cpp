#include "qrcs/caveats.hpp"
#include "qrcs/csv.hpp"
#include "qrcs/errors.hpp"
#include "qrcs/scenario.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qrcs;
using nlohmann::json;
using doctest::Approx;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string field_of(const json& doc) {
    try {
        scenario_from_json(doc);
    } catch (const ParameterError& e) {
        return e.field();
    }
    return "<no error>";
}

const OutputFile* find_file(const Report& r, std::string_view name) {
    for (const auto& f : r.files)
        if (f.name == name) return &f;
    return nullptr;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

bool has_caveat(const Report& r, std::string_view c) {
    return std::find(r.caveats.begin(), r.caveats.end(), c) != r.caveats.end();
}

}  // namespace

TEST_CASE("scenario parsing") {
    const Scenario s = scenario_from_json(json::parse(R"({
        "name": "cube",
        "cost_params": {"n": 1e9, "d": 9, "kappa": 50, "epsilon": 0.001, "c_cg": 2, "c_cjs": 3},
        "kappa_law": {"mode": "unpreconditioned", "dims": 3},
        "topology": {"kind": "cubic3d", "m": 4},
        "hardware": {"seconds_per_logical_step": 1e-6},
        "outputs": ["crossover", "sparsity"],
        "curves": {"n_min": 10, "n_max": 1000, "points": 7, "scale": "loglog"},
        "precision": {"epsilons": [0.2], "convention": "plus_side", "prefactor_ratio": 4,
                      "n_min": 5, "n_max": 50, "points": 3},
        "estimate": {"c_cjs": 1e10, "variant": "cjs_cks", "improvement_orders": 2}
    })"));
    CHECK(s.name == "cube");
    CHECK(s.cost == CostInputs{.n = 1e9, .d = 9, .kappa = 50, .epsilon = 1e-3, .c_cg = 2, .c_cjs = 3});
    REQUIRE(s.kappa_law);
    CHECK(*s.kappa_law == KappaScalingLaw::unpreconditioned(3));
    REQUIRE(s.topology);
    CHECK(*s.topology == MeshTopology{MeshKind::Cubic3D, 4});
    CHECK(s.hardware.seconds_per_logical_step == 1e-6);
    CHECK(s.outputs == std::vector<Artifact>{Artifact::Crossover, Artifact::Sparsity});
    CHECK(s.curves.scale == AxisScale::LogLog);
    CHECK(s.curves.points == 7);
    CHECK(s.precision.epsilons == std::vector<double>{0.2});
    CHECK(s.precision.convention == DbConvention::PlusSide);
    CHECK(s.precision.points == 3);
    CHECK(s.estimate.c_cjs == 1e10);
    CHECK(s.estimate.variant == ModelVariant::CJS_CKS);
    CHECK(s.estimate.improvement_orders == 2);

    // Round trip through the echo.
    const Scenario back = scenario_from_json(json::parse(to_json(s).dump()));
    CHECK(back.cost == s.cost);
    CHECK(back.kappa_law == s.kappa_law);
    CHECK(back.topology == s.topology);
    CHECK(back.outputs == s.outputs);
    CHECK(to_json(back) == to_json(s));

    const Scenario defaults = scenario_from_json(json::object());
    CHECK(defaults.name == "anchor");
    CHECK(defaults.cost.n == 332020680.0);
    CHECK(defaults.outputs.empty());
}

TEST_CASE("scenario parse errors name the field") {
    CHECK(field_of(json::parse(R"({"cost_params": {"epsilon": 1.5}})")) == "cost_params.epsilon");
    CHECK(field_of(json::parse(R"({"cost_params": {"epsilon": "small"}})")) == "cost_params.epsilon");
    CHECK(field_of(json::parse(R"({"cost_params": {"d": 2.5}})")) == "cost_params.d");
    CHECK(field_of(json::parse(R"({"cost_params": {"sigma": 1}})")) == "cost_params.sigma");
    CHECK(field_of(json::parse(R"({"colour": "red"})")) == "colour");
    CHECK(field_of(json::parse(R"({"outputs": ["crossover", "plot"]})")) == "outputs");
    CHECK(field_of(json::parse(R"({"outputs": "crossover"})")) == "outputs");
    CHECK(field_of(json::parse(R"({"topology": {"kind": "hex", "m": 3}})")) == "topology");
    CHECK(field_of(json::parse(R"({"kappa_law": {"mode": "fixed"}})")) == "kappa_law.value");
    CHECK(field_of(json::parse(R"({"kappa_law": {"mode": "unpreconditioned", "dims": 5}})")) ==
          "kappa_law.dims");
    CHECK(field_of(json::parse(R"({"kappa_law": {"mode": "bogus"}})")) == "kappa_law.mode");
    CHECK(field_of(json::parse(R"({"curves": {"scale": "semilog"}})")) == "curves.scale");
    CHECK(field_of(json::parse(R"({"estimate": {"variant": "hhl"}})")) == "estimate.variant");
    CHECK(field_of(json::parse(R"([1, 2])")) == "scenario");
}

TEST_CASE("run_scenario validation") {
    Scenario s;
    s.cost.epsilon = 0.0;
    try {
        run_scenario(s);
        FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
        CHECK(e.field() == "cost_params.epsilon");
    }
    s = Scenario{};
    s.hardware.seconds_per_logical_step = -1;
    CHECK_THROWS_AS(run_scenario(s), ParameterError);
    s = Scenario{};
    s.topology = MeshTopology{MeshKind::Square2D, 1};
    CHECK_THROWS_AS(run_scenario(s), ParameterError);
    s = Scenario{};
    s.precision.epsilons = {0.1, 1.0};
    CHECK_THROWS_AS(run_scenario(s), ParameterError);
}

TEST_CASE("anchor scenario with crossover and estimate") {
    Scenario s;
    s.outputs = {Artifact::Crossover, Artifact::Estimate};
    const Report r = run_scenario(s);
    REQUIRE(r.ok());
    const auto& c = r.results.at("crossover");
    CHECK(rel(c.at("n_star_exact").get<double>(), 5.74e9) < 0.01);
    CHECK(rel(c.at("n_star_log_approx").get<double>(), 4.95e9) < 0.01);
    CHECK(rel(c.at("n_star_coarse").get<double>(), 2.56e8) < 0.01);
    CHECK(c.at("published_coarse_value").get<double>() == 2.66e8);
    CHECK(c.at("regime") == "two_intersections");

    const auto& e = r.results.at("estimate");
    CHECK(rel(e.at("prefactor").at("c_cjs").get<double>(), 1.11e14) < 0.01);
    CHECK(rel(e.at("extrapolation").at("steps").get<double>(), 1.8e29) < 1e-12);
    CHECK(rel(e.at("extrapolation").at("years").get<double>(), 1.4e17) < 0.05);
    CHECK(e.at("hamiltonian").at("subroutine_calls").get<double>() == 1.2e5);
    CHECK(rel(e.at("improvement").at("universe_ages").get<double>(), 100.0) < 0.1);

    CHECK(has_caveat(r, caveats::kSinglePointFit));
    CHECK(has_caveat(r, caveats::kNoErrorCorrection));
    CHECK(has_caveat(r, caveats::kCoarseApproximation));
    CHECK_FALSE(has_caveat(r, caveats::kDbConvention));
}

TEST_CASE("artifacts run in declaration order") {
    Scenario s;
    s.outputs = {Artifact::Estimate, Artifact::TableA1, Artifact::Crossover};
    const Report r = run_scenario(s);
    std::vector<std::string> keys;
    for (const auto& [k, v] : r.results.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"estimate", "table_a1", "crossover"});
}

TEST_CASE("topology overrides d") {
    Scenario s;
    s.cost.d = 3;
    s.topology = MeshTopology{MeshKind::Square2D, 6};
    s.outputs = {Artifact::Sparsity, Artifact::Crossover};
    const Report r = run_scenario(s);
    REQUIRE(r.ok());
    CHECK(r.scenario.at("effective").at("d_requested") == 3);
    CHECK(r.scenario.at("effective").at("d_effective") == 7);
    CHECK(r.results.at("sparsity").at("d") == 7);
    CHECK(r.results.at("sparsity").at("boundary_min") == 4);
    CHECK(r.results.at("crossover").at("d") == 7);
    REQUIRE(find_file(r, "sparsity.csv"));
    CHECK(first_line(find_file(r, "sparsity.csv")->contents) == "count,edges");
    REQUIRE(find_file(r, "mesh_adjacency.txt"));
    CHECK(std::count(find_file(r, "mesh_adjacency.txt")->contents.begin(),
                     find_file(r, "mesh_adjacency.txt")->contents.end(), '\n') == 25);
}

TEST_CASE("kappa law sets effective kappa") {
    Scenario s;
    s.cost.n = 1e6;
    s.kappa_law = KappaScalingLaw::scherer_3d();
    const Report r = run_scenario(s);
    CHECK(r.scenario.at("effective").at("kappa_requested").get<double>() == 1e4);
    CHECK(r.scenario.at("effective").at("kappa_effective").get<double>() == Approx(1e4).epsilon(1e-14));
    s.kappa_law = KappaScalingLaw::scherer_2d();
    CHECK(run_scenario(s).scenario.at("effective").at("kappa_effective").get<double>() == 1e6);
}

TEST_CASE("empty outputs give echo and caveats only") {
    const Report r = run_scenario(Scenario{});
    CHECK(r.ok());
    CHECK(r.results.empty());
    CHECK(r.files.empty());
    CHECK_FALSE(r.caveats.empty());
    CHECK(r.scenario.at("name") == "anchor");
    const json doc = json::parse(render_json(r));
    CHECK(doc.at("tool") == "qrcs");
    CHECK(doc.at("version") == std::string(kToolVersion));
    CHECK(doc.at("results").empty());
}

TEST_CASE("artifact failures are collected") {
    Scenario s;
    s.outputs = {Artifact::Crossover, Artifact::Sparsity, Artifact::Curves};
    s.curves.n_min = 1e10;
    s.curves.n_max = 1e6;
    const Report r = run_scenario(s);
    CHECK_FALSE(r.ok());
    REQUIRE(r.errors.size() == 2);
    CHECK(r.errors[0].rfind("sparsity: ", 0) == 0);
    CHECK(r.errors[1].rfind("curves: ", 0) == 0);
    CHECK(r.results.contains("crossover"));
    CHECK_FALSE(r.results.contains("sparsity"));
    CHECK(json::parse(render_json(r)).at("errors").size() == 2);
}

TEST_CASE("reports are byte-identical across runs") {
    Scenario s;
    s.topology = MeshTopology{MeshKind::TetFivePerCube3D, 4};
    s.outputs = {Artifact::Crossover, Artifact::Curves, Artifact::TableA1, Artifact::FigA2,
                 Artifact::Estimate, Artifact::Sparsity};
    const Report a = run_scenario(s);
    const Report b = run_scenario(s);
    CHECK(a.ok());
    CHECK(render_json(a) == render_json(b));
    CHECK(render_text(a, true) == render_text(b, true));
    REQUIRE(a.files.size() == b.files.size());
    for (std::size_t i = 0; i < a.files.size(); ++i) {
        CHECK(a.files[i].name == b.files[i].name);
        CHECK(a.files[i].contents == b.files[i].contents);
    }
}

TEST_CASE("output files and CSV format") {
    Scenario s;
    s.outputs = {Artifact::Curves, Artifact::TableA1, Artifact::FigA2};
    const Report r = run_scenario(s);
    REQUIRE(r.ok());
    const std::pair<const char*, const char*> headers[] = {
        {"runtime_curves.csv", "N,t_cg,t_cjs"},
        {"table_a1.csv", "epsilon,delta_db,range_error_pct,use_case"},
        {"fig_a1.csv", "epsilon,delta_db"},
        {"fig_a2.csv", "epsilon,algorithm,N,t"},
    };
    for (auto [name, header] : headers) {
        const OutputFile* f = find_file(r, name);
        REQUIRE_MESSAGE(f, name);
        CHECK(first_line(f->contents) == header);
        CHECK(f->contents.find('\r') == std::string::npos);
        CHECK(f->contents.back() == '\n');
    }
    const std::string& curves = find_file(r, "runtime_curves.csv")->contents;
    CHECK(std::count(curves.begin(), curves.end(), '\n') == 101);
    const std::string& a2 = find_file(r, "fig_a2.csv")->contents;
    CHECK(std::count(a2.begin(), a2.end(), '\n') == 1 + 3 * 2 * 201);
    CHECK(r.results.at("curves").at("sign_changes").size() == 1);

    const std::string& table = find_file(r, "table_a1.csv")->contents;
    std::istringstream in(table);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line.rfind("1.0000000000000000e-04,", 0) == 0);
    REQUIRE(find_file(r, "table_a1.txt"));
    CHECK(find_file(r, "table_a1.txt")->contents.find("Route planning") != std::string::npos);
    CHECK(has_caveat(r, caveats::kDbConvention));
}

TEST_CASE("format_real") {
    CHECK(format_real(1.0) == "1.0000000000000000e+00");
    CHECK(format_real(-2.5e-300) == "-2.5000000000000000e-300");
    CHECK(format_real(0.1) == "1.0000000000000001e-01");
    CHECK(std::stod(format_real(0.1)) == 0.1);
}

TEST_CASE("write_outputs and IO errors") {
    Scenario s;
    s.outputs = {Artifact::TableA1};
    const Report r = run_scenario(s);
    const auto dir = std::filesystem::temp_directory_path() / "qrcs_test_write_outputs";
    std::filesystem::remove_all(dir);
    write_outputs(r, dir / "nested");
    std::ifstream in(dir / "nested" / "table_a1.csv");
    std::stringstream got;
    got << in.rdbuf();
    CHECK(got.str() == find_file(r, "table_a1.csv")->contents);

    std::ofstream(dir / "blocker") << "x";
    try {
        write_text_file(dir / "blocker" / "out.csv", "a\n");
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(e.path().find("blocker") != std::string::npos);
    }
    CHECK_THROWS_AS(write_outputs(r, dir / "blocker"), IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("text rendering") {
    Scenario s;
    s.outputs = {Artifact::Crossover};
    const Report r = run_scenario(s);
    const std::string with = render_text(r, true);
    const std::string without = render_text(r, false);
    CHECK(with.find(std::string(caveats::kCoarseApproximation)) != std::string::npos);
    CHECK(without.find(std::string(caveats::kCoarseApproximation)) == std::string::npos);
    CHECK(without.find("n_star_exact") != std::string::npos);
    CHECK(render_json(r).find(std::string(caveats::kCoarseApproximation)) != std::string::npos);
}
