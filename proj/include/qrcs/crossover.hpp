#pragma once

// Problem size N* above which the CJS runtime stays below the CG runtime.
//
// Equating C_CG kappa d ln(1/eps) N with C_CJS kappa d^7 eps^-2 ln N gives
// ln N = -x N with x = -(C_CG/C_CJS) eps^2 ln(1/eps) / d^6, hence
// N* = W-1(x) / x on the non-principal Lambert W branch.

#include "qrcs/cost_models.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace qrcs {

/// The dimensionless crossover parameter x. Negative for every valid CostParams.
struct CrossoverParameter {
    double value;
};

enum class Regime {
    TwoIntersections,                // x > -1/e: curves cross twice, N* is the upper crossing
    Tangent,                         // x == -1/e within tolerance: curves touch at N = e
    QuantumDominatesAsymptotically,  // x < -1/e: CJS below CG everywhere
};

std::string_view to_string(Regime r);

/// Absolute tolerance on x + 1/e for the Tangent regime.
inline constexpr double kTangentTolerance = 1e-12;

struct CrossoverResult {
    CrossoverParameter x;
    Regime regime;
    std::optional<double> n_star_exact;  // W-1(x)/x; absent when the quantum curve dominates
    double n_star_log_approx;            // ln(-x)/x
    double n_star_coarse;                // -1/x
};

CrossoverParameter crossover_parameter(const CostParams& p);

/// Throws DomainError for x >= 0.
Regime classify_regime(CrossoverParameter x);

/// Crossover from the raw parameter. Throws DomainError for x >= 0.
CrossoverResult crossover_from_parameter(CrossoverParameter x);

CrossoverResult crossover_exact(const CostParams& p);

enum class AxisScale { Linear, LogLog };

std::string_view to_string(AxisScale s);
/// Accepts "linear" or "loglog".
AxisScale parse_axis_scale(std::string_view tag);

struct RuntimeSeries {
    std::vector<double> n_values;
    std::vector<double> t_cg;
    std::vector<double> t_cjs;
    AxisScale scale = AxisScale::Linear;
};

/// Samples CG and CJS runtimes on [n_min, n_max]: uniform in N (Linear) or in ln N (LogLog).
/// Endpoints are hit exactly. Throws RangeError unless 2 <= n_min < n_max and points >= 2.
RuntimeSeries runtime_curves(const CostParams& p, double n_min, double n_max, int points,
                             AxisScale scale);

}  // namespace qrcs
