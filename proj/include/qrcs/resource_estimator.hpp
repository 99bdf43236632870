#pragma once

// Concrete resource anchoring: fit the CJS runtime prefactor to one published resource
// estimate, extrapolate it, and turn logical time steps into wall-clock time.

#include "qrcs/cost_models.hpp"

#include <string>
#include <vector>

namespace qrcs {

struct ResourceCounts {
    double logical_qubits;
    double steps;
    double toffoli;
};

/// A published concrete resource estimate for one CJS problem instance.
struct AnchorEstimate {
    double n;
    double kappa;
    int d;
    double epsilon;
    ResourceCounts with_oracles;
    ResourceCounts without_oracles;
};

/// The 2D square-mesh instance: N = 332,020,680 edges, kappa = 1e4, d = 7, eps = 1e-2.
AnchorEstimate scherer_anchor();

/// Throws ParameterError if any field is non-positive, the instance parameters are invalid,
/// or the with-oracle counts do not dominate the without-oracle counts.
void validate(const AnchorEstimate& anchor);

struct HardwareProfile {
    double seconds_per_logical_step = 25e-6;

    static constexpr double kUniverseAgeYears = 1.38e10;
    static constexpr double kSecondsPerYear = 365.25 * 86400.0;
};

struct WallClock {
    double seconds;
    double years;
    double universe_ages;
};

/// kappa * d^7 * eps^-2 * ln N at the anchor instance.
double anchor_denominator(const AnchorEstimate& anchor);

/// C_CJS = steps_with_oracles / (kappa d^7 eps^-2 ln N).
double fit_prefactor(const AnchorEstimate& anchor);

struct Extrapolation {
    double steps;
    ModelVariant variant;
    std::vector<std::string> caveats;
};

/// Runtime of `variant` at p with the quantum prefactor replaced by c_cjs.
/// The classical prefactor of p is kept for ModelVariant::CG.
Extrapolation extrapolate(double c_cjs, const CostParams& p, ModelVariant variant);

/// Throws ParameterError unless steps > 0 and the profile is positive.
WallClock wall_clock(double steps, const HardwareProfile& hw = {});

struct ImprovementReport {
    double base_steps;
    double orders_of_magnitude;
    double steps;
    WallClock wall;
};

/// Divides base_steps by 10^orders and recomputes the wall clock. orders must be >= 0.
ImprovementReport improvement_scenario(double base_steps, double orders_of_magnitude,
                                       const HardwareProfile& hw = {});

struct HamiltonianCalibration {
    double calls_coefficient = 12.0;      // calls ~ coefficient * eps^-2
    double per_call_coefficient = 2.5e4;  // per-call steps ~ coefficient * kappa^(5/4) / eps^(3/2)
    double queries_per_step = 1e20 / 3e17;
    double oracle_circuit_steps = 1e8;
};

struct HamiltonianAccounting {
    double subroutine_calls;
    double dominant_term;  // kappa^(5/4) / eps^(3/2)
    double per_call_time_steps;
    double total_sequential_steps;
    double matrix_oracle_queries;
    double oracle_circuit_steps;
};

HamiltonianAccounting hamiltonian_accounting(const CostParams& p,
                                             const HamiltonianCalibration& cal = {});

/// Call count narrated alongside the anchor ("nearly 200,000"), above the 12 eps^-2 estimate.
inline constexpr double kNarratedSubroutineCalls = 2e5;

}  // namespace qrcs
