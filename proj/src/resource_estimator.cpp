#include "qrcs/resource_estimator.hpp"

#include "qrcs/caveats.hpp"
#include "qrcs/errors.hpp"

#include <cmath>

namespace qrcs {

AnchorEstimate scherer_anchor() {
    return AnchorEstimate{
        .n = 332020680.0,
        .kappa = 1e4,
        .d = 7,
        .epsilon = 1e-2,
        .with_oracles = {.logical_qubits = 3e8, .steps = 1.8e29, .toffoli = 9.5e28},
        .without_oracles = {.logical_qubits = 341, .steps = 3.30e25, .toffoli = 1.29e25},
    };
}

void validate(const AnchorEstimate& a) {
    // Reuses the CostParams checks for the instance itself.
    CostParams(CostInputs{.n = a.n, .d = a.d, .kappa = a.kappa, .epsilon = a.epsilon});
    auto positive = [](const char* field, const ResourceCounts& c) {
        if (!(c.logical_qubits > 0 && c.steps > 0 && c.toffoli > 0))
            throw ParameterError(field, "resource counts must be positive");
    };
    positive("with_oracles", a.with_oracles);
    positive("without_oracles", a.without_oracles);
    if (a.with_oracles.logical_qubits < a.without_oracles.logical_qubits ||
        a.with_oracles.steps < a.without_oracles.steps ||
        a.with_oracles.toffoli < a.without_oracles.toffoli)
        throw ParameterError("with_oracles", "must dominate without_oracles componentwise");
}

double anchor_denominator(const AnchorEstimate& a) {
    validate(a);
    return a.kappa * std::pow(static_cast<double>(a.d), 7) / (a.epsilon * a.epsilon) *
           std::log(a.n);
}

double fit_prefactor(const AnchorEstimate& a) {
    return a.with_oracles.steps / anchor_denominator(a);
}

Extrapolation extrapolate(double c_cjs, const CostParams& p, ModelVariant variant) {
    const CostParams fitted = p.with_prefactors(p.c_cg(), c_cjs);
    return Extrapolation{runtime(fitted, variant), variant,
                         {std::string(caveats::kSinglePointFit)}};
}

WallClock wall_clock(double steps, const HardwareProfile& hw) {
    if (!(steps > 0.0) || !std::isfinite(steps))
        throw ParameterError("steps", "must be finite and > 0");
    if (!(hw.seconds_per_logical_step > 0.0) || !std::isfinite(hw.seconds_per_logical_step))
        throw ParameterError("seconds_per_logical_step", "must be finite and > 0");
    const double seconds = steps * hw.seconds_per_logical_step;
    const double years = seconds / HardwareProfile::kSecondsPerYear;
    return WallClock{seconds, years, years / HardwareProfile::kUniverseAgeYears};
}

ImprovementReport improvement_scenario(double base_steps, double orders, const HardwareProfile& hw) {
    if (!(base_steps > 0.0) || !std::isfinite(base_steps))
        throw ParameterError("base_steps", "must be finite and > 0");
    if (!(orders >= 0.0) || !std::isfinite(orders))
        throw ParameterError("orders_of_magnitude", "must be finite and >= 0");
    const double steps = base_steps / std::pow(10.0, orders);
    return ImprovementReport{base_steps, orders, steps, wall_clock(steps, hw)};
}

HamiltonianAccounting hamiltonian_accounting(const CostParams& p, const HamiltonianCalibration& cal) {
    // Written in 1/eps so decimal precisions such as 1e-2 give round results.
    const double inv_eps = 1.0 / p.epsilon();
    HamiltonianAccounting h{};
    h.subroutine_calls = cal.calls_coefficient * inv_eps * inv_eps;
    h.dominant_term = std::pow(p.kappa(), 1.25) * std::pow(inv_eps, 1.5);
    h.per_call_time_steps = cal.per_call_coefficient * h.dominant_term;
    h.total_sequential_steps = h.subroutine_calls * h.per_call_time_steps;
    h.matrix_oracle_queries = cal.queries_per_step * h.total_sequential_steps;
    h.oracle_circuit_steps = cal.oracle_circuit_steps;
    return h;
}

}  // namespace qrcs
