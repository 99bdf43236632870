#include "qrcs/crossover.hpp"

#include "qrcs/errors.hpp"
#include "qrcs/lambert_w.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qrcs {

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::TwoIntersections: return "two_intersections";
        case Regime::Tangent: return "tangent";
        case Regime::QuantumDominatesAsymptotically: return "quantum_dominates_asymptotically";
    }
    return "?";
}

std::string_view to_string(AxisScale s) {
    return s == AxisScale::Linear ? "linear" : "loglog";
}

AxisScale parse_axis_scale(std::string_view tag) {
    if (tag == "linear") return AxisScale::Linear;
    if (tag == "loglog") return AxisScale::LogLog;
    throw ParameterError("scale", "unknown axis scale '" + std::string(tag) +
                                      "' (expected linear or loglog)");
}

CrossoverParameter crossover_parameter(const CostParams& p) {
    const double eps = p.epsilon();
    const double d6 = std::pow(static_cast<double>(p.d()), 6);
    return {-(p.c_cg() / p.c_cjs()) * eps * eps * std::log(1.0 / eps) / d6};
}

Regime classify_regime(CrossoverParameter x) {
    if (!(x.value < 0.0))
        throw DomainError("crossover parameter must be negative, got " + std::to_string(x.value));
    const double offset = x.value + 1.0 / std::numbers::e;
    if (std::abs(offset) <= kTangentTolerance) return Regime::Tangent;
    return offset > 0.0 ? Regime::TwoIntersections : Regime::QuantumDominatesAsymptotically;
}

CrossoverResult crossover_from_parameter(CrossoverParameter x) {
    CrossoverResult r{x, classify_regime(x), std::nullopt, std::log(-x.value) / x.value,
                      -1.0 / x.value};
    switch (r.regime) {
        case Regime::TwoIntersections:
            r.n_star_exact = lambert_w(LambertBranch::NonPrincipal, x.value) / x.value;
            break;
        case Regime::Tangent:
            // Touching point; x may sit a hair below -1/e inside the tolerance band.
            r.n_star_exact = std::numbers::e;
            break;
        case Regime::QuantumDominatesAsymptotically:
            break;
    }
    return r;
}

CrossoverResult crossover_exact(const CostParams& p) {
    return crossover_from_parameter(crossover_parameter(p));
}

RuntimeSeries runtime_curves(const CostParams& p, double n_min, double n_max, int points,
                             AxisScale scale) {
    if (!(std::isfinite(n_min) && std::isfinite(n_max) && n_min >= 2.0 && n_min < n_max))
        throw RangeError("runtime curves: need 2 <= n_min < n_max, got [" + std::to_string(n_min) +
                         ", " + std::to_string(n_max) + "]");
    if (points < 2)
        throw RangeError("runtime curves: need at least 2 points, got " + std::to_string(points));

    RuntimeSeries s;
    s.scale = scale;
    s.n_values.reserve(points);
    const double last = points - 1;
    for (int i = 0; i < points; ++i) {
        double n;
        if (i == 0) {
            n = n_min;
        } else if (i == points - 1) {
            n = n_max;
        } else if (scale == AxisScale::Linear) {
            n = n_min + (n_max - n_min) * (i / last);
        } else {
            const double lo = std::log(n_min);
            n = std::exp(lo + (std::log(n_max) - lo) * (i / last));
        }
        if (!s.n_values.empty() && !(n > s.n_values.back()))
            throw RangeError("runtime curves: range too narrow for " + std::to_string(points) +
                             " strictly increasing points");
        s.n_values.push_back(n);
    }

    s.t_cg.reserve(points);
    s.t_cjs.reserve(points);
    for (double n : s.n_values) {
        const CostParams at = p.with_n(n);
        s.t_cg.push_back(cg_runtime(at));
        s.t_cjs.push_back(cjs_runtime(at));
    }
    return s;
}

}  // namespace qrcs
