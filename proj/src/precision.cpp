#include "qrcs/precision.hpp"

#include "qrcs/errors.hpp"

#include <array>
#include <cmath>

namespace qrcs {

std::string_view to_string(DbConvention c) {
    return c == DbConvention::PlusSide ? "plus_side" : "worst_side";
}

DbConvention parse_db_convention(std::string_view tag) {
    if (tag == "plus_side") return DbConvention::PlusSide;
    if (tag == "worst_side") return DbConvention::WorstSide;
    throw ParameterError("convention", "unknown dB convention '" + std::string(tag) +
                                           "' (expected plus_side or worst_side)");
}

double delta_db(double epsilon, DbConvention convention) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw DomainError("delta_db: epsilon must lie strictly inside (0, 1), got " +
                          std::to_string(epsilon));
    // log1p keeps full relative accuracy for small eps.
    const double ln_ratio = convention == DbConvention::PlusSide ? std::log1p(epsilon)
                                                                 : -std::log1p(-epsilon);
    return 10.0 * ln_ratio / std::log(10.0);
}

double range_error_pct(double delta) {
    if (!(delta >= 0.0) || !std::isfinite(delta))
        throw DomainError("range_error_pct: delta must be finite and >= 0, got " + std::to_string(delta));
    return 100.0 * std::expm1(delta / 40.0 * std::log(10.0));
}

std::vector<PrecisionRegime> regime_table(DbConvention convention) {
    struct Row {
        double epsilon;
        const char* use_case;
    };
    constexpr std::array<Row, 4> rows{{
        {1e-4, ""},
        {1e-3, "Verification and validation"},
        {1e-2, "Route planning"},
        {1e-1, "Operational research"},
    }};
    std::vector<PrecisionRegime> out;
    for (const Row& r : rows) {
        const double delta = delta_db(r.epsilon, convention);
        out.push_back({r.epsilon, delta, range_error_pct(delta), r.use_case});
    }
    return out;
}

double round_sig(double value, int digits) {
    if (value == 0.0 || !std::isfinite(value)) return value;
    const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(value)))));
    return std::round(value * scale) / scale;
}

std::vector<DeltaPoint> delta_db_series(double eps_min, double eps_max, int points,
                                        DbConvention convention) {
    if (!(eps_min > 0.0 && eps_min < eps_max && eps_max < 1.0))
        throw RangeError("delta series: need 0 < eps_min < eps_max < 1");
    if (points < 2) throw RangeError("delta series: need at least 2 points");
    std::vector<DeltaPoint> out;
    const double lo = std::log(eps_min), hi = std::log(eps_max);
    for (int i = 0; i < points; ++i) {
        const double eps = i == 0 ? eps_min
                           : i == points - 1 ? eps_max
                                             : std::exp(lo + (hi - lo) * i / (points - 1));
        out.push_back({eps, delta_db(eps, convention)});
    }
    return out;
}

namespace {

CostParams precision_params(int d, double epsilon, double prefactor_ratio) {
    // kappa cancels in the crossover; it is fixed at 1 for the curves.
    return CostParams(CostInputs{.n = 2.0, .d = d, .kappa = 1.0, .epsilon = epsilon,
                                 .c_cg = 1.0, .c_cjs = prefactor_ratio});
}

}  // namespace

std::vector<PrecisionCrossover> crossover_vs_precision(int d, std::span<const double> epsilons,
                                                       double prefactor_ratio) {
    std::vector<PrecisionCrossover> out;
    out.reserve(epsilons.size());
    for (double eps : epsilons)
        out.push_back({eps, crossover_exact(precision_params(d, eps, prefactor_ratio))});
    return out;
}

std::vector<PrecisionCurve> precision_curves(int d, std::span<const double> epsilons,
                                             double prefactor_ratio, double n_min, double n_max,
                                             int points) {
    std::vector<PrecisionCurve> out;
    out.reserve(epsilons.size());
    for (double eps : epsilons)
        out.push_back({eps, runtime_curves(precision_params(d, eps, prefactor_ratio), n_min, n_max,
                                           points, AxisScale::LogLog)});
    return out;
}

}  // namespace qrcs
