#pragma once

// Translating the solver's multiplicative RCS error eps into radar-engineering units.

#include "qrcs/crossover.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qrcs {

enum class DbConvention {
    PlusSide,   // 10 log10(1 + eps)
    WorstSide,  // -10 log10(1 - eps): the larger of the two one-sided dB offsets
};

std::string_view to_string(DbConvention c);
/// Accepts "plus_side" or "worst_side".
DbConvention parse_db_convention(std::string_view tag);

/// Additive RCS error in dB. Throws DomainError unless 0 < eps < 1.
double delta_db(double epsilon, DbConvention convention = DbConvention::WorstSide);

/// Detection range scales as RCS^(1/4): 100 (10^(delta/40) - 1). Throws DomainError for delta < 0.
double range_error_pct(double delta_db);

struct PrecisionRegime {
    double epsilon;
    double delta_db;
    double range_error_pct;
    std::string use_case;
};

/// eps in {1e-4, 1e-3, 1e-2, 1e-1} with their use-case labels; numbers are computed.
std::vector<PrecisionRegime> regime_table(DbConvention convention = DbConvention::WorstSide);

/// Rounds to `digits` significant figures (display only).
double round_sig(double value, int digits);

struct DeltaPoint {
    double epsilon;
    double delta_db;
};

/// Delta(eps) on a log-spaced eps grid, endpoints included.
std::vector<DeltaPoint> delta_db_series(double eps_min, double eps_max, int points,
                                        DbConvention convention = DbConvention::WorstSide);

struct PrecisionCrossover {
    double epsilon;
    CrossoverResult crossover;
};

/// Crossover per eps at sparsity d, with C_CJS / C_CG = prefactor_ratio.
std::vector<PrecisionCrossover> crossover_vs_precision(int d, std::span<const double> epsilons,
                                                       double prefactor_ratio = 1.0);

struct PrecisionCurve {
    double epsilon;
    RuntimeSeries series;
};

/// Log-log CG/CJS runtime curves per eps (kappa = 1, C_CG = 1, C_CJS = prefactor_ratio).
std::vector<PrecisionCurve> precision_curves(int d, std::span<const double> epsilons,
                                             double prefactor_ratio, double n_min, double n_max,
                                             int points);

}  // namespace qrcs
