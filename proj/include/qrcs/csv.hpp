#pragma once

// CSV emitters. Format: header row, ',' separators, LF line ends, reals in scientific
// notation with 17 significant digits.

#include "qrcs/crossover.hpp"
#include "qrcs/precision.hpp"
#include "qrcs/sparsity.hpp"

#include <filesystem>
#include <span>
#include <string>

namespace qrcs {

std::string format_real(double v);

/// N,t_cg,t_cjs
std::string csv_runtime_series(const RuntimeSeries& s);
/// count,edges
std::string csv_sparsity(const SparsityReport& r);
/// epsilon,delta_db,range_error_pct,use_case
std::string csv_regime_table(std::span<const PrecisionRegime> rows);
/// epsilon,delta_db
std::string csv_delta_series(std::span<const DeltaPoint> points);
/// epsilon,algorithm,N,t (long format, algorithm is CG or CJS)
std::string csv_precision_curves(std::span<const PrecisionCurve> curves);

/// Writes `contents` to `path`; throws IoError naming the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

void emit_csv(const RuntimeSeries& s, const std::filesystem::path& path);
void emit_csv(const SparsityReport& r, const std::filesystem::path& path);
void emit_csv(std::span<const PrecisionRegime> rows, const std::filesystem::path& path);
void emit_csv(std::span<const PrecisionCurve> curves, const std::filesystem::path& path);

}  // namespace qrcs
