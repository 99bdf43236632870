#include "qrcs/csv.hpp"

#include "qrcs/errors.hpp"

#include <cstdio>
#include <fstream>

namespace qrcs {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

namespace {

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string csv_runtime_series(const RuntimeSeries& s) {
    std::string out = "N,t_cg,t_cjs\n";
    for (std::size_t i = 0; i < s.n_values.size(); ++i)
        out += format_real(s.n_values[i]) + ',' + format_real(s.t_cg[i]) + ',' +
               format_real(s.t_cjs[i]) + '\n';
    return out;
}

std::string csv_sparsity(const SparsityReport& r) {
    std::string out = "count,edges\n";
    for (const auto& [count, edges] : r.histogram)
        out += std::to_string(count) + ',' + std::to_string(edges) + '\n';
    return out;
}

std::string csv_regime_table(std::span<const PrecisionRegime> rows) {
    std::string out = "epsilon,delta_db,range_error_pct,use_case\n";
    for (const auto& r : rows)
        out += format_real(r.epsilon) + ',' + format_real(r.delta_db) + ',' +
               format_real(r.range_error_pct) + ',' + quote(r.use_case) + '\n';
    return out;
}

std::string csv_delta_series(std::span<const DeltaPoint> points) {
    std::string out = "epsilon,delta_db\n";
    for (const auto& p : points) out += format_real(p.epsilon) + ',' + format_real(p.delta_db) + '\n';
    return out;
}

std::string csv_precision_curves(std::span<const PrecisionCurve> curves) {
    std::string out = "epsilon,algorithm,N,t\n";
    for (const auto& c : curves) {
        const std::string eps = format_real(c.epsilon);
        for (std::size_t i = 0; i < c.series.n_values.size(); ++i)
            out += eps + ",CG," + format_real(c.series.n_values[i]) + ',' +
                   format_real(c.series.t_cg[i]) + '\n';
        for (std::size_t i = 0; i < c.series.n_values.size(); ++i)
            out += eps + ",CJS," + format_real(c.series.n_values[i]) + ',' +
                   format_real(c.series.t_cjs[i]) + '\n';
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError(path.string(), "cannot open for writing");
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.close();
    if (!f) throw IoError(path.string(), "write failed");
}

void emit_csv(const RuntimeSeries& s, const std::filesystem::path& path) {
    write_text_file(path, csv_runtime_series(s));
}

void emit_csv(const SparsityReport& r, const std::filesystem::path& path) {
    write_text_file(path, csv_sparsity(r));
}

void emit_csv(std::span<const PrecisionRegime> rows, const std::filesystem::path& path) {
    write_text_file(path, csv_regime_table(rows));
}

void emit_csv(std::span<const PrecisionCurve> curves, const std::filesystem::path& path) {
    write_text_file(path, csv_precision_curves(curves));
}

}  // namespace qrcs
