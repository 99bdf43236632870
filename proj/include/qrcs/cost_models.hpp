#pragma once

// Asymptotic runtime models for the classical conjugate-gradient solver and the
// preconditioned quantum linear-system solver (CJS), expressed in logical time
// steps. All logarithms are natural logarithms.

#include <complex>
#include <span>
#include <string>
#include <string_view>

namespace qrcs {

/// Raw inputs for CostParams; validated on conversion.
struct CostInputs {
    double n = 2.0;        // problem size (mesh edges / system dimension)
    int d = 1;             // sparsity: max nonzeros per matrix row
    double kappa = 1.0;    // condition number
    double epsilon = 0.5;  // relative solution precision
    double c_cg = 1.0;     // classical prefactor
    double c_cjs = 1.0;    // quantum prefactor

    friend bool operator==(const CostInputs&, const CostInputs&) = default;
};

/// Validated parameter tuple (N, d, kappa, epsilon, C_CG, C_CJS).
///
/// Invariants: n >= 2, d >= 1, kappa > 0, 0 < epsilon < 1, prefactors > 0, all finite.
/// Construction throws ParameterError naming the first offending field.
class CostParams {
public:
    explicit CostParams(const CostInputs& in);

    double n() const noexcept { return in_.n; }
    int d() const noexcept { return in_.d; }
    double kappa() const noexcept { return in_.kappa; }
    double epsilon() const noexcept { return in_.epsilon; }
    double c_cg() const noexcept { return in_.c_cg; }
    double c_cjs() const noexcept { return in_.c_cjs; }
    const CostInputs& inputs() const noexcept { return in_; }

    CostParams with_n(double n) const;
    CostParams with_d(int d) const;
    CostParams with_kappa(double kappa) const;
    CostParams with_epsilon(double epsilon) const;
    CostParams with_prefactors(double c_cg, double c_cjs) const;

    friend bool operator==(const CostParams&, const CostParams&) = default;

private:
    CostInputs in_;
};

/// How the condition number depends on problem size. Proportionality constants are 1.
class KappaScalingLaw {
public:
    enum class Mode { Fixed, Unpreconditioned, Scherer2D, Scherer3D };

    static KappaScalingLaw fixed(double kappa);
    /// kappa = N^(dims/2); dims must be 1, 2 or 3.
    static KappaScalingLaw unpreconditioned(int dims);
    /// kappa = N.
    static KappaScalingLaw scherer_2d() { return KappaScalingLaw(Mode::Scherer2D, 0.0, 0); }
    /// kappa = N^(2/3).
    static KappaScalingLaw scherer_3d() { return KappaScalingLaw(Mode::Scherer3D, 0.0, 0); }

    Mode mode() const noexcept { return mode_; }
    double value() const noexcept { return value_; }
    int dims() const noexcept { return dims_; }

    friend bool operator==(const KappaScalingLaw&, const KappaScalingLaw&) = default;

private:
    KappaScalingLaw(Mode mode, double value, int dims) : mode_(mode), value_(value), dims_(dims) {}

    Mode mode_;
    double value_;
    int dims_;
};

enum class ModelVariant { CG, CJS, CJSWithCorrection, CJS_CKS };

/// Accepts "cg", "cjs", "cjs_with_correction", "cjs_cks" (case-sensitive).
ModelVariant parse_model_variant(std::string_view tag);
std::string_view to_string(ModelVariant v);

/// C_CG * kappa * d * ln(1/eps) * N
double cg_runtime(const CostParams& p);

/// C_CJS * kappa * d^7 * eps^-2 * ln N, optionally times the subleading factor
/// exp(2 sqrt(ln 5 * ln(d^2 kappa / eps^2))). The correction requires d^2 kappa / eps^2 > 1.
double cjs_runtime(const CostParams& p, bool with_correction = false);

/// Multiplicative subleading correction alone; throws DomainError when d^2 kappa / eps^2 <= 1.
double cjs_correction_factor(const CostParams& p);

/// C_CJS * kappa * d^7 * ln N * ln(1/eps) / eps
double cjs_cks_runtime(const CostParams& p);

/// Dispatches on the variant. CG uses C_CG, the quantum variants use C_CJS.
double runtime(const CostParams& p, ModelVariant variant);

double kappa_scaling(const KappaScalingLaw& law, double n);

/// sigma = |R . x|^2 / (4 pi), with the bilinear product sum_i R_i x_i (R is not conjugated).
/// Throws DimensionError on a length mismatch or empty input.
double rcs_from_solution(std::span<const std::complex<double>> r,
                         std::span<const std::complex<double>> x);

}  // namespace qrcs
