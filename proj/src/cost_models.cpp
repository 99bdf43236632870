#include "qrcs/cost_models.hpp"

#include "qrcs/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qrcs {

namespace {

std::string show(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require_finite_positive(const char* field, double v) {
    if (!std::isfinite(v) || !(v > 0.0))
        throw ParameterError(field, "must be finite and > 0, got " + show(v));
}

}  // namespace

CostParams::CostParams(const CostInputs& in) : in_(in) {
    if (!std::isfinite(in.n) || !(in.n >= 2.0))
        throw ParameterError("n", "must be finite and >= 2, got " + show(in.n));
    if (in.d < 1)
        throw ParameterError("d", "must be an integer >= 1, got " + std::to_string(in.d));
    require_finite_positive("kappa", in.kappa);
    if (!(in.epsilon > 0.0 && in.epsilon < 1.0))
        throw ParameterError("epsilon", "must lie strictly inside (0, 1), got " + show(in.epsilon));
    require_finite_positive("c_cg", in.c_cg);
    require_finite_positive("c_cjs", in.c_cjs);
}

CostParams CostParams::with_n(double n) const {
    CostInputs in = in_;
    in.n = n;
    return CostParams(in);
}

CostParams CostParams::with_d(int d) const {
    CostInputs in = in_;
    in.d = d;
    return CostParams(in);
}

CostParams CostParams::with_kappa(double kappa) const {
    CostInputs in = in_;
    in.kappa = kappa;
    return CostParams(in);
}

CostParams CostParams::with_epsilon(double epsilon) const {
    CostInputs in = in_;
    in.epsilon = epsilon;
    return CostParams(in);
}

CostParams CostParams::with_prefactors(double c_cg, double c_cjs) const {
    CostInputs in = in_;
    in.c_cg = c_cg;
    in.c_cjs = c_cjs;
    return CostParams(in);
}

KappaScalingLaw KappaScalingLaw::fixed(double kappa) {
    require_finite_positive("kappa", kappa);
    return KappaScalingLaw(Mode::Fixed, kappa, 0);
}

KappaScalingLaw KappaScalingLaw::unpreconditioned(int dims) {
    if (dims < 1 || dims > 3)
        throw ParameterError("dims", "must be 1, 2 or 3, got " + std::to_string(dims));
    return KappaScalingLaw(Mode::Unpreconditioned, 0.0, dims);
}

ModelVariant parse_model_variant(std::string_view tag) {
    if (tag == "cg") return ModelVariant::CG;
    if (tag == "cjs") return ModelVariant::CJS;
    if (tag == "cjs_with_correction") return ModelVariant::CJSWithCorrection;
    if (tag == "cjs_cks") return ModelVariant::CJS_CKS;
    throw ParameterError("variant", "unknown model variant '" + std::string(tag) +
                                        "' (expected cg, cjs, cjs_with_correction, cjs_cks)");
}

std::string_view to_string(ModelVariant v) {
    switch (v) {
        case ModelVariant::CG: return "cg";
        case ModelVariant::CJS: return "cjs";
        case ModelVariant::CJSWithCorrection: return "cjs_with_correction";
        case ModelVariant::CJS_CKS: return "cjs_cks";
    }
    return "?";
}

double cg_runtime(const CostParams& p) {
    return p.c_cg() * p.kappa() * static_cast<double>(p.d()) * std::log(1.0 / p.epsilon()) * p.n();
}

double cjs_correction_factor(const CostParams& p) {
    const double d = p.d();
    const double arg = d * d * p.kappa() / (p.epsilon() * p.epsilon());
    if (!(arg > 1.0))
        throw DomainError("cjs correction: d^2*kappa/epsilon^2 must exceed 1, got " + show(arg));
    return std::exp(2.0 * std::sqrt(std::log(5.0) * std::log(arg)));
}

double cjs_runtime(const CostParams& p, bool with_correction) {
    const double eps = p.epsilon();
    double t = p.c_cjs() * p.kappa() * std::pow(static_cast<double>(p.d()), 7) / (eps * eps) *
               std::log(p.n());
    if (with_correction) t *= cjs_correction_factor(p);
    return t;
}

double cjs_cks_runtime(const CostParams& p) {
    const double eps = p.epsilon();
    return p.c_cjs() * p.kappa() * std::pow(static_cast<double>(p.d()), 7) * std::log(p.n()) *
           std::log(1.0 / eps) / eps;
}

double runtime(const CostParams& p, ModelVariant variant) {
    switch (variant) {
        case ModelVariant::CG: return cg_runtime(p);
        case ModelVariant::CJS: return cjs_runtime(p, false);
        case ModelVariant::CJSWithCorrection: return cjs_runtime(p, true);
        case ModelVariant::CJS_CKS: return cjs_cks_runtime(p);
    }
    return 0.0;
}

double kappa_scaling(const KappaScalingLaw& law, double n) {
    if (!std::isfinite(n) || !(n >= 2.0))
        throw ParameterError("n", "must be finite and >= 2, got " + show(n));
    switch (law.mode()) {
        case KappaScalingLaw::Mode::Fixed: return law.value();
        case KappaScalingLaw::Mode::Unpreconditioned: return std::pow(n, 0.5 * law.dims());
        case KappaScalingLaw::Mode::Scherer2D: return n;
        case KappaScalingLaw::Mode::Scherer3D: return std::cbrt(n * n);
    }
    return 0.0;
}

double rcs_from_solution(std::span<const std::complex<double>> r,
                         std::span<const std::complex<double>> x) {
    if (r.size() != x.size())
        throw DimensionError("rcs: R has " + std::to_string(r.size()) + " components but x has " +
                             std::to_string(x.size()));
    if (r.empty()) throw DimensionError("rcs: vectors must have at least one component");
    std::complex<double> dot{0.0, 0.0};
    for (std::size_t i = 0; i < r.size(); ++i) dot += r[i] * x[i];
    return std::norm(dot) / (4.0 * std::numbers::pi);
}

}  // namespace qrcs
