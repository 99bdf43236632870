#include "qrcs/lambert_w.hpp"

#include "qrcs/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qrcs {

namespace {

// 1/e split into a double and its rounding residual, so x + 1/e keeps full precision near -1/e.
constexpr double kInvEHi = 0.36787944117144233;
constexpr double kInvELo = -1.2428753672788363e-17;

// Arguments this close to -1/e are indistinguishable from it in double precision.
constexpr double kBranchSlack = 4.0 * 2.220446049250313e-16 * kInvEHi;

constexpr double kRelTol = 1e-13;
constexpr int kMaxIter = 100;

// W(x) = -1 + p - p^2/3 + 11/72 p^3 - ... with p = +-sqrt(2(e x + 1)).
constexpr std::array<double, 10> kBranchSeries = {
    -1.0,
    1.0,
    -1.0 / 3.0,
    11.0 / 72.0,
    -43.0 / 540.0,
    769.0 / 17280.0,
    -221.0 / 8505.0,
    680863.0 / 43545600.0,
    -1963.0 / 204120.0,
    226287557.0 / 37623398400.0,
};

double branch_series(double p) {
    double acc = 0.0;
    for (auto it = kBranchSeries.rbegin(); it != kBranchSeries.rend(); ++it) acc = acc * p + *it;
    return acc;
}

const char* name(LambertBranch b) {
    return b == LambertBranch::Principal ? "principal branch W0" : "non-principal branch W-1";
}

[[noreturn]] void out_of_domain(LambertBranch b, double x, const char* range) {
    throw DomainError(std::string("lambert_w ") + name(b) + ": x = " + std::to_string(x) +
                      " outside " + range);
}

}  // namespace

double lambert_w(LambertBranch branch, double x) {
    if (std::isnan(x)) out_of_domain(branch, x, "the real line");
    const bool lower = branch == LambertBranch::NonPrincipal;
    if (lower && !(x < 0.0)) out_of_domain(branch, x, "[-1/e, 0)");
    if (!lower && std::isinf(x)) out_of_domain(branch, x, "[-1/e, inf)");
    if (!lower && x == 0.0) return 0.0;

    // Distance from the branch point, with the 1/e residual folded back in.
    const double q = (x + kInvEHi) + kInvELo;
    if (q < -kBranchSlack) out_of_domain(branch, x, lower ? "[-1/e, 0)" : "[-1/e, inf)");
    if (q <= kBranchSlack) return -1.0;

    double w;
    if (x < -0.25) {
        const double p = std::sqrt(2.0 * std::numbers::e * q) * (lower ? -1.0 : 1.0);
        w = branch_series(p);
        // Truncation error is O(p^10); Halley is ill-conditioned here since w + 1 -> 0.
        if (std::abs(p) < 1e-3) return w;
    } else if (lower) {
        const double l1 = std::log(-x);
        const double l2 = std::log(-l1);
        w = l1 - l2 + l2 / l1;
    } else if (x < std::numbers::e) {
        w = std::log1p(x);
    } else {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }

    // Halley on f(w) = w - x e^-w, whose root is the root of w e^w = x. Writing t = x e^-w,
    // f' = 1 + t and f'' = -t; t is formed in log space on the lower branch where e^-w overflows.
    const double log_neg_x = lower ? std::log(-x) : 0.0;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        const double t = lower ? -std::exp(log_neg_x - w) : x * std::exp(-w);
        const double f = w - t;
        const double fp = 1.0 + t;
        if (fp == 0.0) return w;
        const double step = f / (fp + f * t / (2.0 * fp));
        double next = w - step;
        // Keep the iterate on its own branch.
        if (lower ? next > -1.0 : next < -1.0) next = 0.5 * (w - 1.0);
        if (std::abs(next - w) <= kRelTol * std::abs(next) || next == w) return next;
        w = next;
    }
    throw std::logic_error(std::string("lambert_w ") + name(branch) +
                           ": Halley iteration did not converge for x = " + std::to_string(x));
}

}  // namespace qrcs
