#pragma once

namespace qrcs {

enum class LambertBranch {
    Principal,     // W0: x >= -1/e, returns w >= -1
    NonPrincipal,  // W-1: -1/e <= x < 0, returns w <= -1
};

/// Real Lambert W: the w on the requested branch with w * exp(w) = x.
///
/// Halley iteration from an asymptotic or branch-point-series starting guess.
/// Arguments within a few ulps below -1/e are treated as the branch point itself.
/// Throws DomainError (naming the branch) when x lies outside the branch's domain.
double lambert_w(LambertBranch branch, double x);

}  // namespace qrcs
