#pragma once

#include <string_view>

namespace qrcs::caveats {

inline constexpr std::string_view kSinglePointFit =
    "The CJS prefactor is fitted to a single published resource estimate; the anchor size may "
    "not be in the asymptotic regime and the asymptotic form itself is disputed.";

inline constexpr std::string_view kNoErrorCorrection =
    "Quantum error correction overhead is not modeled beyond the assumed seconds per logical "
    "step; the anchor counts are ideal logical resources.";

inline constexpr std::string_view kCoarseApproximation =
    "The coarse crossover estimate -1/x gives 2.56e8 at d=7, eps=1e-2, C_CG=C_CJS; the "
    "published reference value for the same formula is 2.66e8 (about 4% higher).";

inline constexpr std::string_view kDbConvention =
    "The printed conversion 10*log10(1+eps) disagrees with the reference table; the table "
    "values follow -10*log10(1-eps), which is the default here. Both are available.";

inline constexpr std::string_view kRangeErrorReconstructed =
    "Detection-range error uses the fourth-root dependence of range on RCS, "
    "100*(10^(delta/40)-1), reconstructed from the reference table; atmospheric loss is ignored.";

}  // namespace qrcs::caveats
