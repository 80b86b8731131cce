#pragma once

#include "wmc/cnf.hpp"

namespace wmc {

namespace oracle {

inline constexpr std::uint32_t kMaxVars = 25;

/// Reference count by exhaustive enumeration with compensated summation.
/// Intentionally naive; refuses more than kMaxVars variables.
double bruteForceCount(const CnfFormula& formula,
                       const WeightFunction& weights);

}  // namespace oracle

}  // namespace wmc
