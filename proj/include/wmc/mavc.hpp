#pragma once

#include <cstdint>
#include <vector>

#include "wmc/cnf.hpp"
#include "wmc/counter.hpp"
#include "wmc/order.hpp"

namespace wmc {

/// Maximum ADD variable count: the largest variable-set size across the
/// diagrams a configuration would build, a cheap difficulty predictor.
struct MavcReport {
  std::uint32_t mavc = 0;
  std::vector<std::uint32_t> perClusterVarCounts;  // [1..m]; 0 when skipped
};

/// Dry run of the counting loop tracking only variable sets, never building
/// a diagram. Matches the instrumented maxLiveVars of count() exactly.
MavcReport computeMavc(const CnfFormula& formula, const VarOrder& rho,
                       ClusterKind kind);

}  // namespace wmc
