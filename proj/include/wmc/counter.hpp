#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wmc/add.hpp"
#include "wmc/cnf.hpp"
#include "wmc/order.hpp"

namespace wmc {

enum class ClusterKind {
  Mono,
  BeList,
  BeTree,
  BmList,
  BmTree,
};

const char* clusterKindName(ClusterKind kind);
ClusterKind parseClusterKind(const std::string& name);

/// How a clause is ranked into a cluster: all into the last (Mono), by the
/// smallest rho-rank among its variables (bucket elimination), or by the
/// largest (Bouquet's method).
std::uint32_t clauseRank(const Clause& clause, const VarOrder& rho,
                         ClusterKind kind, std::uint32_t m);

/// The cluster partition and projection schedule. Cluster slots run 1..m
/// where m is the highest rho-rank among variables of effective clauses.
/// The projectAt sets are pairwise disjoint and cover exactly formulaVars.
struct ClusterPlan {
  std::uint32_t m = 0;
  std::vector<std::vector<std::size_t>> clausesAt;  // [1..m] clause indices
  std::vector<VarSet> projectAt;                    // [1..m] X_i
  VarSet formulaVars;
};

ClusterPlan buildPlan(const CnfFormula& formula, const VarOrder& rho,
                      ClusterKind kind);

/// Destination of a processed cluster's result. List hands it to the next
/// slot; Tree jumps to the nearest later slot whose projection set meets
/// the live variables, falling back to m when none remain. Routing works on
/// the tracked variable set, the same order-invariant support the dry-run
/// planner sees, so predicted and measured statistics agree exactly.
std::uint32_t chooseCluster(const VarSet& liveVars, std::uint32_t i,
                            const ClusterPlan& plan, ClusterKind kind);
std::uint32_t chooseCluster(const Add& a, std::uint32_t i,
                            const ClusterPlan& plan, ClusterKind kind);

struct CountTrace {
  struct Step {
    std::uint32_t cluster = 0;
    VarSet preProjectionVars;       // union of member supports
    std::vector<VarId> projected;   // in projection order
    std::uint32_t routedTo = 0;     // 0 when nothing was routed
  };
  std::vector<Step> steps;
};

struct CountOptions {
  /// Re-check the cluster-disjointness invariant after every loop step and
  /// validate each routing decision; violations throw InvariantViolation.
  bool checkInvariants = false;
  bool collectTrace = false;
  /// Cooperative wall-clock budget, checked between diagram operations.
  std::optional<double> timeLimitSeconds;
  /// Test hook replacing chooseCluster.
  std::function<std::uint32_t(const VarSet&, std::uint32_t)> routerOverride;
};

struct CountResult {
  double count = 0.0;
  std::uint32_t maxLiveVars = 0;
  std::size_t peakNodeCount = 0;
  std::chrono::duration<double> elapsed{0.0};
  std::optional<CountTrace> trace;
};

/// The weighted model count: clauses are clustered by rho and kind, each
/// cluster's ADDs are multiplied smallest-first, every variable of X_i is
/// summed out right after its weight diagram is multiplied in, and results
/// flow to later clusters until the last one collapses to a single value.
/// Degenerate inputs skip the loop: an empty clause yields 0, and a formula
/// with no effective clauses yields the product of (W+ + W-) over all
/// declared variables, as do declared variables no clause mentions.
CountResult count(const CnfFormula& formula, const WeightFunction& weights,
                  const VarOrder& pi, const VarOrder& rho, ClusterKind kind,
                  const CountOptions& options = {});

/// Replays a collected trace against the plan and throws InvariantViolation
/// if any step left a projection set intersecting a later cluster's
/// variables or projected a variable twice.
void assertPlanInvariants(const ClusterPlan& plan, const CountTrace& trace);

}  // namespace wmc
