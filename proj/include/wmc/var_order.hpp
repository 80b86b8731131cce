#pragma once

#include <cstdint>
#include <string>

#include "wmc/cnf.hpp"
#include "wmc/order.hpp"

namespace wmc {

enum class HeuristicKind {
  Random,
  Mcs,
  InvMcs,
  LexP,
  InvLexP,
  LexM,
  InvLexM,
};

/// CLI-facing names: random, mcs, invmcs, lexp, invlexp, lexm, invlexm.
const char* heuristicName(HeuristicKind kind);
HeuristicKind parseHeuristic(const std::string& name);

/// Uniform random permutation from a seeded generator; same seed, same
/// order. Sampling is rejection-based so the distribution does not depend
/// on library internals.
VarOrder randomOrder(std::uint32_t n, std::uint64_t seed);

/// Maximum-cardinality search: next is the variable adjacent to the most
/// already-chosen variables. Ties everywhere break to the lowest index.
VarOrder mcsOrder(const Graph& g);

/// Lexicographic search for perfect orders: the chosen variable stamps its
/// step onto each unchosen neighbor's label; the next variable is the one
/// with the greatest label, where earlier stamps outrank later ones.
VarOrder lexpOrder(const Graph& g);

/// Lexicographic search for minimal orders: stamps also travel along paths
/// whose interior vertices are unchosen and carry labels strictly below the
/// target's.
VarOrder lexmOrder(const Graph& g);

/// Dispatches on kind; seed only matters for Random.
VarOrder makeOrder(HeuristicKind kind, const Graph& g, std::uint64_t seed);

}  // namespace wmc
