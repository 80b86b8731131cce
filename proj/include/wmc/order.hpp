#pragma once

#include <cstdint>
#include <vector>

#include "wmc/varset.hpp"

namespace wmc {

/// Injection from variables 1..n onto ranks 1..n, stored with its inverse.
/// The same type serves as the diagram variable order of every ADD and as
/// the cluster variable order that ranks clauses.
class VarOrder {
public:
  VarOrder() = default;

  /// Builds the order from the chosen sequence: sequence[k] gets rank k+1.
  /// The sequence must be a permutation of 1..n.
  explicit VarOrder(std::vector<VarId> sequence);

  static VarOrder identity(std::uint32_t n);

  std::uint32_t size() const {
    return static_cast<std::uint32_t>(byRank_.size());
  }

  std::uint32_t rank(VarId v) const;

  VarId varAtRank(std::uint32_t r) const;

  bool operator==(const VarOrder&) const = default;

private:
  std::vector<std::uint32_t> rank_;  // var -> rank; slot 0 unused
  std::vector<VarId> byRank_;        // rank - 1 -> var
};

/// rank'(x) = n + 1 - rank(x); an involution.
VarOrder invert(const VarOrder& o);

}  // namespace wmc
