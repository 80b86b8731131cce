#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "wmc/order.hpp"
#include "wmc/varset.hpp"

namespace wmc {

using NodeId = std::uint32_t;

class NodeStore;

/// Handle to a canonical algebraic decision diagram owned by one NodeStore.
/// Reduction plus hash-consing make equality structural: two Adds of the
/// same store represent the same function iff their roots are equal.
class Add {
public:
  Add() = delete;

  NodeStore& store() const { return *store_; }
  NodeId root() const { return root_; }

  bool operator==(const Add& other) const {
    return store_ == other.store_ && root_ == other.root_;
  }

private:
  friend class NodeStore;
  Add(NodeStore* store, NodeId root) : store_(store), root_(root) {}

  NodeStore* store_;
  NodeId root_;
};

/// Arena of reduced, ordered decision-diagram nodes over real terminals.
/// A unique table enforces canonicity; product/sum/project/restrict results
/// are memoized per operation, unbounded within one count. A store and its
/// diagrams belong to one logical thread; independent stores may run in
/// parallel but Adds never migrate between stores.
class NodeStore {
public:
  explicit NodeStore(VarOrder order);

  NodeStore(const NodeStore&) = delete;
  NodeStore& operator=(const NodeStore&) = delete;

  const VarOrder& order() const { return order_; }
  std::uint32_t varCount() const { return order_.size(); }

  /// Diagram of the constant function. constant(1) is the unit of product.
  /// NaN is rejected; infinities are representable so that overflow can be
  /// observed and reported by the counting layer.
  Add constant(double value);

  /// Indicator of a literal: 1 where satisfied, 0 elsewhere.
  Add literal(VarId var, bool positive);

  Add product(const Add& a, const Add& b);
  Add sum(const Add& a, const Add& b);

  /// Sums out one variable: (project f x)(t) = f(t) + f(t + {x}).
  /// A variable absent from the diagram leaves it unchanged; callers that
  /// need the vacuous-domain doubling apply it themselves.
  Add project(const Add& a, VarId var);

  /// Cofactor with var pinned to value; var no longer occurs in the result.
  Add restrict(const Add& a, VarId var, bool value);

  double evaluate(const Add& a, const VarSet& assignment) const;

  /// Variables labelling any node reachable from the root.
  VarSet vars(const Add& a) const;

  bool containsVar(const Add& a, VarId var) const;

  /// Distinct reachable nodes, terminals included.
  std::size_t nodeCount(const Add& a) const;

  /// True iff every reachable terminal is a finite double.
  bool allTerminalsFinite(const Add& a) const;

  /// Total nodes ever interned in this store.
  std::size_t storeSize() const { return nodes_.size(); }

  /// Drops the operation caches; interned nodes stay valid.
  void clearCaches();

  void toDot(const Add& a, std::ostream& out) const;

private:
  struct Node {
    VarId var;    // 0 marks a terminal
    NodeId lo;    // 0-edge
    NodeId hi;    // 1-edge
    double value; // meaningful for terminals only
  };

  struct PairKey {
    NodeId a, b;
    bool operator==(const PairKey&) const = default;
  };
  struct VarKey {
    NodeId node;
    std::uint32_t tag;  // var, or var with the restrict bit folded in
    bool operator==(const VarKey&) const = default;
  };
  struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const;
  };
  struct VarKeyHash {
    std::size_t operator()(const VarKey& k) const;
  };
  struct InternalKey {
    VarId var;
    NodeId lo, hi;
    bool operator==(const InternalKey&) const = default;
  };
  struct InternalKeyHash {
    std::size_t operator()(const InternalKey& k) const;
  };

  bool isTerminal(NodeId n) const { return nodes_[n].var == 0; }
  std::uint32_t rankOf(NodeId n) const;

  NodeId makeTerminal(double value);
  NodeId makeInternal(VarId var, NodeId lo, NodeId hi);

  NodeId productRec(NodeId a, NodeId b);
  NodeId sumRec(NodeId a, NodeId b);
  NodeId projectRec(NodeId n, VarId var, std::uint32_t varRank);
  NodeId restrictRec(NodeId n, VarId var, std::uint32_t varRank, bool value);

  void requireSameStore(const Add& a, const Add& b) const;
  void requireKnown(VarId var) const;

  VarOrder order_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, NodeId> terminalTable_;
  std::unordered_map<InternalKey, NodeId, InternalKeyHash> uniqueTable_;
  std::unordered_map<PairKey, NodeId, PairKeyHash> productCache_;
  std::unordered_map<PairKey, NodeId, PairKeyHash> sumCache_;
  std::unordered_map<VarKey, NodeId, VarKeyHash> projectCache_;
  std::unordered_map<VarKey, NodeId, VarKeyHash> restrictCache_;
};

// Free-function spellings used throughout the counter and the tests.

inline Add product(const Add& a, const Add& b) {
  return a.store().product(a, b);
}
inline Add sum(const Add& a, const Add& b) { return a.store().sum(a, b); }
inline Add project(const Add& a, VarId var) {
  return a.store().project(a, var);
}
inline Add restrict(const Add& a, VarId var, bool value) {
  return a.store().restrict(a, var, value);
}
inline double evaluate(const Add& a, const VarSet& assignment) {
  return a.store().evaluate(a, assignment);
}
inline VarSet vars(const Add& a) { return a.store().vars(a); }
inline std::size_t nodeCount(const Add& a) { return a.store().nodeCount(a); }
inline void toDot(const Add& a, std::ostream& out) { a.store().toDot(a, out); }

}  // namespace wmc
