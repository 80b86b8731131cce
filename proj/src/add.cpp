#include "wmc/add.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "wmc/errors.hpp"

namespace wmc {

namespace {

// splitmix64 finisher; good enough to scatter node ids.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint32_t kTerminalRank = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::size_t NodeStore::PairKeyHash::operator()(const PairKey& k) const {
  return static_cast<std::size_t>(
      mix((static_cast<std::uint64_t>(k.a) << 32) | k.b));
}

std::size_t NodeStore::VarKeyHash::operator()(const VarKey& k) const {
  return static_cast<std::size_t>(
      mix((static_cast<std::uint64_t>(k.node) << 32) | k.tag));
}

std::size_t NodeStore::InternalKeyHash::operator()(const InternalKey& k) const {
  return static_cast<std::size_t>(
      mix(mix(static_cast<std::uint64_t>(k.var)) ^
          ((static_cast<std::uint64_t>(k.lo) << 32) | k.hi)));
}

NodeStore::NodeStore(VarOrder order) : order_(std::move(order)) {
  nodes_.reserve(1024);
}

std::uint32_t NodeStore::rankOf(NodeId n) const {
  const Node& node = nodes_[n];
  return node.var == 0 ? kTerminalRank : order_.rank(node.var);
}

NodeId NodeStore::makeTerminal(double value) {
  if (value == 0.0) value = 0.0;  // collapse -0.0 onto +0.0
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(value);
  auto [it, inserted] = terminalTable_.try_emplace(
      bits, static_cast<NodeId>(nodes_.size()));
  if (inserted) {
    nodes_.push_back(Node{0, 0, 0, value});
  }
  return it->second;
}

NodeId NodeStore::makeInternal(VarId var, NodeId lo, NodeId hi) {
  if (lo == hi) return lo;
  auto [it, inserted] = uniqueTable_.try_emplace(
      InternalKey{var, lo, hi}, static_cast<NodeId>(nodes_.size()));
  if (inserted) {
    nodes_.push_back(Node{var, lo, hi, 0.0});
  }
  return it->second;
}

Add NodeStore::constant(double value) {
  if (std::isnan(value)) {
    throw InvalidValue("constant diagram from NaN");
  }
  return Add(this, makeTerminal(value));
}

Add NodeStore::literal(VarId var, bool positive) {
  requireKnown(var);
  const NodeId zero = makeTerminal(0.0);
  const NodeId one = makeTerminal(1.0);
  return Add(this, positive ? makeInternal(var, zero, one)
                            : makeInternal(var, one, zero));
}

void NodeStore::requireSameStore(const Add& a, const Add& b) const {
  if (&a.store() != this || &b.store() != this) {
    throw StoreMismatch("operands belong to different node stores");
  }
}

void NodeStore::requireKnown(VarId var) const {
  if (var == 0 || var > order_.size()) {
    throw UnknownVariable("variable " + std::to_string(var) +
                          " outside store universe of size " +
                          std::to_string(order_.size()));
  }
}

NodeId NodeStore::productRec(NodeId a, NodeId b) {
  const Node& na = nodes_[a];
  const Node& nb = nodes_[b];
  if (na.var == 0 && nb.var == 0) {
    return makeTerminal(na.value * nb.value);
  }
  if (na.var == 0) {
    if (na.value == 1.0) return b;
    if (na.value == 0.0) return a;
  }
  if (nb.var == 0) {
    if (nb.value == 1.0) return a;
    if (nb.value == 0.0) return b;
  }

  const PairKey key{a < b ? a : b, a < b ? b : a};
  if (auto it = productCache_.find(key); it != productCache_.end()) {
    return it->second;
  }

  const std::uint32_t ra = rankOf(a);
  const std::uint32_t rb = rankOf(b);
  const std::uint32_t top = ra < rb ? ra : rb;
  const VarId var = order_.varAtRank(top);
  const NodeId a0 = ra == top ? nodes_[a].lo : a;
  const NodeId a1 = ra == top ? nodes_[a].hi : a;
  const NodeId b0 = rb == top ? nodes_[b].lo : b;
  const NodeId b1 = rb == top ? nodes_[b].hi : b;

  const NodeId lo = productRec(a0, b0);
  const NodeId hi = productRec(a1, b1);
  const NodeId result = makeInternal(var, lo, hi);
  productCache_.emplace(key, result);
  return result;
}

NodeId NodeStore::sumRec(NodeId a, NodeId b) {
  const Node& na = nodes_[a];
  const Node& nb = nodes_[b];
  if (na.var == 0 && nb.var == 0) {
    return makeTerminal(na.value + nb.value);
  }
  if (na.var == 0 && na.value == 0.0) return b;
  if (nb.var == 0 && nb.value == 0.0) return a;

  const PairKey key{a < b ? a : b, a < b ? b : a};
  if (auto it = sumCache_.find(key); it != sumCache_.end()) {
    return it->second;
  }

  const std::uint32_t ra = rankOf(a);
  const std::uint32_t rb = rankOf(b);
  const std::uint32_t top = ra < rb ? ra : rb;
  const VarId var = order_.varAtRank(top);
  const NodeId a0 = ra == top ? nodes_[a].lo : a;
  const NodeId a1 = ra == top ? nodes_[a].hi : a;
  const NodeId b0 = rb == top ? nodes_[b].lo : b;
  const NodeId b1 = rb == top ? nodes_[b].hi : b;

  const NodeId lo = sumRec(a0, b0);
  const NodeId hi = sumRec(a1, b1);
  const NodeId result = makeInternal(var, lo, hi);
  sumCache_.emplace(key, result);
  return result;
}

Add NodeStore::product(const Add& a, const Add& b) {
  requireSameStore(a, b);
  return Add(this, productRec(a.root(), b.root()));
}

Add NodeStore::sum(const Add& a, const Add& b) {
  requireSameStore(a, b);
  return Add(this, sumRec(a.root(), b.root()));
}

NodeId NodeStore::projectRec(NodeId n, VarId var, std::uint32_t varRank) {
  const Node& node = nodes_[n];
  // Past the variable's level nothing below can mention it.
  if (node.var == 0 || rankOf(n) > varRank) return n;
  if (node.var == var) return sumRec(node.lo, node.hi);

  const VarKey key{n, var};
  if (auto it = projectCache_.find(key); it != projectCache_.end()) {
    return it->second;
  }
  const NodeId lo = projectRec(node.lo, var, varRank);
  const NodeId hi = projectRec(node.hi, var, varRank);
  const NodeId result = makeInternal(node.var, lo, hi);
  projectCache_.emplace(key, result);
  return result;
}

Add NodeStore::project(const Add& a, VarId var) {
  requireSameStore(a, a);
  requireKnown(var);
  return Add(this, projectRec(a.root(), var, order_.rank(var)));
}

NodeId NodeStore::restrictRec(NodeId n, VarId var, std::uint32_t varRank,
                              bool value) {
  const Node& node = nodes_[n];
  if (node.var == 0 || rankOf(n) > varRank) return n;
  if (node.var == var) return value ? node.hi : node.lo;

  const VarKey key{n, (var << 1) | (value ? 1u : 0u)};
  if (auto it = restrictCache_.find(key); it != restrictCache_.end()) {
    return it->second;
  }
  const NodeId lo = restrictRec(node.lo, var, varRank, value);
  const NodeId hi = restrictRec(node.hi, var, varRank, value);
  const NodeId result = makeInternal(node.var, lo, hi);
  restrictCache_.emplace(key, result);
  return result;
}

Add NodeStore::restrict(const Add& a, VarId var, bool value) {
  requireSameStore(a, a);
  requireKnown(var);
  return Add(this, restrictRec(a.root(), var, order_.rank(var), value));
}

double NodeStore::evaluate(const Add& a, const VarSet& assignment) const {
  NodeId n = a.root();
  while (nodes_[n].var != 0) {
    const Node& node = nodes_[n];
    n = assignment.contains(node.var) ? node.hi : node.lo;
  }
  return nodes_[n].value;
}

VarSet NodeStore::vars(const Add& a) const {
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> stack{a.root()};
  std::vector<VarId> found;
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    const Node& node = nodes_[n];
    if (node.var == 0) continue;
    found.push_back(node.var);
    stack.push_back(node.lo);
    stack.push_back(node.hi);
  }
  return VarSet::fromUnsorted(std::move(found));
}

bool NodeStore::containsVar(const Add& a, VarId var) const {
  const std::uint32_t varRank = order_.rank(var);
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> stack{a.root()};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    const Node& node = nodes_[n];
    if (node.var == 0 || order_.rank(node.var) > varRank) continue;
    if (node.var == var) return true;
    if (!seen.insert(n).second) continue;
    stack.push_back(node.lo);
    stack.push_back(node.hi);
  }
  return false;
}

std::size_t NodeStore::nodeCount(const Add& a) const {
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> stack{a.root()};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    const Node& node = nodes_[n];
    if (node.var != 0) {
      stack.push_back(node.lo);
      stack.push_back(node.hi);
    }
  }
  return seen.size();
}

bool NodeStore::allTerminalsFinite(const Add& a) const {
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> stack{a.root()};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    const Node& node = nodes_[n];
    if (node.var == 0) {
      if (!std::isfinite(node.value)) return false;
    } else {
      stack.push_back(node.lo);
      stack.push_back(node.hi);
    }
  }
  return true;
}

void NodeStore::clearCaches() {
  productCache_.clear();
  sumCache_.clear();
  projectCache_.clear();
  restrictCache_.clear();
}

void NodeStore::toDot(const Add& a, std::ostream& out) const {
  out << "digraph add {\n";
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> stack{a.root()};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    const Node& node = nodes_[n];
    if (node.var == 0) {
      out << "  n" << n << " [shape=box,label=\"" << node.value << "\"];\n";
    } else {
      out << "  n" << n << " [shape=oval,label=\"x" << node.var << "\"];\n";
      out << "  n" << n << " -> n" << node.lo << " [style=dashed];\n";
      out << "  n" << n << " -> n" << node.hi << " [style=solid];\n";
      stack.push_back(node.lo);
      stack.push_back(node.hi);
    }
  }
  out << "}\n";
}

}  // namespace wmc
