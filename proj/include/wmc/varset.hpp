#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace wmc {

/// Variables are dense positive integers 1..n mapped from DIMACS indices.
using VarId = std::uint32_t;

/// Set of variable ids kept as a sorted unique vector. The clustering logic
/// is set algebra on these, and at counter scales a flat vector beats
/// anything node-based.
class VarSet {
public:
  VarSet() = default;

  VarSet(std::initializer_list<VarId> vars) : vars_(vars) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  }

  static VarSet fromUnsorted(std::vector<VarId> vars) {
    VarSet s;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    s.vars_ = std::move(vars);
    return s;
  }

  bool contains(VarId v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
  }

  void insert(VarId v) {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) vars_.insert(it, v);
  }

  void erase(VarId v) {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it != vars_.end() && *it == v) vars_.erase(it);
  }

  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }

  void unionWith(const VarSet& other) {
    std::vector<VarId> merged;
    merged.reserve(vars_.size() + other.vars_.size());
    std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(),
                   other.vars_.end(), std::back_inserter(merged));
    vars_ = std::move(merged);
  }

  void subtract(const VarSet& other) {
    std::vector<VarId> rest;
    rest.reserve(vars_.size());
    std::set_difference(vars_.begin(), vars_.end(), other.vars_.begin(),
                        other.vars_.end(), std::back_inserter(rest));
    vars_ = std::move(rest);
  }

  bool intersects(const VarSet& other) const {
    auto a = vars_.begin();
    auto b = other.vars_.begin();
    while (a != vars_.end() && b != other.vars_.end()) {
      if (*a == *b) return true;
      if (*a < *b) {
        ++a;
      } else {
        ++b;
      }
    }
    return false;
  }

  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }

  bool operator==(const VarSet&) const = default;

private:
  std::vector<VarId> vars_;
};

inline VarSet setUnion(const VarSet& a, const VarSet& b) {
  VarSet r = a;
  r.unionWith(b);
  return r;
}

inline VarSet setDifference(const VarSet& a, const VarSet& b) {
  VarSet r = a;
  r.subtract(b);
  return r;
}

}  // namespace wmc
