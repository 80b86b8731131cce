#include "wmc/order.hpp"

#include <numeric>

#include "wmc/errors.hpp"

namespace wmc {

VarOrder::VarOrder(std::vector<VarId> sequence) : byRank_(std::move(sequence)) {
  const auto n = static_cast<std::uint32_t>(byRank_.size());
  rank_.assign(n + 1, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    const VarId v = byRank_[i];
    if (v == 0 || v > n || rank_[v] != 0) {
      throw InvalidValue("variable order is not a permutation of 1.." +
                         std::to_string(n));
    }
    rank_[v] = i + 1;
  }
}

VarOrder VarOrder::identity(std::uint32_t n) {
  std::vector<VarId> seq(n);
  std::iota(seq.begin(), seq.end(), VarId{1});
  return VarOrder(std::move(seq));
}

std::uint32_t VarOrder::rank(VarId v) const {
  if (v == 0 || v >= rank_.size()) {
    throw UnknownVariable("variable " + std::to_string(v) +
                          " outside order of size " +
                          std::to_string(byRank_.size()));
  }
  return rank_[v];
}

VarId VarOrder::varAtRank(std::uint32_t r) const {
  if (r == 0 || r > byRank_.size()) {
    throw InvalidValue("rank " + std::to_string(r) + " out of range");
  }
  return byRank_[r - 1];
}

VarOrder invert(const VarOrder& o) {
  const std::uint32_t n = o.size();
  std::vector<VarId> seq(n);
  for (std::uint32_t r = 1; r <= n; ++r) {
    seq[n - r] = o.varAtRank(r);
  }
  return VarOrder(std::move(seq));
}

}  // namespace wmc
