#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wmc/add.hpp"
#include "wmc/varset.hpp"

namespace wmc {

struct Literal {
  VarId var = 0;
  bool positive = true;

  bool operator==(const Literal&) const = default;
};

/// Clause after normalization: duplicate (var, polarity) pairs removed and
/// first-occurrence order kept; a clause holding x and !x is flagged as a
/// tautology. An empty literal list is the unsatisfiable empty clause.
struct Clause {
  std::vector<Literal> literals;
  bool tautology = false;

  VarSet varSet() const;

  bool operator==(const Clause&) const = default;
};

Clause normalizeClause(std::vector<Literal> literals);

struct CnfFormula {
  std::uint32_t varCount = 0;
  std::vector<Clause> clauses;

  bool hasEmptyClause() const;

  /// Variables of the non-tautological clauses; the universe the clustering
  /// plan partitions. Tautologies contribute nothing to the count beyond a
  /// unit factor, and header-declared variables outside this set fold in as
  /// scalar factors.
  VarSet effectiveVars() const;

  bool operator==(const CnfFormula&) const = default;
};

/// Per-literal weights, total over vars 1..varCount. Defaults to 1 on both
/// polarities, which makes the weighted count the plain model count.
class WeightFunction {
public:
  WeightFunction() = default;
  explicit WeightFunction(std::uint32_t varCount);

  std::uint32_t varCount() const {
    return static_cast<std::uint32_t>(pos_.size());
  }

  double positive(VarId v) const { return pos_[v - 1]; }
  double negative(VarId v) const { return neg_[v - 1]; }

  void set(VarId v, double wPos, double wNeg);
  void setPositive(VarId v, double w);
  void setNegative(VarId v, double w);

  bool operator==(const WeightFunction&) const = default;

private:
  std::vector<double> pos_;
  std::vector<double> neg_;
};

enum class WeightFormat {
  Unweighted,    // weight lines ignored; every literal weighs 1
  Cachet,        // "w <var> <p>": W+ = p, W- = 1-p; p = -1 means both 1
  LiteralPairs,  // "w <lit> <weight>": sign of lit picks the polarity
};

struct ParseResult {
  CnfFormula formula;
  WeightFunction weights;
  std::vector<std::string> warnings;
};

/// DIMACS CNF: 'c' comments, one 'p cnf V C' header, clauses as nonzero
/// integers closed by 0 (clauses may span lines), 'w' lines read per the
/// chosen format. A clause-count mismatch is a warning, not an error.
ParseResult parseCnf(std::istream& in, WeightFormat format);
ParseResult parseCnfFile(const std::string& path, WeightFormat format);

void writeDimacs(const CnfFormula& formula, std::ostream& out);

/// Appends "w <lit> <weight>" lines for both polarities of every variable.
void writeLiteralPairWeights(const WeightFunction& weights, std::ostream& out);

struct Graph {
  std::uint32_t n = 0;
  std::vector<std::vector<VarId>> adj;  // 1-based; each list sorted, unique

  bool adjacent(VarId u, VarId v) const;
  const std::vector<VarId>& neighbors(VarId v) const { return adj[v]; }
  std::size_t edgeCount() const;
};

/// Variables as vertices, an edge wherever two variables share a clause.
Graph gaifmanGraph(const CnfFormula& formula);

/// Indicator ADD of a disjunction; tautologies collapse to constant(1).
Add clauseAdd(const Clause& clause, NodeStore& store);

/// Two-leaf ADD mapping {} to W-(var) and {var} to W+(var).
Add weightAdd(VarId var, const WeightFunction& weights, NodeStore& store);

}  // namespace wmc
