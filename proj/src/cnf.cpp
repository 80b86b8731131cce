#include "wmc/cnf.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wmc/errors.hpp"

namespace wmc {

VarSet Clause::varSet() const {
  std::vector<VarId> vars;
  vars.reserve(literals.size());
  for (const Literal& lit : literals) vars.push_back(lit.var);
  return VarSet::fromUnsorted(std::move(vars));
}

Clause normalizeClause(std::vector<Literal> literals) {
  Clause clause;
  clause.literals.reserve(literals.size());
  for (const Literal& lit : literals) {
    const bool duplicate =
        std::find(clause.literals.begin(), clause.literals.end(), lit) !=
        clause.literals.end();
    if (duplicate) continue;
    clause.literals.push_back(lit);
    if (std::find(clause.literals.begin(), clause.literals.end(),
                  Literal{lit.var, !lit.positive}) != clause.literals.end()) {
      clause.tautology = true;
    }
  }
  return clause;
}

bool CnfFormula::hasEmptyClause() const {
  return std::any_of(clauses.begin(), clauses.end(),
                     [](const Clause& c) { return c.literals.empty(); });
}

VarSet CnfFormula::effectiveVars() const {
  std::vector<VarId> vars;
  for (const Clause& clause : clauses) {
    if (clause.tautology) continue;
    for (const Literal& lit : clause.literals) vars.push_back(lit.var);
  }
  return VarSet::fromUnsorted(std::move(vars));
}

WeightFunction::WeightFunction(std::uint32_t varCount)
    : pos_(varCount, 1.0), neg_(varCount, 1.0) {}

void WeightFunction::set(VarId v, double wPos, double wNeg) {
  pos_[v - 1] = wPos;
  neg_[v - 1] = wNeg;
}

void WeightFunction::setPositive(VarId v, double w) { pos_[v - 1] = w; }

void WeightFunction::setNegative(VarId v, double w) { neg_[v - 1] = w; }

namespace {

struct ParserState {
  std::uint32_t varCount = 0;
  std::uint32_t declaredClauses = 0;
  bool sawHeader = false;
  std::vector<Literal> pending;
  ParseResult out;
};

void failAt(std::size_t lineNo, const std::string& what) {
  throw ParseError("line " + std::to_string(lineNo) + ": " + what);
}

void applyWeight(ParserState& st, WeightFormat format, long long token,
                 double weight, std::size_t lineNo) {
  if (format == WeightFormat::Unweighted) return;
  if (!std::isfinite(weight)) failAt(lineNo, "weight is not finite");
  if (token == 0) failAt(lineNo, "weight line names variable 0");
  const auto var = static_cast<std::uint64_t>(token < 0 ? -token : token);
  if (var > st.varCount) {
    failAt(lineNo, "weight for unknown variable " + std::to_string(var));
  }
  const VarId v = static_cast<VarId>(var);
  if (format == WeightFormat::Cachet) {
    if (token < 0) failAt(lineNo, "cachet weight line with negative variable");
    // p = -1 is the convention for an unweighted variable.
    if (weight == -1.0) {
      st.out.weights.set(v, 1.0, 1.0);
    } else {
      st.out.weights.set(v, weight, 1.0 - weight);
    }
  } else {
    if (token > 0) {
      st.out.weights.setPositive(v, weight);
    } else {
      st.out.weights.setNegative(v, weight);
    }
  }
}

}  // namespace

ParseResult parseCnf(std::istream& in, WeightFormat format) {
  ParserState st;
  std::string line;
  std::size_t lineNo = 0;
  bool done = false;

  while (!done && std::getline(in, line)) {
    ++lineNo;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;  // blank line

    if (first == "c") continue;
    if (first.size() == 1 && first[0] == '%') break;  // legacy end marker

    if (first == "p") {
      if (st.sawHeader) failAt(lineNo, "duplicate header");
      std::string kind;
      long long vars = -1;
      long long clauses = -1;
      if (!(tokens >> kind >> vars >> clauses) || kind != "cnf" || vars < 0 ||
          clauses < 0) {
        failAt(lineNo, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      std::string extra;
      if (tokens >> extra) failAt(lineNo, "trailing tokens after header");
      st.varCount = static_cast<std::uint32_t>(vars);
      st.declaredClauses = static_cast<std::uint32_t>(clauses);
      st.sawHeader = true;
      st.out.formula.varCount = st.varCount;
      st.out.weights = WeightFunction(st.varCount);
      continue;
    }

    if (!st.sawHeader) failAt(lineNo, "clause data before header");

    if (first == "w") {
      long long lit = 0;
      double weight = 0.0;
      if (!(tokens >> lit >> weight)) {
        failAt(lineNo, "malformed weight line");
      }
      applyWeight(st, format, lit, weight, lineNo);
      continue;
    }

    // Clause literals; a clause may span lines and closes on 0.
    std::istringstream retokens(line);
    long long lit = 0;
    while (retokens >> lit) {
      if (lit == 0) {
        st.out.formula.clauses.push_back(normalizeClause(st.pending));
        st.pending.clear();
        continue;
      }
      const auto var = static_cast<std::uint64_t>(lit < 0 ? -lit : lit);
      if (var > st.varCount) {
        failAt(lineNo, "literal " + std::to_string(lit) + " out of range");
      }
      st.pending.push_back(Literal{static_cast<VarId>(var), lit > 0});
    }
    if (!retokens.eof()) failAt(lineNo, "unexpected token in clause");
  }

  if (!st.sawHeader) throw ParseError("missing 'p cnf' header");
  if (!st.pending.empty()) {
    throw ParseError("clause not terminated by 0 at end of input");
  }
  if (st.out.formula.clauses.size() != st.declaredClauses) {
    st.out.warnings.push_back(
        "header declares " + std::to_string(st.declaredClauses) +
        " clauses but " + std::to_string(st.out.formula.clauses.size()) +
        " were read");
  }
  return st.out;
}

ParseResult parseCnfFile(const std::string& path, WeightFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parseCnf(in, format);
}

void writeDimacs(const CnfFormula& formula, std::ostream& out) {
  out << "p cnf " << formula.varCount << ' ' << formula.clauses.size() << '\n';
  for (const Clause& clause : formula.clauses) {
    for (const Literal& lit : clause.literals) {
      out << (lit.positive ? static_cast<long long>(lit.var)
                           : -static_cast<long long>(lit.var))
          << ' ';
    }
    out << "0\n";
  }
}

void writeLiteralPairWeights(const WeightFunction& weights,
                             std::ostream& out) {
  for (VarId v = 1; v <= weights.varCount(); ++v) {
    out << "w " << v << ' ' << weights.positive(v) << '\n';
    out << "w -" << v << ' ' << weights.negative(v) << '\n';
  }
}

bool Graph::adjacent(VarId u, VarId v) const {
  const auto& list = adj[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::edgeCount() const {
  std::size_t degrees = 0;
  for (VarId v = 1; v <= n; ++v) degrees += adj[v].size();
  return degrees / 2;
}

Graph gaifmanGraph(const CnfFormula& formula) {
  Graph g;
  g.n = formula.varCount;
  g.adj.assign(g.n + 1, {});
  for (const Clause& clause : formula.clauses) {
    const VarSet vars = clause.varSet();
    for (VarId u : vars) {
      for (VarId v : vars) {
        if (u != v) g.adj[u].push_back(v);
      }
    }
  }
  for (VarId v = 1; v <= g.n; ++v) {
    auto& list = g.adj[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

Add clauseAdd(const Clause& clause, NodeStore& store) {
  if (clause.tautology) return store.constant(1.0);
  Add result = store.constant(0.0);

  // Build bottom-up from the deepest variable; each literal adds one node:
  // satisfied -> 1, otherwise fall through to the rest of the clause.
  std::vector<Literal> byRank = clause.literals;
  std::sort(byRank.begin(), byRank.end(),
            [&store](const Literal& a, const Literal& b) {
              return store.order().rank(a.var) > store.order().rank(b.var);
            });
  for (const Literal& lit : byRank) {
    result = sum(store.literal(lit.var, lit.positive),
                 product(store.literal(lit.var, !lit.positive), result));
  }
  return result;
}

Add weightAdd(VarId var, const WeightFunction& weights, NodeStore& store) {
  const Add high = store.constant(weights.positive(var));
  const Add low = store.constant(weights.negative(var));
  return sum(product(store.literal(var, true), high),
             product(store.literal(var, false), low));
}

}  // namespace wmc
