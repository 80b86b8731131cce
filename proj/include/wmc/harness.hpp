#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wmc/cnf.hpp"
#include "wmc/counter.hpp"
#include "wmc/var_order.hpp"

namespace wmc {

enum class RunMode { Count, Mavc, Oracle, GenWeights, Bench };

struct RunConfig {
  std::string inputPath;
  WeightFormat weightFormat = WeightFormat::LiteralPairs;
  ClusterKind clusterKind = ClusterKind::BmTree;
  HeuristicKind clusterOrderHeuristic = HeuristicKind::LexP;
  HeuristicKind diagramOrderHeuristic = HeuristicKind::Mcs;
  std::uint64_t randomSeed = 0;
  double timeLimitSeconds = 60.0;
  RunMode mode = RunMode::Count;
};

enum class RunStatus { Solved, Timeout, Overflow, Error };

const char* runStatusName(RunStatus status);

struct BenchRow {
  std::string file;
  ClusterKind clusterKind = ClusterKind::BmTree;
  HeuristicKind clusterOrder = HeuristicKind::LexP;
  HeuristicKind diagramOrder = HeuristicKind::Mcs;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::Error;
  std::optional<double> count;       // present iff status == Solved
  std::optional<std::uint32_t> mavc; // present whenever the plan was built
  double elapsedMs = 0.0;
  std::string message;               // diagnostic for Error rows
};

/// Parses, builds both orders, runs the counter under the configured
/// clustering, and reports one row. Parse failures, overflow, and timeouts
/// land in the row's status instead of escaping.
BenchRow runCount(const RunConfig& cfg);

/// Per variable, a seeded fair coin picks (W+, W-) = (0.5, 1.5) or
/// (1.5, 0.5).
WeightFunction generateWeights(const CnfFormula& formula, std::uint64_t seed);

/// Equality up to floating-point noise for non-negative counts: with the
/// inputs ordered a <= b, they are equal iff b - a <= 1e-3 when a = 0 or
/// b <= 1, and b/a <= 1 + 1e-3 otherwise.
bool countsEqual(double a, double b);

/// One row per (file, config) over every .cnf under dir, filename-sorted;
/// per-file failures become rows, never abort the sweep.
void runBench(const std::string& dir, const std::vector<RunConfig>& configs,
              std::ostream& out);

void writeCsvHeader(std::ostream& out);
void writeCsvRow(const BenchRow& row, std::ostream& out);

/// Count formatted the way the CLI prints it: scientific, 15 significant
/// digits.
std::string formatCount(double count);

}  // namespace wmc
