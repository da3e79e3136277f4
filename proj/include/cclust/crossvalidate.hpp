#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cclust/core.hpp"

namespace cclust {

/// Small random instance families for solver cross-checks.
struct SweepConfig {
  int instances = 200;
  std::uint64_t seed = 1;
  int max_n = 10;
  int max_m = 14;        // graphs
  int max_hyper_m = 12;  // order-3 hypergraphs
  int max_colors = 4;
  /// Every `hyper_every`-th instance is a hypergraph, 0 for none.
  int hyper_every = 4;
  /// Every `forest_every`-th instance is a random forest, 0 for none.
  int forest_every = 5;
  bool color_coding = true;
  /// Deliberately corrupts the vc answer on some instances (harness self-test).
  bool inject_fault = false;
};

/// The i-th instance of the sweep; k is left at 0.
ColoredHypergraph sweep_graph(const SweepConfig& cfg, int index);

struct CheckOutcome {
  int optimum = 0;
  std::vector<std::string> solvers_run;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Runs every applicable solver on `inst`, compares against the oracle, and
/// re-verifies witnesses and kernel invariants.
CheckOutcome check_instance(const Instance& inst, const SweepConfig& cfg);

/// Deletes edges (and lowers k) while `check_instance` keeps failing.
Instance minimize_failure(const Instance& inst, const SweepConfig& cfg);

struct SweepSummary {
  int instances = 0;
  int yes = 0;
  std::map<std::string, int> runs;  // per solver
  std::optional<Instance> failure;  // minimized
  std::vector<std::string> failure_detail;
};

/// Stops at the first discrepancy.
SweepSummary run_sweep(const SweepConfig& cfg);

/// Witness sanity: sorted, distinct, in range, stable, and at least `size` edges.
bool witness_ok(const ColoredHypergraph& g, const EdgeSet& w, int size);

}  // namespace cclust
