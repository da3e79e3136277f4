#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cclust/core.hpp"

namespace cclust {

/// One applied reduction, recorded with original edge indices.
struct RuleApplication {
  int rule = 0;                 // 1..4, or 0 for isolated-vertex removal
  VertexId vertex = -1;         // rule 3: the vertex
  ColorId color = -1;           // rules 2 and 3: the color
  EdgeSet edges;                // rule 3: deleted edges; rules 1, 2, 4: witness
  int count = 0;                // rule 4: |T|; rule 0: vertices removed
};

struct KernelResult {
  enum class Outcome { DecidedYes, Reduced };
  Outcome outcome = Outcome::Reduced;
  int decided_by = 0;
  /// For DecidedYes: a stable set of at least k edges of the input.
  EdgeSet witness;
  /// For Reduced: the equivalent instance and index maps back to the input.
  Instance reduced;
  std::vector<EdgeId> edge_origin;
  std::vector<VertexId> vertex_origin;
  std::vector<RuleApplication> log;
};

/// Rule 1. Graphs use a maximum matching, hypergraphs a greedy maximal one.
/// Returns k matching edges when it fires. `cover` receives the endpoints
/// of the maximal matching used, a vertex cover.
std::optional<EdgeSet> rule_matching(const Instance& inst, std::vector<VertexId>* cover = nullptr);

/// Rule 2: k edges of a single color.
std::optional<EdgeSet> rule_one_color(const Instance& inst);

/// Rule 3 at the lowest-indexed vertex where it applies: the deleted edges.
/// The threshold is deg^χ(v) >= d·k + 1. The rule additionally requires d·k
/// colors other than the least frequent one whose neighborhoods at v are
/// pairwise disjoint; on simple graphs this always holds once the threshold
/// is met, while with parallel edges or hyperedges the plain rule is unsound.
std::optional<RuleApplication> rule_chromatic_degree(const Instance& inst);

/// Applies a rule 3 firing, returning the instance without the deleted edges.
Instance apply_deletion(const Instance& inst, const EdgeSet& deleted,
                        std::vector<EdgeId>* origin = nullptr);

/// T = {v in S : at least 2s colors c with |N_c(v) \ S| >= 2s}, s = ceil(sqrt(k)).
std::vector<VertexId> meet_in_middle_set(const Instance& inst, const std::vector<VertexId>& cover);

/// Rule 4 (graphs only). Fires when |T| >= ceil(sqrt k) and the greedy
/// construction yields a verified stable set of size >= k, which it returns.
std::optional<EdgeSet> rule_meet_in_middle(const Instance& inst, const std::vector<VertexId>& cover);

/// Rules 1-4 exhaustively in that order, then isolated vertices removed.
KernelResult kernelize(const Instance& inst);

/// Maps a stable set of the reduced instance back to the input.
EdgeSet lift_witness(const KernelResult& result, const EdgeSet& reduced_witness);

/// Audit log, one `rule <id> <details>` line per application.
std::string format_log(const KernelResult& result);

int ceil_sqrt(int k);

/// Structural checks for a reduced simple-graph instance; returns the
/// violated conditions (empty if all hold).
std::vector<std::string> kernel_violations(const Instance& reduced);

/// Counting terms of the size argument for a reduced graph instance.
struct KernelSizeTerms {
  long long edges_inside_cover = 0, bound_inside_cover = 0;
  long long edges_at_t = 0, bound_at_t = 0;
  long long edges_at_rest = 0, bound_at_rest = 0;
  long long cover_size = 0, t_size = 0;
};
KernelSizeTerms kernel_size_terms(const Instance& reduced);

}  // namespace cclust
