#include "cclust/crossvalidate.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "cclust/aboveguarantee.hpp"
#include "cclust/bounds.hpp"
#include "cclust/conflict.hpp"
#include "cclust/exactcover.hpp"
#include "cclust/kernel.hpp"
#include "cclust/oracle.hpp"
#include "cclust/treedp.hpp"

namespace cclust {

bool witness_ok(const ColoredHypergraph& g, const EdgeSet& w, int size) {
  if (static_cast<int>(w.size()) < size) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] >= g.num_edges()) return false;
    if (i > 0 && w[i - 1] >= w[i]) return false;
  }
  return is_stable(g, w);
}

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

ColoredHypergraph random_forest(std::mt19937_64& rng, int n, int colors) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    if (draw(rng, 0, 5) == 0) continue;  // start a new tree
    edges.push_back({{draw(rng, 0, v - 1), v}, draw(rng, 0, colors - 1)});
    std::sort(edges.back().vertices.begin(), edges.back().vertices.end());
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return ColoredHypergraph(n, colors, edges);
}

ColoredHypergraph random_edges(std::mt19937_64& rng, int n, int m, int colors, int d) {
  std::vector<Edge> edges;
  std::vector<VertexId> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  for (int i = 0; i < m; ++i) {
    const int size = std::min(n, d == 2 ? 2 : draw(rng, 1, d));
    std::shuffle(verts.begin(), verts.end(), rng);
    Edge e{{verts.begin(), verts.begin() + size}, draw(rng, 0, colors - 1)};
    std::sort(e.vertices.begin(), e.vertices.end());
    edges.push_back(std::move(e));
  }
  return ColoredHypergraph(n, colors, edges);
}

struct Checker {
  const Instance& inst;
  const SweepConfig& cfg;
  CheckOutcome out;
  bool want;

  void fail(const std::string& what) { out.failures.push_back(what); }

  void optimum(const std::string& name, const Solution& s) {
    out.solvers_run.push_back(name);
    if (s.size != out.optimum) {
      fail(name + ": optimum " + std::to_string(s.size) + " != oracle " + std::to_string(out.optimum));
    }
    if (!witness_ok(inst.graph, s.witness, s.size)) fail(name + ": invalid witness");
  }

  void decision(const std::string& name, const Decision& d) {
    out.solvers_run.push_back(name);
    if (d.yes != want) fail(name + ": answer " + (d.yes ? "YES" : "NO") + " disagrees with oracle");
    if (d.yes && !witness_ok(inst.graph, d.witness, inst.k)) fail(name + ": invalid witness");
  }

  template <class F>
  void guarded(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      fail(name + ": threw " + e.what());
    }
  }
};

}  // namespace

ColoredHypergraph sweep_graph(const SweepConfig& cfg, int index) {
  std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index));
  const int colors = draw(rng, 1, std::max(1, cfg.max_colors));
  const int n = draw(rng, 2, std::max(2, cfg.max_n));
  if (cfg.forest_every > 0 && index % cfg.forest_every == cfg.forest_every - 1) {
    return random_forest(rng, n, colors);
  }
  if (cfg.hyper_every > 0 && index % cfg.hyper_every == cfg.hyper_every - 1) {
    return random_edges(rng, std::max(n, 3), draw(rng, 1, cfg.max_hyper_m), colors, 3);
  }
  return random_edges(rng, n, draw(rng, 1, cfg.max_m), colors, 2);
}

CheckOutcome check_instance(const Instance& inst, const SweepConfig& cfg) {
  const auto& g = inst.graph;
  Checker c{inst, cfg, {}, false};
  const Solution truth = oracle_max_stable(g);
  c.out.optimum = truth.size;
  c.want = truth.size >= inst.k;

  c.guarded("vc", [&] {
    Solution s = solve_via_vc(inst);
    if (cfg.inject_fault && g.num_edges() % 3 == 2 && s.size > 0) {
      s.size -= 1;
      s.witness.pop_back();
    }
    c.optimum("vc", s);
  });
  c.guarded("branch-r", [&] {
    c.optimum("branch-r", branch_unstable(inst));
    c.decision("branch-r-decide", branch_unstable_decide(inst));
  });
  c.guarded("exactcover", [&] { c.decision("exactcover", solve_via_exactcover(inst)); });

  const EdgeSet matching = induced_matching(g, InducedMode::ExactSmall).edges;
  c.guarded("xp", [&] { c.decision("xp", solve_xp(inst, matching)); });

  if (cfg.color_coding) {
    c.guarded("colorcode", [&] {
      ColorCodingConfig cc;
      cc.matching = matching;
      cc.seed = cfg.seed;
      if (default_repetitions(inst, static_cast<int>(matching.size()), cc.epsilon) > 4000) return;
      const auto r = solve_color_coding(inst, cc);
      c.out.solvers_run.push_back("colorcode");
      // One-sided: only a YES is checked.
      if (r.yes && (!c.want || !witness_ok(g, r.witness, inst.k))) c.fail("colorcode: unsound YES");
    });
  }

  if (g.is_graph()) {
    c.guarded("secw-dp", [&] {
      const auto layout = spanning_tree_search(g, 40, cfg.seed);
      const auto lfe = local_feedback_counts(g, layout);
      if (lfe != layout.lfe_at) c.fail("layout: lfe recount mismatch");
      c.optimum("secw-dp", solve_secw_dp(inst, layout));
    });
    if (is_forest(g)) c.guarded("forest", [&] { c.optimum("forest", forest_dp(inst)); });
    if (g.num_colors() <= 2) c.guarded("two-color", [&] { c.optimum("two-color", solve_two_colors(inst)); });
    c.guarded("wrapper", [&] {
      c.optimum("wrapper-forest", solve_deletion_wrapper(inst, feedback_edges(g), DeletionClass::Forest));
      const EdgeSet rare = rare_color_edges(g);
      if (rare.size() <= 14) {
        c.optimum("wrapper-two-color", solve_deletion_wrapper(inst, rare, DeletionClass::TwoColor));
      }
    });
  }

  c.guarded("kernel", [&] {
    c.out.solvers_run.push_back("kernel");
    const auto kr = kernelize(inst);
    if (kr.outcome == KernelResult::Outcome::DecidedYes) {
      if (!c.want) c.fail("kernel: decided YES on a NO instance");
      if (!witness_ok(g, kr.witness, inst.k)) c.fail("kernel: invalid witness");
      return;
    }
    const Solution reduced = oracle_max_stable(kr.reduced.graph);
    if ((reduced.size >= kr.reduced.k) != c.want) c.fail("kernel: answer changed");
    if (reduced.size >= kr.reduced.k) {
      EdgeSet part(reduced.witness.begin(), reduced.witness.begin() + kr.reduced.k);
      if (!witness_ok(g, lift_witness(kr, part), kr.reduced.k)) c.fail("kernel: lifted witness invalid");
    }
    if (kr.reduced.graph.is_graph() && !kr.reduced.graph.has_parallel_edges()) {
      for (const auto& v : kernel_violations(kr.reduced)) c.fail("kernel: " + v);
    }
  });
  return c.out;
}

Instance minimize_failure(const Instance& inst, const SweepConfig& cfg) {
  Instance cur = inst;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (EdgeId e = 0; e < cur.graph.num_edges(); ++e) {
      EdgeSet keep;
      for (EdgeId f = 0; f < cur.graph.num_edges(); ++f) {
        if (f != e) keep.push_back(f);
      }
      for (int dk : {0, 1}) {
        Instance next{edge_subgraph(cur.graph, keep), std::max(0, cur.k - dk)};
        if (!check_instance(next, cfg).ok()) {
          cur = std::move(next);
          shrunk = true;
          break;
        }
      }
      if (shrunk) break;
    }
  }
  return cur;
}

SweepSummary run_sweep(const SweepConfig& cfg) {
  SweepSummary sum;
  for (int i = 0; i < cfg.instances; ++i) {
    const auto g = sweep_graph(cfg, i);
    const int opt = oracle_max_stable(g).size;
    // Alternate just below, at, and just above the optimum.
    const int k = std::clamp(opt + (i % 3) - 1, 0, g.num_edges() + 1);
    const Instance inst{g, k};
    const auto res = check_instance(inst, cfg);
    ++sum.instances;
    if (opt >= k) ++sum.yes;
    for (const auto& s : res.solvers_run) ++sum.runs[s];
    if (!res.ok()) {
      sum.failure = minimize_failure(inst, cfg);
      sum.failure_detail = check_instance(*sum.failure, cfg).failures;
      break;
    }
  }
  return sum;
}

}  // namespace cclust
