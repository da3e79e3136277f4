#include <gtest/gtest.h>

#include <functional>

#include "cclust/conflict.hpp"
#include "cclust/io.hpp"
#include "cclust/matching.hpp"
#include "cclust/oracle.hpp"
#include "cclust/vertex_cover.hpp"
#include "support.hpp"

using namespace cclust;

namespace {

ColoredHypergraph triangle(ColorId a, ColorId b, ColorId c) {
  return ColoredHypergraph(3, 3, {{{0, 1}, a}, {{1, 2}, b}, {{0, 2}, c}});
}

int brute_vc(const SimpleGraph& g) {
  const int n = g.num_nodes();
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edge_list()) {
      if (!(mask >> u & 1) && !(mask >> v & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

bool is_cover(const SimpleGraph& g, const std::vector<int>& cover) {
  std::vector<char> in(g.num_nodes(), 0);
  for (int v : cover) in[v] = 1;
  for (auto [u, v] : g.edge_list()) {
    if (!in[u] && !in[v]) return false;
  }
  return true;
}

}  // namespace

TEST(Conflict, Construction) {
  EXPECT_EQ(build_conflict(triangle(1, 1, 1)).num_edges(), 0);
  EXPECT_EQ(build_conflict(triangle(0, 0, 1)).num_edges(), 2);
  EXPECT_EQ(build_conflict(triangle(0, 1, 2)).num_edges(), 3);
}

TEST(Conflict, IndependenceMatchesStability) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = fixtures::random_hypergraph(rng, 6, 10, 3, 3, trial % 2 == 0);
    auto cg = build_conflict(g);
    for (unsigned mask = 0; mask < (1u << g.num_edges()); ++mask) {
      std::vector<EdgeId> sel;
      for (int e = 0; e < g.num_edges(); ++e) {
        if (mask >> e & 1) sel.push_back(e);
      }
      bool independent = true;
      for (auto [u, v] : cg.edge_list()) {
        if ((mask >> u & 1) && (mask >> v & 1)) independent = false;
      }
      ASSERT_EQ(independent, is_stable(g, sel));
    }
  }
}

TEST(VertexCover, MatchesBruteForce) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    std::vector<std::pair<int, int>> edges;
    const double p = (rng() % 100) / 100.0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if ((rng() % 1000) / 1000.0 < p) edges.emplace_back(u, v);
      }
    }
    auto g = SimpleGraph::from_edges(n, edges);
    auto cover = min_vertex_cover(g);
    ASSERT_TRUE(is_cover(g, cover));
    ASSERT_EQ(static_cast<int>(cover.size()), brute_vc(g));
    const int opt = static_cast<int>(cover.size());
    EXPECT_TRUE(vertex_cover_at_most(g, opt).has_value());
    if (opt > 0) EXPECT_FALSE(vertex_cover_at_most(g, opt - 1).has_value());
  }
}

TEST(VertexCover, FoldingChains) {
  // Long cycles and paths exercise the degree-2 fold repeatedly.
  for (int n : {3, 4, 5, 9, 10, 31}) {
    std::vector<std::pair<int, int>> cycle;
    for (int i = 0; i < n; ++i) cycle.emplace_back(i, (i + 1) % n);
    auto g = SimpleGraph::from_edges(n, cycle);
    auto cover = min_vertex_cover(g);
    EXPECT_TRUE(is_cover(g, cover));
    EXPECT_EQ(static_cast<int>(cover.size()), (n + 1) / 2);
  }
}

TEST(SolveViaVc, Examples) {
  EXPECT_EQ(solve_via_vc({triangle(0, 1, 2), 1}).size, 1);
  EXPECT_EQ(solve_via_vc({triangle(0, 0, 1), 2}).size, 2);
  EXPECT_EQ(solve_via_vc({triangle(2, 2, 2), 2}).size, 3);
}

TEST(BranchUnstable, Examples) {
  auto mono = triangle(1, 1, 1);
  EXPECT_EQ(branch_unstable({mono, 3}).size, 3);
  auto rainbow = triangle(0, 1, 2);
  auto d = branch_unstable_decide({rainbow, 1});
  EXPECT_TRUE(d.yes);
  EXPECT_TRUE(fixtures::valid_witness(rainbow, d.witness, 1));
  EXPECT_FALSE(branch_unstable_decide({rainbow, 2}).yes);
  EXPECT_FALSE(branch_unstable_decide({rainbow, 4}).yes);
  EXPECT_TRUE(branch_unstable_decide({rainbow, 0}).yes);
}

TEST(TwoColors, Examples) {
  ColoredHypergraph path(5, 2, {{{0, 1}, 0}, {{1, 2}, 1}, {{2, 3}, 0}, {{3, 4}, 1}});
  EXPECT_EQ(solve_two_colors({path, 2}).size, 2);
  EXPECT_EQ(oracle_max_stable(path).size, 2);
  ColoredHypergraph mono(4, 1, {{{0, 1}, 0}, {{1, 2}, 0}, {{2, 3}, 0}});
  EXPECT_EQ(solve_two_colors({mono, 3}).size, 3);
  EXPECT_THROW(solve_two_colors({triangle(0, 1, 2), 1}), PreconditionError);
}

TEST(Solvers, AgreeWithOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const bool graph = trial % 3 != 0;
    const int colors = 1 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % 15);
    auto g = fixtures::random_hypergraph(rng, 3 + static_cast<int>(rng() % 8), m, colors,
                                        graph ? 2 : 3, graph);
    const int opt = oracle_max_stable(g).size;
    Instance inst{g, opt};
    auto vc = solve_via_vc(inst);
    ASSERT_EQ(vc.size, opt) << write_instance_string(inst);
    EXPECT_TRUE(fixtures::valid_witness(g, vc.witness, opt));
    auto br = branch_unstable(inst);
    ASSERT_EQ(br.size, opt);
    EXPECT_TRUE(fixtures::valid_witness(g, br.witness, opt));
    EXPECT_TRUE(branch_unstable_decide(inst).yes);
    EXPECT_FALSE(branch_unstable_decide({g, opt + 1}).yes);
    if (colors <= 2) {
      auto two = solve_two_colors(inst);
      ASSERT_EQ(two.size, opt);
      EXPECT_TRUE(fixtures::valid_witness(g, two.witness, opt));
      // König consistency.
      auto cg = build_conflict(g);
      std::vector<int> side;
      ASSERT_TRUE(cg.bipartition(side));
      const auto mate = max_cardinality_matching(cg);
      const int matched = static_cast<int>(std::count_if(mate.begin(), mate.end(), [](int x) { return x != -1; })) / 2;
      EXPECT_EQ(matched + opt, g.num_edges());
    }
  }
}

TEST(Matching, BlossomMatchesBruteForce) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) edges.emplace_back(u, v);
      }
    }
    auto g = SimpleGraph::from_edges(n, edges);
    const auto mate = max_cardinality_matching(g);
    int size = 0;
    for (int v = 0; v < n; ++v) {
      if (mate[v] == -1) continue;
      ASSERT_EQ(mate[mate[v]], v);
      ASSERT_TRUE(g.adjacent(v, mate[v]));
      ++size;
    }
    // Brute force over edge subsets via recursion on the lowest free node.
    std::vector<char> used(n, 0);
    std::function<int(int)> best = [&](int v) -> int {
      while (v < n && used[v]) ++v;
      if (v >= n) return 0;
      used[v] = 1;
      int r = best(v + 1);
      for (int w : g.neighbors(v)) {
        if (used[w]) continue;
        used[w] = 1;
        r = std::max(r, 1 + best(v + 1));
        used[w] = 0;
      }
      used[v] = 0;
      return r;
    };
    ASSERT_EQ(size / 2, best(0));
  }
}
