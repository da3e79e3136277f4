#include <gtest/gtest.h>

#include <cmath>

#include "cclust/io.hpp"
#include "cclust/kernel.hpp"
#include "cclust/matching.hpp"
#include "cclust/oracle.hpp"
#include "support.hpp"

using namespace cclust;

namespace {

bool answer(const Instance& inst) { return oracle_max_stable(inst.graph).size >= inst.k; }

bool kernel_answer(const KernelResult& r) {
  if (r.outcome == KernelResult::Outcome::DecidedYes) return true;
  return answer(r.reduced);
}

// Random graph without parallel edges.
ColoredHypergraph random_simple_graph(std::mt19937_64& rng, int n, int m, int colors) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min<size_t>(pairs.size(), m));
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({{u, v}, static_cast<ColorId>(rng() % colors)});
  return ColoredHypergraph(n, colors, edges);
}

// Exhaustive maximum matching size for small graphs.
int brute_matching(const ColoredHypergraph& g) {
  int best = 0;
  const int m = g.num_edges();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> used(g.num_vertices(), 0);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      for (VertexId v : g.edge(e).vertices) {
        if (used[v]) ok = false;
        used[v] = 1;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

TEST(Rules, Matching) {
  ColoredHypergraph path(4, 3, {{{0, 1}, 0}, {{1, 2}, 1}, {{2, 3}, 2}});
  EXPECT_TRUE(rule_matching({path, 1}).has_value());
  EXPECT_TRUE(rule_matching({path, 2}).has_value());
  EXPECT_FALSE(rule_matching({path, 3}).has_value());
  std::vector<VertexId> cover;
  rule_matching({path, 3}, &cover);
  EXPECT_LE(cover.size(), 4u);
}

TEST(Rules, MatchingAgainstExhaustive) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = fixtures::random_hypergraph(rng, 8, 10, 3, 2);
    const int best = brute_matching(g);
    for (int k = 1; k <= 5; ++k) {
      auto w = rule_matching({g, k});
      EXPECT_EQ(w.has_value(), best >= k);
      if (w) EXPECT_TRUE(fixtures::valid_witness(g, *w, k));
    }
    EXPECT_EQ(static_cast<int>(maximum_matching(g).size()), best);
  }
}

TEST(Rules, OneColor) {
  ColoredHypergraph red(6, 2, {{{0, 1}, 1}, {{4, 5}, 1}, {{1, 2}, 0}});
  EXPECT_TRUE(rule_one_color({red, 2}).has_value());
  ColoredHypergraph rainbow(4, 4, {{{0, 1}, 1}, {{0, 2}, 2}, {{0, 3}, 3}});
  EXPECT_FALSE(rule_one_color({rainbow, 2}).has_value());
}

TEST(Rules, ChromaticDegreeDeletesLeastFrequent) {
  // k = 1, vertex 0 with color frequencies 2, 1, 1.
  ColoredHypergraph g(5, 3, {{{0, 1}, 0}, {{0, 2}, 0}, {{0, 3}, 1}, {{0, 4}, 2}});
  auto app = rule_chromatic_degree({g, 1});
  ASSERT_TRUE(app.has_value());
  EXPECT_EQ(app->vertex, 0);
  EXPECT_EQ(app->color, 1);
  EXPECT_EQ(app->edges, (EdgeSet{2}));
  ColoredHypergraph low(3, 2, {{{0, 1}, 0}, {{0, 2}, 1}});
  EXPECT_FALSE(rule_chromatic_degree({low, 1}).has_value());
}

TEST(Rules, ChromaticDegreeNeedsDisjointNeighborhoodsOnMultigraphs) {
  // Parallel edges let one neighbor block two colors at once; deleting the
  // least frequent color here would turn a yes-instance into a no-instance.
  ColoredHypergraph g(5, 8,
                      {{{0, 1}, 0}, {{1, 2}, 0}, {{3, 4}, 1}, {{0, 2}, 2}, {{0, 2}, 3},
                       {{0, 3}, 4}, {{0, 3}, 5}, {{0, 4}, 6}, {{0, 4}, 7}});
  Instance inst{g, 3};
  EXPECT_TRUE(answer(inst));
  EXPECT_FALSE(rule_chromatic_degree(inst).has_value());
  // The unguarded deletion breaks equivalence.
  EXPECT_FALSE(answer(apply_deletion(inst, {0})));
  EXPECT_TRUE(kernel_answer(kernelize(inst)));
}

TEST(Rules, ChromaticDegreeEquivalence) {
  std::mt19937_64 rng(43);
  int fired = 0;
  for (int trial = 0; trial < 3000 && fired < 150; ++trial) {
    // A rainbow-heavy star center so that the threshold is reachable.
    const int k = 1 + static_cast<int>(rng() % 2);
    std::vector<Edge> edges;
    const int leaves = 2 * k + 1 + static_cast<int>(rng() % 3);
    for (int i = 1; i <= leaves; ++i) edges.push_back({{0, i}, static_cast<ColorId>(rng() % 6)});
    for (int extra = 0; extra < 3; ++extra) {
      int a = 1 + static_cast<int>(rng() % leaves), b = 1 + static_cast<int>(rng() % leaves);
      if (a != b) edges.push_back({{a, b}, static_cast<ColorId>(rng() % 6)});
    }
    Instance inst{ColoredHypergraph(leaves + 1, 6, edges), k};
    auto app = rule_chromatic_degree(inst);
    if (!app) continue;
    ++fired;
    EXPECT_EQ(answer(inst), answer(apply_deletion(inst, app->edges))) << write_instance_string(inst);
  }
  EXPECT_GT(fired, 20);
}

TEST(Rules, MeetInMiddle) {
  // k = 1: s = 1, a cover vertex with two colors of two outside neighbors each.
  ColoredHypergraph g(5, 2, {{{0, 1}, 0}, {{0, 2}, 0}, {{0, 3}, 1}, {{0, 4}, 1}});
  Instance inst{g, 1};
  std::vector<VertexId> cover{0};
  EXPECT_EQ(meet_in_middle_set(inst, cover), (std::vector<VertexId>{0}));
  auto w = rule_meet_in_middle(inst, cover);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(fixtures::valid_witness(g, *w, 1));

  ColoredHypergraph thin(3, 2, {{{0, 1}, 0}, {{0, 2}, 1}});
  EXPECT_FALSE(rule_meet_in_middle({thin, 1}, cover).has_value());
  ColoredHypergraph hyper(3, 1, {{{0, 1, 2}, 0}});
  EXPECT_THROW(rule_meet_in_middle({hyper, 1}, cover), PreconditionError);
}

TEST(Rules, MeetInMiddleGreedyWitness) {
  // k = 4, s = 2: cover vertices each with 4 colors of 4 private leaves.
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const int hubs = 2 + static_cast<int>(rng() % 2);
    std::vector<Edge> edges;
    int next = hubs;
    for (int h = 0; h < hubs; ++h) {
      for (int c = 0; c < 4; ++c) {
        for (int i = 0; i < 4; ++i) {
          // Leaves are shared between hubs at random to stress the pigeonhole step.
          const int leaf = (rng() % 3 == 0 && next > hubs) ? hubs + static_cast<int>(rng() % (next - hubs)) : next++;
          edges.push_back({{h, leaf}, h * 4 + c});
        }
      }
    }
    ColoredHypergraph g(next, hubs * 4, edges);
    if (g.has_parallel_edges()) continue;
    std::vector<VertexId> cover;
    for (int h = 0; h < hubs; ++h) cover.push_back(h);
    Instance inst{g, 4};
    if (meet_in_middle_set(inst, cover).size() >= 2) {
      auto w = rule_meet_in_middle(inst, cover);
      ASSERT_TRUE(w.has_value());
      EXPECT_TRUE(fixtures::valid_witness(g, *w, 4));
    }
  }
}

TEST(Kernelize, Basics) {
  ColoredHypergraph g(4, 2, {{{0, 1}, 0}, {{1, 2}, 1}});
  auto r = kernelize({g, 1});
  EXPECT_EQ(r.outcome, KernelResult::Outcome::DecidedYes);
  EXPECT_EQ(r.decided_by, 1);
  auto zero = kernelize({g, 0});
  EXPECT_EQ(zero.outcome, KernelResult::Outcome::DecidedYes);

  ColoredHypergraph tri(3, 3, {{{0, 1}, 0}, {{1, 2}, 1}, {{0, 2}, 2}});
  auto reduced = kernelize({tri, 2});
  ASSERT_EQ(reduced.outcome, KernelResult::Outcome::Reduced);
  EXPECT_TRUE(kernel_violations(reduced.reduced).empty());
  EXPECT_NE(format_log(kernelize({g, 1})).find("rule 1"), std::string::npos);
}

TEST(Kernelize, EquivalenceAndStructure) {
  std::mt19937_64 rng(53);
  int reduced_count = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const bool graph = trial % 4 != 0;
    const bool simple = trial % 2 == 0;
    const int n = 3 + static_cast<int>(rng() % 8);
    const int m = static_cast<int>(rng() % 15);
    const int colors = 1 + static_cast<int>(rng() % 6);
    auto g = graph && simple ? random_simple_graph(rng, n, m, colors)
                             : fixtures::random_hypergraph(rng, n, m, colors, graph ? 2 : 3, graph);
    const int k = 1 + static_cast<int>(rng() % 7);
    Instance inst{g, k};
    auto r = kernelize(inst);
    ASSERT_EQ(answer(inst), kernel_answer(r)) << write_instance_string(inst);
    if (r.outcome == KernelResult::Outcome::DecidedYes) {
      EXPECT_TRUE(fixtures::valid_witness(g, r.witness, k));
      continue;
    }
    ++reduced_count;
    const auto& red = r.reduced.graph;
    if (g.is_graph() && !g.has_parallel_edges()) {
      auto bad = kernel_violations(r.reduced);
      EXPECT_TRUE(bad.empty()) << bad.front() << "\n" << write_instance_string(inst);
    }
    // Reduced witnesses lift back to stable sets of the input.
    auto opt = oracle_max_stable(red);
    EXPECT_TRUE(is_stable(g, lift_witness(r, opt.witness)));
    // Fixed point.
    auto again = kernelize(r.reduced);
    ASSERT_EQ(again.outcome, KernelResult::Outcome::Reduced);
    EXPECT_EQ(again.reduced.graph.num_edges(), red.num_edges());
  }
  EXPECT_GT(reduced_count, 50);
}

TEST(Kernelize, SizeTermsOnLargerGraphs) {
  std::mt19937_64 rng(59);
  int reduced_count = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 4 + static_cast<int>(rng() % 12);
    // Few hubs with many pendant leaves of many colors: maximal matchings stay small.
    const int hubs = 1 + static_cast<int>(rng() % 3);
    std::vector<Edge> edges;
    int next = hubs;
    const int colors = 10 * k * k;
    for (int h = 0; h < hubs; ++h) {
      const int leaves = 20 + static_cast<int>(rng() % 200);
      for (int i = 0; i < leaves; ++i) edges.push_back({{h, next++}, static_cast<ColorId>(rng() % colors)});
    }
    Instance inst{ColoredHypergraph(next, colors, edges), k};
    auto r = kernelize(inst);
    if (r.outcome != KernelResult::Outcome::Reduced) continue;
    ++reduced_count;
    EXPECT_TRUE(kernel_violations(r.reduced).empty());
    auto t = kernel_size_terms(r.reduced);
    EXPECT_LE(t.edges_inside_cover, t.bound_inside_cover);
    EXPECT_LE(t.edges_at_t, t.bound_at_t);
    EXPECT_LE(t.edges_at_rest, t.bound_at_rest);
    const double size = r.reduced.graph.num_vertices() + r.reduced.graph.num_edges();
    EXPECT_LE(size, 16.0 * std::pow(k, 2.5));
  }
  EXPECT_GT(reduced_count, 30);
}
