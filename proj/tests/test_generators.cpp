#include <gtest/gtest.h>

#include <functional>
#include <sstream>

#include "cclust/bounds.hpp"
#include "cclust/conflict.hpp"
#include "cclust/generators.hpp"
#include "cclust/io.hpp"
#include "cclust/oracle.hpp"
#include "families.hpp"
#include "support.hpp"

using namespace cclust;
using namespace cclust::fixtures;

TEST(Dimacs, RoundTrip) {
  std::istringstream in("c demo\np cnf 3 2\n1 -2 0\n2 3\n0\n");
  auto f = read_dimacs(in);
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[1], (std::vector<int>{2, 3}));
  std::stringstream out;
  write_dimacs(out, f);
  EXPECT_EQ(read_dimacs(out).clauses, f.clauses);
  std::istringstream bad("p cnf 2 1\n1 3 0\n");
  EXPECT_THROW(read_dimacs(bad), ParseError);
}

TEST(ThreeSat, Normalization) {
  Cnf f{3, {{1, 1, 2}, {1, -1}, {-2, 3}, {2}}};
  auto g = normalize_3sat(f);
  // Variable 1 and 3 are pure; only {2} survives... and then 2 is pure too.
  EXPECT_TRUE(g.clauses.empty());
  Cnf h{2, {{1, 2}, {-1, 2}, {-2}}};
  EXPECT_EQ(normalize_3sat(h).clauses.size(), 3u);
}

TEST(ThreeSat, ClauseOfThreeGivesKEqualsM) {
  // x ∨ y ∨ z padded with clauses that give every variable both polarities.
  Cnf f{3, {{1, 2, 3}, {-1, -2}, {-3, 1}}};
  auto inst = gen_from_3sat(f);
  EXPECT_EQ(inst.k, 3);
  EXPECT_EQ(inst.graph.num_colors(), 5);
  EXPECT_LE(max_degree(inst.graph), 3);
  EXPECT_EQ(solve_via_vc(inst).size >= inst.k, satisfiable(f));
}

TEST(ThreeSat, Unsatisfiable) {
  Cnf f{2, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}};
  ASSERT_THROW(gen_from_3sat(f), RestrictionError);  // four occurrences each
  Cnf g{1, {{1}, {-1}}};
  auto inst = gen_from_3sat(g);
  EXPECT_FALSE(satisfiable(g));
  EXPECT_LT(oracle_max_stable(inst.graph).size, inst.k);
}

TEST(ThreeSat, ExhaustiveUpToThreeVariables) {
  int count = 0;
  for (int n = 1; n <= 3; ++n) {
    for_each_normalized(n, [&](const Cnf& f) {
      auto inst = gen_from_3sat(f);
      ASSERT_EQ(inst.k, static_cast<int>(f.clauses.size()));
      ASSERT_LE(max_degree(inst.graph), 3);
      ASSERT_EQ(oracle_max_stable(inst.graph).size >= inst.k, satisfiable(f));
      ++count;
    });
  }
  EXPECT_EQ(count, 2 + 54 + 5212);
}

TEST(ThreeSat, RejectsLongClauses) {
  Cnf f{4, {{1, 2, 3, 4}, {-1, -2, -3, -4}}};
  EXPECT_THROW(gen_from_3sat(f), RestrictionError);
}

TEST(OneInThree, CountsAndRho) {
  Cnf f{3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}};
  auto inst = gen_from_1in3(f);
  const int n = 3;
  EXPECT_EQ(inst.graph.num_vertices(), 7 * n);  // n clause vertices plus 6 per variable
  EXPECT_EQ(inst.graph.num_edges(), 15 * n);
  EXPECT_EQ(inst.k, 7 * n);
  EXPECT_EQ(inst.r(), 8 * n);
  EXPECT_EQ(rho(inst.graph), Rational(8 * n));
  EXPECT_EQ(solve_via_vc(inst).size >= inst.k, one_in_three_satisfiable(f));
  EXPECT_THROW(gen_from_1in3(Cnf{1, {{1, -1, 1}}}), RestrictionError);
  EXPECT_THROW(gen_from_1in3(Cnf{2, {{1, 1, 2}, {2, 2, 2}}}), RestrictionError);
}

TEST(OneInThree, ExhaustiveUpToThreeVariables) {
  int count = 0, yes = 0;
  for (int n = 1; n <= 3; ++n) {
    for_each_one_in_three(n, [&](const Cnf& f) {
      auto inst = gen_from_1in3(f);
      ASSERT_EQ(rho(inst.graph), Rational(inst.r()));
      const bool expect = one_in_three_satisfiable(f);
      ASSERT_EQ(solve_via_vc(inst).size >= inst.k, expect);
      yes += expect;
      ++count;
    });
  }
  EXPECT_GT(count, 3);
  EXPECT_GT(yes, 0);
}

TEST(IndependentSet, SingleEdge) {
  auto inst = gen_from_independent_set(2, {{0, 1}}, 1);
  EXPECT_EQ(inst.k, 2);
  EXPECT_EQ(inst.graph.num_vertices(), 3);
  EXPECT_EQ(oracle_max_stable(inst.graph).size, 2);
}

TEST(IndependentSet, StableSetsAreDisjoint) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(6, 0);
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        if (rng() % 3 == 0 && deg[a] < 3 && deg[b] < 3) {
          edges.emplace_back(a, b);
          ++deg[a];
          ++deg[b];
        }
      }
    }
    auto inst = gen_from_independent_set(6, edges, 0);
    auto sol = solve_via_vc(inst);
    for (size_t i = 0; i < sol.witness.size(); ++i) {
      for (size_t j = i + 1; j < sol.witness.size(); ++j) {
        EXPECT_FALSE(inst.graph.intersects(sol.witness[i], sol.witness[j]));
      }
    }
  }
}

TEST(IndependentSet, AllGraphsUpToSixVertices) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      std::vector<int> deg(n, 0);
      bool ok = true;
      for (size_t i = 0; i < pairs.size() && ok; ++i) {
        if (!(mask >> i & 1)) continue;
        edges.push_back(pairs[i]);
        ok = ++deg[pairs[i].first] <= 3 && ++deg[pairs[i].second] <= 3;
      }
      if (!ok) continue;
      auto inst = gen_from_independent_set(n, edges, 0);
      const auto& g = inst.graph;
      ASSERT_LE(g.order(), 3);
      ASSERT_LE(max_degree(g), 2);
      ASSERT_EQ(g.num_colors(), 3);
      int isolated = 0;
      for (int d : deg) isolated += d == 0;
      ASSERT_EQ(solve_via_vc(inst).size, independence_number(n, edges) + static_cast<int>(edges.size()) - isolated);
    }
  }
}

TEST(IndependentSet, RejectsHighDegree) {
  EXPECT_THROW(gen_from_independent_set(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, 1), RestrictionError);
}

TEST(MulticoloredClique, TwoParts) {
  auto yes = gen_from_multicolored_clique(source(2, {0, 1}, {{0, 1}}));
  EXPECT_EQ(yes.instance.k, 1 * (2 + 2));
  EXPECT_TRUE(is_induced_matching(yes.instance.graph, yes.matching));
  EXPECT_EQ(yes.matching.size(), 2u);
  EXPECT_GE(oracle_max_stable(yes.instance.graph).size, yes.instance.k);
  auto no = gen_from_multicolored_clique(source(3, {0, 1, 1}, {}));
  EXPECT_LT(oracle_max_stable(no.instance.graph).size, no.instance.k);
  EXPECT_THROW(gen_from_multicolored_clique(source(2, {0, 0}, {{0, 1}})), RestrictionError);
}

TEST(MulticoloredClique, SourceRoundTrip) {
  auto g = source(4, {0, 1, 2, 2}, {{0, 1}, {1, 3}});
  std::stringstream ss;
  write_mc_source(ss, g);
  auto back = read_mc_source(ss);
  EXPECT_EQ(back.part, g.part);
  EXPECT_EQ(back.edges, g.edges);
  EXPECT_EQ(back.parts, 3);
}

TEST(MulticoloredClique, StructureAndForwardDirection) {
  int checked = 0;
  for (int s = 2; s <= 3; ++s) {
    for_each_tiny_source(s, [&](const McSource& g) {
      auto gen = gen_from_multicolored_clique(g);
      const int n = g.num_vertices;
      ASSERT_EQ(gen.instance.k, (s - 1) * (n + s));
      ASSERT_EQ(static_cast<int>(gen.matching.size()), (s - 1) * n);
      ASSERT_TRUE(is_induced_matching(gen.instance.graph, gen.matching));
      const bool yes = solve_via_vc(gen.instance).size >= gen.instance.k;
      if (has_multicolored_clique(g)) ASSERT_TRUE(yes);
      if (s == 2) ASSERT_EQ(yes, has_multicolored_clique(g));
      ++checked;
    });
  }
  EXPECT_GT(checked, 500);
}

// With three parts the target is reachable without a clique: when u_i takes
// the color of v, a y-gadget on one side of a pair already gains one edge, and
// two such one-sided gadgets per pair reach k.
TEST(MulticoloredClique, ThreePartsAdmitFalsePositives) {
  auto one_sided = source(5, {0, 0, 1, 1, 2}, {{0, 3}, {0, 4}, {1, 2}, {2, 4}});
  ASSERT_FALSE(has_multicolored_clique(one_sided));
  auto gen = gen_from_multicolored_clique(one_sided);
  EXPECT_GE(solve_via_vc(gen.instance).size, gen.instance.k);
  // Shared y color: a vertex with two neighbors in another part chains gadgets.
  auto chained = source(6, {0, 0, 1, 1, 2, 2}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 4}, {2, 5}, {3, 5}});
  ASSERT_FALSE(has_multicolored_clique(chained));
  auto gen2 = gen_from_multicolored_clique(chained);
  EXPECT_GE(solve_via_vc(gen2.instance).size, gen2.instance.k);
}

TEST(Random, PlantedAndDeterministic) {
  RandomSpec spec;
  spec.n = 9;
  spec.m = 12;
  spec.colors = 3;
  spec.seed = 5;
  spec.planted = 5;
  EdgeSet plant;
  auto a = gen_random(spec, &plant);
  EXPECT_EQ(a, gen_random(spec));
  EXPECT_EQ(a.k, 5);
  EXPECT_EQ(plant.size(), 5u);
  EXPECT_TRUE(is_stable(a.graph, plant));
  EXPECT_GE(oracle_max_stable(a.graph).size, 5);
  spec.d = 3;
  auto h = gen_random(spec, &plant);
  EXPECT_LE(h.graph.order(), 3);
  EXPECT_TRUE(is_stable(h.graph, plant));
  spec.d = 2;
  spec.colors = 1;
  spec.planted.reset();
  auto mono = gen_random(spec);
  EXPECT_EQ(oracle_max_stable(mono.graph).size, mono.graph.num_edges());
}
