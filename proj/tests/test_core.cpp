#include <gtest/gtest.h>

#include <sstream>

#include "cclust/core.hpp"
#include "cclust/io.hpp"
#include "cclust/oracle.hpp"
#include "support.hpp"

using namespace cclust;

namespace {

ColoredHypergraph triangle(ColorId a, ColorId b, ColorId c, int colors = 3) {
  return ColoredHypergraph(3, colors, {{{0, 1}, a}, {{1, 2}, b}, {{0, 2}, c}});
}

}  // namespace

TEST(Validate, ReportsViolations) {
  EXPECT_FALSE(validate(0, 0, {}).has_value());
  std::vector<Edge> dup{{{0, 0}, 0}};
  EXPECT_NE(validate(2, 1, dup)->find("duplicate vertex"), std::string::npos);
  std::vector<Edge> color{{{0, 1}, 5}};
  EXPECT_NE(validate(2, 3, color)->find("color out of range"), std::string::npos);
  std::vector<Edge> vertex{{{0, 7}, 0}};
  EXPECT_NE(validate(2, 1, vertex)->find("vertex out of range"), std::string::npos);
  std::vector<Edge> empty{{{}, 0}};
  EXPECT_TRUE(validate(2, 1, empty).has_value());
  EXPECT_THROW(ColoredHypergraph(2, 1, dup), InvalidInstance);
}

TEST(Stable, Definition) {
  ColoredHypergraph cherry(3, 2, {{{0, 1}, 0}, {{1, 2}, 1}});
  EXPECT_TRUE(is_stable(cherry, std::vector<EdgeId>{}));
  EXPECT_FALSE(is_stable(cherry, std::vector<EdgeId>{0, 1}));

  ColoredHypergraph path(4, 2, {{{0, 1}, 0}, {{1, 2}, 1}, {{2, 3}, 0}});
  EXPECT_FALSE(is_stable(path, std::vector<EdgeId>{0, 1, 2}));
  EXPECT_TRUE(is_stable(path, std::vector<EdgeId>{0, 2}));
  EXPECT_THROW(is_stable(path, std::vector<EdgeId>{3}), std::out_of_range);
}

TEST(Stable, HyperedgeComponents) {
  ColoredHypergraph h(5, 2, {{{0, 1, 2}, 1}, {{2, 3}, 1}, {{3, 4}, 0}});
  EXPECT_TRUE(is_stable(h, std::vector<EdgeId>{0, 1}));
  EXPECT_FALSE(is_stable(h, std::vector<EdgeId>{0, 1, 2}));
  EXPECT_TRUE(is_stable(h, std::vector<EdgeId>{0, 2}));
}

TEST(Coloring, OfStableSet) {
  auto mono = triangle(2, 2, 2);
  EXPECT_EQ(coloring_of(mono, std::vector<EdgeId>{}), (VertexColoring{0, 0, 0}));
  EXPECT_EQ(coloring_of(mono, std::vector<EdgeId>{0, 1, 2}), (VertexColoring{2, 2, 2}));

  ColoredHypergraph star(4, 3, {{{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 2}});
  EXPECT_EQ(coloring_of(star, std::vector<EdgeId>{0, 1}), (VertexColoring{1, 1, 1, 0}));
  EXPECT_THROW(coloring_of(star, std::vector<EdgeId>{0, 2}), PreconditionError);
}

TEST(Coloring, StableUnder) {
  ColoredHypergraph g(3, 2, {{{0, 1}, 0}, {{1, 2}, 1}});
  EXPECT_EQ(stable_under(g, {0, 0, 0}), (EdgeSet{0}));
  ColoredHypergraph rainbow(4, 4, {{{0, 1}, 1}, {{0, 2}, 2}, {{0, 3}, 3}});
  EXPECT_EQ(stable_under(rainbow, {1, 1, 2, 2}), (EdgeSet{0}));
  EXPECT_THROW(stable_under(g, {0, 0}), PreconditionError);
}

TEST(Coloring, RoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = fixtures::random_hypergraph(rng, 6, 8, 3, 3, trial % 2 == 0);
    std::vector<EdgeId> sel;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (rng() & 1) sel.push_back(e);
    }
    const bool stable = is_stable(g, sel);
    if (stable) {
      auto under = stable_under(g, coloring_of(g, sel));
      EXPECT_TRUE(std::includes(under.begin(), under.end(), sel.begin(), sel.end()));
      EXPECT_TRUE(is_stable(g, under));
    }
    VertexColoring f(g.num_vertices());
    for (auto& c : f) c = static_cast<ColorId>(rng() % 3);
    auto under = stable_under(g, f);
    EXPECT_TRUE(is_stable(g, under));
  }
}

TEST(Degrees, Profile) {
  ColoredHypergraph g(4, 3, {{{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 2}});
  auto p = degree_profile(g);
  EXPECT_EQ(p.degree[0], 3);
  EXPECT_EQ(p.chromatic_degree(0), 2);
  EXPECT_EQ(p.max_color_degree(0), 2);
  EXPECT_EQ(p.chromatic_degree(3), 1);
}

TEST(Oracle, SmallCases) {
  EXPECT_EQ(oracle_max_stable(triangle(1, 1, 1)).size, 3);
  EXPECT_EQ(oracle_max_stable(triangle(0, 1, 2)).size, 1);
  EXPECT_EQ(oracle_max_stable(ColoredHypergraph()).size, 0);
}

TEST(Oracle, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const bool graph = trial % 3 != 0;
    const int n = 3 + static_cast<int>(rng() % 8);
    const int m = static_cast<int>(rng() % 15);
    auto g = fixtures::random_hypergraph(rng, n, m, 1 + static_cast<int>(rng() % 4), graph ? 2 : 3,
                                        graph);
    const auto sol = oracle_max_stable(g);
    ASSERT_EQ(sol.size, fixtures::subset_max_stable(g)) << write_instance_string({g, 0});
    EXPECT_TRUE(fixtures::valid_witness(g, sol.witness, sol.size));
    EXPECT_EQ(static_cast<int>(sol.witness.size()), sol.size);
  }
}

TEST(Oracle, Monotonicity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = fixtures::random_hypergraph(rng, 7, 10, 3, 2);
    const int full = oracle_max_stable(g).size;
    std::vector<EdgeId> keep;
    for (EdgeId e = 1; e < g.num_edges(); ++e) keep.push_back(e);
    EXPECT_LE(oracle_max_stable(edge_subgraph(g, keep)).size, full);
    EXPECT_EQ(oracle_max_stable(drop_isolated_vertices(g)).size, full);
  }
}

TEST(Oracle, Guard) {
  std::vector<Edge> edges;
  for (int v = 0; v < 40; ++v) edges.push_back({{v, (v + 1) % 40}, v % 4});
  ColoredHypergraph g(40, 4, edges);
  EXPECT_THROW(oracle_max_stable(g, 1000), SearchSpaceTooLarge);
}

TEST(Io, ParseAndRoundTrip) {
  auto inst = read_instance_string("p cc 3 1 2 3\ne 0 0 1 2\n");
  EXPECT_EQ(inst.k, 3);
  EXPECT_EQ(inst.graph.order(), 3);
  const std::string canonical = "p cc 4 2 3 1\ne 2 0 1\ne 0 3 2 1\n";
  EXPECT_EQ(write_instance_string(read_instance_string(canonical)), canonical);
  auto commented = read_instance_string("# hello\n\np cc 2 1 1 1\n# x\ne 0 0 1\n");
  EXPECT_EQ(commented.graph.num_edges(), 1);
}

TEST(Io, Errors) {
  try {
    read_instance_string("p cc 3 1 2 3\ne x 0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(read_instance_string("e 0 0 1\n"), ParseError);
  EXPECT_THROW(read_instance_string("p cc 3 2 2 1\ne 0 0 1\n"), ParseError);
  EXPECT_THROW(read_instance_string("p cc 3 1 2 1\ne 0 1 1\n"), ParseError);
  EXPECT_THROW(read_instance_string("p cc 3 1 2 1\ne 4 0 1\n"), ParseError);
}

TEST(Io, Solution) {
  std::stringstream ss;
  write_solution(ss, {1, 4});
  EXPECT_EQ(ss.str(), "s 2\nf 1\nf 4\n");
  EXPECT_EQ(read_solution(ss), (EdgeSet{1, 4}));
}

TEST(Matching, AlwaysStable) {
  ColoredHypergraph g(6, 3, {{{0, 1}, 0}, {{2, 3}, 1}, {{4, 5}, 2}, {{1, 2}, 1}});
  EXPECT_TRUE(is_stable(g, std::vector<EdgeId>{0, 1, 2}));
}
