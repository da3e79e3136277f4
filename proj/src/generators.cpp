#include "cclust/generators.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "cclust/io.hpp"

namespace cclust {

Cnf read_dimacs(std::istream& in) {
  Cnf f;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  long long announced = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "%") break;
    if (tok[0] == "p") {
      if (tok.size() != 4 || tok[1] != "cnf") throw ParseError(lineno, "expected 'p cnf <vars> <clauses>'");
      f.num_vars = static_cast<int>(parse_int(tok[2], lineno, "variable count"));
      announced = parse_int(tok[3], lineno, "clause count");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause before header");
    for (const auto& t : tok) {
      const auto lit = parse_int(t, lineno, "literal");
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(lit) > f.num_vars) throw ParseError(lineno, "literal out of range");
        current.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (!current.empty()) throw ParseError(lineno, "last clause not terminated by 0");
  if (static_cast<long long>(f.clauses.size()) != announced) {
    throw ParseError(lineno, "header announces " + std::to_string(announced) + " clauses, found " +
                                 std::to_string(f.clauses.size()));
  }
  return f;
}

void write_dimacs(std::ostream& out, const Cnf& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
}

namespace {

bool literal_true(int lit, std::uint32_t assignment) {
  const bool value = assignment >> (std::abs(lit) - 1) & 1;
  return lit > 0 ? value : !value;
}

}  // namespace

bool satisfiable(const Cnf& f) {
  if (f.num_vars > 24) throw std::length_error("too many variables for brute force");
  for (std::uint32_t a = 0; a < (1u << f.num_vars); ++a) {
    if (std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
          return std::any_of(c.begin(), c.end(), [&](int lit) { return literal_true(lit, a); });
        })) {
      return true;
    }
  }
  return false;
}

bool one_in_three_satisfiable(const Cnf& f) {
  if (f.num_vars > 24) throw std::length_error("too many variables for brute force");
  for (std::uint32_t a = 0; a < (1u << f.num_vars); ++a) {
    if (std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
          return std::count_if(c.begin(), c.end(), [&](int lit) { return literal_true(lit, a); }) == 1;
        })) {
      return true;
    }
  }
  return false;
}

Cnf normalize_3sat(const Cnf& f) {
  Cnf out;
  out.num_vars = f.num_vars;
  for (const auto& c : f.clauses) {
    std::set<int> lits(c.begin(), c.end());
    const bool tautology = std::any_of(lits.begin(), lits.end(), [&](int l) { return lits.count(-l) > 0; });
    if (!tautology) out.clauses.emplace_back(lits.begin(), lits.end());
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> pos(f.num_vars + 1, 0), neg(f.num_vars + 1, 0);
    for (const auto& c : out.clauses) {
      for (int lit : c) ++(lit > 0 ? pos : neg)[std::abs(lit)];
    }
    std::vector<std::vector<int>> kept;
    for (auto& c : out.clauses) {
      const bool pure = std::any_of(c.begin(), c.end(), [&](int lit) {
        return pos[std::abs(lit)] == 0 || neg[std::abs(lit)] == 0;
      });
      if (pure) {
        changed = true;
      } else {
        kept.push_back(std::move(c));
      }
    }
    out.clauses = std::move(kept);
  }
  return out;
}

Instance gen_from_3sat(const Cnf& input) {
  const Cnf f = normalize_3sat(input);
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  // occurrences[x] = (clause, positive?)
  std::vector<std::vector<std::pair<int, bool>>> occurrences(n);
  for (int y = 0; y < m; ++y) {
    if (f.clauses[y].size() > 3) throw RestrictionError("clause " + std::to_string(y) + " has more than three literals");
    for (int lit : f.clauses[y]) occurrences[std::abs(lit) - 1].emplace_back(y, lit > 0);
  }
  constexpr int kColors = 5;
  std::vector<std::vector<char>> used(m, std::vector<char>(kColors, 0));
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    const auto& occ = occurrences[x];
    if (occ.size() > 3) throw RestrictionError("variable " + std::to_string(x + 1) + " occurs more than three times");
    if (occ.empty()) continue;
    std::vector<int> pos, neg;
    for (auto [y, positive] : occ) (positive ? pos : neg).push_back(y);
    // The polarity with two occurrences (positive on a tie) shares c12.
    const auto& pair_group = pos.size() >= neg.size() ? pos : neg;
    const auto& single_group = pos.size() >= neg.size() ? neg : pos;
    auto pick = [&](const std::vector<int>& clauses, int avoid) {
      for (int c = 0; c < kColors; ++c) {
        if (c == avoid) continue;
        if (std::none_of(clauses.begin(), clauses.end(), [&](int y) { return used[y][c]; })) return c;
      }
      throw std::logic_error("no free color for variable " + std::to_string(x + 1));
    };
    const int c12 = pick(pair_group, -1);
    const int c3 = pick(single_group, c12);
    for (int y : pair_group) {
      edges.push_back({{x, n + y}, c12});
      used[y][c12] = 1;
    }
    for (int y : single_group) {
      edges.push_back({{x, n + y}, c3});
      used[y][c3] = 1;
    }
  }
  return {ColoredHypergraph(n + m, kColors, std::move(edges)), m};
}

Instance gen_from_1in3(const Cnf& f) {
  const int n = f.num_vars;
  if (static_cast<int>(f.clauses.size()) != n) throw RestrictionError("need as many clauses as variables");
  std::vector<std::vector<int>> occurrences(n);
  for (int y = 0; y < n; ++y) {
    if (f.clauses[y].size() != 3) throw RestrictionError("clause " + std::to_string(y) + " needs three literals");
    for (int lit : f.clauses[y]) {
      if (lit <= 0) throw RestrictionError("literals must be positive");
      occurrences[lit - 1].push_back(y);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (occurrences[x].size() != 3) throw RestrictionError("variable " + std::to_string(x + 1) + " must occur three times");
  }
  // Clause vertices 0..n-1, then u^1..3, w^1..3 per variable.
  std::vector<Edge> edges;
  auto triangle = [&](int a, int b, int c, int color) {
    edges.push_back({{a, b}, color});
    edges.push_back({{b, c}, color});
    edges.push_back({{a, c}, color});
  };
  for (int x = 0; x < n; ++x) {
    const int u = n + 6 * x, w = u + 3;
    triangle(u, u + 1, u + 2, 5 * x);
    triangle(w, w + 1, w + 2, 5 * x + 1);
    for (int i = 0; i < 3; ++i) triangle(occurrences[x][i], u + i, w + i, 5 * x + 2 + i);
  }
  return {ColoredHypergraph(7 * n, 5 * n, std::move(edges)), 7 * n};
}

McSource read_mc_source(std::istream& in) {
  std::ostringstream rest;
  std::string line;
  std::vector<int> part;
  bool have_parts = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (!tok.empty() && tok[0] == "parts") {
      if (have_parts) throw ParseError(lineno, "duplicate parts line");
      for (size_t i = 1; i < tok.size(); ++i) part.push_back(static_cast<int>(parse_int(tok[i], lineno, "part")));
      have_parts = true;
      rest << "#\n";
    } else {
      rest << line << '\n';
    }
  }
  if (!have_parts) throw ParseError(lineno, "missing parts line");
  const auto inst = read_instance_string(rest.str());
  McSource g;
  g.num_vertices = inst.graph.num_vertices();
  if (static_cast<int>(part.size()) != g.num_vertices) throw ParseError(lineno, "parts line needs one entry per vertex");
  for (const Edge& e : inst.graph.edges()) {
    if (e.vertices.size() != 2) throw ParseError(lineno, "source graph edges need two vertices");
    g.edges.emplace_back(e.vertices[0], e.vertices[1]);
  }
  for (int p : part) {
    if (p < 0) throw ParseError(lineno, "negative part index");
    g.parts = std::max(g.parts, p + 1);
  }
  g.part = std::move(part);
  return g;
}

void write_mc_source(std::ostream& out, const McSource& g) {
  out << "p cc " << g.num_vertices << ' ' << g.edges.size() << " 1 0\n";
  for (auto [a, b] : g.edges) out << "e 0 " << a << ' ' << b << '\n';
  out << "parts";
  for (int p : g.part) out << ' ' << p;
  out << '\n';
}

bool has_multicolored_clique(const McSource& g) {
  std::vector<std::vector<int>> members(g.parts);
  for (int v = 0; v < g.num_vertices; ++v) members[g.part[v]].push_back(v);
  std::set<std::pair<int, int>> adj;
  for (auto [a, b] : g.edges) {
    adj.insert({a, b});
    adj.insert({b, a});
  }
  std::vector<int> pick;
  auto extend = [&](auto&& self, int i) -> bool {
    if (i == g.parts) return true;
    for (int v : members[i]) {
      if (std::all_of(pick.begin(), pick.end(), [&](int u) { return adj.count({u, v}) > 0; })) {
        pick.push_back(v);
        if (self(self, i + 1)) return true;
        pick.pop_back();
      }
    }
    return false;
  };
  return extend(extend, 0);
}

MccInstance gen_from_multicolored_clique(const McSource& g) {
  const int s = g.parts;
  const int nv = g.num_vertices;
  for (auto [a, b] : g.edges) {
    if (a == b || g.part[a] == g.part[b]) throw RestrictionError("parts must be independent sets");
  }
  // Vertex ids: u_i, then (w, x) per (v, j != i), then y_e.
  std::vector<std::vector<int>> port(nv, std::vector<int>(s, -1));  // port[v][j] = id of w_v^{i->j}
  int next = s;
  for (int v = 0; v < nv; ++v) {
    for (int j = 0; j < s; ++j) {
      if (j == g.part[v]) continue;
      port[v][j] = next;
      next += 2;
    }
  }
  const int y0 = next;
  const ColorId cm = 0, ce = 1;
  const int num_colors = 2 + nv;
  std::vector<Edge> edges;
  MccInstance out;
  for (int v = 0; v < nv; ++v) {
    for (int j = 0; j < s; ++j) {
      if (port[v][j] < 0) continue;
      const int w = port[v][j];
      edges.push_back({{g.part[v], w}, 2 + v});
      out.matching.push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({{w, w + 1}, cm});
    }
  }
  for (size_t t = 0; t < g.edges.size(); ++t) {
    const auto [a, b] = g.edges[t];
    edges.push_back({{port[a][g.part[b]] + 1, y0 + static_cast<int>(t)}, ce});
    edges.push_back({{port[b][g.part[a]] + 1, y0 + static_cast<int>(t)}, ce});
  }
  const int k = (s - 1) * (nv + s);
  out.instance = {ColoredHypergraph(y0 + static_cast<int>(g.edges.size()), num_colors, std::move(edges)), k};
  return out;
}

int independence_number(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (num_vertices > 24) throw std::length_error("too many vertices for brute force");
  std::vector<std::uint32_t> nbr(num_vertices, 0);
  for (auto [a, b] : edges) {
    nbr[a] |= 1u << b;
    nbr[b] |= 1u << a;
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << num_vertices); ++set) {
    const int size = std::popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (int v = 0; v < num_vertices && independent; ++v) {
      if ((set >> v & 1) && (nbr[v] & set)) independent = false;
    }
    if (independent) best = size;
  }
  return best;
}

Instance gen_from_independent_set(int num_vertices, const std::vector<std::pair<int, int>>& edges, int s) {
  std::vector<int> degree(num_vertices, 0);
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices || a == b) {
      throw RestrictionError("source graph edge out of range or a loop");
    }
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) throw RestrictionError("source graph has parallel edges");
    if (++degree[a] > 3 || ++degree[b] > 3) throw RestrictionError("source graph has a vertex of degree above 3");
  }
  // Subdivide edge t = {u, v} into u - a_t - b_t - v; the new vertices' edges
  // are 3t, 3t+1, 3t+2. Original vertices are pairwise non-adjacent after
  // subdivision, so color 0 for them and 1, 2 for a_t, b_t is proper.
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<VertexId>> incident(num_vertices);
  for (int t = 0; t < m; ++t) {
    incident[edges[t].first].push_back(3 * t);
    incident[edges[t].second].push_back(3 * t + 2);
  }
  std::vector<Edge> hyper;
  int isolated = 0;
  for (int v = 0; v < num_vertices; ++v) {
    if (incident[v].empty()) {
      ++isolated;
      continue;
    }
    std::sort(incident[v].begin(), incident[v].end());
    hyper.push_back({incident[v], 0});
  }
  for (int t = 0; t < m; ++t) {
    hyper.push_back({{3 * t, 3 * t + 1}, 1});
    hyper.push_back({{3 * t + 1, 3 * t + 2}, 2});
  }
  const int k = std::max(0, s + m - isolated);
  return {ColoredHypergraph(3 * m, 3, std::move(hyper)), k};
}

Instance gen_random(const RandomSpec& spec, EdgeSet* plant) {
  if (spec.n < 0 || spec.m < 0 || spec.colors < 1 || spec.d < 1) throw PreconditionError("invalid random spec");
  if (spec.m > 0 && spec.n < std::min(spec.d, 2)) throw PreconditionError("too few vertices for the edge size");
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> pick_color(0, spec.colors - 1);
  std::uniform_int_distribution<int> pick_vertex(0, std::max(spec.n - 1, 0));
  auto edge_size = [&] {
    const int hi = std::min(spec.d, spec.n);
    const int lo = std::min(2, hi);
    return spec.d == 2 ? std::min(2, spec.n) : std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto distinct = [&](int size, const std::vector<VertexId>& pool) {
    std::vector<VertexId> vs;
    std::set<VertexId> used;
    while (static_cast<int>(vs.size()) < size) {
      const VertexId v = pool.empty() ? pick_vertex(rng)
                                      : pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
      if (used.insert(v).second) vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    return vs;
  };
  const int planted = spec.planted.value_or(0);
  if (planted > spec.m) throw PreconditionError("cannot plant more edges than m");
  std::vector<Edge> edges;
  if (planted > 0) {
    // Hidden coloring; planted edges lie inside one color class.
    std::vector<std::vector<VertexId>> cls(spec.colors);
    for (VertexId v = 0; v < spec.n; ++v) cls[pick_color(rng)].push_back(v);
    for (int i = 0; i < planted; ++i) {
      const int size = edge_size();
      std::vector<int> fits;
      for (int c = 0; c < spec.colors; ++c) {
        if (static_cast<int>(cls[c].size()) >= size) fits.push_back(c);
      }
      if (fits.empty()) throw PreconditionError("no color class large enough to plant an edge");
      const int c = fits[std::uniform_int_distribution<size_t>(0, fits.size() - 1)(rng)];
      edges.push_back({distinct(size, cls[c]), c});
    }
  }
  while (static_cast<int>(edges.size()) < spec.m) edges.push_back({distinct(edge_size(), {}), pick_color(rng)});
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> shuffled(edges.size());
  EdgeSet where;
  for (size_t i = 0; i < order.size(); ++i) {
    shuffled[i] = edges[order[i]];
    if (order[i] < planted) where.push_back(static_cast<EdgeId>(i));
  }
  if (plant) *plant = where;
  const int k = spec.planted ? planted : spec.m / 2;
  return {ColoredHypergraph(spec.n, spec.colors, std::move(shuffled)), k};
}

}  // namespace cclust
