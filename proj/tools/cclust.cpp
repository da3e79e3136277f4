// cclust: command-line front end.
//   exit 0 = YES / pass, 1 = NO / fail, 2 = error

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cclust/aboveguarantee.hpp"
#include "cclust/bounds.hpp"
#include "cclust/conflict.hpp"
#include "cclust/crossvalidate.hpp"
#include "cclust/exactcover.hpp"
#include "cclust/generators.hpp"
#include "cclust/io.hpp"
#include "cclust/kernel.hpp"
#include "cclust/oracle.hpp"
#include "cclust/treedp.hpp"

using namespace cclust;
using json = nlohmann::json;

namespace {

constexpr int kExitYes = 0, kExitNo = 1, kExitError = 2;

struct Fatal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance load_instance(const std::string& path) {
  if (path == "-") return read_instance(std::cin);
  return read_instance_file(path);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Fatal("cannot open " + path);
  return in;
}

// Writes to `path`, or stdout when it is empty or "-".
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Fatal("cannot write " + path);
  write(out);
}

EdgeSet load_matching(const std::string& arg, const ColoredHypergraph& g) {
  if (arg.empty() || arg == "auto") {
    // The exact mode is a vertex cover over edge pairs; fine for small m.
    const auto mode = g.num_edges() <= 400 ? InducedMode::ExactSmall : InducedMode::Greedy;
    return induced_matching(g, mode).edges;
  }
  auto in = open_in(arg);
  return induced_matching(g, InducedMode::Provided, read_solution(in)).edges;
}

TreeLayout load_tree(const std::string& arg, const ColoredHypergraph& g, std::uint64_t seed) {
  if (arg.empty() || arg == "auto") return spanning_tree_search(g, 200, seed);
  auto in = open_in(arg);
  return read_layout(in, g);
}

struct SolveOptions {
  std::string instance;
  std::string algo = "auto";
  std::uint64_t seed = 1;
  double epsilon = 0.1;
  long long repetitions = 0;
  std::string tree = "auto";
  std::string matching = "auto";
  std::string witness_out;
  std::string deletion = "auto";
  bool json = false;
};

int cmd_solve(const SolveOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const Instance inst = load_instance(o.instance);
  const auto& g = inst.graph;
  json report = {{"instance", o.instance}, {"algorithm", o.algo}, {"n", g.num_vertices()},
                 {"m", g.num_edges()},     {"colors", g.num_colors()}, {"k", inst.k}};

  std::optional<int> optimum;
  Decision d;
  auto take = [&](const Solution& s) {
    optimum = s.size;
    d = decide(s, inst.k);
  };

  std::string algo = o.algo;
  if (algo == "auto") {
    if (g.is_graph() && is_forest(g)) {
      algo = "forest";
    } else if (g.num_colors() <= 2) {
      algo = "two-color";
    } else {
      algo = "kernel+vc";
    }
    report["dispatched"] = algo;
  }

  if (algo == "oracle") {
    take(oracle_max_stable(g));
  } else if (algo == "vc") {
    take(solve_via_vc(inst));
  } else if (algo == "branch-r") {
    d = branch_unstable_decide(inst);
  } else if (algo == "exactcover") {
    d = solve_via_exactcover(inst);
  } else if (algo == "colorcode") {
    ColorCodingConfig cfg;
    cfg.matching = load_matching(o.matching, g);
    cfg.epsilon = o.epsilon;
    cfg.seed = o.seed;
    cfg.repetitions = o.repetitions;
    const auto r = solve_color_coding(inst, cfg);
    d = {r.yes, r.witness};
    report["induced_matching"] = cfg.matching.size();
    report["repetitions"] = r.repetitions;
    report["repetitions_used"] = r.used;
    report["epsilon"] = r.epsilon;
    report["one_sided"] = true;
  } else if (algo == "xp") {
    const auto m = load_matching(o.matching, g);
    report["induced_matching"] = m.size();
    d = solve_xp(inst, m);
  } else if (algo == "secw-dp") {
    const auto layout = load_tree(o.tree, g, o.seed);
    report["lfe"] = layout.lfe;
    take(solve_secw_dp(inst, layout));
  } else if (algo == "forest") {
    take(forest_dp(inst));
  } else if (algo == "two-color") {
    take(solve_two_colors(inst));
  } else if (algo == "wrapper-forest" || algo == "wrapper-two-color") {
    const bool forest = algo == "wrapper-forest";
    EdgeSet del;
    if (o.deletion == "auto") {
      del = forest ? feedback_edges(g) : rare_color_edges(g);
    } else {
      auto in = open_in(o.deletion);
      del = read_solution(in);
    }
    report["deletion_set"] = del.size();
    take(solve_deletion_wrapper(inst, del, forest ? DeletionClass::Forest : DeletionClass::TwoColor));
  } else if (algo == "kernel+vc") {
    const auto kr = kernelize(inst);
    report["kernel"] = {{"outcome", kr.outcome == KernelResult::Outcome::DecidedYes ? "yes" : "reduced"},
                        {"rules_applied", kr.log.size()}};
    if (kr.outcome == KernelResult::Outcome::DecidedYes) {
      d = {true, kr.witness};
    } else {
      report["kernel"]["m"] = kr.reduced.graph.num_edges();
      report["kernel"]["k"] = kr.reduced.k;
      const auto s = solve_via_vc(kr.reduced);
      d = decide(s, kr.reduced.k);
      if (d.yes) {
        d.witness = lift_witness(kr, EdgeSet(s.witness.begin(), s.witness.begin() + kr.reduced.k));
      }
    }
  } else {
    throw Fatal("unknown algorithm '" + o.algo + "'");
  }

  if (d.yes && !witness_ok(g, d.witness, inst.k)) throw Fatal("internal error: witness fails verification");

  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report["answer"] = d.yes ? "YES" : "NO";
  report["optimum"] = optimum ? json(*optimum) : json(nullptr);
  report["witness_size"] = d.witness.size();
  report["witness"] = o.witness_out.empty() ? json(nullptr) : json(o.witness_out);
  report["wall_ms"] = ms;

  if (d.yes && !o.witness_out.empty()) {
    emit(o.witness_out, [&](std::ostream& out) { write_solution(out, d.witness); });
  }
  if (o.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "ANSWER " << (d.yes ? "YES" : "NO") << "\n";
    if (optimum) std::cout << "OPTIMUM " << *optimum << "\n";
  }
  return d.yes ? kExitYes : kExitNo;
}

int cmd_kernel(const std::string& path, const std::string& out_path, const std::string& log_path,
               bool as_json) {
  const Instance inst = load_instance(path);
  const auto kr = kernelize(inst);
  if (!log_path.empty()) emit(log_path, [&](std::ostream& out) { out << format_log(kr); });
  const bool yes = kr.outcome == KernelResult::Outcome::DecidedYes;
  if (as_json) {
    json j = {{"instance", path}, {"m", inst.graph.num_edges()}, {"k", inst.k},
              {"outcome", yes ? "yes" : "reduced"}, {"rules_applied", kr.log.size()}};
    if (yes) {
      j["decided_by"] = kr.decided_by;
    } else {
      j["reduced_n"] = kr.reduced.graph.num_vertices();
      j["reduced_m"] = kr.reduced.graph.num_edges();
      j["reduced_k"] = kr.reduced.k;
    }
    std::cout << j.dump(2) << "\n";
  }
  if (yes) {
    if (!as_json) std::cout << "ANSWER YES\nRULE " << kr.decided_by << "\n";
    if (!out_path.empty()) emit(out_path, [&](std::ostream& out) { write_solution(out, kr.witness); });
    return kExitYes;
  }
  if (!as_json || !out_path.empty()) {
    emit(out_path, [&](std::ostream& out) { write_instance(out, kr.reduced); });
  }
  return kExitYes;
}

int cmd_bounds(const std::string& path, const std::string& matching, bool as_json) {
  const Instance inst = load_instance(path);
  const auto m = load_matching(matching, inst.graph);
  const auto info = induced_matching(inst.graph, InducedMode::Provided, m);
  const auto rep = gap_parameters(inst, info);
  if (!as_json) {
    std::cout << format_report(rep);
    return kExitYes;
  }
  json j = {{"instance", path}, {"k", rep.k}, {"r", rep.r}, {"matching", rep.matching},
            {"induced", rep.induced}, {"rho_hyper", to_string(rep.rho_hyper)},
            {"alpha", to_string(rep.alpha)}, {"yes_by_matching", rep.yes_by_matching},
            {"says_no", rep.says_no()}};
  if (rep.rho) j["rho"] = to_string(*rep.rho);
  if (rep.rho_prime) j["rho_prime"] = to_string(*rep.rho_prime);
  std::cout << j.dump(2) << "\n";
  return kExitYes;
}

int cmd_crossvalidate(const SweepConfig& cfg, const std::string& repro, bool as_json) {
  if (cfg.instances == 0) {
    std::cerr << "warning: zero instances requested, nothing checked\n";
    std::cout << "PASS 0 instances\n";
    return kExitYes;
  }
  const auto sum = run_sweep(cfg);
  if (as_json) {
    json j = {{"instances", sum.instances}, {"yes", sum.yes}, {"runs", sum.runs},
              {"pass", !sum.failure.has_value()}};
    if (sum.failure) j["failures"] = sum.failure_detail;
    std::cout << j.dump(2) << "\n";
  }
  if (!sum.failure) {
    if (!as_json) {
      std::cout << "PASS " << sum.instances << " instances (" << sum.yes << " YES)\n";
      for (const auto& [name, count] : sum.runs) std::cout << "  " << name << " " << count << "\n";
    }
    return kExitYes;
  }
  emit(repro, [&](std::ostream& out) {
    for (const auto& f : sum.failure_detail) out << "# " << f << "\n";
    write_instance(out, *sum.failure);
  });
  if (!as_json) {
    std::cout << "FAIL after " << sum.instances << " instances\n";
    for (const auto& f : sum.failure_detail) std::cout << "  " << f << "\n";
    std::cout << "reproducer: " << repro << "\n";
  }
  return kExitNo;
}

std::vector<std::pair<int, int>> plain_edges(const ColoredHypergraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) {
    if (e.vertices.size() != 2) throw Fatal("source graph must have 2-vertex edges only");
    out.emplace_back(e.vertices[0], e.vertices[1]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colorful clustering: stable edge set solvers, kernels, bounds and generators"};
  app.require_subcommand(1);

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "decide whether k edges can be made stable");
  solve->add_option("instance", so.instance, "instance file, or - for stdin")->required();
  solve->add_option("--algo", so.algo, "solver")
      ->check(CLI::IsMember({"oracle", "vc", "branch-r", "exactcover", "colorcode", "xp", "secw-dp",
                             "forest", "two-color", "wrapper-forest", "wrapper-two-color", "auto"}));
  solve->add_option("--seed", so.seed, "random seed");
  solve->add_option("--epsilon", so.epsilon, "color coding failure probability")
      ->check(CLI::Range(1e-12, 0.999999));
  solve->add_option("--repetitions", so.repetitions, "color coding repetitions (0 derives from epsilon)");
  solve->add_option("--tree", so.tree, "tree layout file, or auto");
  solve->add_option("--induced-matching", so.matching, "matching file (solution format), or auto");
  solve->add_option("--deletion", so.deletion, "deletion set file for the wrappers, or auto");
  solve->add_option("--witness", so.witness_out, "write the stable set here");
  solve->add_flag("--json", so.json, "print a JSON run report");

  std::string kin, kout, klog;
  bool kjson = false;
  auto* kernel = app.add_subcommand("kernel", "apply the reduction rules");
  kernel->add_option("instance", kin)->required();
  kernel->add_option("-o,--output", kout, "reduced instance (or witness when decided)");
  kernel->add_option("--log", klog, "rule application log");
  kernel->add_flag("--json", kjson);

  std::string bin, bmatch = "auto";
  bool bjson = false;
  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds with their gaps to k and r");
  bounds->add_option("instance", bin)->required();
  bounds->add_option("--induced-matching", bmatch, "matching file, or auto");
  bounds->add_flag("--json", bjson);

  std::string gout, gsrc;
  auto* g3sat = app.add_subcommand("gen-3sat", "instance from a CNF (DIMACS)");
  g3sat->add_option("cnf", gsrc)->required();
  g3sat->add_option("-o,--output", gout);
  bool normalize = true;
  g3sat->add_flag("!--no-normalize", normalize, "skip the occurrence normalization");

  auto* g1in3 = app.add_subcommand("gen-1in3", "instance from a monotone 1-in-3 system (DIMACS)");
  g1in3->add_option("cnf", gsrc)->required();
  g1in3->add_option("-o,--output", gout);

  std::string mout;
  auto* gmcc = app.add_subcommand("gen-mcc", "instance from a multicolored clique source");
  gmcc->add_option("source", gsrc)->required();
  gmcc->add_option("-o,--output", gout);
  gmcc->add_option("--matching-out", mout, "write the c^m matching (solution format)");

  int is_s = 0;
  auto* gis = app.add_subcommand("gen-is", "hypergraph instance from an independent set query");
  gis->add_option("graph", gsrc, "graph in instance format (colors and k ignored)")->required();
  gis->add_option("-s,--size", is_s, "independent set size")->required();
  gis->add_option("-o,--output", gout);

  RandomSpec rs;
  std::string plant_out;
  int planted = -1;
  auto* grand = app.add_subcommand("gen-random", "uniform random instance");
  grand->add_option("-n", rs.n)->check(CLI::NonNegativeNumber);
  grand->add_option("-m", rs.m)->check(CLI::NonNegativeNumber);
  grand->add_option("--colors", rs.colors)->check(CLI::PositiveNumber);
  grand->add_option("-d,--order", rs.d)->check(CLI::Range(1, 64));
  grand->add_option("--seed", rs.seed);
  grand->add_option("--planted", planted, "embed a stable set of this size and set k to it");
  grand->add_option("--plant-out", plant_out, "write the planted set (solution format)");
  grand->add_option("-o,--output", gout);

  SweepConfig sweep;
  std::string repro = "crossvalidate-repro.cc";
  bool cjson = false;
  auto* cross = app.add_subcommand("crossvalidate", "compare all exact solvers on random instances");
  cross->add_option("--instances", sweep.instances)->check(CLI::NonNegativeNumber);
  cross->add_option("--seed", sweep.seed);
  cross->add_option("--max-n", sweep.max_n)->check(CLI::Range(2, 12));
  cross->add_option("--max-m", sweep.max_m)->check(CLI::Range(1, 16));
  cross->add_option("--max-colors", sweep.max_colors)->check(CLI::Range(1, 8));
  cross->add_option("--reproducer", repro, "where to dump a minimized failing instance");
  cross->add_flag("--inject-fault", sweep.inject_fault, "corrupt one solver to exercise the harness");
  cross->add_flag("--json", cjson);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*solve) return cmd_solve(so);
    if (*kernel) return cmd_kernel(kin, kout, klog, kjson);
    if (*bounds) return cmd_bounds(bin, bmatch, bjson);
    if (*g3sat || *g1in3) {
      auto in = open_in(gsrc);
      Cnf f = read_dimacs(in);
      if (*g3sat && normalize) f = normalize_3sat(f);
      const Instance inst = *g3sat ? gen_from_3sat(f) : gen_from_1in3(f);
      emit(gout, [&](std::ostream& out) { write_instance(out, inst); });
      return kExitYes;
    }
    if (*gmcc) {
      auto in = open_in(gsrc);
      const auto mcc = gen_from_multicolored_clique(read_mc_source(in));
      emit(gout, [&](std::ostream& out) { write_instance(out, mcc.instance); });
      if (!mout.empty()) emit(mout, [&](std::ostream& out) { write_solution(out, mcc.matching); });
      return kExitYes;
    }
    if (*gis) {
      const Instance src = read_instance_file(gsrc);
      const Instance inst =
          gen_from_independent_set(src.graph.num_vertices(), plain_edges(src.graph), is_s);
      emit(gout, [&](std::ostream& out) { write_instance(out, inst); });
      return kExitYes;
    }
    if (*grand) {
      if (planted >= 0) rs.planted = planted;
      EdgeSet plant;
      const Instance inst = gen_random(rs, &plant);
      emit(gout, [&](std::ostream& out) { write_instance(out, inst); });
      if (!plant_out.empty()) emit(plant_out, [&](std::ostream& out) { write_solution(out, plant); });
      return kExitYes;
    }
    if (*cross) return cmd_crossvalidate(sweep, repro, cjson);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
