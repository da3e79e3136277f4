#include "cclust/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cclust {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& token, int line, const char* what) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("malformed ") + what + " '" + token + "'");
  }
  return value;
}

Instance read_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  long long n = 0, m = 0, colors = 0, k = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (tok.size() != 6 || tok[1] != "cc") {
        throw ParseError(lineno, "expected 'p cc <n> <m> <colors> <k>'");
      }
      n = parse_int(tok[2], lineno, "vertex count");
      m = parse_int(tok[3], lineno, "edge count");
      colors = parse_int(tok[4], lineno, "color count");
      k = parse_int(tok[5], lineno, "target k");
      if (n < 0 || m < 0 || colors < 0 || k < 0) {
        throw ParseError(lineno, "header values must be nonnegative");
      }
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(lineno, "edge before header");
      if (tok.size() < 3) throw ParseError(lineno, "edge needs a color and at least one vertex");
      Edge e;
      e.color = static_cast<ColorId>(parse_int(tok[1], lineno, "color"));
      if (e.color < 0 || e.color >= colors) throw ParseError(lineno, "color out of range");
      for (size_t i = 2; i < tok.size(); ++i) {
        const auto v = parse_int(tok[i], lineno, "vertex");
        if (v < 0 || v >= n) throw ParseError(lineno, "vertex out of range");
        e.vertices.push_back(static_cast<VertexId>(v));
      }
      if (auto bad = validate(static_cast<int>(n), static_cast<int>(colors), {&e, 1})) {
        throw ParseError(lineno, bad->substr(bad->find(':') + 2));
      }
      edges.push_back(std::move(e));
    } else {
      throw ParseError(lineno, "unknown line type '" + tok[0] + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  return Instance{ColoredHypergraph(static_cast<int>(n), static_cast<int>(colors), std::move(edges)),
                  static_cast<int>(k)};
}

Instance read_instance_string(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  const auto& g = inst.graph;
  out << "p cc " << g.num_vertices() << ' ' << g.num_edges() << ' ' << g.num_colors() << ' '
      << inst.k << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.color;
    for (VertexId v : e.vertices) out << ' ' << v;
    out << '\n';
  }
}

std::string write_instance_string(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

void write_solution(std::ostream& out, const EdgeSet& witness) {
  out << "s " << witness.size() << '\n';
  for (EdgeId e : witness) out << "f " << e << '\n';
}

EdgeSet read_solution(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long announced = -1;
  EdgeSet out;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "s" && tok.size() == 2) {
      announced = parse_int(tok[1], lineno, "solution size");
    } else if (tok[0] == "f" && tok.size() == 2) {
      out.push_back(static_cast<EdgeId>(parse_int(tok[1], lineno, "edge index")));
    } else {
      throw ParseError(lineno, "expected 's <size>' or 'f <edge>'");
    }
  }
  if (announced != static_cast<long long>(out.size())) {
    throw ParseError(lineno, "solution size does not match listed edges");
  }
  return out;
}

}  // namespace cclust
