#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cclust/core.hpp"

namespace cclust {

/// Parse failure with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Instance text format:
//   p cc <n> <m> <|C|> <k>
//   e <color> <v1> ... <vd>      (m lines, vertices 0-based)
// Lines starting with '#' are comments; blank lines are ignored.
Instance read_instance(std::istream& in);
Instance read_instance_string(const std::string& text);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);
std::string write_instance_string(const Instance& inst);

// Solution text format: `s <size>` then one `f <edge-index>` line per edge.
void write_solution(std::ostream& out, const EdgeSet& witness);
EdgeSet read_solution(std::istream& in);

/// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& line);

/// Parses a nonnegative/signed integer token, throwing ParseError on failure.
long long parse_int(const std::string& token, int line, const char* what);

}  // namespace cclust
