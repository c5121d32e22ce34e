// Shared helpers for the unit and acceptance suites: trace replay, DOT
// sanity checking, an independent width-parameter computation, and a tiny
// subprocess runner for exercising the CLI.
#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsat/engine.hpp"
#include "sparsat/formula.hpp"
#include "sparsat/oracles.hpp"

namespace testsupport {

// Independent route to t = s(r(2n+5)): plain coefficient arithmetic, no
// engine involvement.
inline std::uint64_t recompute_width_parameter(const sparsat::ReductionOracle& oracle,
                                               std::size_t root_length) {
  auto eval = [](const std::vector<std::uint64_t>& coeffs, std::uint64_t n) {
    std::uint64_t acc = 0;
    std::uint64_t power = 1;
    for (std::uint64_t c : coeffs) {
      acc += c * power;
      power *= n;
    }
    return acc;
  };
  const std::uint64_t stretched =
      eval(oracle.stretch_bound().coefficients(), 2 * root_length + 5);
  return eval(oracle.target().census_bound.coefficients(), stretched);
}

// The formula lists a level's stages operated on, reconstructed by applying
// the recorded removals to the entering list.
inline std::vector<std::vector<std::string>> replay_stage_lists(
    const sparsat::LevelRecord& level) {
  std::vector<std::vector<std::string>> lists;
  std::vector<std::string> live = level.entering;
  for (const sparsat::StageEvent& stage : level.stages) {
    lists.push_back(live);
    if (stage.removed_index)
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(*stage.removed_index - 1));
  }
  return lists;
}

// Structural DOT sanity: named digraph, balanced braces and quotes, every
// statement semicolon-terminated. Catches malformed emission without a
// graphviz binary.
inline bool looks_like_valid_dot(const std::string& text) {
  if (text.rfind("digraph", 0) != 0) return false;
  int braces = 0;
  bool in_quote = false;
  bool escaped = false;
  for (char c : text) {
    if (in_quote) {
      if (escaped)
        escaped = false;
      else if (c == '\\')
        escaped = true;
      else if (c == '"')
        in_quote = false;
      continue;
    }
    if (c == '"')
      in_quote = true;
    else if (c == '{')
      ++braces;
    else if (c == '}') {
      --braces;
      if (braces < 0) return false;
    }
  }
  return braces == 0 && !in_quote;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

// Runs the CLI under sh; arguments must already be shell-quoted by the
// caller where needed.
inline CommandResult run_command(const std::string& command) {
  const std::string wrapped = command + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(wrapped.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  CommandResult result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe.release());
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out.push_back(c);
  }
  out += "'";
  return out;
}

// Wide satisfiable root: x1 & x2 & ... & x8 as a parenthesized chain. At
// level 7 it has 128 distinct descendants against a tally cap of 76, so a
// tally-driven run genuinely prunes (and collides, since unsatisfiable
// same-length descendants share their query string).
inline sparsat::Formula wide_conjunction_root() {
  using sparsat::Formula;
  Formula acc = Formula::conjunction(Formula::variable(1), Formula::variable(2));
  for (sparsat::VarIndex v = 3; v <= 8; ++v)
    acc = Formula::conjunction(Formula::paren(acc), Formula::variable(v));
  return acc;
}

}  // namespace testsupport
