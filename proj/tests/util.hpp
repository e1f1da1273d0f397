#pragma once

// Shared helpers for the test binaries: running the CLI, temp files, and
// brute-force dominating-set enumeration on small graphs.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "drdsr/drds.hpp"
#include "drdsr/graph.hpp"

namespace testutil {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the drdsr binary with the given argument string; stderr is dropped.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DRDSR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  CliResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

/// Writes content into a per-process temp directory and returns the path.
inline std::string write_temp(const std::string& name,
                              const std::string& content) {
  static std::string dir = [] {
    char tmpl[] = "/tmp/drdsr_test_XXXXXX";
    if (!mkdtemp(tmpl)) throw std::runtime_error("mkdtemp failed");
    return std::string(tmpl);
  }();
  const std::string path = dir + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

inline std::vector<drdsr::TokenSet> all_drds_of_size(const drdsr::Graph& g,
                                                     int r, int k) {
  std::vector<drdsr::TokenSet> out;
  for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    drdsr::TokenSet d;
    for (int v = 0; v < g.n; ++v)
      if (mask >> v & 1) d.push_back(v);
    if (drdsr::is_drds(g, r, d)) out.push_back(d);
  }
  return out;
}

inline std::vector<drdsr::TokenSet> all_drds(const drdsr::Graph& g, int r) {
  std::vector<drdsr::TokenSet> out;
  for (int k = 0; k <= g.n; ++k)
    for (auto& d : all_drds_of_size(g, r, k)) out.push_back(d);
  return out;
}

}  // namespace testutil
