#pragma once

#include <cstdint>

#include "drdsr/drds.hpp"

namespace drdsr {

struct OracleLimits {
  std::uint64_t max_states = 1u << 20;  // cap on C(n, k) state-space size
  int max_n = 20;
  int threads = 1;
};

struct OracleResult {
  bool limit_exceeded = false;
  bool reachable = false;
  long long opt = -1;      // shortest sequence length when reachable
  ReconfSequence witness;  // lexicographically least among shortest
};

/// Exhaustive breadth-first search over all valid token sets. Exact but
/// exponential; refuses instances beyond the limits instead of running
/// forever. The witness is the lexicographically least move list among all
/// shortest sequences, independent of thread count.
OracleResult oracle_shortest(const DrdsInstance& inst,
                             const OracleLimits& limits = {});

struct GammaResult {
  bool limit_exceeded = false;
  int gamma = -1;
  TokenSet witness;  // lexicographically least optimum set
};

/// Minimum size of a distance-r dominating set, by increasing-size
/// enumeration.
GammaResult gamma_r(const Graph& g, int r, int max_n = 20);

struct VertexCoverResult {
  bool limit_exceeded = false;
  int tau = -1;
  std::vector<std::vector<int>> covers;  // all minimum covers, lex order
};

/// Minimum vertex cover size together with every minimum cover.
VertexCoverResult min_vertex_cover(const Graph& g, int max_n = 20);

/// Reachability between two minimum vertex covers where each step exchanges
/// one cover vertex for one outside vertex (adjacent under TS, arbitrary
/// under TJ) and every intermediate set is again a minimum cover. Throws
/// std::invalid_argument unless cs and ct are minimum vertex covers of g.
bool min_vcr_reachable(const Graph& g, const std::vector<int>& cs,
                       const std::vector<int>& ct, Rule rule, int max_n = 20);

}  // namespace drdsr
