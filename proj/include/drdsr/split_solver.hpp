#pragma once

#include "drdsr/drds.hpp"
#include "drdsr/graph.hpp"

namespace drdsr {

// Assignment-based lower bounds on reconfiguration sequence length:
// minimum-cost bijection between source and target under TS, half the
// symmetric difference under TJ.
struct MstarResult {
  bool ts_finite = true;
  long long ts = 0;  // meaningful only when ts_finite
  long long tj = 0;
};

// Throws std::invalid_argument when the endpoint sets differ in size.
MstarResult mstar(const DrdsInstance& inst);

// Slide solver for connected split graphs with r >= 2. Emits a sequence of
// length at most mstar().ts + 2.
SolveResult ts_sequence_split(const DrdsInstance& inst);

// Jump solver for connected split graphs with r >= 2. Emits a sequence of
// length at most mstar().tj + 1.
SolveResult tj_sequence_split(const DrdsInstance& inst);

// CLI entry point: returns NotApplicable unless the graph is a connected
// split graph and r >= 2, otherwise dispatches on the rule.
SolveResult solve_split(const DrdsInstance& inst);

}  // namespace drdsr
