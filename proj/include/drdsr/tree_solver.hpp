#pragma once

#include <vector>

#include "drdsr/drds.hpp"
#include "drdsr/graph.hpp"

namespace drdsr {

// Rooted view of a tree: children in ascending id order, `order` is a
// preorder walk (parent before child).
struct RootedTree {
  int root = 0;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<int> order;
};

RootedTree root_tree(const Graph& g, int root);

// Per-vertex state of the greedy tree DP. After the run, h[v] is the height
// of the surviving subtree below v at the moment v's call returned and
// delta[v] the distance from v down to the nearest chosen vertex in that
// subtree (kTreeInf when none helps).
constexpr int kTreeInf = 1 << 28;

struct TreeDpResult {
  std::vector<int> chosen;  // minimum set, in the order the DP added vertices
  std::vector<int> h;
  std::vector<int> delta;
};

// Minimum distance-r dominating set of a tree, rooted at `root`.
TreeDpResult min_drds_tree(const Graph& g, int r, int root);

// Partition of V into |chosen| cells, one per chosen vertex; every
// distance-r dominating set of the tree meets every cell.
struct CanonicalPartition {
  std::vector<int> canonical;           // the chosen set, addition order
  std::vector<std::vector<int>> cell;   // cell[i] goes with canonical[i]
  std::vector<int> cell_of;             // vertex -> cell index
};

CanonicalPartition build_partition(const Graph& g, int r,
                                   const TreeDpResult& dp, int root);

// Shortest TJ reconfiguration between two distance-r dominating sets of a
// tree. NoSequence only when the sets have different sizes.
SolveResult tj_sequence_tree(const DrdsInstance& inst);

}  // namespace drdsr
