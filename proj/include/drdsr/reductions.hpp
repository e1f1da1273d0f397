#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "drdsr/drds.hpp"
#include "drdsr/graph.hpp"

namespace drdsr {

/// Weighted AND/OR constraint graph. Parallel edges are allowed, loops are
/// not. A well-formed graph has degree exactly three everywhere, incident
/// weights {1,1,2} at AND vertices and {2,2,2} at OR vertices.
enum class NclVertexType { And, Or };

struct NclEdge {
  int u;
  int v;
  int w;  // 1 or 2
};

struct NclGraph {
  int n = 0;
  std::vector<NclVertexType> type;
  std::vector<NclEdge> edges;  // index order doubles as gadget port order
};

/// Per-edge orientation: 0 directs edge e from u to v (into v), 1 the
/// reverse. A configuration is valid when every vertex has incoming weight
/// at least two.
using NclConfig = std::vector<int>;

struct NclInstance {
  NclGraph graph;
  NclConfig config;
};

/// Parses the NCL text format:
///   ncl <n> <m>
///   v <id> AND|OR           (one per vertex)
///   e <id> <u> <v> <w> <dir>  (dir is uv or vu; one per edge)
/// '#' comments and blank lines are allowed. Throws ParseError.
NclInstance parse_ncl(std::istream& in);
NclInstance parse_ncl_text(const std::string& text);

/// Throws std::invalid_argument when the degree or weight invariants fail.
void validate_ncl_graph(const NclGraph& ncl);

bool is_valid_ncl_config(const NclGraph& ncl, const NclConfig& cfg);

/// BFS over valid configurations with single-edge reversals as moves.
bool ncl_config_reachable(const NclGraph& ncl, const NclConfig& a,
                          const NclConfig& b);

/// A generated reconfiguration instance plus a human-readable role label for
/// every constructed vertex (provenance[v] describes where v came from).
struct ReductionOutput {
  DrdsInstance instance;
  std::vector<std::string> provenance;
};

/// Gadget expansion of an NCL graph: one main component per vertex (a bull
/// for AND, a claw for OR), one link component per edge, all glued by paths
/// of length r-1. slot[e] holds the two link vertices of edge e (u side then
/// v side); a token sits on the side the edge points into.
struct NclReduction {
  Graph graph;
  int r = 1;
  std::vector<std::string> provenance;
  std::vector<std::array<int, 2>> slot;
};

NclReduction build_ncl_reduction(const NclGraph& ncl, int r);

/// Token set encoding a configuration: one token per link component.
TokenSet standard_placement(const NclReduction& red, const NclConfig& cfg);

/// Convenience wrapper: builds the gadget graph and returns it as a TS
/// instance whose source and target both encode cfg.
ReductionOutput ncl_to_drdsr(const NclGraph& ncl, const NclConfig& cfg, int r);

/// Split instance on 2k+1 vertices whose slide distance exceeds the
/// assignment bound by exactly two. Throws std::invalid_argument for k < 2.
ReductionOutput gen_extremal_ts_split(int k);

/// Split instance on 6k vertices whose jump distance exceeds half the
/// symmetric difference by exactly one. Throws std::invalid_argument for
/// k < 2.
ReductionOutput gen_extremal_tj_split(int k);

/// Vertex-cover-based constructions. Each takes a base graph with two
/// minimum vertex covers and produces an equivalent distance-r instance;
/// cs and ct are verified to be minimum covers (brute force) unless
/// trust_covers is set, which is required for base graphs too large to
/// check.
ReductionOutput reduce_vc_planar(const Graph& g, int r, Rule rule,
                                 const std::vector<int>& cs,
                                 const std::vector<int>& ct,
                                 bool trust_covers = false);
ReductionOutput reduce_vc_chordal(const Graph& g, int r, Rule rule,
                                  const std::vector<int>& cs,
                                  const std::vector<int>& ct,
                                  bool trust_covers = false);
ReductionOutput reduce_vc_bipartite(const Graph& g, int r, Rule rule,
                                    const std::vector<int>& cs,
                                    const std::vector<int>& ct,
                                    bool trust_covers = false);

/// Seeded generators used by the test corpus and the gen subcommands.
Graph gen_random_tree(int n, unsigned seed);
Graph gen_random_split_graph(int n, unsigned seed);

}  // namespace drdsr
