#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drdsr {

/// Distance value used by the BFS helpers for vertices that cannot be
/// reached from the source set (or that lie beyond a depth cap).
inline constexpr int kUnreachable = -1;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Self-loops and parallel edges are rejected at construction.
struct Graph {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> adj;

  /// Builds a graph from an edge list. Throws std::invalid_argument on
  /// out-of-range endpoints, self-loops, or duplicate edges.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

/// Reconfiguration rule: token sliding moves along edges, token jumping
/// may move a token to any vertex.
enum class Rule { TS, TJ };

std::string rule_name(Rule rule);

/// Error raised by the instance/sequence parsers. `line` is 1-based.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line, const std::string& what)
      : std::runtime_error(what), line(line) {}
};

/// Instance file contents. Only the graph itself is mandatory; the other
/// directives (K, r, rule, S, T) are optional and validated when present.
struct ParsedInstance {
  Graph graph;
  std::optional<std::vector<int>> clique;   // K line, sorted
  std::optional<int> r;
  std::optional<Rule> rule;
  std::optional<std::vector<int>> source;   // S line, sorted
  std::optional<std::vector<int>> target;   // T line, sorted
};

/// Parses the instance format:
///   p <n> <m>
///   <u> <v>         (m edge lines)
///   K <k> <ids...>  (optional clique hint)
///   r <radius>
///   rule TS|TJ
///   S <k> <ids...>
///   T <k> <ids...>
/// '#' starts a comment anywhere; blank lines are ignored. Throws ParseError
/// with a 1-based line number on malformed input.
ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_text(const std::string& text);

/// Parses just the graph part (header + edges); trailing directives are
/// rejected. Convenience for tests.
Graph parse_graph_text(const std::string& text);

/// Serializes an instance in the same format parse_instance reads. Output is
/// byte-stable: edges are listed with u < v in ascending order and the
/// directives always appear in the order K, r, rule, S, T.
std::string format_instance(const Graph& g,
                            const std::optional<std::vector<int>>& clique,
                            const std::optional<int>& r,
                            const std::optional<Rule>& rule,
                            const std::optional<std::vector<int>>& source,
                            const std::optional<std::vector<int>>& target);

/// Single-source BFS distances; kUnreachable for unreached vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Multi-source BFS. Vertices farther than depth_cap (when >= 0) report
/// kUnreachable; the search stops expanding at the cap.
std::vector<int> multi_bfs_distances(const Graph& g,
                                     const std::vector<int>& sources,
                                     int depth_cap = -1);

/// Graph power G^s: edge uv iff 0 < dist_G(u, v) <= s.
Graph graph_power(const Graph& g, int s);

struct SplitPartition {
  std::vector<int> clique;       // sorted
  std::vector<int> independent;  // sorted
};

/// Checks that (clique, independent) partitions V(g), the clique side is
/// complete and the independent side has no internal edges.
bool is_valid_split_partition(const Graph& g, const SplitPartition& part);

/// Split-graph recognition via the degree-sequence splittance test, with the
/// clique taken as the h highest-degree vertices (ties by smaller id). A
/// single swap across the boundary repairs the rare case where that choice
/// is not itself a valid partition. Returns nullopt for non-split graphs.
std::optional<SplitPartition> recognize_split(const Graph& g);

/// Structural summary used by the solver dispatch logic.
struct ClassReport {
  bool connected = false;
  bool tree = false;       // connected and acyclic
  bool bipartite = false;
  std::optional<SplitPartition> split;
  int num_components = 0;
  std::vector<int> component;           // vertex -> component id
  std::vector<int> component_diameter;  // per component id
};

ClassReport classify(const Graph& g);

}  // namespace drdsr
