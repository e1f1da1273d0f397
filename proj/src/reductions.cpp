#include "drdsr/reductions.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "drdsr/check.hpp"
#include "drdsr/oracle.hpp"

namespace drdsr {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream ss(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int parse_int_field(const std::string& tok, int line) {
  try {
    std::size_t pos = 0;
    const int value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (...) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

NclInstance parse_ncl(std::istream& in) {
  NclInstance inst;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0;
  int m = 0;
  std::vector<char> seen_vertex, seen_edge;
  while (std::getline(in, line)) {
    ++lineno;
    const std::vector<std::string> tok = split_tokens(line);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 3 || tok[0] != "ncl")
        throw ParseError(lineno, "expected 'ncl <n> <m>'");
      n = parse_int_field(tok[1], lineno);
      m = parse_int_field(tok[2], lineno);
      if (n < 0 || m < 0)
        throw ParseError(lineno, "vertex and edge counts must be non-negative");
      inst.graph.n = n;
      inst.graph.type.assign(n, NclVertexType::And);
      inst.graph.edges.assign(m, NclEdge{0, 0, 1});
      inst.config.assign(m, 0);
      seen_vertex.assign(n, 0);
      seen_edge.assign(m, 0);
      have_header = true;
      continue;
    }
    if (tok[0] == "v") {
      if (tok.size() != 3)
        throw ParseError(lineno, "expected 'v <id> AND|OR'");
      const int id = parse_int_field(tok[1], lineno);
      if (id < 0 || id >= n) throw ParseError(lineno, "vertex id out of range");
      if (seen_vertex[id])
        throw ParseError(lineno, "duplicate vertex declaration");
      seen_vertex[id] = 1;
      if (tok[2] == "AND")
        inst.graph.type[id] = NclVertexType::And;
      else if (tok[2] == "OR")
        inst.graph.type[id] = NclVertexType::Or;
      else
        throw ParseError(lineno, "vertex type must be AND or OR");
    } else if (tok[0] == "e") {
      if (tok.size() != 6)
        throw ParseError(lineno, "expected 'e <id> <u> <v> <w> <dir>'");
      const int id = parse_int_field(tok[1], lineno);
      if (id < 0 || id >= m) throw ParseError(lineno, "edge id out of range");
      if (seen_edge[id]) throw ParseError(lineno, "duplicate edge declaration");
      seen_edge[id] = 1;
      NclEdge e;
      e.u = parse_int_field(tok[2], lineno);
      e.v = parse_int_field(tok[3], lineno);
      e.w = parse_int_field(tok[4], lineno);
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw ParseError(lineno, "edge endpoint out of range");
      if (e.u == e.v) throw ParseError(lineno, "loops are not allowed");
      if (e.w != 1 && e.w != 2)
        throw ParseError(lineno, "edge weight must be 1 or 2");
      inst.graph.edges[id] = e;
      if (tok[5] == "uv")
        inst.config[id] = 0;
      else if (tok[5] == "vu")
        inst.config[id] = 1;
      else
        throw ParseError(lineno, "direction must be uv or vu");
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!have_header) throw ParseError(lineno > 0 ? lineno : 1, "missing ncl header");
  for (int v = 0; v < n; ++v)
    if (!seen_vertex[v])
      throw ParseError(lineno, "vertex " + std::to_string(v) + " undeclared");
  for (int e = 0; e < m; ++e)
    if (!seen_edge[e])
      throw ParseError(lineno, "edge " + std::to_string(e) + " undeclared");
  return inst;
}

NclInstance parse_ncl_text(const std::string& text) {
  std::istringstream in(text);
  return parse_ncl(in);
}

void validate_ncl_graph(const NclGraph& ncl) {
  if (ncl.n < 0 || static_cast<int>(ncl.type.size()) != ncl.n)
    throw std::invalid_argument("ncl graph has inconsistent vertex data");
  std::vector<int> deg(ncl.n, 0);
  std::vector<std::array<int, 2>> wcount(ncl.n, {0, 0});  // weight 1 / weight 2
  for (const NclEdge& e : ncl.edges) {
    if (e.u < 0 || e.u >= ncl.n || e.v < 0 || e.v >= ncl.n)
      throw std::invalid_argument("ncl edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("ncl loops are not allowed");
    if (e.w != 1 && e.w != 2)
      throw std::invalid_argument("ncl edge weight must be 1 or 2");
    ++deg[e.u];
    ++deg[e.v];
    ++wcount[e.u][e.w - 1];
    ++wcount[e.v][e.w - 1];
  }
  for (int v = 0; v < ncl.n; ++v) {
    if (deg[v] != 3)
      throw std::invalid_argument("ncl vertex " + std::to_string(v) +
                                  " must have degree 3");
    const bool ok = ncl.type[v] == NclVertexType::And
                        ? (wcount[v][0] == 2 && wcount[v][1] == 1)
                        : (wcount[v][0] == 0 && wcount[v][1] == 3);
    if (!ok)
      throw std::invalid_argument("ncl vertex " + std::to_string(v) +
                                  " has wrong incident weights");
  }
}

bool is_valid_ncl_config(const NclGraph& ncl, const NclConfig& cfg) {
  if (cfg.size() != ncl.edges.size()) return false;
  std::vector<int> in_weight(ncl.n, 0);
  for (std::size_t e = 0; e < cfg.size(); ++e) {
    if (cfg[e] != 0 && cfg[e] != 1) return false;
    const NclEdge& edge = ncl.edges[e];
    in_weight[cfg[e] == 0 ? edge.v : edge.u] += edge.w;
  }
  for (int v = 0; v < ncl.n; ++v)
    if (in_weight[v] < 2) return false;
  return true;
}

bool ncl_config_reachable(const NclGraph& ncl, const NclConfig& a,
                          const NclConfig& b) {
  validate_ncl_graph(ncl);
  if (!is_valid_ncl_config(ncl, a) || !is_valid_ncl_config(ncl, b))
    throw std::invalid_argument("ncl reachability needs valid configurations");
  if (a == b) return true;
  std::set<NclConfig> seen{a};
  std::queue<NclConfig> queue;
  queue.push(a);
  while (!queue.empty()) {
    NclConfig cur = queue.front();
    queue.pop();
    for (std::size_t e = 0; e < cur.size(); ++e) {
      cur[e] ^= 1;
      if (is_valid_ncl_config(ncl, cur) && seen.insert(cur).second) {
        if (cur == b) return true;
        queue.push(cur);
      }
      cur[e] ^= 1;
    }
  }
  return false;
}

NclReduction build_ncl_reduction(const NclGraph& ncl, int r) {
  validate_ncl_graph(ncl);
  if (r < 1) throw std::invalid_argument("ncl reduction needs r >= 1");
  const int m = static_cast<int>(ncl.edges.size());

  // Incidences in edge-listing order fix each gadget's port order.
  std::vector<std::vector<std::pair<int, int>>> inc(ncl.n);
  for (int e = 0; e < m; ++e) {
    inc[ncl.edges[e].u].push_back({e, 0});
    inc[ncl.edges[e].v].push_back({e, 1});
  }

  NclReduction red;
  red.r = r;
  red.slot.assign(m, {0, 0});
  std::vector<std::pair<int, int>> edges;
  int next = 0;
  auto alloc = [&](const std::string& label) {
    red.provenance.push_back(label);
    return next++;
  };
  auto link = [&](int u, int v) { edges.push_back({u, v}); };

  // Main components. The AND gadget is a bull (triangle x, y, z plus
  // pendants p1, p2); its weight-2 edge attaches through x and the weight-1
  // edges through p1 and p2. The OR gadget is a claw attaching through its
  // leaves.
  std::vector<std::array<int, 2>> port(m, {-1, -1});
  for (int i = 0; i < ncl.n; ++i) {
    const std::string pre = "v" + std::to_string(i) + ".";
    if (ncl.type[i] == NclVertexType::And) {
      const int x = alloc(pre + "x");
      const int y = alloc(pre + "y");
      const int z = alloc(pre + "z");
      const int p1 = alloc(pre + "p1");
      const int p2 = alloc(pre + "p2");
      link(x, y);
      link(x, z);
      link(y, z);
      link(y, p1);
      link(z, p2);
      int reds = 0;
      for (const auto& [e, side] : inc[i])
        port[e][side] =
            ncl.edges[e].w == 2 ? x : (reds++ == 0 ? p1 : p2);
    } else {
      const int c = alloc(pre + "c");
      const int l1 = alloc(pre + "l1");
      const int l2 = alloc(pre + "l2");
      const int l3 = alloc(pre + "l3");
      link(c, l1);
      link(c, l2);
      link(c, l3);
      int li = 0;
      const int leaves[3] = {l1, l2, l3};
      for (const auto& [e, side] : inc[i]) port[e][side] = leaves[li++];
    }
  }

  // Link components: per edge a slot pair joined by an edge, a pendant path
  // of length r-1 behind each slot, and a connecting path of length r-1 from
  // each gadget port. For r = 1 both paths vanish and the slot is the port.
  for (int e = 0; e < m; ++e) {
    const std::string pre = "e" + std::to_string(e) + ".";
    for (int side = 0; side < 2; ++side) {
      const char* sn = side == 0 ? "u" : "v";
      int s = port[e][side];
      if (r >= 2) {
        int prev = port[e][side];
        for (int q = 1; q <= r - 2; ++q) {
          const int c = alloc(pre + "conn." + sn + "." + std::to_string(q));
          link(prev, c);
          prev = c;
        }
        s = alloc(pre + "slot." + sn);
        link(prev, s);
        int pprev = s;
        for (int q = 1; q <= r - 1; ++q) {
          const int d = alloc(pre + "pend." + sn + "." + std::to_string(q));
          link(pprev, d);
          pprev = d;
        }
      }
      red.slot[e][side] = s;
    }
    link(red.slot[e][0], red.slot[e][1]);
  }

  red.graph = Graph::from_edges(next, edges);
  for (int v = 0; v < red.graph.n; ++v)
    DRDSR_CHECK(red.graph.degree(v) <= 3,
                "gadget construction exceeded degree 3 at " << v);
  return red;
}

TokenSet standard_placement(const NclReduction& red, const NclConfig& cfg) {
  if (cfg.size() != red.slot.size())
    throw std::invalid_argument("configuration size mismatch");
  TokenSet tokens;
  for (std::size_t e = 0; e < cfg.size(); ++e) {
    if (cfg[e] != 0 && cfg[e] != 1)
      throw std::invalid_argument("orientation values must be 0 or 1");
    tokens.push_back(cfg[e] == 0 ? red.slot[e][1] : red.slot[e][0]);
  }
  std::sort(tokens.begin(), tokens.end());
  DRDSR_CHECK(std::adjacent_find(tokens.begin(), tokens.end()) == tokens.end(),
              "link slots are not distinct");
  return tokens;
}

ReductionOutput ncl_to_drdsr(const NclGraph& ncl, const NclConfig& cfg, int r) {
  NclReduction red = build_ncl_reduction(ncl, r);
  if (!is_valid_ncl_config(ncl, cfg))
    throw std::invalid_argument("invalid ncl configuration");
  TokenSet placement = standard_placement(red, cfg);
  return ReductionOutput{
      DrdsInstance(red.graph, r, Rule::TS, placement, placement),
      std::move(red.provenance)};
}

ReductionOutput gen_extremal_ts_split(int k) {
  if (k < 2)
    throw std::invalid_argument("gen_extremal_ts_split requires k >= 2");
  const int n = 2 * k + 1;
  const int b = 2 * k;
  std::vector<std::pair<int, int>> edges;
  edges.push_back({0, 1});
  for (int v = 2; v <= 2 * k - 1; ++v) edges.push_back({0, v});
  edges.push_back({1, b});
  std::vector<std::string> prov(n);
  prov[0] = "s1t1";
  prov[1] = "a";
  for (int i = 2; i <= k; ++i) prov[i] = "s" + std::to_string(i);
  for (int i = 2; i <= k; ++i) prov[k + i - 1] = "t" + std::to_string(i);
  prov[b] = "b";
  TokenSet src{0}, tgt{0};
  for (int i = 2; i <= k; ++i) src.push_back(i);
  for (int i = k + 1; i <= 2 * k - 1; ++i) tgt.push_back(i);
  Graph g = Graph::from_edges(n, edges);
  return ReductionOutput{DrdsInstance(std::move(g), 2, Rule::TS, src, tgt),
                         std::move(prov)};
}

ReductionOutput gen_extremal_tj_split(int k) {
  if (k < 2)
    throw std::invalid_argument("gen_extremal_tj_split requires k >= 2");
  const int n = 6 * k;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 3 * k; ++u)
    for (int v = u + 1; v < 3 * k; ++v) edges.push_back({u, v});
  std::vector<std::string> prov(n);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= 3; ++j)
      prov[3 * (i - 1) + (j - 1)] =
          "v" + std::to_string(i) + std::to_string(j);
  TokenSet src, tgt;
  for (int i = 1; i <= k; ++i) {
    const int v1 = 3 * (i - 1);
    const int u1 = 3 * k + 3 * (i - 1);
    const int u2 = u1 + 1;
    const int w1 = u1 + 2;
    prov[u1] = "u" + std::to_string(i) + "1";
    prov[u2] = "u" + std::to_string(i) + "2";
    prov[w1] = "w" + std::to_string(i) + "1";
    edges.push_back({v1, u1});
    edges.push_back({v1 + 1, u1});
    edges.push_back({v1, u2});
    edges.push_back({v1 + 2, u2});
    const int jnext = i % k + 1;
    edges.push_back({v1 + 1, w1});
    edges.push_back({3 * (jnext - 1) + 2, w1});
    src.push_back(u1);
    tgt.push_back(w1);
  }
  Graph g = Graph::from_edges(n, edges);
  return ReductionOutput{DrdsInstance(std::move(g), 2, Rule::TJ, src, tgt),
                         std::move(prov)};
}

namespace {

void check_covers(const Graph& g, const std::vector<int>& cs,
                  const std::vector<int>& ct, bool trust) {
  if (!is_token_set(g, cs) || !is_token_set(g, ct))
    throw std::invalid_argument("covers must be sorted vertex subsets");
  auto covers_all_edges = [&](const std::vector<int>& c) {
    std::vector<char> in(g.n, 0);
    for (int v : c) in[v] = 1;
    for (int u = 0; u < g.n; ++u)
      for (int v : g.adj[u])
        if (u < v && !in[u] && !in[v]) return false;
    return true;
  };
  if (!covers_all_edges(cs) || !covers_all_edges(ct))
    throw std::invalid_argument("input sets are not vertex covers");
  if (trust) return;
  const VertexCoverResult mvc = min_vertex_cover(g);
  if (mvc.limit_exceeded)
    throw std::invalid_argument(
        "base graph too large to verify cover minimality; set trust_covers");
  if (static_cast<int>(cs.size()) != mvc.tau ||
      static_cast<int>(ct.size()) != mvc.tau)
    throw std::invalid_argument("input covers are not minimum");
}

/// Deterministic edge enumeration: ascending (u, v) with u < v.
std::vector<std::pair<int, int>> sorted_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) out.push_back({u, v});
  return out;
}

}  // namespace

ReductionOutput reduce_vc_planar(const Graph& g, int r, Rule rule,
                                 const std::vector<int>& cs,
                                 const std::vector<int>& ct,
                                 bool trust_covers) {
  if (r < 1) throw std::invalid_argument("reduction needs r >= 1");
  check_covers(g, cs, ct, trust_covers);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> prov;
  for (int v = 0; v < g.n; ++v) prov.push_back("v" + std::to_string(v));
  int next = g.n;
  const auto base_edges = sorted_edges(g);
  for (std::size_t e = 0; e < base_edges.size(); ++e) {
    const auto [u, v] = base_edges[e];
    edges.push_back({u, v});  // kept edge closes the (2r+1)-cycle
    int prev = u;
    for (int p = 1; p <= 2 * r - 1; ++p) {
      prov.push_back("e" + std::to_string(e) + ".x" + std::to_string(p));
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, v});
  }
  Graph out = Graph::from_edges(next, edges);
  return ReductionOutput{DrdsInstance(std::move(out), r, rule, cs, ct),
                         std::move(prov)};
}

ReductionOutput reduce_vc_chordal(const Graph& g, int r, Rule rule,
                                  const std::vector<int>& cs,
                                  const std::vector<int>& ct,
                                  bool trust_covers) {
  if (r < 1) throw std::invalid_argument("reduction needs r >= 1");
  check_covers(g, cs, ct, trust_covers);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> prov;
  for (int v = 0; v < g.n; ++v) prov.push_back("v" + std::to_string(v));
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) edges.push_back({u, v});
  int next = g.n;
  const auto base_edges = sorted_edges(g);
  for (std::size_t e = 0; e < base_edges.size(); ++e) {
    const auto [u, v] = base_edges[e];
    for (int p = 1; p <= 2; ++p) {
      const int x = next++;
      prov.push_back("e" + std::to_string(e) + ".x" + std::to_string(p));
      edges.push_back({u, x});
      edges.push_back({v, x});
      int prev = x;
      for (int q = 1; q <= r - 1; ++q) {
        prov.push_back("e" + std::to_string(e) + ".x" + std::to_string(p) +
                       ".p" + std::to_string(q));
        edges.push_back({prev, next});
        prev = next++;
      }
    }
  }
  Graph out = Graph::from_edges(next, edges);
  return ReductionOutput{DrdsInstance(std::move(out), r, rule, cs, ct),
                         std::move(prov)};
}

ReductionOutput reduce_vc_bipartite(const Graph& g, int r, Rule rule,
                                    const std::vector<int>& cs,
                                    const std::vector<int>& ct,
                                    bool trust_covers) {
  if (r < 1) throw std::invalid_argument("reduction needs r >= 1");
  check_covers(g, cs, ct, trust_covers);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> prov;
  for (int v = 0; v < g.n; ++v) prov.push_back("v" + std::to_string(v));
  int next = g.n;
  const auto base_edges = sorted_edges(g);
  for (std::size_t e = 0; e < base_edges.size(); ++e) {
    const auto [u, v] = base_edges[e];
    int prev = u;  // original edge replaced by a path of length 2r
    for (int p = 1; p <= 2 * r - 1; ++p) {
      prov.push_back("e" + std::to_string(e) + ".x" + std::to_string(p));
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, v});
  }
  const int apex = next++;
  prov.push_back("x");
  for (int v = 0; v < g.n; ++v) edges.push_back({v, apex});
  int prev = apex;
  for (int q = 1; q <= r; ++q) {
    prov.push_back("px." + std::to_string(q));
    edges.push_back({prev, next});
    prev = next++;
  }
  auto with_apex = [&](const std::vector<int>& c) {
    TokenSet d = c;
    d.push_back(apex);
    std::sort(d.begin(), d.end());
    return d;
  };
  Graph out = Graph::from_edges(next, edges);
  return ReductionOutput{
      DrdsInstance(std::move(out), r, rule, with_apex(cs), with_apex(ct)),
      std::move(prov)};
}

Graph gen_random_tree(int n, unsigned seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n == 1) return Graph::from_edges(1, {});
  std::mt19937 rng(seed);
  std::vector<int> code(n - 2);
  for (int& c : code) c = static_cast<int>(rng() % static_cast<unsigned>(n));
  std::vector<int> deg(n, 1);
  for (int c : code) ++deg[c];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<std::pair<int, int>> edges;
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, c});
    if (--deg[c] == 1) leaves.push(c);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Graph::from_edges(n, edges);
}

Graph gen_random_split_graph(int n, unsigned seed) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::mt19937 rng(seed);
  const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
  for (int s = k; s < n; ++s) {
    const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
    std::set<int> nb;
    while (static_cast<int>(nb.size()) < d)
      nb.insert(static_cast<int>(rng() % static_cast<unsigned>(k)));
    for (int c : nb) edges.push_back({c, s});
  }
  return Graph::from_edges(n, edges);
}

}  // namespace drdsr
