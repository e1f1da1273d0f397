#include "drdsr/oracle.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_map>

#include "drdsr/check.hpp"

namespace drdsr {
namespace {

using Words = std::vector<std::uint64_t>;

struct WordsHash {
  size_t operator()(const Words& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

using DistMap = std::unordered_map<Words, int, WordsHash>;

std::uint64_t binom_clamped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 res = 1;
  for (int i = 1; i <= k; ++i) {
    res = res * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (res > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(res);
}

struct Space {
  const Graph& g;
  int r;
  Rule rule;
  int words;
  Words full;
  std::vector<Words> ball;  // vertices within distance r of each vertex

  Space(const Graph& g, int r, Rule rule)
      : g(g), r(r), rule(rule), words((g.n + 63) / 64) {
    full.assign(words, 0);
    for (int v = 0; v < g.n; ++v) full[v >> 6] |= 1ull << (v & 63);
    ball.assign(g.n, Words(words, 0));
    for (int v = 0; v < g.n; ++v) {
      auto dist = multi_bfs_distances(g, {v}, r);
      for (int w = 0; w < g.n; ++w)
        if (dist[w] != kUnreachable) ball[v][w >> 6] |= 1ull << (w & 63);
    }
  }

  Words encode(const TokenSet& d) const {
    Words s(words, 0);
    for (int v : d) s[v >> 6] |= 1ull << (v & 63);
    return s;
  }

  TokenSet decode(const Words& s) const {
    TokenSet d;
    for (int v = 0; v < g.n; ++v)
      if (s[v >> 6] >> (v & 63) & 1) d.push_back(v);
    return d;
  }

  // Enumerates valid moves from state s in (from, to) ascending order.
  // visit(from, to, next) returning false stops the enumeration early.
  template <typename Visit>
  void for_each_neighbor(const Words& s, Visit visit) const {
    TokenSet tokens = decode(s);
    Words others(words, 0), deficit(words, 0);
    for (int u : tokens) {
      // Vertices only u's ball covers; any destination must keep them.
      std::fill(others.begin(), others.end(), 0);
      for (int t : tokens)
        if (t != u)
          for (int i = 0; i < words; ++i) others[i] |= ball[t][i];
      for (int i = 0; i < words; ++i) deficit[i] = full[i] & ~others[i];
      auto try_dest = [&](int w) {
        if (s[w >> 6] >> (w & 63) & 1) return true;  // occupied
        for (int i = 0; i < words; ++i)
          if (deficit[i] & ~ball[w][i]) return true;  // uncovered leftover
        Words next = s;
        next[u >> 6] ^= 1ull << (u & 63);
        next[w >> 6] |= 1ull << (w & 63);
        return visit(u, w, next);
      };
      if (rule == Rule::TS) {
        for (int w : g.adj[u])
          if (!try_dest(w)) return;
      } else {
        for (int w = 0; w < g.n; ++w)
          if (w != u && !try_dest(w)) return;
      }
    }
  }
};

// One BFS level expansion; with several threads the level is chunked and the
// per-chunk discoveries are merged in chunk order (the resulting distance
// labels do not depend on the chunking).
std::vector<Words> expand_level(const Space& space,
                                const std::vector<Words>& level, DistMap& dist,
                                int next_dist, int threads) {
  std::vector<Words> discovered;
  auto scan = [&space](const std::vector<Words>& states, size_t lo, size_t hi,
                       std::vector<Words>& out) {
    for (size_t i = lo; i < hi; ++i)
      space.for_each_neighbor(states[i], [&out](int, int, const Words& next) {
        out.push_back(next);
        return true;
      });
  };
  std::vector<Words> candidates;
  if (threads > 1 && level.size() >= static_cast<size_t>(threads)) {
    std::vector<std::vector<Words>> chunk_out(threads);
    std::vector<std::thread> pool;
    size_t per = (level.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      size_t lo = std::min(level.size(), t * per);
      size_t hi = std::min(level.size(), lo + per);
      pool.emplace_back(scan, std::cref(level), lo, hi,
                        std::ref(chunk_out[t]));
    }
    for (auto& th : pool) th.join();
    for (auto& part : chunk_out)
      for (auto& s : part) candidates.push_back(std::move(s));
  } else {
    scan(level, 0, level.size(), candidates);
  }
  for (auto& s : candidates) {
    if (dist.emplace(s, next_dist).second) discovered.push_back(std::move(s));
  }
  return discovered;
}

}  // namespace

OracleResult oracle_shortest(const DrdsInstance& inst,
                             const OracleLimits& limits) {
  OracleResult res;
  if (inst.graph.n > limits.max_n) {
    res.limit_exceeded = true;
    return res;
  }
  res.witness.initial = inst.source;
  if (inst.source == inst.target) {
    res.reachable = true;
    res.opt = 0;
    return res;
  }
  if (inst.source.size() != inst.target.size()) return res;  // unreachable
  std::uint64_t count = binom_clamped(
      inst.graph.n, static_cast<int>(inst.source.size()), limits.max_states);
  if (count > limits.max_states) {
    res.limit_exceeded = true;
    return res;
  }

  Space space(inst.graph, inst.r, inst.rule);
  Words src = space.encode(inst.source);
  Words tgt = space.encode(inst.target);
  int threads = std::max(1, limits.threads);

  DistMap dist_s;
  dist_s.emplace(src, 0);
  std::vector<Words> level{src};
  int depth = 0;
  bool found = false;
  while (!level.empty() && !found) {
    level = expand_level(space, level, dist_s, ++depth, threads);
    found = dist_s.count(tgt) != 0;
  }
  if (!found) return res;  // exhausted, unreachable

  int opt = dist_s.at(tgt);
  res.reachable = true;
  res.opt = opt;

  // Backward labels from the target, kept to states the forward pass saw;
  // every state on a shortest path has dist_s + dist_t == opt.
  DistMap dist_t;
  dist_t.emplace(tgt, 0);
  std::vector<Words> back{tgt};
  for (int d = 1; d <= opt && !back.empty(); ++d) {
    std::vector<Words> next_back;
    for (const auto& s : back) {
      space.for_each_neighbor(s, [&](int, int, const Words& nb) {
        if (dist_s.count(nb) && dist_t.emplace(nb, d).second)
          next_back.push_back(nb);
        return true;
      });
    }
    back = std::move(next_back);
  }

  // Greedy walk: at each step take the least (from, to) that stays on a
  // shortest path. This yields the lexicographically least move list.
  Words cur = src;
  for (int step = 0; step < opt; ++step) {
    bool advanced = false;
    space.for_each_neighbor(cur, [&](int from, int to, const Words& nb) {
      auto it_s = dist_s.find(nb);
      if (it_s == dist_s.end() || it_s->second != step + 1) return true;
      auto it_t = dist_t.find(nb);
      if (it_t == dist_t.end() || it_t->second != opt - step - 1) return true;
      res.witness.moves.push_back({from, to});
      cur = nb;
      advanced = true;
      return false;
    });
    DRDSR_CHECK(advanced, "shortest-path walk stalled at step " << step);
  }
  DRDSR_CHECK(cur == tgt, "shortest-path walk missed the target");
  return res;
}

GammaResult gamma_r(const Graph& g, int r, int max_n) {
  GammaResult res;
  if (g.n > max_n) {
    res.limit_exceeded = true;
    return res;
  }
  if (g.n == 0) {
    res.gamma = 0;
    return res;
  }
  Space space(g, r, Rule::TJ);
  for (int k = 1; k <= g.n; ++k) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      Words covered(space.words, 0);
      for (int v : combo)
        for (int i = 0; i < space.words; ++i) covered[i] |= space.ball[v][i];
      if (covered == space.full) {
        res.gamma = k;
        res.witness.assign(combo.begin(), combo.end());
        return res;
      }
      int i = k - 1;
      while (i >= 0 && combo[i] == g.n - k + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  DRDSR_CHECK(false, "full vertex set failed to dominate");
  return res;
}

VertexCoverResult min_vertex_cover(const Graph& g, int max_n) {
  VertexCoverResult res;
  if (g.n > max_n) {
    res.limit_exceeded = true;
    return res;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) edges.emplace_back(u, v);
  auto is_cover = [&edges](const std::vector<char>& in) {
    for (const auto& [u, v] : edges)
      if (!in[u] && !in[v]) return false;
    return true;
  };
  for (int k = 0; k <= g.n; ++k) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    bool more = true;
    while (more) {
      std::vector<char> in(g.n, 0);
      for (int v : combo) in[v] = 1;
      if (is_cover(in)) res.covers.emplace_back(combo.begin(), combo.end());
      int i = k - 1;
      while (i >= 0 && combo[i] == g.n - k + i) --i;
      if (i < 0) {
        more = false;
      } else {
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      }
      if (k == 0) more = false;
    }
    if (!res.covers.empty()) {
      res.tau = k;
      return res;
    }
  }
  DRDSR_CHECK(false, "full vertex set failed to cover");
  return res;
}

bool min_vcr_reachable(const Graph& g, const std::vector<int>& cs,
                       const std::vector<int>& ct, Rule rule, int max_n) {
  VertexCoverResult mvc = min_vertex_cover(g, max_n);
  if (mvc.limit_exceeded)
    throw std::invalid_argument("graph too large for cover enumeration");
  auto is_min_cover = [&mvc](const std::vector<int>& c) {
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    return std::find(mvc.covers.begin(), mvc.covers.end(), sorted) !=
           mvc.covers.end();
  };
  if (!is_min_cover(cs) || !is_min_cover(ct))
    throw std::invalid_argument("endpoints must be minimum vertex covers");

  std::vector<int> start = cs, goal = ct;
  std::sort(start.begin(), start.end());
  std::sort(goal.begin(), goal.end());
  std::set<std::vector<int>> cover_set(mvc.covers.begin(), mvc.covers.end());
  std::set<std::vector<int>> seen{start};
  std::vector<std::vector<int>> frontier{start};
  while (!frontier.empty()) {
    if (seen.count(goal)) return true;
    std::vector<std::vector<int>> next_frontier;
    for (const auto& c : frontier) {
      std::vector<char> in(g.n, 0);
      for (int v : c) in[v] = 1;
      for (int u : c) {
        auto try_swap = [&](int v) {
          if (in[v]) return;
          std::vector<int> nb;
          nb.reserve(c.size());
          for (int x : c)
            if (x != u) nb.push_back(x);
          nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
          if (!cover_set.count(nb)) return;
          if (seen.insert(nb).second) next_frontier.push_back(nb);
        };
        if (rule == Rule::TS) {
          for (int v : g.adj[u]) try_swap(v);
        } else {
          for (int v = 0; v < g.n; ++v)
            if (v != u) try_swap(v);
        }
      }
    }
    frontier = std::move(next_frontier);
  }
  return seen.count(goal) != 0;
}

}  // namespace drdsr
