#include "drdsr/routing.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "drdsr/check.hpp"

namespace drdsr {

std::pair<std::vector<int>, long long> hungarian(
    const std::vector<std::vector<long long>>& cost) {
  int n = static_cast<int>(cost.size());
  if (n == 0) return {{}, 0};
  for (const auto& row : cost)
    DRDSR_CHECK(static_cast<int>(row.size()) == n,
                "assignment cost matrix must be square");
  const long long kInf = std::numeric_limits<long long>::max() / 4;
  // Potential-based shortest augmenting paths; p[j] is the row matched to
  // column j, with column 0 as the virtual unmatched slot.
  std::vector<long long> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      long long delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> assign(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] != 0) assign[p[j] - 1] = j - 1;
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    DRDSR_CHECK(assign[i] >= 0, "assignment left row " << i << " unmatched");
    total += cost[i][assign[i]];
  }
  return {assign, total};
}

namespace {

// BFS distances to t in g minus the forbidden vertex.
std::vector<int> dist_to(const Graph& g, int t, int forbidden) {
  std::vector<int> dist(g.n, kUnreachable);
  if (t == forbidden) return dist;
  std::queue<int> q;
  dist[t] = 0;
  q.push(t);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj[u]) {
      if (w == forbidden || dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      q.push(w);
    }
  }
  return dist;
}

}  // namespace

std::vector<int> lex_shortest_path(const Graph& g, int s, int t,
                                   int forbidden) {
  if (s == forbidden || t == forbidden) return {};
  auto dist = dist_to(g, t, forbidden);
  if (dist[s] == kUnreachable) return {};
  std::vector<int> path{s};
  int cur = s;
  while (cur != t) {
    int next = -1;
    for (int w : g.adj[cur]) {
      if (w == forbidden) continue;
      if (dist[w] == dist[cur] - 1) {
        next = w;
        break;  // adjacency is sorted, first hit is the least id
      }
    }
    DRDSR_CHECK(next != -1, "shortest path walk lost the gradient");
    path.push_back(next);
    cur = next;
  }
  return path;
}

void free_ts_route(const Graph& g, std::vector<int> target_of, int forbidden,
                   std::vector<Move>& out) {
  DRDSR_CHECK(static_cast<int>(target_of.size()) == g.n,
              "target_of must have one slot per vertex");
  long long total = 0;
  int tokens = 0;
  std::vector<char> target_seen(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (target_of[v] == -1) continue;
    ++tokens;
    int t = target_of[v];
    DRDSR_CHECK(t >= 0 && t < g.n && !target_seen[t],
                "targets must be distinct vertices");
    target_seen[t] = 1;
    auto dist = dist_to(g, t, forbidden);
    DRDSR_CHECK(dist[v] != kUnreachable,
                "token on " << v << " cannot reach target " << t);
    total += dist[v];
  }

  size_t start = out.size();
  long long iter_cap = total + static_cast<long long>(tokens) * tokens + 4;
  for (long long iter = 0;; ++iter) {
    DRDSR_CHECK(iter <= iter_cap, "free route failed to converge; "
                                  "assignment was not minimum-cost");
    int u = -1;
    for (int v = 0; v < g.n; ++v) {
      if (target_of[v] != -1 && target_of[v] != v) {
        u = v;
        break;
      }
    }
    if (u == -1) break;
    auto path = lex_shortest_path(g, u, target_of[u], forbidden);
    DRDSR_CHECK(!path.empty(), "delivery path vanished mid-route");
    int last = static_cast<int>(path.size()) - 1;
    int blocked = -1;
    for (int i = last; i >= 1; --i) {
      if (target_of[path[i]] != -1) {
        blocked = i;
        break;
      }
    }
    if (blocked == -1) {
      int tgt = target_of[u];
      target_of[u] = -1;
      for (int i = 0; i < last; ++i) out.push_back({path[i], path[i + 1]});
      target_of[path[last]] = tgt;
    } else {
      // The blocker nearest the target takes over the delivery; exchanging
      // targets never increases the remaining total distance.
      std::swap(target_of[u], target_of[path[blocked]]);
      if (blocked < last) {
        int tgt = target_of[path[blocked]];
        target_of[path[blocked]] = -1;
        for (int i = blocked; i < last; ++i)
          out.push_back({path[i], path[i + 1]});
        target_of[path[last]] = tgt;
      }
    }
    DRDSR_CHECK(static_cast<long long>(out.size() - start) <= total,
                "free route exceeded its distance budget");
  }
  DRDSR_CHECK(static_cast<long long>(out.size() - start) == total,
              "free route move count " << out.size() - start
                                       << " != distance total " << total);
}

}  // namespace drdsr
