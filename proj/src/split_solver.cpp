#include "drdsr/split_solver.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <utility>
#include <vector>

#include "drdsr/check.hpp"
#include "drdsr/routing.hpp"

namespace drdsr {

namespace {

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> dist(g.n);
  for (int v = 0; v < g.n; ++v) dist[v] = bfs_distances(g, v);
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  const std::vector<int> d = bfs_distances(g, 0);
  for (int v = 0; v < g.n; ++v)
    if (d[v] == kUnreachable) return false;
  return true;
}

/// Slide scheduler that turns a minimum-cost token -> target assignment into
/// a concrete move sequence. It only ever commits actions it has simulated:
/// whole-path deliveries, target exchanges with a blocking token that then
/// finishes the delivery itself, single on-geodesic steps, and (once) an
/// off-assignment "park" step that buys space when nothing else moves. Every
/// action except the park keeps the remaining assignment cost falling, so
/// the emitted sequence has length at most the assignment optimum plus two.
struct SlideEngine {
  const Graph* g = nullptr;
  int r = 1;
  std::vector<std::vector<int>> dist;
  TokenSet cur;
  std::vector<char> occ;
  std::vector<int> target_of;  // per vertex; meaningful only when occupied
  std::vector<Move> moves;
  int parks = 0;
  int park_hold = -1;  // vertex of a fresh park, excluded from delivery

  void init(const Graph& graph, int radius, const TokenSet& source,
            const std::vector<int>& targets_in_order) {
    g = &graph;
    r = radius;
    dist = all_pairs_distances(graph);
    cur = source;
    occ.assign(graph.n, 0);
    target_of.assign(graph.n, -1);
    for (std::size_t i = 0; i < source.size(); ++i) {
      occ[source[i]] = 1;
      target_of[source[i]] = targets_in_order[i];
    }
  }

  bool settled(int v) const { return target_of[v] == v; }

  long long remaining() const {
    long long sum = 0;
    for (int v : cur) sum += dist[v][target_of[v]];
    return sum;
  }

  void emit(Move mv) {
    MoveOutcome out = apply_move(*g, r, Rule::TS, cur, mv);
    DRDSR_CHECK(out.error == MoveErrorKind::None,
                "engine emitted an invalid slide " << mv.from << "->" << mv.to
                                                  << ": "
                                                  << move_error_name(out.error));
    cur = std::move(out.result);
    target_of[mv.to] = target_of[mv.from];
    target_of[mv.from] = -1;
    occ[mv.from] = 0;
    occ[mv.to] = 1;
    moves.push_back(mv);
  }

  /// Simulates sliding one token along path[first..last] and reports whether
  /// every intermediate set stays dominating.
  bool path_slides_valid(const std::vector<int>& path, std::size_t first) const {
    TokenSet scratch = cur;
    for (std::size_t i = first; i + 1 < path.size(); ++i) {
      MoveOutcome out =
          apply_move(*g, r, Rule::TS, scratch, {path[i], path[i + 1]});
      if (out.error != MoveErrorKind::None) {
        DRDSR_CHECK(out.error == MoveErrorKind::BreaksDomination,
                    "unexpected rejection on a free path segment: "
                        << move_error_name(out.error));
        return false;
      }
      scratch = std::move(out.result);
    }
    return true;
  }

  void emit_path(const std::vector<int>& path, std::size_t first) {
    for (std::size_t i = first; i + 1 < path.size(); ++i)
      emit({path[i], path[i + 1]});
  }

  /// Tries to finish the token on x in one committed action. Either the token
  /// itself slides its whole lex-least shortest path, or the blocking token
  /// nearest the target exchanges targets with it and slides the free suffix.
  /// Target exchanges are only taken when they do not increase the remaining
  /// assignment cost.
  bool try_shift(int x) {
    const int t = target_of[x];
    const std::vector<int> path = lex_shortest_path(*g, x, t);
    DRDSR_CHECK(!path.empty(), "no path between token " << x << " and target "
                                                        << t);
    int blocked = -1;
    for (int i = static_cast<int>(path.size()) - 1; i >= 1; --i) {
      if (occ[path[i]]) {
        blocked = i;
        break;
      }
    }
    if (blocked == static_cast<int>(path.size()) - 1) {
      // Target occupied. The occupant cannot be settled there (targets are
      // distinct), so exchanging targets settles it in place for free.
      const int y = t;
      DRDSR_CHECK(!settled(y), "two tokens assigned to vertex " << y);
      const long long delta = dist[x][target_of[y]] - dist[x][t] -
                              dist[y][target_of[y]];
      DRDSR_CHECK(delta <= 0, "settling exchange raised the assignment cost");
      std::swap(target_of[x], target_of[y]);
      return true;
    }
    if (blocked >= 1) {
      const int w = path[blocked];
      const long long delta = dist[x][target_of[w]] + dist[w][t] -
                              dist[x][t] - dist[w][target_of[w]];
      if (delta > 0) return false;
      if (!path_slides_valid(path, blocked)) return false;
      std::swap(target_of[x], target_of[w]);
      emit_path(path, blocked);
      return true;
    }
    if (!path_slides_valid(path, 0)) return false;
    emit_path(path, 0);
    return true;
  }

  /// One scan over unsettled tokens in vertex order; commits at most one
  /// action. Returns whether anything happened. A freshly parked token is
  /// excluded via skip_vertex so it does not march straight back.
  bool deliver_pass(int skip_vertex = -1) {
    for (int v = 0; v < g->n; ++v) {
      if (!occ[v] || settled(v) || v == skip_vertex) continue;
      if (try_shift(v)) return true;
    }
    return false;
  }

  /// Fallbacks when no whole delivery goes through. A single step along some
  /// token's geodesic keeps the cost falling and needs no budget. Otherwise
  /// one park step (any simulated-valid slide that re-enables a delivery) is
  /// allowed for the whole run; it costs at most two extra moves, one for
  /// the step itself and one for the later return leg.
  bool relief() {
    for (int v = 0; v < g->n; ++v) {
      if (!occ[v] || settled(v)) continue;
      for (int m : g->adj[v]) {
        if (occ[m] || dist[m][target_of[v]] != dist[v][target_of[v]] - 1)
          continue;
        TokenSet scratch = cur;
        if (apply_move(*g, r, Rule::TS, scratch, {v, m}).error !=
            MoveErrorKind::None)
          continue;
        emit({v, m});
        return true;
      }
    }
    if (parks > 0) return false;
    for (int v = 0; v < g->n; ++v) {
      if (!occ[v]) continue;
      for (int m : g->adj[v]) {
        if (occ[m]) continue;
        if (apply_move(*g, r, Rule::TS, cur, {v, m}).error !=
            MoveErrorKind::None)
          continue;
        SlideEngine probe = *this;
        probe.emit({v, m});
        if (!probe.deliver_pass(m)) continue;
        emit({v, m});
        ++parks;
        park_hold = m;
        return true;
      }
    }
    return false;
  }

  void run(long long budget) {
    long long iter = 0;
    const long long cap =
        4 * (budget + 2) * (g->n + 2) + 8 * (g->n + 2) + 64;
    while (remaining() > 0) {
      DRDSR_CHECK(++iter <= cap, "slide engine did not converge");
      if (deliver_pass(park_hold)) continue;
      if (park_hold != -1) {
        park_hold = -1;  // other tokens are done moving; release the park
        continue;
      }
      if (relief()) continue;
      DRDSR_CHECK(false, "slide engine wedged with cost " << remaining()
                                                          << " remaining");
    }
    DRDSR_CHECK(static_cast<long long>(moves.size()) <= budget + 2,
                "slide sequence exceeded the assignment bound plus two");
  }
};

}  // namespace

MstarResult mstar(const DrdsInstance& inst) {
  const TokenSet& s = inst.source;
  const TokenSet& t = inst.target;
  if (s.size() != t.size())
    throw std::invalid_argument(
        "mstar requires endpoint sets of equal size");
  MstarResult res;
  TokenSet diff;
  std::set_symmetric_difference(s.begin(), s.end(), t.begin(), t.end(),
                                std::back_inserter(diff));
  res.tj = static_cast<long long>(diff.size()) / 2;
  const int k = static_cast<int>(s.size());
  if (k == 0) {
    res.ts_finite = true;
    res.ts = 0;
    return res;
  }
  std::vector<std::vector<long long>> cost(k, std::vector<long long>(k));
  for (int i = 0; i < k; ++i) {
    const std::vector<int> d = bfs_distances(inst.graph, s[i]);
    for (int j = 0; j < k; ++j)
      cost[i][j] = d[t[j]] == kUnreachable ? kAssignBigM : d[t[j]];
  }
  const auto [assign, total] = hungarian(cost);
  (void)assign;
  res.ts_finite = total < kAssignBigM;
  res.ts = res.ts_finite ? total : 0;
  return res;
}

SolveResult ts_sequence_split(const DrdsInstance& inst) {
  DRDSR_CHECK(inst.rule == Rule::TS, "ts_sequence_split needs a TS instance");
  SolveResult res;
  if (inst.source.size() != inst.target.size()) {
    res.status = SolveStatus::NoSequence;
    return res;
  }
  res.status = SolveStatus::Sequence;
  res.seq.initial = inst.source;
  if (inst.source == inst.target) return res;
  DRDSR_CHECK(is_connected(inst.graph),
              "ts_sequence_split needs a connected graph");
  DRDSR_CHECK(recognize_split(inst.graph).has_value(),
              "ts_sequence_split needs a split graph");
  DRDSR_CHECK(inst.r >= 2, "ts_sequence_split needs r >= 2");

  const int k = static_cast<int>(inst.source.size());
  std::vector<std::vector<int>> dist(k);
  std::vector<std::vector<long long>> cost(k, std::vector<long long>(k));
  for (int i = 0; i < k; ++i) {
    const std::vector<int> d = bfs_distances(inst.graph, inst.source[i]);
    for (int j = 0; j < k; ++j) cost[i][j] = d[inst.target[j]];
  }
  const auto [assign, total] = hungarian(cost);
  std::vector<int> targets_in_order(k);
  for (int i = 0; i < k; ++i) targets_in_order[i] = inst.target[assign[i]];

  SlideEngine engine;
  engine.init(inst.graph, inst.r, inst.source, targets_in_order);
  engine.run(total);
  res.seq.moves = std::move(engine.moves);

  const VerifyResult check = verify_sequence(inst, res.seq.moves);
  DRDSR_CHECK(check.valid, "ts_sequence_split produced an invalid sequence at "
                               << check.index << ": " << check.reason);
  return res;
}

SolveResult tj_sequence_split(const DrdsInstance& inst) {
  DRDSR_CHECK(inst.rule == Rule::TJ, "tj_sequence_split needs a TJ instance");
  SolveResult res;
  if (inst.source.size() != inst.target.size()) {
    res.status = SolveStatus::NoSequence;
    return res;
  }
  res.status = SolveStatus::Sequence;
  res.seq.initial = inst.source;
  if (inst.source == inst.target) return res;
  DRDSR_CHECK(is_connected(inst.graph),
              "tj_sequence_split needs a connected graph");
  const std::optional<SplitPartition> part = recognize_split(inst.graph);
  DRDSR_CHECK(part.has_value(), "tj_sequence_split needs a split graph");
  DRDSR_CHECK(inst.r >= 2, "tj_sequence_split needs r >= 2");

  std::vector<char> in_clique(inst.graph.n, 0);
  for (int v : part->clique) in_clique[v] = 1;
  std::vector<char> in_target(inst.graph.n, 0);
  for (int v : inst.target) in_target[v] = 1;

  TokenSet src_extra, tgt_extra;
  std::set_difference(inst.source.begin(), inst.source.end(),
                      inst.target.begin(), inst.target.end(),
                      std::back_inserter(src_extra));
  std::set_difference(inst.target.begin(), inst.target.end(),
                      inst.source.begin(), inst.source.end(),
                      std::back_inserter(tgt_extra));
  const int m = static_cast<int>(src_extra.size());

  TokenSet cur = inst.source;
  auto emit = [&](int from, int to) {
    MoveOutcome out = apply_move(inst.graph, inst.r, Rule::TJ, cur, {from, to});
    DRDSR_CHECK(out.error == MoveErrorKind::None,
                "jump " << from << "->" << to << " rejected: "
                        << move_error_name(out.error));
    cur = std::move(out.result);
    res.seq.moves.push_back({from, to});
  };

  for (int i = 0; i < m; ++i) {
    MoveOutcome probe = apply_move(inst.graph, inst.r, Rule::TJ, cur,
                                   {src_extra[i], tgt_extra[i]});
    if (probe.error == MoveErrorKind::None) {
      cur = std::move(probe.result);
      res.seq.moves.push_back({src_extra[i], tgt_extra[i]});
      continue;
    }
    DRDSR_CHECK(probe.error == MoveErrorKind::BreaksDomination,
                "unexpected jump rejection: " << move_error_name(probe.error));
    // The direct pairing failed, so from here every remaining set must keep a
    // clique token. Prefer filling a clique target now (same total length);
    // otherwise borrow a clique vertex outside the target set, deliver the
    // rest and bring the borrowed token home last (one extra jump).
    int clique_target = -1;
    for (int j = i + 1; j < m; ++j) {
      if (in_clique[tgt_extra[j]]) {
        clique_target = j;
        break;
      }
    }
    if (clique_target >= 0) {
      emit(src_extra[i], tgt_extra[clique_target]);
      TokenSet rest_targets;
      for (int j = i; j < m; ++j)
        if (j != clique_target) rest_targets.push_back(tgt_extra[j]);
      std::sort(rest_targets.begin(), rest_targets.end());
      for (int j = i + 1; j < m; ++j)
        emit(src_extra[j], rest_targets[j - (i + 1)]);
    } else {
      int park = -1;
      for (int v : part->clique) {
        bool used = std::binary_search(cur.begin(), cur.end(), v);
        if (!used && !in_target[v]) {
          park = v;
          break;
        }
      }
      DRDSR_CHECK(park >= 0, "no free clique vertex available for parking");
      emit(src_extra[i], park);
      for (int j = i + 1; j < m; ++j) emit(src_extra[j], tgt_extra[j]);
      emit(park, tgt_extra[i]);
    }
    break;
  }

  DRDSR_CHECK(cur == inst.target, "jump schedule missed the target set");
  DRDSR_CHECK(static_cast<long long>(res.seq.moves.size()) <= m + 1,
              "jump sequence exceeded the exchange bound plus one");
  const VerifyResult check = verify_sequence(inst, res.seq.moves);
  DRDSR_CHECK(check.valid, "tj_sequence_split produced an invalid sequence at "
                               << check.index << ": " << check.reason);
  return res;
}

SolveResult solve_split(const DrdsInstance& inst) {
  SolveResult res;  // NotApplicable by default
  if (inst.r < 2) return res;
  if (inst.graph.n > 0) {
    if (!recognize_split(inst.graph).has_value()) return res;
    if (!is_connected(inst.graph)) return res;
  }
  return inst.rule == Rule::TS ? ts_sequence_split(inst)
                               : tj_sequence_split(inst);
}

}  // namespace drdsr
