#include "drdsr/tree_solver.hpp"

#include <algorithm>

#include "drdsr/check.hpp"

namespace drdsr {

RootedTree root_tree(const Graph& g, int root) {
  DRDSR_CHECK(root >= 0 && root < g.n, "root " << root << " out of range");
  DRDSR_CHECK(g.m == g.n - 1, "graph is not a tree (m != n - 1)");
  RootedTree t;
  t.root = root;
  t.parent.assign(g.n, -1);
  t.children.assign(g.n, {});
  t.order.reserve(g.n);
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    t.order.push_back(v);
    for (int w : g.adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        t.parent[w] = v;
        t.children[v].push_back(w);
      }
    }
    // adjacency lists are sorted, so children are ascending; push reversed
    // to pop them in ascending order.
    for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it)
      stack.push_back(*it);
  }
  DRDSR_CHECK(static_cast<int>(t.order.size()) == g.n,
              "graph is not a tree (disconnected)");
  return t;
}

TreeDpResult min_drds_tree(const Graph& g, int r, int root) {
  DRDSR_CHECK(r >= 1, "r must be positive");
  RootedTree t = root_tree(g, root);
  TreeDpResult res;
  res.h.assign(g.n, 0);
  res.delta.assign(g.n, kTreeInf);
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    int v = *it;
    for (int w : t.children[v]) res.h[v] = std::max(res.h[v], res.h[w] + 1);
  }

  // Greedy bottom-up pass. A subtree whose surviving part has height exactly
  // r gets its root selected and drops out (h becomes -1); a subtree already
  // within reach of a selected vertex drops out without a selection. The
  // recursion only descends into children whose subtree is still tall enough
  // to need attention.
  std::vector<int> ret(g.n, kTreeInf);
  struct Frame {
    int v;
    size_t ci;
  };
  std::vector<Frame> st;
  auto enter = [&](int v) {
    if (res.h[v] == r) {
      res.chosen.push_back(v);
      res.delta[v] = 0;
      res.h[v] = -1;
      ret[v] = 0;
      return true;  // handled without descending
    }
    st.push_back({v, 0});
    return false;
  };
  bool root_done = enter(root);
  while (!st.empty()) {
    int v = st.back().v;
    const auto& kids = t.children[v];
    if (st.back().ci < kids.size()) {
      int w = kids[st.back().ci++];
      if (res.h[w] < r) continue;  // short subtree, parent will cover it
      if (enter(w)) res.delta[v] = std::min(res.delta[v], 1);
      continue;
    }
    st.pop_back();
    int hh = 0;
    for (int w : kids) hh = std::max(hh, res.h[w] + 1);
    res.h[v] = hh;
    DRDSR_CHECK(hh <= r, "surviving subtree too tall after child pass");
    if (res.delta[v] < kTreeInf && hh + res.delta[v] <= r) {
      ret[v] = res.delta[v];
      res.h[v] = -1;
    } else if (hh == r) {
      res.chosen.push_back(v);
      res.delta[v] = 0;
      res.h[v] = -1;
      ret[v] = 0;
    } else {
      res.delta[v] = kTreeInf;
      ret[v] = kTreeInf;
    }
    if (!st.empty()) {
      int p = st.back().v;
      if (ret[v] < kTreeInf)
        res.delta[p] = std::min(res.delta[p], ret[v] + 1);
    }
  }
  if (!root_done && ret[root] == kTreeInf) res.chosen.push_back(root);

  TokenSet check = res.chosen;
  std::sort(check.begin(), check.end());
  DRDSR_CHECK(is_drds(g, r, check), "tree DP produced a non-dominating set");
  return res;
}

CanonicalPartition build_partition(const Graph& g, int r,
                                   const TreeDpResult& dp, int root) {
  (void)r;
  RootedTree t = root_tree(g, root);
  CanonicalPartition part;
  part.canonical = dp.chosen;
  part.cell_of.assign(g.n, -1);
  std::vector<char> alive(g.n, 1);
  for (size_t i = 0; i < dp.chosen.size(); ++i) {
    int v = dp.chosen[i];
    DRDSR_CHECK(alive[v], "canonical vertex consumed by an earlier cell");
    std::vector<int> cell;
    std::vector<int> stack{v};
    alive[v] = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      cell.push_back(x);
      part.cell_of[x] = static_cast<int>(i);
      for (int w : t.children[x]) {
        if (alive[w]) {
          alive[w] = 0;
          stack.push_back(w);
        }
      }
    }
    std::sort(cell.begin(), cell.end());
    part.cell.push_back(std::move(cell));
  }
  // When the root itself was never selected, the piece above the last
  // selected vertex is left over; it joins the last cell, which thereby
  // becomes the cell containing the root.
  std::vector<int> leftover;
  for (int v = 0; v < g.n; ++v)
    if (alive[v]) leftover.push_back(v);
  if (!leftover.empty()) {
    DRDSR_CHECK(!part.cell.empty(), "partition with no cells");
    DRDSR_CHECK(alive[root], "leftover piece does not contain the root");
    int last = static_cast<int>(part.cell.size()) - 1;
    for (int v : leftover) {
      part.cell_of[v] = last;
      part.cell[last].push_back(v);
    }
    std::sort(part.cell[last].begin(), part.cell[last].end());
  }
  for (int v = 0; v < g.n; ++v)
    DRDSR_CHECK(part.cell_of[v] >= 0, "vertex " << v << " missing from cells");
  return part;
}

namespace {

// Applies mv to cur, insisting it is a legal move.
void apply_checked(const DrdsInstance& inst, TokenSet& cur, Move mv,
                   std::vector<Move>& out) {
  MoveOutcome o = apply_move(inst.graph, inst.r, inst.rule, cur, mv);
  DRDSR_CHECK(o.error == MoveErrorKind::None,
              "tree solver emitted a bad move " << mv.from << " -> " << mv.to
                                                << ": "
                                                << move_error_name(o.error));
  cur = o.result;
  out.push_back(mv);
}

// Jumps one token to every unoccupied canonical vertex, cell by cell in
// construction order, and returns the moves used.
std::vector<Move> to_canonical(const DrdsInstance& inst,
                               const CanonicalPartition& part, TokenSet& cur) {
  std::vector<Move> moves;
  for (size_t i = 0; i < part.canonical.size(); ++i) {
    int v = part.canonical[i];
    if (std::binary_search(cur.begin(), cur.end(), v)) continue;
    int x = -1;
    for (int tok : cur) {
      if (part.cell_of[tok] == static_cast<int>(i)) {
        x = tok;
        break;
      }
    }
    DRDSR_CHECK(x >= 0, "token set misses canonical cell " << i);
    apply_checked(inst, cur, {x, v}, moves);
  }
  return moves;
}

}  // namespace

SolveResult tj_sequence_tree(const DrdsInstance& inst) {
  DRDSR_CHECK(inst.rule == Rule::TJ, "tree solver handles TJ only");
  SolveResult res;
  if (inst.source.size() != inst.target.size()) {
    res.status = SolveStatus::NoSequence;
    return res;
  }
  res.status = SolveStatus::Sequence;
  res.seq.initial = inst.source;
  if (inst.source == inst.target) return res;

  TreeDpResult dp = min_drds_tree(inst.graph, inst.r, 0);
  CanonicalPartition part = build_partition(inst.graph, inst.r, dp, 0);

  TokenSet cur = inst.source;
  std::vector<Move> moves = to_canonical(inst, part, cur);

  TokenSet tgt = inst.target;
  std::vector<Move> tail = to_canonical(inst, part, tgt);

  // Both sides now hold every canonical vertex, so any order of direct
  // jumps between the leftovers keeps the set dominating.
  TokenSet from_extra, to_extra;
  std::set_difference(cur.begin(), cur.end(), tgt.begin(), tgt.end(),
                      std::back_inserter(from_extra));
  std::set_difference(tgt.begin(), tgt.end(), cur.begin(), cur.end(),
                      std::back_inserter(to_extra));
  DRDSR_CHECK(from_extra.size() == to_extra.size(), "extras out of balance");
  for (size_t i = 0; i < from_extra.size(); ++i)
    apply_checked(inst, cur, {from_extra[i], to_extra[i]}, moves);

  for (auto it = tail.rbegin(); it != tail.rend(); ++it)
    apply_checked(inst, cur, {it->to, it->from}, moves);

  DRDSR_CHECK(cur == inst.target, "tree solver missed the target set");
  res.seq.moves = std::move(moves);
  VerifyResult vr = verify_sequence(inst, res.seq.moves);
  DRDSR_CHECK(vr.valid, "tree solver sequence failed re-verification");
  return res;
}

}  // namespace drdsr
