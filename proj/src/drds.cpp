#include "drdsr/drds.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "drdsr/check.hpp"
#include "drdsr/routing.hpp"

namespace drdsr {

std::string move_error_name(MoveErrorKind kind) {
  switch (kind) {
    case MoveErrorKind::None: return "None";
    case MoveErrorKind::OutOfRange: return "OutOfRange";
    case MoveErrorKind::NotAToken: return "NotAToken";
    case MoveErrorKind::Occupied: return "Occupied";
    case MoveErrorKind::NotAdjacent: return "NotAdjacent";
    case MoveErrorKind::BreaksDomination: return "BreaksDomination";
  }
  return "None";
}

bool is_token_set(const Graph& g, const TokenSet& d) {
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0 || d[i] >= g.n) return false;
    if (i > 0 && d[i - 1] >= d[i]) return false;
  }
  return true;
}

bool is_drds(const Graph& g, int r, const TokenSet& d) {
  DRDSR_CHECK(r >= 1, "radius must be at least 1");
  DRDSR_CHECK(is_token_set(g, d), "malformed token set");
  if (d.empty()) return g.n == 0;
  auto dist = multi_bfs_distances(g, d, r);
  for (int v = 0; v < g.n; ++v)
    if (dist[v] == kUnreachable) return false;
  return true;
}

MoveOutcome apply_move(const Graph& g, int r, Rule rule, const TokenSet& d,
                       Move mv) {
  DRDSR_CHECK(is_token_set(g, d), "malformed token set");
  if (mv.from < 0 || mv.from >= g.n || mv.to < 0 || mv.to >= g.n)
    return {MoveErrorKind::OutOfRange, {}};
  if (!std::binary_search(d.begin(), d.end(), mv.from))
    return {MoveErrorKind::NotAToken, {}};
  if (std::binary_search(d.begin(), d.end(), mv.to))
    return {MoveErrorKind::Occupied, {}};
  if (rule == Rule::TS && !g.has_edge(mv.from, mv.to))
    return {MoveErrorKind::NotAdjacent, {}};
  TokenSet next;
  next.reserve(d.size());
  for (int v : d)
    if (v != mv.from) next.push_back(v);
  next.insert(std::lower_bound(next.begin(), next.end(), mv.to), mv.to);
  if (!is_drds(g, r, next)) return {MoveErrorKind::BreaksDomination, {}};
  return {MoveErrorKind::None, std::move(next)};
}

DrdsInstance::DrdsInstance(Graph graph_in, int r_in, Rule rule_in,
                           TokenSet source_in, TokenSet target_in)
    : graph(std::move(graph_in)),
      r(r_in),
      rule(rule_in),
      source(std::move(source_in)),
      target(std::move(target_in)) {
  if (r < 1) throw std::invalid_argument("radius must be at least 1");
  if (!is_token_set(graph, source))
    throw std::invalid_argument("source is not a valid token set");
  if (!is_token_set(graph, target))
    throw std::invalid_argument("target is not a valid token set");
  if (!is_drds(graph, r, source))
    throw std::invalid_argument("source does not dominate within distance r");
  if (!is_drds(graph, r, target))
    throw std::invalid_argument("target does not dominate within distance r");
}

DrdsInstance instance_from_parsed(const ParsedInstance& parsed) {
  if (!parsed.r) throw std::invalid_argument("instance is missing an r line");
  if (!parsed.rule)
    throw std::invalid_argument("instance is missing a rule line");
  if (!parsed.source)
    throw std::invalid_argument("instance is missing an S line");
  if (!parsed.target)
    throw std::invalid_argument("instance is missing a T line");
  return DrdsInstance(parsed.graph, *parsed.r, *parsed.rule, *parsed.source,
                      *parsed.target);
}

VerifyResult verify_sequence(const DrdsInstance& inst,
                             const std::vector<Move>& moves) {
  TokenSet cur = inst.source;
  for (size_t i = 0; i < moves.size(); ++i) {
    MoveOutcome step = apply_move(inst.graph, inst.r, inst.rule, cur, moves[i]);
    if (step.error != MoveErrorKind::None)
      return {false, static_cast<int>(i), move_error_name(step.error)};
    cur = std::move(step.result);
  }
  if (cur != inst.target)
    return {false, static_cast<int>(moves.size()), "FinalMismatch"};
  return {true, -1, ""};
}

std::vector<Move> parse_moves(std::istream& in) {
  std::vector<Move> moves;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    std::string key;
    if (!(ss >> key)) continue;
    if (key != "mv")
      throw ParseError(lineno, "expected move line 'mv <from> <to>'");
    long long from, to;
    if (!(ss >> from >> to))
      throw ParseError(lineno, "expected move line 'mv <from> <to>'");
    std::string extra;
    if (ss >> extra) throw ParseError(lineno, "trailing tokens on move line");
    if (from < 0 || from > 1000000000 || to < 0 || to > 1000000000)
      throw ParseError(lineno, "move endpoint out of range");
    moves.push_back({static_cast<int>(from), static_cast<int>(to)});
  }
  return moves;
}

std::vector<Move> parse_moves_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_moves(ss);
}

std::string format_moves(const std::vector<Move>& moves) {
  std::ostringstream out;
  for (const Move& mv : moves) out << "mv " << mv.from << " " << mv.to << "\n";
  return out.str();
}

namespace {

struct Components {
  int count = 0;
  std::vector<int> id;        // vertex -> component
  std::vector<int> diameter;  // per component
};

Components component_diameters(const Graph& g) {
  Components comps;
  comps.id.assign(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    if (comps.id[v] != -1) continue;
    int cid = comps.count++;
    auto dist = bfs_distances(g, v);
    for (int w = 0; w < g.n; ++w)
      if (dist[w] != kUnreachable) comps.id[w] = cid;
  }
  comps.diameter.assign(comps.count, 0);
  for (int v = 0; v < g.n; ++v) {
    auto dist = bfs_distances(g, v);
    for (int w = 0; w < g.n; ++w)
      if (dist[w] != kUnreachable)
        comps.diameter[comps.id[v]] =
            std::max(comps.diameter[comps.id[v]], dist[w]);
  }
  return comps;
}

std::vector<int> per_component_count(const Components& comps,
                                     const TokenSet& d) {
  std::vector<int> cnt(comps.count, 0);
  for (int v : d) ++cnt[comps.id[v]];
  return cnt;
}

}  // namespace

SolveResult solve_bounded_diameter(const DrdsInstance& inst) {
  const Graph& g = inst.graph;
  Components comps = component_diameters(g);
  for (int d : comps.diameter)
    if (d > inst.r) return {SolveStatus::NotApplicable, {}};

  SolveResult res;
  res.seq.initial = inst.source;
  if (inst.source.size() != inst.target.size())
    return {SolveStatus::NoSequence, {}};

  if (inst.rule == Rule::TJ) {
    // Any token set with one token per component dominates, so only the
    // surplus/deficit balance between components matters.
    TokenSet cur = inst.source;
    auto cnt = per_component_count(comps, cur);
    auto want = per_component_count(comps, inst.target);
    auto in_set = [](const TokenSet& s, int v) {
      return std::binary_search(s.begin(), s.end(), v);
    };
    auto move_token = [&cur](int from, int to) {
      cur.erase(std::find(cur.begin(), cur.end(), from));
      cur.insert(std::lower_bound(cur.begin(), cur.end(), to), to);
    };
    // Rebalance: ship tokens from surplus components to deficit components;
    // the donor keeps at least want >= 1 tokens throughout.
    while (true) {
      int from = -1, to = -1;
      for (int v : cur) {
        if (cnt[comps.id[v]] > want[comps.id[v]] && !in_set(inst.target, v)) {
          from = v;
          break;
        }
      }
      if (from == -1) break;
      for (int v : inst.target) {
        if (cnt[comps.id[v]] < want[comps.id[v]] && !in_set(cur, v)) {
          to = v;
          break;
        }
      }
      DRDSR_CHECK(to != -1, "surplus without a matching deficit");
      res.seq.moves.push_back({from, to});
      --cnt[comps.id[from]];
      ++cnt[comps.id[to]];
      move_token(from, to);
    }
    // Within components, pair leftover misplaced tokens with free targets.
    while (true) {
      int from = -1, to = -1;
      for (int v : cur) {
        if (!in_set(inst.target, v)) {
          from = v;
          break;
        }
      }
      if (from == -1) break;
      for (int v : inst.target) {
        if (comps.id[v] == comps.id[from] && !in_set(cur, v)) {
          to = v;
          break;
        }
      }
      DRDSR_CHECK(to != -1, "misplaced token without a free target");
      res.seq.moves.push_back({from, to});
      move_token(from, to);
    }
    DRDSR_CHECK(cur == inst.target, "token jumping left a mismatch");
  } else {
    // Sliding cannot change per-component counts.
    auto cnt = per_component_count(comps, inst.source);
    auto want = per_component_count(comps, inst.target);
    if (cnt != want) return {SolveStatus::NoSequence, {}};
    int k = static_cast<int>(inst.source.size());
    std::vector<std::vector<long long>> cost(k, std::vector<long long>(k));
    std::vector<std::vector<int>> dists(k);
    for (int i = 0; i < k; ++i)
      dists[i] = bfs_distances(g, inst.source[i]);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int d = dists[i][inst.target[j]];
        cost[i][j] = d == kUnreachable ? kAssignBigM : d;
      }
    auto [assign, total] = hungarian(cost);
    DRDSR_CHECK(total < kAssignBigM,
                "equal per-component counts but no feasible assignment");
    std::vector<int> target_of(g.n, -1);
    for (int i = 0; i < k; ++i)
      target_of[inst.source[i]] = inst.target[assign[i]];
    free_ts_route(g, std::move(target_of), -1, res.seq.moves);
  }

  VerifyResult check = verify_sequence(inst, res.seq.moves);
  DRDSR_CHECK(check.valid, "bounded-diameter sequence failed verification at "
                               << check.index << ": " << check.reason);
  res.status = SolveStatus::Sequence;
  return res;
}

}  // namespace drdsr
