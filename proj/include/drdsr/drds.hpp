#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "drdsr/graph.hpp"

namespace drdsr {

/// Token positions, kept sorted ascending with no duplicates.
using TokenSet = std::vector<int>;

struct Move {
  int from;
  int to;
  friend bool operator==(const Move& a, const Move& b) {
    return a.from == b.from && a.to == b.to;
  }
};

/// Reasons a move can be rejected, in the order they are checked.
enum class MoveErrorKind {
  None,
  OutOfRange,
  NotAToken,
  Occupied,
  NotAdjacent,       // TS only
  BreaksDomination,
};

std::string move_error_name(MoveErrorKind kind);

struct MoveOutcome {
  MoveErrorKind error;
  TokenSet result;  // populated only when error == None
};

/// True when d is sorted ascending, duplicate-free and within [0, g.n).
bool is_token_set(const Graph& g, const TokenSet& d);

/// True when every vertex of g is within distance r of some vertex of d.
/// The empty set qualifies only for the empty graph.
bool is_drds(const Graph& g, int r, const TokenSet& d);

/// Validates and applies a single move under the given rule. The move is
/// checked in MoveErrorKind order; the result must again be a distance-r
/// dominating set.
MoveOutcome apply_move(const Graph& g, int r, Rule rule, const TokenSet& d,
                       Move mv);

/// A reconfiguration problem instance. The constructor validates that
/// r >= 1, that both endpoints are proper token sets, and that both are
/// distance-r dominating sets; it throws std::invalid_argument otherwise.
/// Differing endpoint sizes are allowed (solvers answer NoSequence).
struct DrdsInstance {
  Graph graph;
  int r;
  Rule rule;
  TokenSet source;
  TokenSet target;

  DrdsInstance(Graph graph, int r, Rule rule, TokenSet source,
               TokenSet target);
};

/// Builds an instance from a parsed file; r, rule, S and T must all be
/// present. Throws std::invalid_argument when one is missing.
DrdsInstance instance_from_parsed(const ParsedInstance& parsed);

struct ReconfSequence {
  TokenSet initial;
  std::vector<Move> moves;
};

struct VerifyResult {
  bool valid;
  int index;           // failing move index; moves.size() for a final mismatch
  std::string reason;  // MoveErrorKind name or "FinalMismatch"
};

/// Replays moves from inst.source under inst.rule and checks the final set
/// equals inst.target.
VerifyResult verify_sequence(const DrdsInstance& inst,
                             const std::vector<Move>& moves);

/// Move list format: one "mv <from> <to>" per line, '#' comments allowed.
std::vector<Move> parse_moves(std::istream& in);
std::vector<Move> parse_moves_text(const std::string& text);
std::string format_moves(const std::vector<Move>& moves);

enum class SolveStatus { Sequence, NoSequence, NotApplicable };

struct SolveResult {
  SolveStatus status = SolveStatus::NotApplicable;
  ReconfSequence seq;  // populated when status == Sequence
};

/// Solver for instances whose components all have diameter <= r. There a
/// token set dominates iff every component holds a token, so tokens move
/// freely; the produced sequence has minimum length (the assignment optimum
/// for TS, half the symmetric difference for TJ). Returns NoSequence when
/// endpoint sizes or per-component counts (TS) make the target unreachable,
/// NotApplicable when some component diameter exceeds r.
SolveResult solve_bounded_diameter(const DrdsInstance& inst);

}  // namespace drdsr
