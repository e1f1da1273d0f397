#pragma once

#include <utility>
#include <vector>

#include "drdsr/drds.hpp"

namespace drdsr {

/// Cost used for forbidden assignment pairs (for example cross-component
/// token/target pairs). Large enough that any feasible assignment beats any
/// infeasible one, small enough that sums of n of them cannot overflow.
inline constexpr long long kAssignBigM = 1000000000000000LL;

/// Minimum-cost perfect assignment on a square cost matrix. Returns the
/// row -> column assignment and the total cost. Deterministic for tied
/// optima. Costs must be non-negative.
std::pair<std::vector<int>, long long> hungarian(
    const std::vector<std::vector<long long>>& cost);

/// Lexicographically least shortest s-t path, optionally avoiding one
/// vertex. Returns the vertex sequence including both endpoints, or an empty
/// vector when t is unreachable (or an endpoint equals `forbidden`).
std::vector<int> lex_shortest_path(const Graph& g, int s, int t,
                                   int forbidden = -1);

/// Slides every token to its assigned target assuming free movement (any
/// intermediate token set is acceptable). target_of[v] is the target vertex
/// of the token on v, or -1 when v is unoccupied; targets must be distinct
/// and the assignment must be minimum-cost over the token set (each emitted
/// slide then reduces the total remaining distance by exactly one). When a
/// token's lex-least shortest path is blocked, the blocker closest to the
/// target takes over the delivery and the two tokens exchange targets.
/// Appends exactly sum-of-distances moves to out; distances are taken in
/// g minus `forbidden` when that is a vertex.
void free_ts_route(const Graph& g, std::vector<int> target_of, int forbidden,
                   std::vector<Move>& out);

}  // namespace drdsr
