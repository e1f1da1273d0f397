// Acceptance gate: ten numbered checks, one PASS/FAIL line each, nonzero
// exit if anything fails. Each check is self-contained and seeded, so a
// failure reproduces by running the binary again.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "drdsr/drds.hpp"
#include "drdsr/graph.hpp"
#include "drdsr/oracle.hpp"
#include "drdsr/reductions.hpp"
#include "drdsr/split_solver.hpp"
#include "drdsr/tree_solver.hpp"
#include "util.hpp"

using namespace drdsr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Outcome fail(std::string what) { return {false, std::move(what)}; }

// 1. Tree solver finds a true minimum on 200 seeded random trees.
Outcome check_tree_minimality() {
  const auto t0 = std::chrono::steady_clock::now();
  for (int seed = 0; seed < 200; ++seed) {
    const int n = 2 + seed % 11;
    const int r = 1 + seed % 3;
    const Graph g = gen_random_tree(n, 10000 + seed);
    const GammaResult gr = gamma_r(g, r);
    if (gr.limit_exceeded) return fail("gamma enumeration hit its limit");
    const auto dp = min_drds_tree(g, r, 0);
    if (static_cast<int>(dp.chosen.size()) != gr.gamma) {
      std::ostringstream os;
      os << "seed " << seed << ": got " << dp.chosen.size() << ", minimum is "
         << gr.gamma;
      return fail(os.str());
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 10.0) return fail("took " + std::to_string(dt) + "s");
  return {};
}

// 2. Every dominating set meets every canonical cell on 50 random trees.
Outcome check_partition() {
  for (int seed = 0; seed < 50; ++seed) {
    const int n = 3 + seed % 8;
    const Graph g = gen_random_tree(n, 20000 + seed);
    const auto dp = min_drds_tree(g, 2, 0);
    const auto part = build_partition(g, 2, dp, 0);
    for (const TokenSet& d : testutil::all_drds(g, 2)) {
      for (const auto& cell : part.cell) {
        bool hit = false;
        for (int v : cell)
          if (std::binary_search(d.begin(), d.end(), v)) hit = true;
        if (!hit) {
          std::ostringstream os;
          os << "seed " << seed << ": a dominating set misses a cell";
          return fail(os.str());
        }
      }
    }
  }
  return {};
}

// 3. Tree jump sequences are valid, refuse size mismatches, and agree with
//    exhaustive reachability.
Outcome check_tree_tj() {
  std::mt19937 rng(31);
  for (int seed = 0; seed < 50; ++seed) {
    const int n = 3 + seed % 8;
    const Graph g = gen_random_tree(n, 20000 + seed);
    const GammaResult gr = gamma_r(g, 2);
    std::vector<TokenSet> pool;
    for (int k = gr.gamma; k <= std::min(n, gr.gamma + 1); ++k)
      for (auto& d : testutil::all_drds_of_size(g, 2, k)) pool.push_back(d);
    if (pool.size() < 2) continue;
    for (int trial = 0; trial < 6; ++trial) {
      const TokenSet& a = pool[rng() % pool.size()];
      const TokenSet& b = pool[rng() % pool.size()];
      const DrdsInstance inst(g, 2, Rule::TJ, a, b);
      const SolveResult res = tj_sequence_tree(inst);
      if (a.size() != b.size()) {
        if (res.status != SolveStatus::NoSequence)
          return fail("size mismatch not refused");
        continue;
      }
      if (res.status != SolveStatus::Sequence)
        return fail("no sequence for an equal-size pair");
      const VerifyResult vr = verify_sequence(inst, res.seq.moves);
      if (!vr.valid) {
        std::ostringstream os;
        os << "seed " << seed << ": invalid move " << vr.index << " ("
           << vr.reason << ")";
        return fail(os.str());
      }
      const OracleResult ores = oracle_shortest(inst);
      if (!ores.limit_exceeded && !ores.reachable)
        return fail("solver found a sequence the search says cannot exist");
    }
  }
  return {};
}

// 4. Split solver lengths sandwich between the assignment bound and bound
//    plus slack, with exhaustive optima in between.
Outcome check_split_sandwich() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(41);
  int checked = 0;
  for (int seed = 0; seed < 100; ++seed) {
    const int n = 4 + seed % 9;
    const Graph g = gen_random_split_graph(n, 30000 + seed);
    const GammaResult gr = gamma_r(g, 2);
    std::vector<TokenSet> pool;
    for (int k = gr.gamma; k <= std::min(n, gr.gamma + 1); ++k)
      for (auto& d : testutil::all_drds_of_size(g, 2, k)) pool.push_back(d);
    if (pool.size() < 2) continue;
    for (int trial = 0; trial < 3; ++trial) {
      const TokenSet a = pool[rng() % pool.size()];
      TokenSet b = pool[rng() % pool.size()];
      if (a.size() != b.size()) b = a;
      const DrdsInstance ts_inst(g, 2, Rule::TS, a, b);
      const MstarResult ms = mstar(ts_inst);
      const SolveResult ts = ts_sequence_split(ts_inst);
      if (ts.status != SolveStatus::Sequence) return fail("TS gave up");
      const long long ts_len = static_cast<long long>(ts.seq.moves.size());
      const OracleResult ts_opt = oracle_shortest(ts_inst);
      if (ts_opt.limit_exceeded) return fail("TS search hit its limit");
      if (!ts_opt.reachable) return fail("TS pair unreachable");
      if (!(ms.ts <= ts_opt.opt && ts_opt.opt <= ts_len &&
            ts_len <= ms.ts + 2)) {
        std::ostringstream os;
        os << "TS seed " << seed << ": bound " << ms.ts << " opt " << ts_opt.opt
           << " len " << ts_len;
        return fail(os.str());
      }

      const DrdsInstance tj_inst(g, 2, Rule::TJ, a, b);
      const SolveResult tj = tj_sequence_split(tj_inst);
      if (tj.status != SolveStatus::Sequence) return fail("TJ gave up");
      const long long tj_len = static_cast<long long>(tj.seq.moves.size());
      const OracleResult tj_opt = oracle_shortest(tj_inst);
      if (tj_opt.limit_exceeded) return fail("TJ search hit its limit");
      if (!tj_opt.reachable) return fail("TJ pair unreachable");
      if (!(ms.tj <= tj_opt.opt && tj_opt.opt <= tj_len &&
            tj_len <= ms.tj + 1)) {
        std::ostringstream os;
        os << "TJ seed " << seed << ": bound " << ms.tj << " opt " << tj_opt.opt
           << " len " << tj_len;
        return fail(os.str());
      }
      ++checked;
    }
  }
  if (checked < 100) return fail("too few usable pairs");
  const double dt = seconds_since(t0);
  if (dt >= 60.0) return fail("took " + std::to_string(dt) + "s");
  return {};
}

// 5. The worst-case generators are tight for the exhaustive optimum.
Outcome check_extremal_tightness() {
  for (int k = 2; k <= 3; ++k) {
    const ReductionOutput out = gen_extremal_ts_split(k);
    const OracleResult res = oracle_shortest(out.instance);
    if (res.limit_exceeded || !res.reachable)
      return fail("sliding worst case unsolved");
    if (res.opt != 2 * k) {
      std::ostringstream os;
      os << "sliding k=" << k << ": optimum " << res.opt << ", wanted "
         << 2 * k;
      return fail(os.str());
    }
  }
  const ReductionOutput out = gen_extremal_tj_split(2);
  const OracleResult res = oracle_shortest(out.instance);
  const MstarResult ms = mstar(out.instance);
  if (res.limit_exceeded || !res.reachable || res.opt != 3 ||
      res.opt != ms.tj + 1)
    return fail("jump worst case optimum is not the pairing bound plus one");
  return {};
}

// 6. Domination within distance r is domination in the r-th power.
Outcome check_power_equivalence() {
  std::mt19937 rng(61);
  for (int seed = 0; seed < 100; ++seed) {
    const int n = 2 + seed % 9;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.push_back({u, v});
    const Graph g = Graph::from_edges(n, edges);
    const int r = 2 + seed % 2;
    const Graph p = graph_power(g, r);
    for (int trial = 0; trial < 50; ++trial) {
      TokenSet d;
      for (int v = 0; v < n; ++v)
        if (rng() % 2) d.push_back(v);
      if (is_drds(g, r, d) != is_drds(p, 1, d)) {
        std::ostringstream os;
        os << "seed " << seed << " trial " << trial << ": power disagreement";
        return fail(os.str());
      }
    }
  }
  return {};
}

const std::vector<std::pair<std::string, Graph>>& cover_bases() {
  static const std::vector<std::pair<std::string, Graph>> bases = {
      {"k2", Graph::from_edges(2, {{0, 1}})},
      {"p3", Graph::from_edges(3, {{0, 1}, {1, 2}})},
      {"p4", Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})},
      {"c4", Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
      {"c5", Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})},
      {"k3", Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}})},
  };
  return bases;
}

// 7. Cover reconfiguration on the base graph matches token reconfiguration
//    on each reduced instance, for every pair of minimum covers, both rules.
Outcome check_reduction_soundness() {
  const auto t0 = std::chrono::steady_clock::now();
  OracleLimits limits;
  limits.max_n = 40;
  limits.max_states = 1u << 22;
  for (const auto& [name, base] : cover_bases()) {
    const VertexCoverResult mvc = min_vertex_cover(base);
    if (mvc.limit_exceeded) return fail("cover enumeration hit its limit");
    for (const Rule rule : {Rule::TS, Rule::TJ}) {
      for (const auto& cs : mvc.covers) {
        for (const auto& ct : mvc.covers) {
          const bool base_reach = min_vcr_reachable(base, cs, ct, rule);
          for (int kind = 0; kind < 3; ++kind) {
            const ReductionOutput out =
                kind == 0   ? reduce_vc_planar(base, 2, rule, cs, ct)
                : kind == 1 ? reduce_vc_chordal(base, 2, rule, cs, ct)
                            : reduce_vc_bipartite(base, 2, rule, cs, ct);
            const OracleResult res = oracle_shortest(out.instance, limits);
            if (res.limit_exceeded) return fail(name + ": search limit");
            if (res.reachable != base_reach) {
              std::ostringstream os;
              os << name << " kind " << kind << " rule "
                 << rule_name(rule) << ": reduction says "
                 << (res.reachable ? "yes" : "no") << ", base says "
                 << (base_reach ? "yes" : "no");
              return fail(os.str());
            }
          }
        }
      }
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 300.0) return fail("took " + std::to_string(dt) + "s");
  return {};
}

// 8. Structural promises of the reductions: bipartite outputs are bipartite
//    with domination number tau+1, gadget outputs have degree at most three
//    and valid standard placements, and a hub move from a cover-plus-hub
//    configuration is always rejected.
Outcome check_reduction_structure() {
  for (const auto& [name, base] : cover_bases()) {
    const VertexCoverResult mvc = min_vertex_cover(base);
    const auto& c = mvc.covers.front();
    const ReductionOutput out = reduce_vc_bipartite(base, 2, Rule::TS, c, c);
    if (!classify(out.instance.graph).bipartite)
      return fail(name + ": output not bipartite");
    const GammaResult gr = gamma_r(out.instance.graph, 2, 40);
    if (gr.limit_exceeded) return fail(name + ": domination search limit");
    if (gr.gamma != mvc.tau + 1) {
      std::ostringstream os;
      os << name << ": domination number " << gr.gamma << ", wanted "
         << mvc.tau + 1;
      return fail(os.str());
    }
  }

  const NclInstance ors = parse_ncl_text(
      "ncl 2 3\nv 0 OR\nv 1 OR\n"
      "e 0 0 1 2 uv\ne 1 0 1 2 vu\ne 2 0 1 2 uv\n");
  const NclInstance ands = parse_ncl_text(
      "ncl 2 3\nv 0 AND\nv 1 AND\n"
      "e 0 0 1 2 uv\ne 1 0 1 1 vu\ne 2 0 1 1 vu\n");
  for (const NclInstance& ncl : {ors, ands}) {
    for (int r = 1; r <= 2; ++r) {
      const NclReduction red = build_ncl_reduction(ncl.graph, r);
      for (int v = 0; v < red.graph.n; ++v)
        if (red.graph.degree(v) > 3) return fail("gadget degree above three");
      for (int mask = 0; mask < 8; ++mask) {
        const NclConfig cfg{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
        if (!is_valid_ncl_config(ncl.graph, cfg)) continue;
        const TokenSet place = standard_placement(red, cfg);
        if (!is_drds(red.graph, r, place))
          return fail("standard placement does not dominate");
      }
    }
  }

  // Hub immobility on the smallest instance: from any configuration that is
  // a minimum cover plus the hub, every move of the hub token is rejected,
  // under both rules, for every conceivable destination.
  const Graph k2 = cover_bases()[0].second;
  const VertexCoverResult k2c = min_vertex_cover(k2);
  const ReductionOutput out = reduce_vc_bipartite(
      k2, 2, Rule::TS, k2c.covers.front(), k2c.covers.back());
  const Graph& g = out.instance.graph;
  const int hub = 5;  // first vertex after the three subdivision points
  for (const auto& cover : k2c.covers) {
    TokenSet d = cover;
    d.push_back(hub);
    std::sort(d.begin(), d.end());
    if (!is_drds(g, 2, d)) return fail("cover plus hub does not dominate");
    for (const Rule rule : {Rule::TS, Rule::TJ}) {
      for (int to = 0; to < g.n; ++to) {
        if (to == hub) continue;
        const MoveOutcome mo = apply_move(g, 2, rule, d, {hub, to});
        if (mo.error == MoveErrorKind::None) {
          std::ostringstream os;
          os << "hub token escaped to " << to << " under " << rule_name(rule);
          return fail(os.str());
        }
      }
    }
  }
  return {};
}

// 9. Orientation flips and token moves reach the same pairs on the
//    two-vertex, three-edge constraint graph.
Outcome check_ncl_equivalence() {
  const NclInstance ncl = parse_ncl_text(
      "ncl 2 3\nv 0 OR\nv 1 OR\n"
      "e 0 0 1 2 uv\ne 1 0 1 2 vu\ne 2 0 1 2 uv\n");
  std::vector<NclConfig> valid;
  for (int mask = 0; mask < 8; ++mask) {
    const NclConfig cfg{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
    if (is_valid_ncl_config(ncl.graph, cfg)) valid.push_back(cfg);
  }
  if (valid.size() != 6) return fail("expected six valid orientations");
  for (int r = 1; r <= 2; ++r) {
    const NclReduction red = build_ncl_reduction(ncl.graph, r);
    for (const NclConfig& a : valid) {
      for (const NclConfig& b : valid) {
        const bool flips = ncl_config_reachable(ncl.graph, a, b);
        const DrdsInstance inst(red.graph, r, Rule::TS,
                                standard_placement(red, a),
                                standard_placement(red, b));
        const OracleResult res = oracle_shortest(inst);
        if (res.limit_exceeded) return fail("search limit at r=" +
                                            std::to_string(r));
        if (res.reachable != flips) {
          std::ostringstream os;
          os << "r=" << r << ": orientations say "
             << (flips ? "yes" : "no") << ", tokens say "
             << (res.reachable ? "yes" : "no");
          return fail(os.str());
        }
      }
    }
  }
  return {};
}

// 10. Repeated CLI runs are byte-identical.
Outcome check_cli_determinism() {
  namespace tu = testutil;
  std::vector<std::string> commands;
  const std::string ncl_file = tu::write_temp(
      "acc_ncl.txt",
      "ncl 2 3\nv 0 OR\nv 1 OR\n"
      "e 0 0 1 2 uv\ne 1 0 1 2 vu\ne 2 0 1 2 uv\n");
  for (const char* gen :
       {"gen extremal-ts --k 2", "gen extremal-ts --k 4",
        "gen extremal-tj --k 2", "gen planar --base c4 --r 2",
        "gen chordal --base k3 --r 2", "gen bipartite --base k2 --r 2",
        "gen random-tree --n 10 --seed 5", "gen random-split --n 10 --seed 5"})
    commands.push_back(gen);
  commands.push_back("gen ncl --r 2 --file " + ncl_file);

  const std::string ts2 =
      tu::write_temp("acc_ts2.txt", tu::run_cli("gen extremal-ts --k 2").out);
  const std::string tj2 =
      tu::write_temp("acc_tj2.txt", tu::run_cli("gen extremal-tj --k 2").out);
  const std::string tree = tu::write_temp(
      "acc_tree.txt", "p 5 4\n0 1\n1 2\n2 3\n3 4\nr 2\nrule TJ\nS 2 0 4\nT 2 2 3\n");
  const std::string moves = tu::write_temp("acc_moves.txt", "mv 0 2\nmv 4 3\n");
  for (const std::string& inst : {ts2, tj2, tree}) {
    commands.push_back("solve " + inst);
    commands.push_back("oracle " + inst);
    commands.push_back("mstar " + inst);
    commands.push_back("classify " + inst);
  }
  commands.push_back("verify " + tree + " " + moves);
  commands.push_back("solve --via-power " + tree);
  commands.push_back("solve --oracle --threads 4 " + tj2);

  for (const std::string& cmd : commands) {
    const tu::CliResult a = tu::run_cli(cmd);
    const tu::CliResult b = tu::run_cli(cmd);
    if (a.out != b.out || a.exit_code != b.exit_code)
      return fail("output drift: " + cmd);
    if (a.out.empty()) return fail("no output: " + cmd);
  }
  return {};
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* name;
    Outcome (*fn)();
  };
  const std::vector<Row> rows = {
      {1, "tree-minimality", check_tree_minimality},
      {2, "canonical-partition", check_partition},
      {3, "tree-jump-sequences", check_tree_tj},
      {4, "split-sandwich", check_split_sandwich},
      {5, "extremal-tightness", check_extremal_tightness},
      {6, "power-equivalence", check_power_equivalence},
      {7, "reduction-soundness", check_reduction_soundness},
      {8, "reduction-structure", check_reduction_structure},
      {9, "orientation-equivalence", check_ncl_equivalence},
      {10, "cli-determinism", check_cli_determinism},
  };
  bool all = true;
  for (const Row& row : rows) {
    Outcome out;
    try {
      out = row.fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (out.pass) {
      std::printf("CRITERION %d PASS %s\n", row.id, row.name);
    } else {
      std::printf("CRITERION %d FAIL %s: %s\n", row.id, row.name,
                  out.detail.c_str());
      all = false;
    }
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
