// Command-line front end. Exit codes: 0 yes/success, 1 no, 2 bad input,
// 3 unsupported instance, 4 internal invariant failure.

#include <fstream>
#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drdsr/check.hpp"
#include "drdsr/drds.hpp"
#include "drdsr/graph.hpp"
#include "drdsr/oracle.hpp"
#include "drdsr/reductions.hpp"
#include "drdsr/split_solver.hpp"
#include "drdsr/tree_solver.hpp"

namespace {

using namespace drdsr;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInternal = 4;

struct InstanceFlags {
  std::optional<int> r;
  std::optional<Rule> rule;
};

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return in;
}

ParsedInstance load_parsed(const std::string& path, const InstanceFlags& fl) {
  std::ifstream in = open_or_throw(path);
  ParsedInstance p = parse_instance(in);
  if (fl.r) p.r = fl.r;
  if (fl.rule) p.rule = fl.rule;
  return p;
}

DrdsInstance load_instance(const std::string& path, const InstanceFlags& fl) {
  return instance_from_parsed(load_parsed(path, fl));
}

void add_instance_flags(CLI::App* cmd, InstanceFlags& fl) {
  cmd->add_option("--r", fl.r, "Override the domination radius");
  cmd->add_option_function<std::string>(
         "--rule",
         [&fl](const std::string& s) {
           if (s == "TS")
             fl.rule = Rule::TS;
           else if (s == "TJ")
             fl.rule = Rule::TJ;
           else
             throw CLI::ValidationError("--rule", "must be TS or TJ");
         },
         "Override the reconfiguration rule (TS or TJ)")
      ->type_name("TS|TJ");
}

int print_solution(const SolveResult& res) {
  if (res.status == SolveStatus::NoSequence) {
    std::cout << "NO\n";
    return kExitNo;
  }
  std::cout << "YES " << res.seq.moves.size() << "\n";
  std::cout << format_moves(res.seq.moves);
  return kExitYes;
}

int cmd_solve(const std::string& path, const InstanceFlags& fl,
              bool use_oracle, bool via_power, const OracleLimits& limits) {
  const DrdsInstance inst = load_instance(path, fl);

  SolveResult res = solve_bounded_diameter(inst);
  if (res.status != SolveStatus::NotApplicable) return print_solution(res);

  if (inst.rule == Rule::TJ && classify(inst.graph).tree) {
    res = tj_sequence_tree(inst);
    if (res.status != SolveStatus::NotApplicable) return print_solution(res);
  }

  res = solve_split(inst);
  if (res.status != SolveStatus::NotApplicable) return print_solution(res);

  if (via_power && inst.rule == Rule::TJ) {
    const Graph power = graph_power(inst.graph, inst.r);
    const DrdsInstance pinst(power, 1, Rule::TJ, inst.source, inst.target);
    const OracleResult ores = oracle_shortest(pinst, limits);
    if (ores.limit_exceeded) {
      std::cout << "UNSUPPORTED\n";
      return kExitUnsupported;
    }
    if (!ores.reachable) {
      std::cout << "NO\n";
      return kExitNo;
    }
    // Jump validity transfers between G^r at radius 1 and G at radius r,
    // but re-check on the original instance rather than trusting that.
    const VerifyResult vr = verify_sequence(inst, ores.witness.moves);
    DRDSR_CHECK(vr.valid, "power-graph witness failed on the original radius");
    res.status = SolveStatus::Sequence;
    res.seq = ores.witness;
    return print_solution(res);
  }

  if (use_oracle) {
    const OracleResult ores = oracle_shortest(inst, limits);
    if (ores.limit_exceeded) {
      std::cout << "UNSUPPORTED\n";
      return kExitUnsupported;
    }
    if (!ores.reachable) {
      std::cout << "NO\n";
      return kExitNo;
    }
    res.status = SolveStatus::Sequence;
    res.seq = ores.witness;
    return print_solution(res);
  }

  std::cout << "UNSUPPORTED\n";
  return kExitUnsupported;
}

int cmd_verify(const std::string& path, const std::string& moves_path,
               const InstanceFlags& fl) {
  const DrdsInstance inst = load_instance(path, fl);
  std::ifstream min = open_or_throw(moves_path);
  const std::vector<Move> moves = parse_moves(min);
  const VerifyResult vr = verify_sequence(inst, moves);
  if (vr.valid) {
    std::cout << "VALID " << moves.size() << "\n";
    return kExitYes;
  }
  std::cout << "INVALID " << vr.index << " " << vr.reason << "\n";
  return kExitNo;
}

int cmd_oracle(const std::string& path, const InstanceFlags& fl,
               const OracleLimits& limits) {
  const DrdsInstance inst = load_instance(path, fl);
  const OracleResult res = oracle_shortest(inst, limits);
  if (res.limit_exceeded) {
    std::cout << "UNSUPPORTED\n";
    return kExitUnsupported;
  }
  if (!res.reachable) {
    std::cout << "UNREACHABLE\n";
    return kExitNo;
  }
  std::cout << "OPT " << res.opt << "\n";
  return kExitYes;
}

int cmd_mstar(const std::string& path, const InstanceFlags& fl) {
  const DrdsInstance inst = load_instance(path, fl);
  const MstarResult res = mstar(inst);
  if (res.ts_finite)
    std::cout << "MSTAR_TS " << res.ts << "\n";
  else
    std::cout << "MSTAR_TS inf\n";
  std::cout << "MSTAR_TJ " << res.tj << "\n";
  return kExitYes;
}

int cmd_classify(const std::string& path) {
  InstanceFlags none;
  const ParsedInstance parsed = load_parsed(path, none);
  const Graph& g = parsed.graph;
  const ClassReport rep = classify(g);
  std::cout << "n " << g.n << "\n";
  std::cout << "m " << g.m << "\n";
  std::cout << "components " << rep.num_components << "\n";
  std::cout << "connected " << (rep.connected ? 1 : 0) << "\n";
  std::cout << "tree " << (rep.tree ? 1 : 0) << "\n";
  std::cout << "bipartite " << (rep.bipartite ? 1 : 0) << "\n";
  std::cout << "split " << (rep.split ? 1 : 0) << "\n";
  int diameter = 0;
  for (int d : rep.component_diameter) diameter = std::max(diameter, d);
  std::cout << "diameter " << diameter << "\n";
  if (rep.split) {
    std::cout << "clique " << rep.split->clique.size();
    for (int v : rep.split->clique) std::cout << " " << v;
    std::cout << "\n";
  }
  return kExitYes;
}

// ---- gen ----

Graph base_graph(const std::string& name) {
  if (name == "k2") return Graph::from_edges(2, {{0, 1}});
  if (name == "p3") return Graph::from_edges(3, {{0, 1}, {1, 2}});
  if (name == "p4") return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  if (name == "c4")
    return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  if (name == "c5")
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  if (name == "k3") return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  throw std::invalid_argument("unknown base graph '" + name +
                              "' (expected k2, p3, p4, c4, c5, or k3)");
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty id in list");
    out.push_back(std::stoi(item));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void write_provenance(const std::string& path,
                      const std::vector<std::string>& labels) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << i << " " << labels[i] << "\n";
}

int emit_instance(const ReductionOutput& out, const std::string& prov_path) {
  const DrdsInstance& inst = out.instance;
  std::cout << format_instance(inst.graph, std::nullopt, inst.r, inst.rule,
                               inst.source, inst.target);
  write_provenance(prov_path, out.provenance);
  return kExitYes;
}

struct VcGenOpts {
  std::string base;
  int r = 2;
  std::string rule = "TS";
  std::string cs, ct;
  bool trust = false;
};

int cmd_gen_vc(const std::string& which, const VcGenOpts& o,
               const std::string& prov_path) {
  const Graph g = base_graph(o.base);
  std::vector<int> cs, ct;
  if (o.cs.empty() || o.ct.empty()) {
    const VertexCoverResult mvc = min_vertex_cover(g);
    DRDSR_CHECK(!mvc.limit_exceeded && !mvc.covers.empty(),
                "built-in base graph exceeded cover enumeration limits");
    cs = o.cs.empty() ? mvc.covers.front() : parse_id_list(o.cs);
    ct = o.ct.empty() ? mvc.covers.back() : parse_id_list(o.ct);
  } else {
    cs = parse_id_list(o.cs);
    ct = parse_id_list(o.ct);
  }
  const Rule rule = o.rule == "TJ" ? Rule::TJ : Rule::TS;
  ReductionOutput out =
      which == "planar"
          ? reduce_vc_planar(g, o.r, rule, cs, ct, o.trust)
          : which == "chordal"
                ? reduce_vc_chordal(g, o.r, rule, cs, ct, o.trust)
                : reduce_vc_bipartite(g, o.r, rule, cs, ct, o.trust);
  return emit_instance(out, prov_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-r dominating set reconfiguration toolkit"};
  app.require_subcommand(1);
  std::function<int()> run;

  InstanceFlags solve_fl, verify_fl, oracle_fl, mstar_fl;
  OracleLimits solve_limits, oracle_limits;
  std::string solve_path, verify_path, verify_moves, oracle_path, mstar_path,
      classify_path;
  bool solve_oracle = false, solve_via_power = false;

  CLI::App* solve = app.add_subcommand("solve", "Find a reconfiguration sequence");
  solve->add_option("instance", solve_path, "Instance file")->required();
  add_instance_flags(solve, solve_fl);
  solve->add_flag("--oracle", solve_oracle,
                  "Fall back to exhaustive search when no solver applies");
  solve->add_flag("--via-power", solve_via_power,
                  "Solve TJ instances through the r-th graph power at radius 1");
  solve->add_option("--max-states", solve_limits.max_states,
                    "State cap for exhaustive search");
  solve->add_option("--max-n", solve_limits.max_n,
                    "Vertex cap for exhaustive search");
  solve->add_option("--threads", solve_limits.threads,
                    "Worker threads for exhaustive search");
  solve->callback([&] {
    run = [&] {
      return cmd_solve(solve_path, solve_fl, solve_oracle, solve_via_power,
                       solve_limits);
    };
  });

  CLI::App* verify = app.add_subcommand("verify", "Check a move sequence");
  verify->add_option("instance", verify_path, "Instance file")->required();
  verify->add_option("moves", verify_moves, "Move list file")->required();
  add_instance_flags(verify, verify_fl);
  verify->callback([&] {
    run = [&] { return cmd_verify(verify_path, verify_moves, verify_fl); };
  });

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Exhaustive shortest-sequence search");
  oracle->add_option("instance", oracle_path, "Instance file")->required();
  add_instance_flags(oracle, oracle_fl);
  oracle->add_option("--max-states", oracle_limits.max_states,
                     "State cap for exhaustive search");
  oracle->add_option("--max-n", oracle_limits.max_n,
                     "Vertex cap for exhaustive search");
  oracle->add_option("--threads", oracle_limits.threads,
                     "Worker threads for exhaustive search");
  oracle->callback([&] {
    run = [&] { return cmd_oracle(oracle_path, oracle_fl, oracle_limits); };
  });

  CLI::App* mst = app.add_subcommand(
      "mstar", "Assignment-based lower bounds on sequence length");
  mst->add_option("instance", mstar_path, "Instance file")->required();
  add_instance_flags(mst, mstar_fl);
  mst->callback([&] {
    run = [&] { return cmd_mstar(mstar_path, mstar_fl); };
  });

  CLI::App* cls = app.add_subcommand("classify", "Report graph structure");
  cls->add_option("instance", classify_path, "Instance file")->required();
  cls->callback([&] {
    run = [&] { return cmd_classify(classify_path); };
  });

  CLI::App* gen = app.add_subcommand("gen", "Emit generated instances");
  gen->require_subcommand(1);
  std::string prov_path;
  auto add_prov = [&prov_path](CLI::App* sub) {
    sub->add_option("--provenance", prov_path,
                    "Write a vertex-role sidecar to this path");
  };

  int ts_k = 0, tj_k = 0;
  CLI::App* gts = gen->add_subcommand("extremal-ts",
                                      "Worst-case sliding split instance");
  gts->add_option("--k", ts_k, "Token count")->required();
  add_prov(gts);
  gts->callback([&] {
    run = [&] { return emit_instance(gen_extremal_ts_split(ts_k), prov_path); };
  });
  CLI::App* gtj = gen->add_subcommand("extremal-tj",
                                      "Worst-case jumping split instance");
  gtj->add_option("--k", tj_k, "Token count")->required();
  add_prov(gtj);
  gtj->callback([&] {
    run = [&] { return emit_instance(gen_extremal_tj_split(tj_k), prov_path); };
  });

  VcGenOpts vc[3];
  const char* vc_names[3] = {"planar", "chordal", "bipartite"};
  const char* vc_desc[3] = {
      "Vertex-cover instance embedded in a planar-preserving expansion",
      "Vertex-cover instance embedded in a chordal expansion",
      "Vertex-cover instance embedded in a bipartite expansion"};
  for (int i = 0; i < 3; ++i) {
    CLI::App* sub = gen->add_subcommand(vc_names[i], vc_desc[i]);
    VcGenOpts& o = vc[i];
    sub->add_option("--base", o.base, "Base graph (k2, p3, p4, c4, c5, k3)")
        ->required();
    sub->add_option("--r", o.r, "Domination radius");
    sub->add_option("--rule", o.rule, "TS or TJ")
        ->check(CLI::IsMember({"TS", "TJ"}));
    sub->add_option("--cs", o.cs, "Source cover, comma-separated ids");
    sub->add_option("--ct", o.ct, "Target cover, comma-separated ids");
    sub->add_flag("--trust-covers", o.trust,
                  "Skip the cover minimality check");
    add_prov(sub);
    const std::string which = vc_names[i];
    sub->callback([&, which] {
      run = [&, which] { return cmd_gen_vc(which, o, prov_path); };
    });
  }

  std::string ncl_file;
  int ncl_r = 1;
  CLI::App* gncl = gen->add_subcommand(
      "ncl", "Constraint-logic instance mapped to token sliding");
  gncl->add_option("--file", ncl_file, "Constraint graph file")->required();
  gncl->add_option("--r", ncl_r, "Domination radius");
  add_prov(gncl);
  gncl->callback([&] {
    run = [&] {
      std::ifstream in = open_or_throw(ncl_file);
      const NclInstance ncl = parse_ncl(in);
      return emit_instance(ncl_to_drdsr(ncl.graph, ncl.config, ncl_r),
                           prov_path);
    };
  });

  int rnd_n = 0;
  unsigned rnd_seed = 0;
  CLI::App* gtree = gen->add_subcommand("random-tree", "Seeded random tree");
  gtree->add_option("--n", rnd_n, "Vertex count")->required();
  gtree->add_option("--seed", rnd_seed, "Generator seed");
  gtree->callback([&] {
    run = [&] {
      const Graph g = gen_random_tree(rnd_n, rnd_seed);
      std::cout << format_instance(g, std::nullopt, std::nullopt, std::nullopt,
                                   std::nullopt, std::nullopt);
      return kExitYes;
    };
  });
  CLI::App* gsplit =
      gen->add_subcommand("random-split", "Seeded random connected split graph");
  gsplit->add_option("--n", rnd_n, "Vertex count")->required();
  gsplit->add_option("--seed", rnd_seed, "Generator seed");
  gsplit->callback([&] {
    run = [&] {
      const Graph g = gen_random_split_graph(rnd_n, rnd_seed);
      std::cout << format_instance(g, std::nullopt, std::nullopt, std::nullopt,
                                   std::nullopt, std::nullopt);
      return kExitYes;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "error: line " << e.line << ": " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
