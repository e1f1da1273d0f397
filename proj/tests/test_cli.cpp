#include <fstream>
#include <string>

#include "doctest.h"
#include "util.hpp"

using testutil::CliResult;
using testutil::run_cli;
using testutil::write_temp;

TEST_CASE("cli: worst-case sliding instance end to end") {
  const std::string inst = write_temp("ts2.txt", run_cli("gen extremal-ts --k 2").out);
  const CliResult res = run_cli("solve " + inst);
  CHECK(res.exit_code == 0);
  CHECK(res.out == "YES 4\nmv 0 1\nmv 2 0\nmv 0 3\nmv 1 0\n");

  const CliResult ms = run_cli("mstar " + inst);
  CHECK(ms.exit_code == 0);
  CHECK(ms.out == "MSTAR_TS 2\nMSTAR_TJ 1\n");

  const CliResult opt = run_cli("oracle " + inst);
  CHECK(opt.out == "OPT 4\n");

  // The solver's own output must verify.
  const std::string moves = write_temp("ts2_moves.txt",
                                       res.out.substr(res.out.find('\n') + 1));
  const CliResult ver = run_cli("verify " + inst + " " + moves);
  CHECK(ver.exit_code == 0);
  CHECK(ver.out == "VALID 4\n");
}

TEST_CASE("cli: mstar bound on the k=3 instance") {
  const std::string inst = write_temp("ts3.txt", run_cli("gen extremal-ts --k 3").out);
  CHECK(run_cli("mstar " + inst).out == "MSTAR_TS 4\nMSTAR_TJ 2\n");
  CHECK(run_cli("oracle " + inst).out == "OPT 6\n");
}

TEST_CASE("cli: jump worst case") {
  const std::string inst = write_temp("tj2.txt", run_cli("gen extremal-tj --k 2").out);
  const CliResult opt = run_cli("oracle " + inst);
  CHECK(opt.exit_code == 0);
  CHECK(opt.out == "OPT 3\n");
  const CliResult sol = run_cli("solve " + inst);
  CHECK(sol.out.substr(0, 6) == "YES 3\n");
}

TEST_CASE("cli: no and unsupported answers") {
  const std::string tree = write_temp(
      "tree.txt", "p 4 3\n0 1\n1 2\n2 3\nr 1\nrule TJ\nS 2 1 2\nT 3 0 1 2\n");
  const CliResult no = run_cli("solve " + tree);
  CHECK(no.exit_code == 1);
  CHECK(no.out == "NO\n");

  const std::string chordal =
      write_temp("ch.txt", run_cli("gen chordal --base p3 --r 2").out);
  const CliResult uns = run_cli("solve " + chordal);
  CHECK(uns.exit_code == 3);
  CHECK(uns.out == "UNSUPPORTED\n");
  // The oracle fallback handles it.
  const CliResult forced = run_cli("solve --oracle " + chordal);
  CHECK(forced.exit_code == 0);
  CHECK(forced.out.substr(0, 3) == "YES");
}

TEST_CASE("cli: empty sequence verifies when source equals target") {
  const std::string inst = write_temp(
      "same.txt", "p 4 3\n0 1\n1 2\n2 3\nr 1\nrule TJ\nS 2 1 2\nT 2 1 2\n");
  const std::string moves = write_temp("none.txt", "");
  const CliResult res = run_cli("verify " + inst + " " + moves);
  CHECK(res.exit_code == 0);
  CHECK(res.out == "VALID 0\n");

  const std::string bad = write_temp("bad.txt", "mv 1 0\nmv 2 1\n");
  const CliResult inv = run_cli("verify " + inst + " " + bad);
  CHECK(inv.exit_code == 1);
  CHECK(inv.out.substr(0, 9) == "INVALID 1");
}

TEST_CASE("cli: parse and usage failures exit 2") {
  CHECK(run_cli("gen extremal-tj --k 1").exit_code == 2);
  CHECK(run_cli("solve /nonexistent/file").exit_code == 2);
  const std::string junk = write_temp("junk.txt", "p 2 1\n0 5\n");
  CHECK(run_cli("solve " + junk).exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  // Radius directive missing and not supplied by flag.
  const std::string bare = write_temp("bare.txt", "p 2 1\n0 1\nS 1 0\nT 1 1\n");
  CHECK(run_cli("solve " + bare).exit_code == 2);
  CHECK(run_cli("solve --r 1 --rule TJ " + bare).exit_code == 0);
}

TEST_CASE("cli: classify output") {
  const std::string inst = write_temp("p4.txt", "p 4 3\n0 1\n1 2\n2 3\n");
  const CliResult res = run_cli("classify " + inst);
  CHECK(res.exit_code == 0);
  CHECK(res.out ==
        "n 4\nm 3\ncomponents 1\nconnected 1\ntree 1\nbipartite 1\nsplit 1\n"
        "diameter 3\nclique 2 1 2\n");
  const std::string k3 = write_temp("k3.txt", "p 3 3\n0 1\n0 2\n1 2\n");
  const CliResult rk = run_cli("classify " + k3);
  CHECK(rk.out.find("split 1\n") != std::string::npos);
  CHECK(rk.out.find("clique 3 0 1 2\n") != std::string::npos);
}

TEST_CASE("cli: power-graph fallback for jumps") {
  // Six-cycle: not a tree, not split, diameter 3 above r.
  const std::string c6 = write_temp(
      "c6.txt",
      "p 6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\nr 2\nrule TJ\nS 2 0 3\nT 2 1 4\n");
  CHECK(run_cli("solve " + c6).exit_code == 3);
  const CliResult via = run_cli("solve --via-power " + c6);
  CHECK(via.exit_code == 0);
  CHECK(via.out.substr(0, 6) == "YES 2\n");
  // Sliding is out of scope for the power route.
  CHECK(run_cli("solve --via-power --rule TS " + c6).exit_code == 3);
}

TEST_CASE("cli: generator sidecar and determinism") {
  const std::string prov = write_temp("prov.txt", "");
  const CliResult gen =
      run_cli("gen bipartite --base k2 --r 2 --provenance " + prov);
  CHECK(gen.exit_code == 0);
  CHECK(gen.out.substr(0, 6) == "p 8 8\n");
  std::ifstream pin(prov);
  std::string first;
  std::getline(pin, first);
  CHECK(first == "0 v0");

  for (const std::string& cmd :
       {std::string("gen extremal-ts --k 4"), std::string("gen random-tree --n 9 --seed 3"),
        std::string("gen random-split --n 9 --seed 3"),
        std::string("gen planar --base c5 --r 2"),
        std::string("gen ncl --r 2 --file ") +
            write_temp("ncl.txt", "ncl 2 3\nv 0 OR\nv 1 OR\ne 0 0 1 2 uv\n"
                                  "e 1 0 1 2 vu\ne 2 0 1 2 uv\n")}) {
    const CliResult a = run_cli(cmd);
    const CliResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}
