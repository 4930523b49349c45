#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "splitgraph/cli.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(input);
  CliResult r;
  r.code = splitgraph::run_cli(args, out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("split writes the splitting graph") {
  const CliResult r = cli({"split", "--graph6", "A_"});
  CHECK(r.code == 0);
  CHECK(r.out == "4 3\n0 1\n0 3\n1 2\n");
  CHECK(r.err.empty());

  // generator input, graph6 output
  const CliResult k3 = cli({"split", "--gen", "complete:3", "--format", "graph6"});
  CHECK(k3.code == 0);
  CHECK(k3.out == "Ezj?\n");

  // path:2 is K2
  CHECK(cli({"split", "--gen", "path:2"}).out == cli({"split", "--graph6", "A_"}).out);

  const CliResult dot = cli({"split", "--graph6", "A_", "--format", "dot"});
  CHECK(dot.out.find("  v0 [label=\"0\"];\n") != std::string::npos);
  CHECK(dot.out.find("  v2 [label=\"0'\", shape=box];\n") != std::string::npos);
  CHECK(dot.out.find("  v3 [label=\"1'\", shape=box];\n") != std::string::npos);
  CHECK(dot.out.find("  v0 -- v1;\n") != std::string::npos);

  const CliResult js = cli({"split", "--graph6", "A_", "--format", "json"});
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["base_order"] == 2);
  CHECK(j["order"] == 4);
  CHECK(j["edges"] == nlohmann::json::array({{0, 1}, {0, 3}, {1, 2}}));
}

TEST_CASE("split input selection") {
  CHECK(cli({"split"}).code == 2);
  CHECK(cli({"split", "--graph6", "A_", "--gen", "path:2"}).code == 2);

  // file input, stdin variant, auto-detected formats
  const CliResult from_stdin = cli({"split", "--file", "-"}, "2 1\n0 1\n");
  CHECK(from_stdin.code == 0);
  CHECK(from_stdin.out == "4 3\n0 1\n0 3\n1 2\n");
  const CliResult g6_stdin = cli({"split", "--file", "-"}, "A_\n");
  CHECK(g6_stdin.out == from_stdin.out);
  const CliResult two_lines = cli({"split", "--file", "-"}, "A_\nBw\n");
  CHECK(two_lines.code == 2);
  CHECK(two_lines.err.find("expected a single graph6 line") != std::string::npos);
  CHECK(cli({"split", "--file", "/nonexistent/x.g6"}).code == 2);

  const CliResult verbose = cli({"-v", "split", "--graph6", "A_"});
  CHECK(verbose.code == 0);
  CHECK(verbose.err == "input graph: n=2 m=1\n");
}

TEST_CASE("generator specs") {
  CHECK(cli({"split", "--gen", "gk:6,8", "--format", "graph6"}).code == 0);
  CHECK(cli({"split", "--gen", "cycle:5"}).code == 0);
  CHECK(cli({"split", "--gen", "star:4"}).code == 0);

  const CliResult no_seed = cli({"split", "--gen", "er:6,0.5"});
  CHECK(no_seed.code == 2);
  CHECK(no_seed.err.find("needs a seed") != std::string::npos);
  const CliResult inline_seed = cli({"split", "--gen", "er:6,0.5,9"});
  const CliResult flag_seed = cli({"split", "--gen", "er:6,0.5", "--seed", "9"});
  CHECK(inline_seed.code == 0);
  CHECK(inline_seed.out == flag_seed.out);

  const CliResult unknown = cli({"split", "--gen", "foo:3"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown generator") != std::string::npos);
  CHECK(unknown.err.find("complete, star, path, cycle, gk, er") != std::string::npos);
  CHECK(cli({"split", "--gen", "path"}).code == 2);       // missing params
  CHECK(cli({"split", "--gen", "path:2,3"}).code == 2);   // too many params
  CHECK(cli({"split", "--gen", "path:x"}).code == 2);     // bad integer
  CHECK(cli({"split", "--gen", "complete:400"}).code == 2);  // above the order cap
  CHECK(cli({"split", "--gen", "complete:256"}).code == 0);  // at the cap
}

TEST_CASE("invariants command") {
  const CliResult table = cli({"invariants", "--graph6", "Bw"});
  CHECK(table.code == 0);
  CHECK(table.out.find("beta0       1") != std::string::npos);
  CHECK(table.out.find("gallai      alpha0 + beta0 = 3 = order") != std::string::npos);

  const CliResult js = cli({"invariants", "--gen", "gk:6,8", "--format", "json"});
  CHECK(js.code == 0);
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["order"] == 6);
  CHECK(j["beta0_star"]["value"] == 2);
  CHECK(j["beta0_star"]["witness"] == nlohmann::json::array({1, 3, 4, 5}));

  const CliResult too_big = cli({"invariants", "--gen", "complete:33"});
  CHECK(too_big.code == 2);
  CHECK(too_big.err.find("raise --max-exact") != std::string::npos);
  CHECK(cli({"invariants", "--gen", "complete:33", "--max-exact", "33"}).code == 0);
}

TEST_CASE("verify campaigns") {
  const CliResult small = cli({"verify", "--exhaustive", "5", "--parallelism", "2"});
  CHECK(small.code == 0);
  CHECK(small.err.find("wall-clock:") != std::string::npos);
  CHECK(small.err.find("graphs: 771") != std::string::npos);
  const nlohmann::json j = nlohmann::json::parse(small.out);
  CHECK(j["graphs_evaluated"] == 771);
  CHECK(j["unexpected_failures"] == 0);
  CHECK(j["claims"]["THM1"]["holds"] == 771);

  // stdout is identical across runs and worker counts
  const CliResult rerun = cli({"verify", "--exhaustive", "5", "--parallelism", "5"});
  CHECK(rerun.out == small.out);

  const CliResult random_run =
      cli({"verify", "--random", "--n", "8", "--p", "0.25", "--samples", "100", "--seed", "7"});
  CHECK(random_run.code == 0);
  CHECK(nlohmann::json::parse(random_run.out)["graphs_evaluated"] == 100);
  const CliResult random_again =
      cli({"verify", "--random", "--n", "8", "--p", "0.25", "--samples", "100", "--seed", "7"});
  CHECK(random_again.out == random_run.out);

  const CliResult file_run = cli({"verify", "--input", "-"}, "Bw\nA_\n\nCs\n");
  CHECK(file_run.code == 0);
  CHECK(nlohmann::json::parse(file_run.out)["graphs_evaluated"] == 3);

  const CliResult family_run = cli({"verify", "--family", "6"});
  CHECK(family_run.code == 0);
  const nlohmann::json fam = nlohmann::json::parse(family_run.out);
  CHECK(fam["family"]["gaps"] == nlohmann::json::array({9}));
  CHECK(fam["family"]["coverage_as_predicted"] == true);
}

TEST_CASE("verify argument validation") {
  CHECK(cli({"verify"}).code == 2);  // no mode
  CHECK(cli({"verify", "--exhaustive", "4", "--family", "6"}).code == 2);
  CHECK(cli({"verify", "--exhaustive", "9"}).code == 2);  // above the cap
  CHECK(cli({"verify", "--exhaustive", "8"}).code == 2);  // needs --long-run
  const CliResult no_seed = cli({"verify", "--random", "--n", "9"});
  CHECK(no_seed.code == 2);
  CHECK(no_seed.err.find("error:") != std::string::npos);
  CHECK(cli({"verify", "--random", "--p", "0.5", "--seed", "1"}).code == 2);  // needs --n
  CHECK(cli({"verify", "--input", "-"}, "A_x\n").code == 2);  // bad graph6 line
}

TEST_CASE("family tables") {
  const CliResult six = cli({"family", "6"});
  CHECK(six.code == 0);
  CHECK(six.out.find("k  graph6") != std::string::npos);
  CHECK(six.out.find("attained: 6 7 8 10") != std::string::npos);
  CHECK(six.out.find("unattained: 9") != std::string::npos);
  CHECK(six.out.find("whose deficiency is n-2") != std::string::npos);
  CHECK(six.out.find("UNEXPECTED") == std::string::npos);

  const CliResult three = cli({"family", "3"});
  CHECK(three.code == 0);
  CHECK(three.out.find("attained: 3 4") != std::string::npos);
  CHECK(three.out.find("unattained") == std::string::npos);

  const CliResult js = cli({"family", "6", "--format", "json"});
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["n"] == 6);
  CHECK(j["rows"].size() == 5u);
  CHECK(j["rows"][3]["k"] == 9);
  CHECK(j["rows"][3]["attains_k"] == false);
  CHECK(j["gaps"] == nlohmann::json::array({9}));
  CHECK(j["covers_range"] == false);
  CHECK(j["coverage_as_predicted"] == true);

  CHECK(cli({"family"}).code == 2);       // n required
  CHECK(cli({"family", "1"}).code == 2);  // below the valid range
}

TEST_CASE("convert command") {
  const CliResult el = cli({"convert", "--graph6", "Cl", "--to", "edge-list"});
  CHECK(el.code == 0);
  CHECK(el.out == "4 4\n0 1\n0 3\n1 2\n2 3\n");

  // edge list in, graph6 out, round trip
  const CliResult g6 = cli({"convert", "--file", "-", "--to", "graph6"}, el.out);
  CHECK(g6.out == "Cl\n");

  const CliResult labeled =
      cli({"convert", "--file", "-", "--labeled", "--to", "json"}, "b a\nc a\n");
  CHECK(labeled.code == 0);
  const nlohmann::json j = nlohmann::json::parse(labeled.out);
  CHECK(j["order"] == 3);
  CHECK(j["edges"] == nlohmann::json::array({{0, 1}, {0, 2}}));

  const std::string table_path = "cli_label_table_test.json";
  const CliResult with_table = cli({"convert", "--file", "-", "--labeled", "--to", "graph6",
                                    "--label-table", table_path},
                                   "b a\nc a\n");
  CHECK(with_table.code == 0);
  std::ifstream table_file(table_path);
  REQUIRE(table_file.good());
  const nlohmann::json table = nlohmann::json::parse(table_file);
  CHECK(table["schema_version"] == 1);
  CHECK(table["labels"] == nlohmann::json::array({"a", "b", "c"}));
  std::remove(table_path.c_str());

  CHECK(cli({"convert", "--graph6", "A_", "--to", "graph6", "--label-table", "x.json"}).code == 2);
  CHECK(cli({"convert", "--graph6", "A_", "--labeled", "--to", "json"}).code == 2);
  CHECK(cli({"convert", "--graph6", "A_"}).code == 2);  // --to is required
  CHECK(cli({"convert", "--graph6", "A_", "--to", "yaml"}).code == 2);
}

TEST_CASE("help and bad usage") {
  const CliResult help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("split") != std::string::npos);
  CHECK(help.out.find("invariants") != std::string::npos);
  CHECK(help.out.find("verify") != std::string::npos);

  CHECK(cli({}).code == 2);               // a subcommand is required
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"split", "--format", "yaml", "--graph6", "A_"}).code == 2);

  // argv-style entry point (writes one graph6 line to the real stdout)
  const char* argv[] = {"splitgraph", "split", "--graph6", "A_", "--format", "graph6"};
  CHECK(splitgraph::run_cli(6, argv) == 0);
}
