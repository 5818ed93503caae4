/* Apache License, Version 2.0 */
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "support/fixtures.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(RTOPO_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 512> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string fixture(const std::string& name) {
  return rtopo::testing::fixture_path(name);
}

}  // namespace

TEST_CASE("classify / components / atoms / validate") {
  auto cls = run_cli("classify " + fixture("chevron_pair.region"));
  CHECK(cls.exit_code == 0);
  CHECK(cls.output == "GENERAL\n");

  auto val = run_cli("validate " + fixture("chevron_pair.region"));
  CHECK(val.exit_code == 0);
  CHECK(val.output.find("OK") == 0);

  auto comps = run_cli("components " + fixture("annulus.region"));
  CHECK(comps.exit_code == 0);
  CHECK(comps.output.find("unbounded") != std::string::npos);
  CHECK(comps.output.find("positive") != std::string::npos);
  CHECK(comps.output.find("hole") != std::string::npos);
  CHECK(comps.output.find("32") != std::string::npos);

  auto atoms = run_cli("atoms " + fixture("chevron_pair.region"));
  CHECK(atoms.exit_code == 0);
  CHECK(atoms.output.find("4 atoms") == 0);
}

TEST_CASE("relate both methods agree on the fixtures") {
  auto out = run_cli("relate " + fixture("chevron_pair.region") + " " + fixture("disk.region") +
                     " --method both");
  CHECK(out.exit_code == 0);
  CHECK(out.output.find("global: ") != std::string::npos);
  CHECK(out.output.find("local: ") != std::string::npos);
  CHECK(out.output.find("AGREE\n") != std::string::npos);
  CHECK(out.output.find("DISAGREE") == std::string::npos);

  auto eq = run_cli("relate " + fixture("square.region") + " " + fixture("square.region") +
                    " --method global");
  CHECK(eq.exit_code == 0);
  CHECK(eq.output.find("TFFFTFFFT (EQ)") != std::string::npos);
}

TEST_CASE("graph output formats") {
  auto dot = run_cli("graph " + fixture("chevron_pair.region"));
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("digraph link_graph") == 0);
  auto dot2 = run_cli("graph " + fixture("chevron_pair.region") + " --format dot");
  CHECK(dot2.output == dot.output);
  auto js = run_cli("graph " + fixture("chevron_pair.region") + " --format json");
  CHECK(js.exit_code == 0);
  CHECK(js.output.find("\"nodes\"") != std::string::npos);
}

TEST_CASE("generalize writes documents that feed back in") {
  std::string out_path = std::string(RTOPO_CLI_PATH) + ".generalized.region";
  auto gen = run_cli("generalize " + fixture("tri_hole_island.region") + " -o " + out_path);
  CHECK(gen.exit_code == 0);
  auto cls = run_cli("classify " + out_path);
  CHECK(cls.exit_code == 0);
  CHECK(cls.output == "SIMPLE\n");

  auto steps = run_cli("generalize " + fixture("same_faces_nested.region") + " --steps 1");
  CHECK(steps.exit_code == 0);
  CHECK(steps.output.find("difference") != std::string::npos);

  auto small = run_cli("generalize " + fixture("corner_squares.region") + " --min-area 5");
  CHECK(small.exit_code == 0);
  CHECK(small.output.find("union") == std::string::npos);  // one piece left
  std::remove(out_path.c_str());
}

TEST_CASE("isomorphic subcommand") {
  auto no = run_cli("isomorphic " + fixture("same_faces_nested.region") + " " + fixture("same_faces_apart.region"));
  CHECK(no.exit_code == 0);
  CHECK(no.output == "NOT_ISOMORPHIC\n");
  auto yes = run_cli("isomorphic " + fixture("chevron_pair.region") + " " + fixture("chevron_pair.region"));
  CHECK(yes.exit_code == 0);
  CHECK(yes.output == "ISOMORPHIC\n");
}

TEST_CASE("exit codes: domain errors are 1, usage errors are 2") {
  std::string bad_path = std::string(RTOPO_CLI_PATH) + ".bowtie.region";
  {
    std::ofstream os(bad_path);
    os << R"({"rings":{"b":[[0,0],[2,2],[2,0],[0,2]]},"region":["ref","b"]})";
  }
  auto bad = run_cli("classify " + bad_path);
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("SelfIntersection") != std::string::npos);
  std::remove(bad_path.c_str());

  auto usage = run_cli("classify");
  CHECK(usage.exit_code == 2);
  auto missing = run_cli("classify /no/such/file.region");
  CHECK(missing.exit_code == 2);
  auto badsub = run_cli("frobnicate");
  CHECK(badsub.exit_code == 2);
}
