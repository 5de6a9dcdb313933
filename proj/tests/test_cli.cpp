#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
Run run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " HGM_CLI_PATH " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("hgm_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const char* kEdge = R"({"k":3,"n":3,"edges":[[0,1,2]]})";

}  // namespace

TEST_CASE("build emits the constructed hypergraph") {
  const auto r = run(R"(build --family '{"kind":"B","i":3,"k":3,"p":3,"q":3,"l":0}')");
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n"] == 11);
  CHECK(doc["edges"].size() == 6);
}

TEST_CASE("moments of a single edge") {
  const auto edge = write_temp("edge.json", kEdge);
  const auto r = run("moments --d-max 3 --format csv --in " + edge);
  CHECK(r.status == 0);
  CHECK(r.out == "d,numerator,denominator,method\n0,12,1,closed\n1,0,1,closed\n2,0,1,closed\n3,9,1,closed\n");
  const auto j = run("moments --d-max 3 --in " + edge);
  CHECK(j.status == 0);
  CHECK(nlohmann::json::parse(j.out).size() == 4);
}

TEST_CASE("compare a hypergraph with itself") {
  const auto edge = write_temp("edge.json", kEdge);
  const auto r = run("compare --d-max 0 --in " + edge + " --in " + edge);
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["relation"] == "equal_up_to_d_max");
}

TEST_CASE("count and enumerate") {
  const auto c = run(R"(count --family '{"kind":"B","i":3,"k":3,"p":3,"q":3,"l":0}' --pattern C3 --pattern P1 --format csv)");
  CHECK(c.status == 0);
  CHECK(c.out == "pattern,t,count\nC,3,2\nP,1,6\n");
  const auto e = run("enumerate --k 3 --m 4");
  CHECK(e.status == 0);
  CHECK(nlohmann::json::parse(e.out).size() == 2);
  CHECK(run("count --in " + write_temp("edge.json", kEdge) + " --pattern X9").status == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("moments --in " + write_temp("short.json", R"({"k":3,"n":3,"edges":[[0,1]]})")).status == 2);
  CHECK(run("moments --in " + write_temp("broken.json", "{")).status == 2);
  CHECK(run("verify --theorem T9 --k 3 --m 6 --g 3").status == 2);
  CHECK(run("verify --theorem T1 --k 3 --m 5 --g 3").status == 2);
  const auto c = write_temp("c.json", R"({"k":3,"n":7,"edges":[[0,1,2],[0,3,4],[2,5,6],[1,3,5]]})");
  CHECK(run("moments --d-max 12 --cost-limit 10 --in " + c).status == 3);
  CHECK(run("moments --d-max 12 --in " + c, "HGM_COST_LIMIT=10").status == 3);
  CHECK(run("verify --theorem T1 --k 3 --m 6 --g 3 --d-max 6").status == 0);
  CHECK(run("verify --theorem T4 --k 3 --m 8 --g 3 --d-max 6").status == 1);
}

TEST_CASE("output is identical across thread counts") {
  const auto one = run("verify --theorem T2 --k 3 --m 7 --g 3 --d-max 12 --threads 1");
  const auto four = run("verify --theorem T2 --k 3 --m 7 --g 3 --d-max 12 --threads 4");
  CHECK(one.status == 0);
  CHECK(one.out == four.out);
  CHECK(nlohmann::json::parse(one.out)["status"] == "MATCH");
  const auto e1 = run("enumerate --k 3 --m 6 --format csv --threads 1");
  const auto e4 = run("enumerate --k 3 --m 6 --format csv --threads 4");
  CHECK(e1.out == e4.out);
  CHECK(e1.out.rfind("index,n,m,girth,base,canonical_form\n", 0) == 0);
}
