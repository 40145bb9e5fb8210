#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

const std::string kCli = MANNA_CLI_PATH;

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("manna_cli_test_" + std::to_string(getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

struct CommandResult {
  int exit_code;
  std::string output;

  json parsed() const { return json::parse(output); }
};

CommandResult run_cli(const std::string& args) {
  fs::path out = scratch_dir() / "stdout.txt";
  std::string command = kCli + " " + args + " > " + out.string() + " 2> " +
                        (scratch_dir() / "stderr.txt").string();
  int status = std::system(command.c_str());
  std::ifstream in(out);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return CommandResult{WEXITSTATUS(status), buffer.str()};
}

}  // namespace

TEST_CASE("solve writes bundles and utilities") {
  CommandResult result = run_cli("solve --fixture example1 --algorithm mdrr");
  REQUIRE(result.exit_code == 0);
  json j = result.parsed();
  CHECK(j["bundles"] == json::array({json::array(), {0, 1}}));
  CHECK(j["utilities"] == json::array({0, -1}));
  CHECK_FALSE(j.contains("trace"));

  CommandResult traced = run_cli("solve --fixture example1 --algorithm mdrr --trace");
  CHECK(traced.parsed()["trace"].size() == 3);

  CommandResult minimax = run_cli("solve --fixture party --algorithm minimax");
  json bundles = minimax.parsed()["bundles"];
  CHECK(bundles[0] == json::array({0, 1, 2, 5, 6}));  // the host ends up with both chores
}

TEST_CASE("check reports hold/violation with matching exit codes") {
  fs::path swapped = write_file("swapped.json", R"({"bundles": [[1], [0]]})");
  CommandResult violation =
      run_cli("check --fixture example1 --allocation " + swapped.string() + " -p po_exact");
  CHECK(violation.exit_code == 5);
  json report = violation.parsed()["reports"][0];
  CHECK(report["holds"] == false);
  CHECK(report["witness"]["dominating"]["bundles"] == json::array({{0}, {1}}));

  fs::path all_to_one = write_file("all_to_one.json", R"({"bundles": [[0, 1, 2], []]})");
  CommandResult holds =
      run_cli("check --fixture prop1 --allocation " + all_to_one.string() + " -p efx");
  CHECK(holds.exit_code == 0);
  CHECK(holds.parsed()["reports"][0]["holds"] == true);

  fs::path burdened = write_file("burdened.json", R"({"bundles": [[0, 1, 2, 5, 6], [3], [4]]})");
  CommandResult parts =
      run_cli("check --fixture party --allocation " + burdened.string() + " -p ef1_parts,efx");
  CHECK(parts.exit_code == 5);
  json reports = parts.parsed()["reports"];
  REQUIRE(reports.size() == 2);
  CHECK(reports[0]["witness"]["part"] == "minus");
  CHECK(reports[1]["holds"] == true);
}

TEST_CASE("check rejects invalid allocations") {
  fs::path duplicated = write_file("dup.json", R"({"bundles": [[0], [0]]})");
  CommandResult result =
      run_cli("check --fixture example1 --allocation " + duplicated.string() + " -p ef1");
  CHECK(result.exit_code == 3);
  json j = result.parsed();
  CHECK(j["allocation_valid"] == false);
  CHECK(j["violation"].get<std::string>().find("duplicated") != std::string::npos);
  CHECK(j["duplicated"] == json::array({1}));
  CHECK(j["unallocated"] == json::array({2}));
}

TEST_CASE("search certifies nonexistence and finds witnesses") {
  CommandResult none = run_cli("search --fixture prop1 --require efx_parts");
  CHECK(none.exit_code == 0);
  CHECK(none.parsed()["found"].is_null());

  CommandResult efx0_none = run_cli("search --fixture prop2 --require efx0");
  CHECK(efx0_none.parsed()["found"].is_null());

  CommandResult found = run_cli("search --fixture prop2 --require efx");
  CHECK_FALSE(found.parsed()["found"].is_null());

  CommandResult counted = run_cli("search --fixture prop1 --require efx --mode count");
  json j = counted.parsed();
  CHECK(j["space"] == 8);
  CHECK(j["count"].get<int>() > 0);
}

TEST_CASE("search respects the enumeration budget") {
  CommandResult result = run_cli("search --fixture party --require ef1 --max-space 100");
  CHECK(result.exit_code == 4);
}

TEST_CASE("gen emits reproducible, domain-conforming instances") {
  std::string args = "gen --domain ternary --alpha 2 --beta 1 --n 2 --m 5 --seed 7";
  CommandResult first = run_cli(args);
  CommandResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);
  for (const auto& row : first.parsed()["utilities"]) {
    for (const auto& cell : row) {
      long long v = cell.get<long long>();
      CHECK((v == -2 || v == 0 || v == 1));
    }
  }

  CommandResult bad = run_cli("gen --domain general --alpha 2 -n 2 -m 3");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("gen output feeds straight back into classify via stdin") {
  CommandResult result =
      run_cli("gen --domain identical -n 2 -m 4 --seed 3 | " + kCli + " classify -i -");
  REQUIRE(result.exit_code == 0);
  CHECK(result.parsed()["domain"]["is_identical"] == true);
}

TEST_CASE("classify labels items and the domain") {
  CommandResult example1 = run_cli("classify --fixture example1");
  json j = example1.parsed();
  CHECK(j["items"][0]["label"] == "pure bad");
  CHECK(j["items"][1]["label"] == "non-pure bad");
  CHECK(j["domain"]["label"] == "general");

  CommandResult prop1 = run_cli("classify --fixture prop1");
  json p = prop1.parsed();
  CHECK(p["items"][2]["label"] == "pure good");
  CHECK(p["domain"]["is_ternary"] == true);
  CHECK(p["domain"]["alpha"] == 1);
  CHECK(p["domain"]["beta"] == 2);
  CHECK(p["domain"]["label"].get<std::string>().find("identical") != std::string::npos);
}

TEST_CASE("fixtures lists the built-in instances") {
  CommandResult result = run_cli("fixtures");
  REQUIRE(result.exit_code == 0);
  CHECK(result.parsed()["fixtures"].size() == 4);
}

TEST_CASE("parse failures exit with the parse code") {
  fs::path garbage = write_file("garbage.json", "{not json");
  CHECK(run_cli("classify -i " + garbage.string()).exit_code == 2);

  fs::path mismatched =
      write_file("mismatched.json", R"({"agents": 2, "items": 3, "utilities": [[1], [1]]})");
  CHECK(run_cli("classify -i " + mismatched.string()).exit_code == 2);

  CHECK(run_cli("classify --fixture no_such_fixture").exit_code == 2);

  fs::path ok_alloc = write_file("ok.json", R"({"bundles": [[0, 1], []]})");
  CommandResult unknown_property =
      run_cli("check --fixture example1 --allocation " + ok_alloc.string() + " -p shiny");
  CHECK(unknown_property.exit_code == 2);
}

TEST_CASE("stdin instances work across subcommands") {
  fs::path dummies =
      write_file("dummies.json", R"({"agents": 2, "items": 2, "utilities": [[0, 0], [0, 0]]})");

  CommandResult solved = run_cli("solve -i - -a mdrr < " + dummies.string());
  REQUIRE(solved.exit_code == 0);
  CHECK(solved.parsed()["bundles"] == json::array({{0, 1}, json::array()}));

  CommandResult classified = run_cli("classify -i - < " + dummies.string());
  REQUIRE(classified.exit_code == 0);
  json j = classified.parsed();
  CHECK(j["items"][0]["label"] == "dummy");
  CHECK(j["items"][1]["label"] == "dummy");
  CHECK(j["domain"]["is_identical"] == true);
  CHECK(j["domain"]["is_ternary"] == false);
}

TEST_CASE("gen produces absolute-identical magnitudes on request") {
  CommandResult result = run_cli("gen --domain absolute-identical -n 3 -m 6 --seed 12");
  REQUIRE(result.exit_code == 0);
  json rows = result.parsed()["utilities"];
  for (size_t o = 0; o < 6; ++o) {
    long long magnitude = std::llabs(rows[0][o].get<long long>());
    for (size_t a = 1; a < 3; ++a) {
      CHECK(std::llabs(rows[a][o].get<long long>()) == magnitude);
    }
  }
}
