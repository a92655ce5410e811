#include "walksearch/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = walksearch::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

int newline_count(const std::string& s) {
  int n = 0;
  for (char c : s) n += (c == '\n');
  return n;
}

}  // namespace

TEST_CASE("documented simulate invocations") {
  const CliResult qw = run_cli({"simulate", "--walk", "qw-discrete", "--n", "4", "--marked",
                                "2", "--t-max", "3", "--mode", "full"});
  REQUIRE(qw.status == 0);
  const auto rows = parse_csv(qw.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"t", "success", "conserved"});
  CHECK(std::stod(rows[1][1]) == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(std::stod(rows[2][1]) == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(std::stod(rows[3][1]) == doctest::Approx(0.694444).epsilon(1e-6));
  CHECK(std::stod(rows[4][1]) == doctest::Approx(0.003086).epsilon(1e-3));

  const CliResult rwc = run_cli({"simulate", "--walk", "rw-continuous", "--n", "4", "--marked",
                                 "2", "--t-max", "4", "--dt", "4", "--mode", "closed"});
  REQUIRE(rwc.status == 0);
  const auto crow = parse_csv(rwc.out);
  REQUIRE(crow.size() == 3);
  CHECK(std::stod(crow.back()[1]) == doctest::Approx(0.724091).epsilon(1e-6));

  const CliResult qwc = run_cli({"simulate", "--walk", "qw-continuous", "--n", "4", "--t-max",
                                 "3.14159", "--mode", "closed"});
  REQUIRE(qwc.status == 0);
  const auto qrow = parse_csv(qwc.out);
  CHECK(std::stod(qrow.back()[0]) == doctest::Approx(3.14159).epsilon(1e-12));
  CHECK(std::stod(qrow.back()[1]) >= 0.999999);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::vector<std::string>> cases{
      {"simulate", "--walk", "rw-discrete", "--n", "6", "--t-max", "20"},
      {"simulate", "--walk", "qw-continuous", "--n", "9", "--t-max", "10", "--format", "json"},
      {"runtime", "--walk", "qw-discrete", "--n", "100", "--epsilon", "0.25"},
      {"table", "--n", "16", "--epsilon", "0.1", "--format", "json"},
      {"delta", "--n", "4", "--n", "20", "--n", "40"},
      {"sample", "--walk", "qw-discrete", "--n", "5", "--t-max", "9", "--seed", "77"},
  };
  for (const auto& args : cases) {
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("json output carries the config echo and the sample rows") {
  const CliResult r = run_cli({"simulate", "--walk", "rw-continuous", "--n", "4", "--marked",
                               "2", "--t-max", "4", "--dt", "4", "--format", "json"});
  REQUIRE(r.status == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["config"]["walk"] == "rw-continuous");
  CHECK(doc["config"]["n"] == 4);
  CHECK(doc["config"]["marked"] == 2);
  CHECK(doc["config"]["mode"] == "full");
  CHECK(doc["config"]["dt"] == 4.0);
  REQUIRE(doc["samples"].size() == 2);
  CHECK(doc["samples"][0][0] == 0.0);
  CHECK(doc["samples"][1][0] == 4.0);
  CHECK(double(doc["samples"][1][1]) == doctest::Approx(0.724091).epsilon(1e-6));
}

TEST_CASE("runtime subcommand values") {
  const CliResult rwd = run_cli({"runtime", "--walk", "rw-discrete", "--n", "4", "--epsilon",
                                 "0.1"});
  REQUIRE(rwd.status == 0);
  const auto rows = parse_csv(rwd.out);
  CHECK(rows[0] == std::vector<std::string>{"epsilon", "t", "success"});
  CHECK(std::stod(rows[1][1]) == doctest::Approx(4.969).epsilon(2e-4));
  CHECK(std::stod(rows[1][2]) == doctest::Approx(0.9));

  const CliResult qwd = run_cli({"runtime", "--walk", "qw-discrete", "--n", "100", "--format",
                                 "json"});
  REQUIRE(qwd.status == 0);
  const nlohmann::json doc = nlohmann::json::parse(qwd.out);
  CHECK(doc["runtime"]["t"] == 12.0);
  CHECK(doc["runtime"]["runs"] == 4);  // default epsilon 0.1 needs 4 halvings
  CHECK(doc["runtime"]["total_steps"] == 48.0);

  const CliResult qwc = run_cli({"runtime", "--walk", "qw-continuous", "--n", "100"});
  const auto qrows = parse_csv(qwc.out);
  CHECK(std::stod(qrows[1][1]) == doctest::Approx(15.70796).epsilon(1e-6));
}

TEST_CASE("table subcommand shapes") {
  const CliResult csv = run_cli({"table", "--n", "4", "--epsilon", "0.1"});
  REQUIRE(csv.status == 0);
  const auto rows = parse_csv(csv.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] ==
        std::vector<std::string>{"row", "rw-discrete", "rw-continuous", "qw-discrete",
                                 "qw-continuous"});
  CHECK(rows[5] == std::vector<std::string>{"Overall Runtime", "O(N)", "O(N)", "O(sqrt(N))",
                                            "O(sqrt(N))"});

  const CliResult n2 = run_cli({"table", "--n", "2", "--epsilon", "0.25", "--format", "json"});
  REQUIRE(n2.status == 0);
  const nlohmann::json doc = nlohmann::json::parse(n2.out);
  CHECK(doc["table"]["Probability"]["qw-discrete"] == "requires N >= 3");
  CHECK(doc["table"]["Runtime"]["rw-continuous"].is_number());
  CHECK(doc["table"]["Overall Runtime"]["qw-continuous"] == "O(sqrt(N))");

  const CliResult n100 = run_cli({"table", "--n", "100", "--format", "json"});
  const nlohmann::json d100 = nlohmann::json::parse(n100.out);
  CHECK(double(d100["table"]["Probability"]["qw-discrete"]) ==
        doctest::Approx(0.59).epsilon(0.017));
}

TEST_CASE("delta subcommand emits strictly decreasing maxima") {
  const CliResult r = run_cli({"delta", "--n", "4", "--n", "20", "--n", "40"});
  REQUIRE(r.status == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"n", "t_star", "delta_max", "asymptote"});
  const double d4 = std::stod(rows[1][2]);
  const double d20 = std::stod(rows[2][2]);
  const double d40 = std::stod(rows[3][2]);
  CHECK(d4 == doctest::Approx(0.176).epsilon(1e-3));
  CHECK(d4 > d20);
  CHECK(d20 > d40);
  CHECK(std::stod(rows[1][3]) == doctest::Approx(3.0 / (2.0 * std::exp(1.0) * 4.0)).epsilon(1e-9));
}

TEST_CASE("sample subcommand is deterministic per seed") {
  const std::vector<std::string> args{"sample", "--walk", "rw-continuous", "--n", "5",
                                      "--t-max", "10", "--dt", "1", "--seed", "42"};
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  const auto rows = parse_csv(a.out);
  CHECK(rows[0] == std::vector<std::string>{"t", "vertex"});
  REQUIRE(rows.size() == 12);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int v = std::stoi(rows[i][1]);
    CHECK(v >= 1);
    CHECK(v <= 5);
  }
}

TEST_CASE("marked vertex defaults to 1") {
  const CliResult without = run_cli({"simulate", "--walk", "rw-discrete", "--n", "5",
                                     "--t-max", "8"});
  const CliResult with = run_cli({"simulate", "--walk", "rw-discrete", "--n", "5", "--marked",
                                  "1", "--t-max", "8"});
  CHECK(without.out == with.out);
}

TEST_CASE("error paths exit nonzero with one diagnostic line") {
  const std::vector<std::vector<std::string>> bad{
      {"simulate", "--walk", "xy-walk", "--n", "4", "--t-max", "3"},
      {"simulate", "--walk", "qw-discrete", "--n", "2", "--t-max", "3"},
      {"simulate", "--walk", "rw-discrete", "--n", "4", "--t-max", "3.5"},
      {"simulate", "--walk", "rw-discrete", "--n", "4", "--t-max", "3", "--dt", "0.5"},
      {"simulate", "--walk", "rw-discrete", "--n", "4", "--t-max", "-1"},
      {"simulate", "--walk", "rw-discrete", "--n", "1", "--t-max", "3"},
      {"simulate", "--walk", "rw-discrete", "--n", "4", "--marked", "9", "--t-max", "3"},
      {"simulate", "--walk", "rw-discrete", "--t-max", "3"},
      {"simulate", "--walk", "rw-discrete", "--n", "4", "--t-max", "3", "--gamma", "0.2"},
      {"runtime", "--walk", "rw-discrete", "--n", "4", "--epsilon", "0.9"},
      {"runtime", "--walk", "rw-discrete", "--n", "2"},
      {"table", "--n", "4", "--epsilon", "0"},
      {"delta", "--n", "2"},
      {"nonsense"},
  };
  for (const auto& args : bad) {
    const CliResult r = run_cli(args);
    CHECK(r.status != 0);
    CHECK(r.out.empty());
    CHECK(newline_count(r.err) == 1);
  }
}

TEST_CASE("non-critical gamma is a note in full mode and an error otherwise") {
  const CliResult full = run_cli({"simulate", "--walk", "qw-continuous", "--n", "4", "--t-max",
                                  "2", "--gamma", "0.4"});
  CHECK(full.status == 0);
  CHECK(newline_count(full.err) == 1);  // single advisory note
  CHECK(full.out.find("t,success,conserved") == 0);

  const CliResult closed = run_cli({"simulate", "--walk", "qw-continuous", "--n", "4",
                                    "--t-max", "2", "--gamma", "0.4", "--mode", "closed"});
  CHECK(closed.status != 0);
  CHECK(newline_count(closed.err) == 1);
}

TEST_CASE("output lands in the requested file") {
  const std::string path = "cli_test_output.csv";
  std::remove(path.c_str());
  const CliResult r = run_cli({"simulate", "--walk", "rw-discrete", "--n", "4", "--t-max", "2",
                               "--output", path});
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str().find("t,success,conserved\n") == 0);
  file.close();
  std::remove(path.c_str());
}

TEST_CASE("help is available and exits cleanly") {
  const CliResult r = run_cli({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("simulate") != std::string::npos);
  CHECK(r.err.empty());
}
