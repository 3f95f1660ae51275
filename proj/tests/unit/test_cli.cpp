#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cubmon_tools/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cubmon::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cubmon-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

}  // namespace

TEST_CASE("successful commands exit 0") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gamma", "stats", "--k", "4"},
           {"gamma", "export", "--k", "3", "--format", "dot"},
           {"lattice", "gram", "--k", "2"},
           {"lattice", "radical", "--k", "4"},
           {"lattice", "quotient", "--k", "4"},
           {"lattice", "rank", "--k", "4"},
           {"rep", "check-relations", "--sign", "-1"},
           {"rep", "witnesses"},
           {"rep", "qform"},
           {"rep", "irreducible"},
           {"rep", "parity"},
           {"chains", "verify", "--seq", "0001,0101,0100,0110,0010,1010,1000"},
           {"chains", "enumerate", "--k", "3", "--length", "3"},
           {"chains", "witnesses"},
           {"realize", "validate", "--pattern", "twelve"},
           {"realize", "bound", "--pattern", "chain7"},
           {"realize", "min-genus", "--pattern", "ten", "--budget", "5"},
           {"realize", "check", "--pattern", "chain7", "--genus", "3"},
       }) {
    const auto r = cli(args);
    INFO(args[0] << " " << args[1] << ": " << r.err);
    CHECK(r.code == cubmon::cli::kOk);
    CHECK_FALSE(r.out.empty());
  }
  CHECK(cli({"--help"}).code == cubmon::cli::kOk);
}

TEST_CASE("failed checks exit 1") {
  CHECK(cli({"chains", "verify", "--seq", "0000,0001,0011,0000"}).code == cubmon::cli::kCheckFailed);
  CHECK(cli({"chains", "verify", "--seq", "0000,0001,0011,0111", "--cycle"}).code == cubmon::cli::kCheckFailed);
}

TEST_CASE("negative answers to a query still exit 0") {
  const auto check = cli({"realize", "check", "--pattern", "chain7", "--genus", "2", "--json"});
  CHECK(check.code == cubmon::cli::kOk);
  CHECK(json::parse(check.out)["result"]["realizable"] == false);
  const auto min = cli({"realize", "min-genus", "--pattern", "chain7", "--budget", "2", "--json"});
  CHECK(min.code == cubmon::cli::kOk);
  CHECK(json::parse(min.out)["result"]["verdict"] == "Exceeds");
}

TEST_CASE("invalid input exits 2") {
  TempDir dir;
  const auto bad = dir.write("bad.json", R"({"curves":["a","b","c"],"intersections":[["a","b"]]})");
  const auto garbage = dir.write("garbage.json", "{not json");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"nonsense"},
           {"gamma", "stats", "--k", "12"},
           {"gamma", "export", "--format", "svg"},
           {"rep", "check-relations", "--sign", "2"},
           {"chains", "verify", "--seq", "0000,001"},
           {"realize", "min-genus", "--pattern", "no-such-pattern"},
           {"realize", "min-genus", "--pattern", garbage.string()},
           {"realize", "min-genus", "--pattern", "ten", "--fix-bit", "a,a=1"},
           {"realize", "min-genus", "--pattern", "ten", "--fix-order", "broken"},
           {"realize", "validate", "--pattern", bad.string()},
       }) {
    const auto r = cli(args);
    INFO((args.empty() ? std::string("<none>") : args[0]) << ": " << r.out << r.err);
    CHECK(r.code == cubmon::cli::kInvalidInput);
  }
}

TEST_CASE("resource caps exit 3") {
  const auto r = cli({"realize", "min-genus", "--pattern", "twelve", "--budget", "5", "--node-limit", "1000"});
  CHECK(r.code == cubmon::cli::kInconclusive);
}

TEST_CASE("JSON output carries a manifest") {
  const auto r = cli({"realize", "min-genus", "--pattern", "chain7", "--budget", "5", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["exit_code"] == 0);
  CHECK(j["result"]["genus"] == 3);
  CHECK(j["manifest"]["command"] == "realize min-genus");
  CHECK(j["manifest"]["input_hashes"].contains("pattern"));
  CHECK(j["manifest"]["parameters"]["budget"] == 5);

  const auto g = json::parse(cli({"gamma", "export", "--k", "4", "--json"}).out);
  CHECK(g["result"]["edges"].size() == 65);
}

TEST_CASE("witness export and re-check") {
  TempDir dir;
  const auto w = dir.path / "ten-witness.json";
  REQUIRE(cli({"realize", "min-genus", "--pattern", "ten", "--budget", "5", "--witness-out", w.string()}).code == 0);
  REQUIRE(fs::exists(w));
  const auto r = cli({"realize", "check", "--pattern", "ten", "--witness", w.string(), "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["result"]["genus"] == 3);
  CHECK(cli({"realize", "check", "--pattern", "ten", "--witness", w.string(), "--genus", "2"}).code == cubmon::cli::kCheckFailed);
}

TEST_CASE("cache files resume") {
  TempDir dir;
  const auto c = (dir.path / "ten.jsonl").string();
  REQUIRE(cli({"realize", "min-genus", "--pattern", "ten", "--cache", c}).code == 0);
  const auto r = cli({"realize", "min-genus", "--pattern", "ten", "--cache", c, "--resume", "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["result"]["tasks_from_cache"].get<int>() > 0);
}
