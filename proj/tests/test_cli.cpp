// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coinforge/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = coinforge::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("coinforge-test-" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("simulate dirichlet greedy reports a pool of one") {
  const auto dir = scratch("dirichlet");
  const auto r = invoke({"simulate", "--scenario", "dirichlet", "--strategy", "greedy", "--iterations",
                         "1000", "--runs", "10", "--out", dir.string()});
  REQUIRE_MESSAGE(r.status == 0, r.err);
  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(summary["mean_final_pool_size"].get<double>() == 1.0);
  CHECK(summary["runs"] == 10);

  const auto pool = lines(slurp(dir / "pool_size.csv"));
  CHECK(pool.front() == "iteration,mean_pool,std_pool");
  CHECK(pool.size() == 1001);
  CHECK(pool[1] == "1,1,0");
  CHECK(lines(slurp(dir / "inputs.csv")).front() == "iteration,mean_inputs,std_inputs");
  const auto hist = lines(slurp(dir / "histogram.csv"));
  CHECK(hist.front() == "bin_lo,bin_hi,count");
  CHECK(hist.size() == 201);
  CHECK(hist[1] == "2000,2000,10");

  const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(manifest["rng"] == "mt19937_64");
  CHECK(manifest["config"]["base_seed"] == 1);
  CHECK(manifest["strategy"] == "greedy");
}

TEST_CASE("same seed gives byte-identical csv output") {
  const auto a = scratch("repro-a");
  const auto b = scratch("repro-b");
  for (const auto& dir : {a, b}) {
    const auto r = invoke({"simulate", "--scenario", "normal", "--strategy", "bd", "--iterations", "300",
                           "--runs", "1", "--seed", "9", "--out", dir.string()});
    REQUIRE(r.status == 0);
  }
  for (const char* f : {"pool_size.csv", "inputs.csv", "histogram.csv", "summary.json"}) {
    CHECK(slurp(a / f) == slurp(b / f));
  }
}

TEST_CASE("invalid simulate flags fail") {
  const auto dir = scratch("bad");
  CHECK(invoke({"simulate", "--scenario", "normal", "--strategy", "bd", "--iterations", "0", "--out",
                dir.string()}).status != 0);
  CHECK(invoke({"simulate", "--scenario", "lognormal", "--strategy", "bd", "--out", dir.string()}).status != 0);
  CHECK(invoke({"simulate", "--scenario", "normal", "--strategy", "knapsack", "--out", dir.string()}).status != 0);
  CHECK(invoke({"simulate", "--scenario", "normal", "--strategy", "rd", "--bin-base", "10", "--out",
                dir.string()}).status != 0);
  CHECK(invoke({"simulate", "--scenario", "normal", "--strategy", "bd-binned", "--bin-base", "3", "--out",
                dir.string()}).status != 0);
  CHECK(invoke({}).status != 0);
}

TEST_CASE("unwritable output directory fails") {
  const auto blocker = scratch("blocker");
  std::ofstream(blocker) << "file, not a directory";
  const auto r = invoke({"simulate", "--scenario", "normal", "--strategy", "rd", "--iterations", "5",
                         "--out", (blocker / "sub").string()});
  CHECK(r.status != 0);
  fs::remove(blocker);
}

TEST_CASE("config file supplies flags and command line overrides it") {
  const auto dir = scratch("config");
  fs::create_directories(dir);
  const auto cfg = dir / "run.ini";
  std::ofstream(cfg) << "scenario = poisson\nstrategy = bd-binned\niterations = 50\nruns = 2\nbin-base = 10\n";
  const auto r = invoke({"simulate", "--config", cfg.string(), "--iterations", "20", "--out", (dir / "o").string()});
  REQUIRE_MESSAGE(r.status == 0, r.err);
  const auto manifest = nlohmann::json::parse(slurp(dir / "o" / "manifest.json"));
  CHECK(manifest["config"]["scenario"] == "poisson");
  CHECK(manifest["config"]["iterations"] == 20);
  CHECK(manifest["config"]["runs"] == 2);
  CHECK(manifest["config"]["bin_base"] == 10);
  CHECK(manifest["strategy"] == "bd-binned");
}

TEST_CASE("output directory defaults to COINFORGE_OUT") {
  const auto dir = scratch("env");
  ::setenv("COINFORGE_OUT", dir.string().c_str(), 1);
  const auto r = invoke({"simulate", "--scenario", "dirichlet", "--strategy", "rd", "--iterations", "10"});
  ::unsetenv("COINFORGE_OUT");
  REQUIRE(r.status == 0);
  CHECK(fs::exists(dir / "summary.json"));
}

TEST_CASE("bench emits one row per strategy and thread count") {
  const auto dir = scratch("bench");
  const auto r = invoke({"bench", "--strategy", "bd,rd,greedy", "--threads", "1,2,4,8,16", "--ops-per-thread",
                         "50", "--out", dir.string()});
  REQUIRE_MESSAGE(r.status == 0, r.err);
  const auto rows = lines(slurp(dir / "bench.csv"));
  REQUIRE(rows.size() == 1 + 15);
  CHECK(rows[0] == "strategy,threads,mean_latency_ns,contention_rate,total_spends");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream row(rows[i]);
    std::string strategy, threads, latency, rate, spends;
    std::getline(row, strategy, ',');
    std::getline(row, threads, ',');
    std::getline(row, latency, ',');
    std::getline(row, rate, ',');
    std::getline(row, spends, ',');
    CHECK(latency.find('.') == std::string::npos);
    CHECK(rate.size() >= 8);
    CHECK(std::stoul(spends) == 50 * std::stoul(threads));
    if (threads == "1") CHECK(rate == "0.000000000");
  }
}

TEST_CASE("bench with one thread reports zero contention") {
  const auto dir = scratch("bench1");
  const auto r = invoke({"bench", "--strategy", "greedy", "--threads", "1", "--ops-per-thread", "100", "--out",
                         dir.string()});
  REQUIRE(r.status == 0);
  const auto rows = lines(slurp(dir / "bench.csv"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].rfind("greedy,1,", 0) == 0);
  CHECK(rows[1].find(",0.000000000,100") != std::string::npos);
  CHECK(invoke({"bench", "--threads", "0", "--out", dir.string()}).status != 0);
}

}
