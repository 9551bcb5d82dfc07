#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli_runner.hpp"

#ifndef FERMAT_CLI_PATH
#error "FERMAT_CLI_PATH must point at the fermat-decomp binary"
#endif

namespace {

cli::result run(const std::string& args) { return cli::run(FERMAT_CLI_PATH, args); }

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("cli: decompose csv") {
  const auto r = run("decompose --n 2 --p 5 --format csv");
  CHECK(r.status == 0);
  CHECK(lines(r.out) == 4);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "T_bitmask,functional,dimension,kernel_order,prym_status");
  while (std::getline(in, line)) CHECK(line.find("\",2,5,") != std::string::npos);
}

TEST_CASE("cli: decompose markdown has 16 factor rows for (5,2)") {
  const auto r = run("decompose --n 5 --p 2 --format md");
  CHECK(r.status == 0);
  CHECK(r.out.find("factors: 16") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '{') >= 16);
}

TEST_CASE("cli: exit codes") {
  CHECK(run("decompose --n 2 --p 4").status == 2);
  CHECK(run("decompose --n 1 --p 5").status == 2);
  CHECK(run("decompose --n 9 --p 13").status == 2);
  CHECK(run("decompose --n 2 --p 5 --format xml").status == 2);
  CHECK(run("verify --n 2..2 --primes 9").status == 2);
  CHECK(run("verify --n 5..2 --primes 3").status == 2);
  CHECK(run("verify --n two --primes 3").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("cli: error message names the problem") {
  const std::string cmd = std::string("\"") + FERMAT_CLI_PATH + "\" decompose --n 2 --p 4 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string all;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) all += buf;
  ::pclose(pipe);
  CHECK(all.find("p must be prime") != std::string::npos);
}

TEST_CASE("cli: verify") {
  const auto r = run("verify --n 2..5 --primes 2,3,5 --format md");
  CHECK(r.status == 0);
  CHECK(r.out.find("all passed") != std::string::npos);
  const auto r37 = run("verify --n 3..3 --primes 7 --format json");
  CHECK(r37.status == 0);
  CHECK(r37.out.find("246") != std::string::npos);
}

TEST_CASE("cli: prym verdicts") {
  auto statuses = [](const std::string& json) {
    std::set<std::string> out;
    const auto doc = nlohmann::json::parse(json);
    for (const auto& v : doc.at("verdicts")) out.insert(v.at("status"));
    return out;
  };
  const auto r35 = run("prym --n 3 --p 5");
  CHECK(r35.status == 0);
  CHECK(statuses(r35.out) == std::set<std::string>{"NotPrymTyurin"});
  CHECK(statuses(run("prym --n 4 --p 3").out) == std::set<std::string>{"Inconclusive"});
  const auto r52 = run("prym --n 5 --p 2");
  CHECK(statuses(r52.out) == std::set<std::string>{"PrymTyurinKnown"});
  const auto doc52 = nlohmann::json::parse(r52.out);
  for (const auto& v : doc52.at("verdicts")) CHECK(v.at("exponent") == 4);
}

TEST_CASE("cli: characters") {
  auto dims = [](const std::string& json) {
    std::vector<std::uint64_t> out;
    const auto doc = nlohmann::json::parse(json);
    for (const auto& k : doc.at("kernel_classes")) {
      out.push_back(k.at("block_dimension"));
    }
    return out;
  };
  auto d25 = dims(run("characters --n 2 --p 5").out);
  CHECK(d25.size() == 6);
  std::sort(d25.begin(), d25.end(), std::greater<>());
  CHECK(d25 == std::vector<std::uint64_t>{2, 2, 2, 0, 0, 0});
  const auto d32 = dims(run("characters --n 3 --p 2").out);
  CHECK(d32.size() == 7);
  CHECK(std::accumulate(d32.begin(), d32.end(), std::uint64_t{0}) == 1);
  const auto d23 = dims(run("characters --n 2 --p 3").out);
  CHECK(std::accumulate(d23.begin(), d23.end(), std::uint64_t{0}) == 1);
}

TEST_CASE("cli: humbert-edge and genus") {
  const auto r = run("humbert-edge --n 5 --format md");
  CHECK(r.status == 0);
  CHECK(r.out.find("4^17") != std::string::npos);
  CHECK(r.out.find("not checked") != std::string::npos);
  const auto g = run("genus --n 4 --p 3");
  CHECK(g.status == 0);
  CHECK(g.out.find("55") != std::string::npos);
}

TEST_CASE("cli: output is byte-identical across runs") {
  for (const char* args : {"decompose --n 4 --p 3", "decompose --n 4 --p 3 --format csv",
                           "prym --n 5 --p 2 --format md", "characters --n 3 --p 3",
                           "verify --n 2..4 --primes 2,3 --format json"}) {
    CAPTURE(args);
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("cli: --out writes the same bytes as stdout") {
  const std::string path = "cli_out_test.json";
  std::remove(path.c_str());
  REQUIRE(run("decompose --n 3 --p 3 --out " + path).status == 0);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == run("decompose --n 3 --p 3").out);
  std::remove(path.c_str());
}
