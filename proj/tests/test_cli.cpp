#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "schubert/cli.hpp"

using namespace schubert;
using cli::Json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("schubert-test-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string str() const { return path_.string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

Json without_volatile(Json j) {
  j.erase("cached");
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("count emits the documented field set") {
  const auto r = run({"--no-cache", "count", "--regime", "complex", "-d", "3", "-k", "4"});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["value"] == "321489");
  for (const char* field : {"command", "regime", "d", "k", "m", "value", "feasible",
                            "orientable_grassmannian", "sym_power_orientable",
                            "euler_number_defined", "cached", "elapsed_ms", "engine_version",
                            "parameters", "feasibility"}) {
    CAPTURE(field);
    CHECK(j.contains(field));
  }
  CHECK(j["value"].is_string());
  CHECK(j["m"] == 5);
  CHECK(j["cached"] == false);
}

TEST_CASE("real count through the cli") {
  const auto r = run({"--no-cache", "count", "--regime", "real", "-d", "5", "-k", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["value"] == "37655727525");
  CHECK(from_decimal(r.json()["value"].get<std::string>()) == from_decimal("37655727525"));
}

TEST_CASE("exit codes") {
  const auto even = run({"--no-cache", "count", "--regime", "real", "-d", "2", "-k", "2"});
  CHECK(even.code == 2);
  CHECK(even.err.find("even") != std::string::npos);
  CHECK(even.json()["code"] == "EvenDegree");

  const auto infeasible = run({"--no-cache", "count", "--regime", "complex", "-d", "2", "-k", "2"});
  CHECK(infeasible.code == 2);
  CHECK(infeasible.json()["feasible"] == false);
  CHECK(infeasible.json()["value"].is_null());

  CHECK(run({"count", "--bogus"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"count", "--regime", "complex", "-d", "3"}).code == 64);
  CHECK(run({"count", "--regime", "imaginary", "-d", "3", "-k", "2"}).code == 64);
  CHECK(run({"--format", "csv", "count", "--regime", "complex", "-d", "3", "-k", "2"}).code == 64);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"schur", "--partition", "1,2"}).code == 2);
}

TEST_CASE("cache hit, corruption and bypass") {
  TempDir dir;
  const std::vector<std::string> args{"--cache-dir", dir.str(), "count", "--regime", "complex",
                                      "-d", "3", "-k", "2"};
  const auto first = run(args);
  REQUIRE(first.code == 0);
  CHECK(first.json()["cached"] == false);

  const auto second = run(args);
  CHECK(second.json()["cached"] == true);
  CHECK(without_volatile(first.json()).dump() == without_volatile(second.json()).dump());

  std::size_t files = 0;
  std::filesystem::path entry;
  for (const auto& e : std::filesystem::directory_iterator(dir.path())) {
    ++files;
    entry = e.path();
  }
  REQUIRE(files == 1);
  const auto stored = Json::parse(std::ifstream(entry));
  CHECK(stored.contains("created"));
  CHECK(stored["engine_version"] == cli::engine_version());

  std::ofstream(entry, std::ios::trunc) << "{\"key\": \"count|d=3";
  const auto third = run(args);
  CHECK(third.json()["cached"] == false);
  CHECK(third.json()["value"] == "27");
  CHECK(run(args).json()["cached"] == true);

  std::vector<std::string> bypass = args;
  bypass.insert(bypass.begin(), "--no-cache");
  CHECK(run(bypass).json()["cached"] == false);
}

TEST_CASE("no-cache leaves the directory untouched") {
  TempDir dir;
  run({"--no-cache", "--cache-dir", dir.str(), "count", "--regime", "complex", "-d", "3", "-k", "2"});
  CHECK(std::filesystem::is_empty(dir.path()));
}

TEST_CASE("cache keys") {
  CHECK(cli::ResultCache::canonical_key("count", {{"k", "2"}, {"d", "3"}}) == "count|d=3|k=2");
  TempDir dir;
  cli::ResultCache cache(dir.path());
  CHECK_FALSE(cache.lookup("missing").has_value());
  cache.store("x|a=1", Json{{"v", "1"}});
  CHECK((*cache.lookup("x|a=1"))["v"] == "1");
  // a file at the right path but recorded under another key is a miss
  std::ofstream(cache.path_for("x|a=2"))
      << Json{{"key", "other"}, {"engine_version", cli::engine_version()}, {"payload", Json::object()}}.dump();
  CHECK_FALSE(cache.lookup("x|a=2").has_value());
}

TEST_CASE("concurrent writers never leave a torn entry") {
  TempDir dir;
  cli::ResultCache cache(dir.path());
  Json big;
  for (int i = 0; i < 2000; ++i) big["v" + std::to_string(i)] = std::string(40, 'a' + i % 26);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&] {
      for (int i = 0; i < 20; ++i) cache.store("same", big);
    });
  }
  for (int i = 0; i < 50; ++i) {
    const auto hit = cache.lookup("same");
    if (hit) CHECK(*hit == big);
  }
  for (auto& t : pool) t.join();
  CHECK(*cache.lookup("same") == big);
}

TEST_CASE("other commands") {
  auto r = run({"--no-cache", "cubic-ci", "-r", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["value"] == "37017");
  CHECK(r.json()["catalan_substitution"] == "37017");

  r = run({"--no-cache", "incidence", "--regime", "real", "-n", "5"});
  CHECK(r.json()["value"] == "42");

  r = run({"schur", "--partition", "1,0"});
  CHECK(r.json()["poly"] == "1 * x1^1 x2^0 + 1 * x1^0 x2^1");

  r = run({"--no-cache", "lambda", "--regime", "complex", "-d", "3", "-k", "2", "--numeric"});
  CHECK(r.json()["value"] == "27");
  CHECK(r.json()["numeric"]["relative_error"].get<double>() < 1e-12);

  r = run({"--grid", "180", "scan", "-d", "3"});
  CHECK(r.json()["closed_form_max"] == "225");
  CHECK(r.json()["sign_constant"] == true);

  r = run({"--no-cache", "--format", "csv", "asymptote", "--table", "real", "--values", "1,3"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::string row1;
  std::string row3;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row3);
  CHECK(header == cli::csv_header_asymptote());
  CHECK(row3.rfind("real,3,189,", 0) == 0);

  r = run({"--format", "csv", "feasibility", "--regime", "complex", "-d", "3", "-k", "2,4"});
  CHECK(r.out == "d,k,regime,feasible,m,d_odd\n3,2,complex,true,2,true\n3,4,complex,true,5,true\n");
}

TEST_CASE("dump-poly is part of the request") {
  TempDir dir;
  const auto plain = run({"--cache-dir", dir.str(), "count", "--regime", "complex", "-d", "3", "-k", "2"});
  const auto dumped =
      run({"--cache-dir", dir.str(), "--dump-poly", "count", "--regime", "complex", "-d", "3", "-k", "2"});
  CHECK_FALSE(plain.json().contains("poly"));
  CHECK(dumped.json()["cached"] == false);
  CHECK(dumped.json()["poly"] == "18 * x1^3 x2^1 + 45 * x1^2 x2^2 + 18 * x1^1 x2^3");
}
