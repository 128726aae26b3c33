#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sylres/census.hpp"
#include "sylres/errors.hpp"
#include "sylres/groupio.hpp"

namespace fs = std::filesystem;
using namespace sylres;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SYLRES_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / "sylres_cli_test";
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string write_file(const fs::path& dir, const std::string& name,
                       const std::string& body) {
  fs::path p = dir / name;
  std::ofstream(p) << body;
  return p.string();
}

const char* kS4 =
    R"({"name":"s4","degree":4,"generators":[[2,3,4,1],[2,1,3,4]],"order":24})";
const char* kA5 =
    R"({"name":"a5","degree":5,
        "generators":[[2,3,1,4,5],[1,3,4,2,5],[1,2,4,5,3]]})";

}  // namespace

TEST_CASE("group JSON parsing: agreement fields and failure modes") {
  GroupFile gf = parse_group_json(kS4);
  CHECK(gf.name == "s4");
  CHECK(gf.group.order() == 24);
  // round trip through the writer
  GroupFile back = parse_group_json(group_to_json(gf));
  CHECK(back.group.order() == 24);
  CHECK(back.group.degree() == 4);

  CHECK_THROWS_AS(parse_group_json("{"), ParseError);
  CHECK_THROWS_AS(parse_group_json(R"({"degree":3})"), ParseError);
  CHECK_THROWS_AS(
      parse_group_json(
          R"({"name":"x","degree":3,"generators":[[1,2]]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_group_json(
          R"({"name":"x","degree":3,"generators":[[1,1,2]]})"),
      ParseError);
  // declared order must match
  CHECK_THROWS_AS(
      parse_group_json(
          R"({"name":"x","degree":3,"generators":[[2,3,1]],"order":5})"),
      ParseError);
  // cycle form must agree with the image list
  CHECK_THROWS_AS(
      parse_group_json(
          R"x({"name":"x","degree":3,"generators":[[2,3,1]],
               "cycles":["(1,2)"]})x"),
      ParseError);
  // degree cap enforced at ingestion
  CHECK_THROWS_AS(
      parse_group_json(
          R"({"name":"x","degree":100000,"generators":[]})"),
      CapExceeded);
}

TEST_CASE("check subcommand: verdict lines and exit codes") {
  fs::path dir = scratch_dir();
  std::string s4 = write_file(dir, "s4.json", kS4);
  auto r = run("check --group " + s4 + " --prime 2 --mode strong");
  CHECK(r.code == 0);
  std::istringstream ss(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(ss, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["group"] == "s4");
    CHECK(j["p"] == 2);
    std::string st = j["status"].get<std::string>();
    CHECK((st == "trivial-strong" || st == "strong"));
    ++lines;
  }
  CHECK(lines == 5);

  // all primes by default
  std::string a5 = write_file(dir, "a5.json", kA5);
  r = run("check --group " + a5);
  CHECK(r.code == 0);
  std::set<int> primes;
  std::istringstream ss2(r.out);
  while (std::getline(ss2, line))
    primes.insert(nlohmann::json::parse(line)["p"].get<int>());
  CHECK(primes == std::set<int>{2, 3, 5});

  // malformed input exits 1
  std::string bad = write_file(dir, "bad.json",
                               R"({"name":"bad","degree":3,
                                   "generators":[[1,2]]})");
  CHECK(run("check --group " + bad).code == 1);
  CHECK(run("check --group " + (dir / "missing.json").string()).code == 1);
}

TEST_CASE("census subcommand: determinism, filters, summary") {
  fs::path dir = scratch_dir();
  write_file(dir, "s4.json", kS4);
  write_file(dir, "a5.json", kA5);
  std::string out1 = (dir / "r1.jsonl").string();
  std::string out2 = (dir / "r2.jsonl").string();
  CHECK(run("census --corpus " + dir.string() + " --out " + out1 +
            " --jobs 1")
            .code == 0);
  CHECK(run("census --corpus " + dir.string() + " --out " + out2 +
            " --jobs 4")
            .code == 0);
  std::ifstream f1(out1), f2(out2);
  std::stringstream b1, b2;
  b1 << f1.rdbuf();
  b2 << f2.rdbuf();
  CHECK(b1.str() == b2.str());
  CHECK(!b1.str().empty());

  // census files are not group files; the corpus dir must skip non-.json
  write_file(dir, "notes.txt", "not json");
  CHECK(run("census --corpus " + dir.string() + " --out " + out1 +
            " --jobs 1")
            .code == 0);

  // empty corpus directory: empty report, success
  fs::path empty = dir / "empty";
  fs::create_directories(empty);
  auto r = run("census --corpus " + empty.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("census cache does not change verdicts") {
  fs::path dir = scratch_dir();
  write_file(dir, "s4.json", kS4);
  fs::path cache = dir / "cache";
  fs::create_directories(cache);
  std::string base = "census --corpus " + dir.string() + " --cache-dir " +
                     cache.string();
  auto cold = run(base);
  CHECK(cold.code == 0);
  CHECK(!fs::is_empty(cache));
  auto warm = run(base);
  CHECK(warm.code == 0);
  CHECK(cold.out == warm.out);
  // and identical to an uncached run
  auto plain = run("census --corpus " + dir.string());
  CHECK(plain.out == cold.out);
}

TEST_CASE("report lines are canonical JSON") {
  fs::path dir = scratch_dir();
  std::string s4 = write_file(dir, "s4.json", kS4);
  auto r = run("check --group " + s4 + " --prime 2");
  std::istringstream ss(r.out);
  std::string line;
  while (std::getline(ss, line)) {
    auto j = nlohmann::json::parse(line);
    // nlohmann dump() emits sorted keys; canonical form round-trips
    CHECK(j.dump() == line);
    CHECK(j.contains("schema"));
    CHECK(j.contains("engine"));
    CHECK(j.contains("group_hash"));
    CHECK(!j.contains("seconds"));  // no timing in canonical output
  }
}

TEST_CASE("table subcommand") {
  fs::path dir = scratch_dir();
  std::string s4 = write_file(dir, "s4.json", kS4);
  auto r = run("table --group " + s4);
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["degrees"].size() == 5);
}

TEST_CASE("families subcommand") {
  auto r = run("families --family sl2 --q 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);
  CHECK(run("families --family sl2 --q 6").code != 0);
}

TEST_CASE("gen-corpus round trips through the parser") {
  fs::path dir = scratch_dir() / "corpus";
  auto r = run("gen-corpus --out " + dir.string());
  CHECK(r.code == 0);
  size_t count = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    GroupFile gf = load_group_file(e.path().string());
    CHECK(gf.group.order() > 1);
    ++count;
  }
  CHECK(count == builtin_corpus().size());
  CHECK(count >= 40);
}
