#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SEGSTAT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("bell command") {
  CHECK(run("bell --n 4 --r 2 --weights all-ones").out == "7\n");
  CHECK(run("bell --n 3 --r 3 --weights symbolic").out == "1*t1^3\n");
  CHECK(run("bell --n 3 --r 2 --weights symbolic").out == "3*t1*t2\n");
  const Run oracle = run("bell --n 6 --r 3 --oracle");
  CHECK(oracle.code == 0);
  CHECK(run("bell --n 3").code == 1);
  CHECK(run("bell --n 3 --r 1 --weights nonsense").code == 1);
}

TEST_CASE("motzkin command") {
  CHECK(run("motzkin weighted --m 1 --k 1").out == "3*t1*s1\n");
  CHECK(run("motzkin count --m 0 --k 5").out == "1\n");
  CHECK(run("motzkin count --m 3 --k 2 --method brute").out == run("motzkin count --m 3 --k 2").out);
  CHECK(run("motzkin weighted --m 2 --k 2 --method series").out == run("motzkin weighted --m 2 --k 2").out);
  CHECK(run("motzkin weighted --m 1 --k 1 --by-segments 1,1").out == "3*t1*s1\n");
  CHECK(run("motzkin weighted --m 2 --k 1 --weights stirling").out == run("motzkin weighted --m 2 --k 1 --weights stirling --method brute").out);
  CHECK(run("motzkin count --m 9 --k 0 --method brute").code == 3);
  CHECK(run("motzkin bogus --m 1").code == 1);
  CHECK(run("motzkin weighted --m 1 --k 1 --format yaml").code == 1);
}

TEST_CASE("motzkin table csv") {
  const Run r = run("motzkin table --max-n 6 --weights all-ones --format csv");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,m=0,m=1,m=2,m=3");
  const long motzkin[] = {1, 1, 2, 4, 9, 21, 51};
  for (long n = 0; n <= 6; ++n) {
    REQUIRE(std::getline(in, line));
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    CHECK(std::stol(cell) == n);
    long sum = 0;
    while (std::getline(cells, cell, ',')) sum += std::stol(cell);
    CHECK(sum == motzkin[n]);
  }
}

TEST_CASE("comp and matcomp commands") {
  CHECK(run("comp count --m 2 --j 3 --k 1").out == "3\n");
  CHECK(run("comp weighted --m 2 --j 3 --k 1").out == "3*t1^2*s1\n");
  CHECK(run("comp restricted --m 4 --j 3 --allowed 1,2").out == "3\n");
  CHECK(run("comp restricted --m 3 --j 2 --forbid 1").out == "0\n");
  CHECK(run("matcomp zero-one --p 4 --j 2 --m 3").out == "16\n");
  CHECK(run("matcomp trees --v 4 --j 2").out == "4\n");
  CHECK(run("matcomp weighted --m 2 --p 2 --j 1").out == "1*t1^2 + 2*t2\n");
  CHECK(run("matcomp count --m 2 --p 2 --j 1").out == "3\n");
  CHECK(run("matcomp trees --v 12 --j 2").code == 3);
}

TEST_CASE("csv weight files") {
  const std::string path = "segstat_test_weights.csv";
  {
    std::ofstream f(path);
    f << "# family,index,numerator,denominator\nt,1,1,2\nt,2,3,1\ns,1,-1,1\n";
  }
  CHECK(run("bell --n 3 --r 2 --weights csv:" + path).out == "9/2\n");
  CHECK(run("motzkin weighted --m 1 --k 1 --weights csv:" + path).out == "-3/2\n");
  {
    std::ofstream f(path);
    f << "t,1,1\n";
  }
  CHECK(run("bell --n 3 --r 2 --weights csv:" + path).code == 1);
  CHECK(run("bell --n 3 --r 2 --weights csv:does-not-exist.csv").code == 1);
  std::remove(path.c_str());
}

TEST_CASE("verify command") {
  CHECK(run("verify --suite core-identities --max-n 12").code == 0);
  const Run motz = run("verify --suite motzkin --max-n 6");
  CHECK(motz.code == 0);
  CHECK(motz.out.find("triple agreement: PASS") != std::string::npos);
  const Run json = run("verify --suite bell --max-n 5 --format json");
  CHECK(json.code == 0);
  const auto report = nlohmann::json::parse(json.out);
  REQUIRE(report.is_array());
  CHECK(!report.empty());
  for (const auto& rec : report) {
    CHECK(rec.contains("suite"));
    CHECK(rec.contains("identity"));
    CHECK(rec.contains("range"));
    CHECK(rec["status"] == "PASS");
    CHECK_FALSE(rec.contains("counterexample"));
  }
  CHECK(run("verify --suite nope --max-n 3").code == 1);
}

TEST_CASE("output is deterministic") {
  const std::string args = "verify --suite compositions --max-n 5 --format json --jobs 3";
  CHECK(run(args).out == run(args).out);
  CHECK(run(args).out == run("verify --suite compositions --max-n 5 --format json").out);
}
