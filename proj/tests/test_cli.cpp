#include "switchopt/analysis.hpp"
#include "switchopt/cli.hpp"
#include "switchopt/instance.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace switchopt;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "switchopt");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "switchopt-cli-test";
  fs::create_directories(dir);
  return dir;
}

const std::string example1 = SWITCHOPT_FIXTURES "/example1.json";

}  // namespace

TEST_CASE("solve on Example 1") {
  auto r = run({"solve", example1, "--objective", "l2sq"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value: 10946\n") != std::string::npos);
  CHECK(r.out.find("x(K): (89, 55)\n") != std::string::npos);
  CHECK(r.out.find("sequence: 0 0 0 0 0 0 0 0\n") != std::string::npos);
  auto b = run({"brute-force", example1});
  CHECK(b.code == 0);
  CHECK(b.out.find("value: 10946\n") != std::string::npos);

  auto trace = scratch() / "trace.csv";
  auto t = run({"solve", example1, "--engine", "lp", "--trace-out", trace.string()});
  CHECK(t.code == 0);
  std::string csv = slurp(trace);
  CHECK(csv.rfind("k,N_k\n0,1\n1,2\n", 0) == 0);
  // The CSV agrees with the N_k line on stdout.
  std::istringstream lines(csv);
  std::string line, joined;
  std::getline(lines, line);
  while (std::getline(lines, line))
    joined += (joined.empty() ? "" : " ") + line.substr(line.find(',') + 1);
  CHECK(t.out.find("N_k: " + joined + "\n") != std::string::npos);
}

TEST_CASE("trace-nk on the Sigma_2 fixture") {
  auto r = run({"trace-nk", SWITCHOPT_FIXTURES "/sigma2.json", "--K", "40"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "k,N_k");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::size_t k = std::stoul(line.substr(0, line.find(',')));
    std::size_t nk = std::stoul(line.substr(line.find(',') + 1));
    CHECK(k == rows);
    if (k >= 2)
      CHECK(nk <= 8 * k - 12);
    ++rows;
  }
  CHECK(rows == 41);
}

TEST_CASE("classify prints a CSV and the class members") {
  auto r = run({"classify", example1, "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("k,e0,e1,e2,e3,e4\n0,1,1,1,1,1\n", 0) == 0);
  CHECK(r.out.find("E1:") != std::string::npos);
}

TEST_CASE("gen-random is deterministic and parses back") {
  auto a = run({"gen-random", "--n", "3", "--m", "2", "--K", "20", "--seed", "42"});
  auto b = run({"gen-random", "--n", "3", "--m", "2", "--K", "20", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto c = run({"gen-random", "--seed", "43"});
  CHECK(c.out != a.out);
  auto inst = parse_instance(a.out);
  CHECK(std::holds_alternative<Instance<double>>(inst));

  auto path = scratch() / "int.json";
  auto i = run({"gen-random", "--n", "2", "--m", "2", "--K", "20", "--integer", "-o", path.string()});
  CHECK(i.code == 0);
  auto ex = load_instance(path.string());
  REQUIRE(std::holds_alternative<Instance<Rational>>(ex));
  const auto& e = std::get<Instance<Rational>>(ex);
  CHECK(e.K == 20);
  for (const auto& v : e.a) {
    CHECK(v >= 0);
    CHECK(v <= 9);
  }
}

TEST_CASE("gen-sat, solve, and the threshold") {
  auto dir = scratch();
  auto inst = dir / "unsat.json";
  auto g = run({"gen-sat", SWITCHOPT_FIXTURES "/unsat8.cnf", "-o", inst.string()});
  CHECK(g.code == 0);
  CHECK(g.out.find("threshold: 8") != std::string::npos);
  auto s = run({"solve", inst.string()});
  CHECK(s.code == 0);
  CHECK(s.out.find("value: 7\n") != std::string::npos);

  auto to_stdout = run({"gen-sat", SWITCHOPT_FIXTURES "/unsat8.cnf", "--right-stochastic"});
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.err.find("threshold: 8") != std::string::npos);
  CHECK_NOTHROW(parse_instance(to_stdout.out));
}

TEST_CASE("check-mortal and jsr-bound") {
  auto dir = scratch();
  auto nil = dir / "nil.json";
  std::ofstream(nil) << R"({"n":2,"m":1,"K":2,"arithmetic":"exact","matrices":[[[0,1],[0,0]]],"a":[1,0],
                            "objective":{"kind":"l1"}})";
  auto m = run({"check-mortal", nil.string(), "--k", "2"});
  CHECK(m.code == 0);
  CHECK(m.out == "mortal at k = 2\n");
  CHECK(run({"check-mortal", nil.string(), "--k", "1"}).out == "not mortal at k = 1\n");

  auto dil = dir / "dil.json";
  std::ofstream(dil) << R"({"n":2,"m":1,"K":3,"arithmetic":"exact","matrices":[[[2,0],[0,2]]],"a":[1,0],
                            "objective":{"kind":"l2sq"}})";
  auto j = run({"jsr-bound", dil.string(), "--k", "5", "--p", "inf"});
  CHECK(j.code == 0);
  CHECK(j.out == "lower bound: 2\n");
  auto bad = run({"jsr-bound", example1, "--k", "3"});
  CHECK(bad.code == 1);
}

TEST_CASE("export-minlp writes model and data") {
  auto prefix = scratch() / "ex1";
  auto r = run({"export-minlp", example1, "-o", prefix.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("state constraints: 16, assignment constraints: 8, binaries: 16") != std::string::npos);
  CHECK(fs::exists(prefix.string() + ".mod"));
  CHECK(slurp(prefix.string() + ".dat").find("param A") != std::string::npos);
}

TEST_CASE("bench") {
  auto r = run({"bench", "2,2,20x2;3,2,10x1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n2-m2-K0020-s1") != std::string::npos);
  CHECK(r.out.find("n3-m2-K0010-s1") != std::string::npos);
  auto e = run({"bench", "[]"});
  CHECK(e.code == 0);
}

TEST_CASE("usage and error exit codes") {
  CHECK(run({"solve", example1, "--bogus"}).code == 1);
  CHECK(run({}).code == 1);
  auto missing = run({"solve", "/nonexistent/instance.json"});
  CHECK(missing.code == 1);
  auto dir = scratch();
  auto broken = dir / "broken.json";
  std::ofstream(broken) << R"({"n":1,"m":1,"K":-1,"arithmetic":"exact","matrices":[[[1]]],"a":[1],
                               "objective":{"kind":"l1"}})";
  auto s = run({"solve", broken.string()});
  CHECK(s.code == 1);
  CHECK(s.err.find("/K") != std::string::npos);
  auto big = dir / "big.json";
  std::ofstream(big) << R"({"n":1,"m":2,"K":40,"arithmetic":"exact","matrices":[[[1]],[[2]]],"a":[1],
                            "objective":{"kind":"l1"}})";
  CHECK(run({"brute-force", big.string()}).code == 2);
}
