#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wada/cli.hpp"
#include "wada/io.hpp"

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "wada");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = wada::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"space", "-m", "4", "-p", "2"}).code == wada::cli::kOk);
  CHECK(run({"space", "-m", "1", "-p", "2"}).code == wada::cli::kUsage);
  CHECK(run({"space", "-m", "3", "-p", "4"}).code == wada::cli::kUsage);
  CHECK(run({"nonsense"}).code == wada::cli::kUsage);
  CHECK(run({}).code == wada::cli::kUsage);
  CHECK(run({"reproduce"}).code == wada::cli::kUsage);
  CHECK(run({"aut", "-m", "4", "-p", "2"}).code == wada::cli::kUsage);
  CHECK(run({"--budget", "2", "order", "-m", "4", "-p", "3", "--frobenius"}).code == wada::cli::kBudget);
  CHECK(run({"dessin", "-m", "6", "-p", "5"}).code == wada::cli::kSizeGuard);
}

TEST_CASE("text output starts with the version header") {
  const auto r = run({"space", "-m", "4", "-p", "2"});
  CHECK(r.out.rfind("# wada 1.0.0\n", 0) == 0);
  CHECK(r.out.find("nice-case: yes") != std::string::npos);
}

TEST_CASE("json output is pure and deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "space", "-m", "4", "-p", "2", "-e", "2"},
           {"--json", "diffset", "-m", "3", "-p", "3", "--orbits", "--shifts"},
           {"--json", "order", "-m", "4", "-p", "2", "--frobenius"},
           {"--json", "dessin", "-m", "4", "-p", "2"},
           {"--json", "aut", "-m", "4", "-p", "2", "--map", "2,0", "--group"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(wada::io::Json::accept(a.out));
  }
  const auto j = wada::io::Json::parse(run({"--json", "dessin", "-m", "4", "-p", "2"}).out);
  CHECK(j["genus"] == 195);
  CHECK(j["wada"] == true);
  const auto a = wada::io::Json::parse(run({"--json", "aut", "-m", "4", "-p", "2", "--map", "2,0", "--group"}).out);
  CHECK(a["map_report"]["valid"] == true);
}

TEST_CASE("dessin from files and graph export") {
  const std::string order = "cli_test_order.json", dot = "cli_test.dot", svg = "cli_test.svg";
  {
    std::ofstream(order) << R"({"modulus": 31, "order": [1, 3, 15, 2, 6, 30, 4, 12, 29, 8, 24, 27, 16, 17, 23]})";
  }
  const auto r = run({"dessin", "--order", order, "--dot", dot, "--svg", svg});
  CHECK(r.code == 0);
  CHECK(r.out.find("genus: 195") != std::string::npos);
  std::ifstream d(dot), s(svg);
  std::string dot_text((std::istreambuf_iterator<char>(d)), {}), svg_text((std::istreambuf_iterator<char>(s)), {});
  CHECK(dot_text.find("graph") != std::string::npos);
  CHECK(svg_text.find("<svg") != std::string::npos);
  const auto g = run({"aut", "--order", order, "-p", "2", "--group"});
  CHECK(g.code == 0);
  CHECK(g.out.find("free on edges: yes") != std::string::npos);
  CHECK(run({"dessin", "--order", "missing.json"}).code == wada::cli::kUsage);
  std::remove(order.c_str());
  std::remove(dot.c_str());
  std::remove(svg.c_str());
}

TEST_CASE("reproduce examples passes") {
  const auto r = run({"reproduce", "--examples"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
