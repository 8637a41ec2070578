#include "json.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

fs::path scratch()
{
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "zonalsym_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path)
{
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Run run(const std::string& args)
{
  const auto out = scratch() / "stdout.txt";
  const std::string cmd = std::string(ZONALSYM_BINARY) + " " + args + " > " + out.string() + " 2> " +
                          (scratch() / "stderr.txt").string();
  const int raw = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(raw));
  return {WEXITSTATUS(raw), slurp(out)};
}

} // namespace

TEST_CASE("eval prints value and derivatives")
{
  const auto r = run("eval --n 5 --x 1 --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"].get<double>() == 1.0);
  CHECK(j["derivative"].get<double>() == 15.0);
  CHECK(j["second_derivative"].is_null());

  const auto csv = run("eval --n 2 --x 0.2");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("n,x,value,derivative,second_derivative,bernstein_envelope\n", 0) == 0);
}

TEST_CASE("zeros, extrema and bessel tables")
{
  const auto zeros = run("zeros --n 8");
  CHECK(zeros.status == 0);
  CHECK(std::count(zeros.out.begin(), zeros.out.end(), '\n') == 5);
  const auto extrema = run("extrema --n 8 --format json");
  CHECK(extrema.status == 0);
  CHECK(nlohmann::json::parse(extrema.out)["extrema"].size() == 3);
  const auto bessel = run("bessel --count 4");
  CHECK(bessel.status == 0);
  CHECK(bessel.out.rfind("i,j_value,extremum\n1,3.83170597020", 0) == 0);
}

TEST_CASE("norms and series")
{
  const auto norms = run("norms --n 4,8 --p 6");
  CHECK(norms.status == 0);
  CHECK(norms.out.rfind("n,p,integral_plus,integral_minus,norm_ratio,quad_error\n4,6,", 0) == 0);
  const auto series = run("series --p 6 --tol 1e-6 --format json");
  CHECK(series.status == 0);
  const auto j = nlohmann::json::parse(series.out);
  CHECK(j["limit_bound"].get<double>() > 1.0);
  CHECK(j["extrema_sum"]["value"].get<double>() < 0.00951);
}

TEST_CASE("verify exit codes and file output")
{
  const auto report = scratch() / "report.json";
  const auto ok = run("verify --degree-cap 8 --format json --out " + report.string());
  CHECK(ok.status == 0);
  CHECK(ok.out.empty());
  const auto j = nlohmann::json::parse(slurp(report));
  CHECK(j["overall"] == "pass");
  CHECK(j["config"]["degree_cap"] == 8);

  // identical configuration, identical bytes
  const auto again = scratch() / "report2.json";
  CHECK(run("--format json verify --degree-cap 8 --jobs 3 --out " + again.string()).status == 0);
  auto strip_jobs = [](nlohmann::json v) {
    v["config"].erase("jobs");
    return v.dump();
  };
  CHECK(strip_jobs(j) == strip_jobs(nlohmann::json::parse(slurp(again))));
  const auto third = scratch() / "report3.json";
  CHECK(run("verify --degree-cap 8 --format json --out " + third.string()).status == 0);
  CHECK(slurp(report) == slurp(third));
}

TEST_CASE("failing checks exit with status 1")
{
  // a quadrature tolerance below double resolution cannot converge
  const auto r = run("verify --degree-cap 40 --rel-tol 1e-16 --base-nodes 8 --format json");
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["overall"] == "fail");
  bool saw_failure = false;
  for (const auto& c : j["checks"])
    saw_failure = saw_failure || c["status"] == "fail";
  CHECK(saw_failure);
}

TEST_CASE("usage errors exit with status 2")
{
  CHECK(run("verify --rel-tol 1").status == 2);
  CHECK(run("eval --n 3 --x 2").status == 2);
  CHECK(run("eval --n 20 --x 0.5 --degree-cap 10").status == 2);
  CHECK(run("zeros --n 8 --format xml").status == 2);
  CHECK(run("series --p 3").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("bessel --count 0").status == 2);
}

TEST_CASE("unwritable output is a runtime failure")
{
  CHECK(run("zeros --n 4 --out " + (scratch() / "no" / "such" / "file.csv").string()).status == 1);
}
