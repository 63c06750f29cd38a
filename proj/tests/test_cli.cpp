#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "clt/serialize.hpp"
#include "doctest.h"

using namespace clt;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("clt_test_" + name);
}

template <class T>
void round_trip(const T& value) {
  const json j = value;
  const T back = json::parse(j.dump()).get<T>();
  CHECK(back == value);
}

}  // namespace

TEST_CASE("usage errors") {
  const auto empty = run_cli({});
  CHECK(empty.code == 2);
  CHECK_FALSE(empty.err.empty());
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"constant", "--R", "abc"}).code == 2);
  const auto bad = run_cli({"constant", "--P", "1,1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("P(0)=0 violated") != std::string::npos);
  const auto parse = run_cli({"constant", "--P", "0,x"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("'x'") != std::string::npos);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("computation errors exit 1 with a JSON error object") {
  const auto r = run_cli({"psi", "1e13"});
  CHECK(r.code == 1);
  const auto j = json::parse(r.out);
  CHECK(j.contains("error"));
  CHECK(j["error"].contains("code"));
}

TEST_CASE("constant command") {
  const auto r = run_cli({"constant"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(std::abs(j["c_exact"].get<double>() - j["c_quadrature"].get<double>()) < 1e-9);
  CHECK(j["published_claim"]["c"] == 2.35);
  CHECK(j["published_discrepancy"] == false);
  CHECK(j.get<ConstantReport>() == constant_report(LevinsonParams::baseline()));
  const auto sq = json::parse(run_cli({"constant", "--functional", "squared"}).out);
  CHECK(sq["c_exact"].get<double>() == doctest::Approx(2.35006777611844));
}

TEST_CASE("config files") {
  const auto path = temp_path("config.toml");
  {
    std::ofstream f(path);
    f << "# comment\nR = 1.2\ntheta=0.4\n";
  }
  auto j = json::parse(run_cli({"--config", path.string(), "constant"}).out);
  CHECK(j["params"]["R"] == 1.2);
  CHECK(j["params"]["theta"] == 0.4);
  j = json::parse(run_cli({"--config", path.string(), "constant", "--R", "1.5"}).out);
  CHECK(j["params"]["R"] == 1.5);
  {
    std::ofstream f(path);
    f << "bogus = 1\n";
  }
  const auto bad = run_cli({"--config", path.string(), "constant"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown config key 'bogus'") != std::string::npos);
  {
    std::ofstream f(path);
    f << "no equals sign\n";
  }
  CHECK(run_cli({"--config", path.string(), "constant"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("atomic output") {
  const auto path = temp_path("out.json");
  std::filesystem::remove(path);
  const auto r = run_cli({"--output", path.string(), "psi", "100"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  const auto j = json::parse(f);
  CHECK(j["psi"].get<double>() == doctest::Approx(94.0453112293574).epsilon(1e-12));
  for (const auto& e : std::filesystem::directory_iterator(path.parent_path())) {
    CHECK(e.path().filename().string().find("clt_test_out.json.tmp") == std::string::npos);
  }
  std::filesystem::remove(path);
  cli::write_atomically(path.string(), "abc");
  std::ifstream g(path);
  std::string s;
  g >> s;
  CHECK(s == "abc");
  std::filesystem::remove(path);
}

TEST_CASE("csv helpers") {
  CHECK(cli::csv_field("plain") == "plain");
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(cli::csv_number(0.1) == "0.10000000000000001");
}

TEST_CASE("zeros and chars output") {
  const auto r = run_cli({"--format", "csv", "zeros", "--tmin", "0", "--tmax", "100", "--step", "0.05"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "ordinate,z_value_residual");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 29);
  const auto chars = json::parse(run_cli({"chars", "5"}).out);
  REQUIRE(chars["characters"].size() == 4);
  const auto zj = json::parse(run_cli({"zeta", "--sigma", "0.5", "--t", "14.134725141734694"}).out);
  CHECK(zj.contains("hardy_z"));
}

TEST_CASE("registry output keeps printed strings") {
  const auto j = json::parse(run_cli({"registry"}).out);
  REQUIRE(j["tuples"].size() == 3);
  CHECK(j["tuples"][1]["Q"]["provenance"] == "Q(x)=1-0.642x-1.227(x^2/2-x^3/3)-5.178(x^3/3-x^4/2+x^5/5)");
  CHECK(j["tuples"][2]["not_reproducible_here"] == true);
  const auto csv = run_cli({"--format", "csv", "registry"});
  CHECK(csv.out.find("tuple,symbol,provenance,coefficients") == 0);
}

TEST_CASE("report round trips") {
  round_trip(Polynomial{0.1, -2.5, 3.0});
  round_trip(LevinsonParams::baseline());
  round_trip(count_critical_zeros(10.0, 40.0, 0.1));
  round_trip(constant_report(LevinsonParams::baseline()));
  LevinsonParams other = LevinsonParams::baseline();
  other.r_shift = 1.1;
  round_trip(constant_report(other));
  SearchSpace s;
  s.r_min = 1.0;
  s.r_max = 1.5;
  s.restarts = 2;
  round_trip(optimize_kappa(s));
  round_trip(mollified_moment_numeric(LevinsonParams::baseline(), 300.0, 0.2, 1,
                                      LevinsonFunctional::printed, true));
  CHECK(complex_from_json(complex_to_json(Complex(1.5, -2.25))) == Complex(1.5, -2.25));
}
