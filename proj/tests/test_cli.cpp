#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramellin/cli.hpp"

namespace rm = ramellin;

#ifndef RAMELLIN_CLI_PATH
#error "RAMELLIN_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string path = "cli_out_" + std::to_string(counter++) + ".tmp";
  std::string cmd = std::string(RAMELLIN_CLI_PATH) + " " + args + " > " + path + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  std::remove(path.c_str());
  return r;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("verify basic suite emits a full JSON report") {
  auto r = run_cli("verify --suite basic --no-timestamp");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "basic");
  REQUIRE(j["cases"].size() == 12);
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("params"));
    CHECK(c.contains("lhs"));
    CHECK(c.contains("rhs"));
    CHECK(c.contains("abs_err"));
    CHECK(c.contains("rel_err"));
    CHECK(c.contains("status"));
    CHECK(c.contains("notes"));
    CHECK(c["status"] == "PASS");
  }
  CHECK(j["summary"]["pass"] == 12);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(!j.contains("timestamp"));
}

TEST_CASE("eval a single identity") {
  auto r = run_cli("eval --identity ZETA_SINE_2_5 --s 0.25 --no-timestamp");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["cases"].size() == 1);
  const auto& c = j["cases"][0];
  CHECK(c["id"] == "ZETA_SINE_2_5");
  CHECK(c["params"]["s"] == 0.25);
  double lhs = c["lhs"], rhs = c["rhs"];
  CHECK(std::abs(lhs - rhs) <= 1e-5 * std::abs(rhs));
}

TEST_CASE("zeta pole point is rejected before computation") {
  CHECK(run_cli("verify --identity ZETA_SINE_2_5 --s 0.5").exit_code == 2);
  CHECK(run_cli("verify --suite zeta --s 0.5").exit_code == 2);
  CHECK(run_cli("verify --identity ZETA_COSINE_2_6 --s 1.5").exit_code == 2);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run_cli("verify --identity NO_SUCH_IDENTITY").exit_code == 2);
  CHECK(run_cli("verify --suite bogus").exit_code == 2);
  CHECK(run_cli("verify --wat 3").exit_code == 2);
  CHECK(run_cli("kernel --phi nope").exit_code == 2);
  CHECK(run_cli("kernel --xmin 5 --xmax 1").exit_code == 2);
  CHECK(run_cli("primes --op nothing").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // missing subcommand
}

TEST_CASE("deterministic output without timestamps") {
  auto a = run_cli("verify --suite hurwitz --no-timestamp");
  auto b = run_cli("verify --suite hurwitz --no-timestamp");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("csv format") {
  auto r = run_cli("verify --suite hurwitz --format csv --no-timestamp");
  REQUIRE(r.exit_code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() >= 3);
  CHECK(lines[0] == "# suite=hurwitz");
  CHECK(lines[1] == "id,params,lhs,rhs,abs_err,rel_err,status,notes");
  CHECK(lines.back().find("# summary pass=3") == 0);
}

TEST_CASE("kernel grid output") {
  auto r = run_cli("kernel --phi zeta --parity even --xmin 0 --xmax 50 --step 0.5");
  REQUIRE(r.exit_code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 102);  // header + 101 samples
  CHECK(lines[0] == "x,value,abs_err,flags");
  // first row: x = 0, value = zeta(2)
  double x, v;
  REQUIRE(std::sscanf(lines[1].c_str(), "%lf,%lf", &x, &v) == 2);
  CHECK(x == 0.0);
  CHECK(v == Catch::Approx(rm::pi * rm::pi / 6.0).epsilon(1e-10));
}

TEST_CASE("table output at explicit points") {
  std::ostringstream cmd;
  cmd.precision(17);
  cmd << "table --phi power --parity odd --x 0 " << rm::pi << " " << 2.0 * rm::pi;
  auto r = run_cli(cmd.str());
  REQUIRE(r.exit_code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 4);
  for (size_t i = 1; i < lines.size(); ++i) {
    double x, v;
    REQUIRE(std::sscanf(lines[i].c_str(), "%lf,%lf", &x, &v) == 2);
    CHECK(std::abs(v) <= 1e-10);  // sine zeros
  }

  auto b = run_cli("table --phi binomial --parity full --a 1 --v 2 --x 0 1 3");
  auto blines = split_lines(b.out);
  REQUIRE(blines.size() == 4);
  std::vector<double> expected = {1.0, 0.25, 0.0625};
  for (size_t i = 1; i < blines.size(); ++i) {
    double x, v;
    REQUIRE(std::sscanf(blines[i].c_str(), "%lf,%lf", &x, &v) == 2);
    CHECK(v == Catch::Approx(expected[i - 1]).epsilon(1e-10));
  }
}

TEST_CASE("primes subcommand") {
  auto c = run_cli("primes --op count --primes-limit 1000");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("pi(1000) = 168") != std::string::npos);

  auto m = run_cli("primes --op mobius --s 3 --K 20");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("value = ") != std::string::npos);

  CHECK(run_cli("primes --op mobius --s 0.5").exit_code == 2);

  auto d = run_cli("primes --op divergence --n 1 --primes-limit 10000");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("DIVERGENT") != std::string::npos);
  CHECK(d.out.find("checkpoint") != std::string::npos);
}

TEST_CASE("output file writing") {
  std::string path = "cli_file_out.tmp";
  auto r = run_cli("verify --suite basic --no-timestamp --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  auto j = nlohmann::json::parse(f);
  CHECK(j["summary"]["pass"] == 12);
  std::remove(path.c_str());
}

TEST_CASE("exit code policy on synthetic report sets") {
  rm::cli::CommonOpts opts;
  opts.out_path = "cli_policy_out.tmp";
  rm::IdentityReport pass_rep;
  pass_rep.status = rm::Status::Pass;
  rm::IdentityReport fail_rep;
  fail_rep.status = rm::Status::Fail;
  rm::IdentityReport ro_rep;
  ro_rep.status = rm::Status::ReportOnly;
  rm::IdentityReport div_rep;
  div_rep.status = rm::Status::Divergent;
  CHECK(rm::cli::finish(opts, "t", {pass_rep}) == 0);
  CHECK(rm::cli::finish(opts, "t", {pass_rep, ro_rep, div_rep}) == 0);
  CHECK(rm::cli::finish(opts, "t", {pass_rep, fail_rep}) == 1);
  CHECK(rm::cli::finish(opts, "t", {fail_rep, ro_rep}) == 1);
  std::remove("cli_policy_out.tmp");
}

TEST_CASE("report io round trips") {
  rm::IdentityReport rep;
  rep.kase.id = rm::IdentityId::RMT_1_2;
  rep.kase.params = {{"s", 0.5}, {"c", 1.0}};
  rep.lhs = 1.0 / 3.0;
  rep.rhs = 1.0 / 3.0;
  rep.abs_err = 0.0;
  rep.rel_err = 0.0;
  rep.status = rm::Status::Pass;
  rep.notes = "note with, comma and \"quote\"";
  auto j = nlohmann::json::parse(rm::io::suite_to_json("t", {rep}, false));
  CHECK(j["cases"][0]["lhs"].get<double>() == 1.0 / 3.0);
  CHECK(j["cases"][0]["notes"] == rep.notes);
  std::string csv = rm::io::suite_to_csv("t", {rep}, false);
  CHECK(csv.find("\"note with, comma and \"\"quote\"\"\"") != std::string::npos);
  CHECK(csv.find("s=0.5") != std::string::npos);
}
