#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "coneham/cli.hpp"
#include "coneham/report.hpp"

using namespace coneham;
namespace fs = std::filesystem;

namespace {

const std::string kExample = "examples/paper_sec4.problem";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("coneham_test_" + name); }

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

fs::path write_variant(const std::string& name, const std::string& from, const std::string& to) {
  std::ifstream in(kExample);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (!from.empty()) text.replace(text.find(from), from.size(), to);
  const fs::path p = temp_path(name);
  std::ofstream(p) << text;
  return p;
}

void collect_numbers(const nlohmann::json& j, std::vector<double>& out) {
  if (j.is_number()) out.push_back(j.get<double>());
  if (j.is_structured())
    for (const auto& x : j) collect_numbers(x, out);
}

}  // namespace

TEST_CASE("certify the shipped example") {
  const fs::path json = temp_path("certify.json");
  const auto r = run({"certify", kExample, "--json", json.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("1.62601626016") != std::string::npos);
  CHECK(r.out.find("0.192450095808") != std::string::npos);
  CHECK(r.out.find("one-solution") != std::string::npos);
  const auto doc = read_json(json);
  CHECK(doc["command"] == "certify");
  CHECK(doc["certificate"]["strategy"] == "S1");
  CHECK(doc["certificate"]["conclusion"] == "one-solution");
  const double p0 = doc["certificate"]["verdicts"][0]["product"].get<double>();
  const double p1 = doc["certificate"]["verdicts"][1]["product"].get<double>();
  CHECK(std::abs(p0 - 200.0 / 123) < 1e-6);
  CHECK(std::abs(p1 - 1 / (3 * std::sqrt(3.0))) < 1e-6);
  CHECK(doc["certificate"]["localization"][0]["set"] == "K_alpha^{beta,0.5} \\ K_alpha^{gamma,0.05}");
}

TEST_CASE("every number in the human report is in the machine report") {
  const fs::path json = temp_path("numbers.json");
  const auto r = run({"certify", kExample, "--json", json.string()});
  REQUIRE(r.code == 0);
  std::vector<double> machine;
  collect_numbers(read_json(json), machine);
  std::vector<std::string> machine_text;
  for (double x : machine) machine_text.push_back(fmt(x));
  const std::regex number(R"([-+]?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?)");
  int checked = 0;
  for (std::sregex_iterator it(r.out.begin(), r.out.end(), number), end; it != end; ++it) {
    const std::string token = it->str();
    const auto pos = static_cast<std::size_t>(it->position());
    // Skip digits inside identifiers such as rho2, C5 or K_alpha^{beta,0.5}.
    if (pos > 0 && (std::isalpha(static_cast<unsigned char>(r.out[pos - 1])) || r.out[pos - 1] == '_')) continue;
    if (token.find('.') == std::string::npos && token.find('e') == std::string::npos) continue;
    ++checked;
    CHECK_MESSAGE(std::find(machine_text.begin(), machine_text.end(), token) != machine_text.end(), token);
  }
  CHECK(checked >= 8);
}

TEST_CASE("machine numbers carry at least 12 significant digits") {
  const fs::path json = temp_path("digits.json");
  REQUIRE(run({"certify", kExample, "--json", json.string(), "--quiet"}).code == 0);
  std::ifstream in(json);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto at = text.find("\"product\"");
  REQUIRE(at != std::string::npos);
  const std::string value = text.substr(text.find(':', at) + 1, 24);
  const double product = std::stod(value);
  CHECK(product == doctest::Approx(200.0 / 123).epsilon(1e-12));
  std::string digits;
  for (char c : value.substr(0, value.find_first_of(",\n"))) if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
  CHECK(digits.size() >= 12);
}

TEST_CASE("solve the shipped example") {
  const fs::path json = temp_path("solve.json");
  const auto r = run({"solve", kExample, "--json", json.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("in_annulus = true") != std::string::npos);
  const auto doc = read_json(json);
  CHECK(doc["localization"]["in_annulus"] == true);
  CHECK(doc["solution"]["residual_sup"].get<double>() <= 1e-10);
  CHECK(doc["solution"]["converged"] == true);
  CHECK(doc["oracle"]["passed"] == true);
}

TEST_CASE("gap failure exits 1") {
  const auto bad = write_variant("gap.problem", "rho = 0.05, 0.5", "rho = 0.05, 0.08");
  const auto r = run({"certify", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("not-established") != std::string::npos);
}

TEST_CASE("verify prints the hypothesis table") {
  const auto r = run({"verify", kExample, "--trials", "200"});
  CHECK(r.code == 0);
  for (const char* name : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"}) CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("reproduce the worked example") {
  const auto r = run({"reproduce-paper-example", "--trials", "200"});
  CHECK(r.code == 0);
  CHECK(r.out.find("DIFF") == std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"certify"}).code == 2);
  CHECK(run({"certify", "examples/missing.problem"}).code == 2);
  CHECK(run({"solve", kExample, "--rule", "simpson"}).code == 2);
  CHECK(run({"solve", kExample, "--grid", "zero"}).code == 2);
  CHECK(run({"functional-check"}).code == 2);
  CHECK(run({"functional-check", "no_such_functional"}).code == 2);
  const auto broken = write_variant("syntax.problem", "f = 4/(abs(v)+4)", "f = 4/(abs(v)+4");
  const auto r = run({"certify", broken.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("field f") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("functional-check") {
  CHECK(run({"functional-check", "jensen_gap", "--trials", "300", "--seed", "3"}).code == 0);
  CHECK(run({"functional-check", "min_window(0.25, 0.75, 0.5)", "--trials", "300"}).code == 0);
  CHECK(run({"functional-check", "nparallel", "--trials", "300"}).code == 0);
  const fs::path json = temp_path("fc.json");
  REQUIRE(run({"functional-check", "l1", "--trials", "50", "--seed", "77", "--json", json.string()}).code == 0);
  const auto doc = read_json(json);
  CHECK(doc["axioms"]["seed"] == 77);
  CHECK(doc["axioms"]["trials"] == 50);
}

TEST_CASE("seed defaults come from the environment") {
  const fs::path json = temp_path("env.json");
  ::setenv("CONEHAM_SEED", "4242", 1);
  REQUIRE(run({"functional-check", "l1", "--trials", "10", "--json", json.string()}).code == 0);
  CHECK(read_json(json)["axioms"]["seed"] == 4242);
  ::setenv("CONEHAM_SEED", "not-a-number", 1);
  CHECK(env_seed() == kDefaultSeed);
  ::unsetenv("CONEHAM_SEED");
  CHECK(env_seed() == kDefaultSeed);
}

TEST_CASE("quiet, json to stdout and grid overrides") {
  const auto quiet = run({"solve", kExample, "--quiet"});
  CHECK(quiet.code == 0);
  CHECK(quiet.out.empty());
  const auto piped = run({"solve", kExample, "--quiet", "--json", "-", "--grid", "401"});
  CHECK(piped.code == 0);
  CHECK(nlohmann::json::parse(piped.out)["problem"]["n"] == 401);
  // The Gauss grid only changes the discretization; its verdict is not asserted here.
  const auto gauss = run({"solve", kExample, "--quiet", "--json", "-", "--grid", "40", "--rule", "gauss"});
  const auto doc = nlohmann::json::parse(gauss.out);
  CHECK(doc["problem"]["n"] == 160);
  CHECK(doc["problem"]["rule"] == "gauss-legendre");
  const auto tol = run({"solve", kExample, "--quiet", "--json", "-", "--tol", "1e-6"});
  CHECK(nlohmann::json::parse(tol.out)["solution"]["tol"] == 1e-6);
}

TEST_CASE("S3 files report the second solution as not attempted") {
  const auto s3 = write_variant("s3.problem", "strategy = S1\nrho = 0.05, 0.5", "strategy = S3\nrho = 0.05, 0.5, 1");
  const auto r = run({"solve", s3.string()});
  CHECK(r.out.find("not-attempted") != std::string::npos);
  CHECK(run({"certify", s3.string(), "--quiet"}).code == 1);
}
