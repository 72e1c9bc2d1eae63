#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "symidem/cli.hpp"
#include "symidem/json_io.hpp"

using namespace symidem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("symidem_test_" + name);
}

}  // namespace

TEST_CASE("construct emits the expected number of tensors") {
  const auto r = run({"construct", "--algebra", "h", "--field", "gaussian", "--n", "3", "--ell", "2"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["elements"].size() == 2);
  CHECK(j["metadata"]["expected_count"] == 2);

  const auto tau = run({"construct", "--algebra", "o", "--field", "rational", "--n", "2", "--m", "2"});
  REQUIRE(tau.code == 0);
  CHECK(Json::parse(tau.out)["elements"].size() == 4);

  const auto cor2 = run({"construct", "--algebra", "h", "--field", "rational", "--n", "4"});
  REQUIRE(cor2.code == 0);
  CHECK(Json::parse(cor2.out)["elements"].size() == 9);

  const auto cor4 = run({"construct", "--algebra", "o", "--field", "gaussian", "--n", "2"});
  REQUIRE(cor4.code == 0);
  CHECK(Json::parse(cor4.out)["elements"].size() == 5);
}

TEST_CASE("construct output is byte-identical across runs") {
  const std::vector<std::string> args{"construct", "--algebra", "h", "--field", "gaussian", "--n", "4", "--ell", "3"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("constructed fixtures pass check_set after a round trip") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"construct", "--algebra", "h", "--field", "rational", "--n", "3"},
           {"construct", "--algebra", "o", "--field", "gaussian", "--n", "3", "--m", "2"}}) {
    const auto path = temp_file("fixture.json");
    auto full = args;
    full.insert(full.end(), {"--out", path.string()});
    REQUIRE(run(full).code == 0);
    const auto v = run({"verify", "--fixture", path.string()});
    CHECK(v.code == 0);
    CHECK(v.out.find("PASS fixture") != std::string::npos);
    std::filesystem::remove(path);
  }
}

TEST_CASE("a tampered fixture fails verification") {
  const auto path = temp_file("tampered.json");
  const auto c = run({"construct", "--algebra", "h", "--field", "gaussian", "--n", "2", "--ell", "2"});
  Json j = Json::parse(c.out);
  j["elements"][0]["tensor"]["terms"][0]["coeff"] = "7/1";
  std::ofstream(path) << j.dump();
  const auto v = run({"verify", "--fixture", path.string(), "--format", "json"});
  CHECK(v.code == 3);
  const Json report = Json::parse(v.out);
  CHECK(report["summary"]["failed"] == 1);
  CHECK(report["results"][0]["witnesses"].contains("left_label"));
  std::filesystem::remove(path);
}

TEST_CASE("range errors exit with status 2 and name the bound") {
  const auto r = run({"construct", "--algebra", "h", "--n", "3", "--ell", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("ell must lie in [ceil(n/2), n]") != std::string::npos);
  CHECK(run({"construct", "--algebra", "o", "--n", "4", "--m", "5"}).code == 2);
  CHECK(run({"construct", "--algebra", "o", "--n", "2", "--ell", "2"}).code == 2);
  CHECK(run({"construct", "--algebra", "h", "--n", "2", "--m", "2"}).code == 2);
  CHECK(run({"construct", "--algebra", "x", "--n", "2"}).code == 2);
  CHECK(run({"construct", "--n", "0"}).code == 2);
  CHECK(run({"construct"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--profile", "huge"}).code == 2);
  CHECK(run({"verify", "--fixture", "/nonexistent/fixture.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("dims tabulates counts") {
  const auto r = run({"dims", "--n", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  auto row = [&](const std::string& field, const std::string& scope) {
    for (const auto& x : j["rows"]) {
      if (x["field"] == field && x["scope"] == scope) return x;
    }
    return Json();
  };
  CHECK(row("gaussian", "h")["closed_form"] == 12);
  CHECK(row("gaussian", "h")["realized"] == 12);
  CHECK(row("rational", "h")["closed_form"] == 6);
  CHECK(row("gaussian", "o")["realized"].is_null());
  const Json n2 = Json::parse(run({"dims", "--n", "2", "--format", "json"}).out);
  for (const auto& x : n2["rows"]) {
    if (x["field"] == "gaussian" && x["scope"] == "o") CHECK(x["closed_form"] == 5);
  }
  const Json n3 = Json::parse(run({"dims", "--n", "3", "--format", "json"}).out);
  for (const auto& x : n3["rows"]) {
    if (x["field"] == "rational" && x["scope"] == "h") CHECK(x["closed_form"] == 3);
    CHECK(x["match"] == true);
  }
  CHECK(run({"dims", "--n", "3"}).out.find("(n+1)(n+3)/8") != std::string::npos);
}

TEST_CASE("verify writes a report file and prints a summary") {
  const auto path = temp_file("report.json");
  const auto r = run({"verify", "--profile", "quick", "--format", "json", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("summary:") != std::string::npos);
  std::ifstream in(path);
  const Json report = Json::parse(in);
  CHECK(report["summary"]["failed"] == 0);
  CHECK(report["profile"] == "quick");
  CHECK_FALSE(report["results"][0].contains("elapsed_ms"));
  std::filesystem::remove(path);
}

TEST_CASE("quick profile treats skipped checks as failures") {
  const auto r = run({"verify", "--profile", "quick", "--dense-bound", "16"});
  CHECK(r.code == 3);
  CHECK(r.out.find("SKIP ") != std::string::npos);
}

TEST_CASE("dense bound default comes from the environment") {
  ::setenv("SYMIDEM_DENSE_BOUND", "512", 1);
  CHECK(cli::default_dense_bound() == 512);
  ::setenv("SYMIDEM_DENSE_BOUND", "junk", 1);
  CHECK(cli::default_dense_bound() == 4096);
  ::unsetenv("SYMIDEM_DENSE_BOUND");
  CHECK(cli::default_dense_bound() == 4096);
}
