#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "cli_app.hpp"
#include "diracmf/report.hpp"

using namespace diracmf;
namespace fs = std::filesystem;

namespace {

int run(std::vector<const char*> args) {
  args.insert(args.begin(), "diracmf");
  return run_cli(static_cast<int>(args.size()), args.data());
}

struct TempFile {
  fs::path path;
  explicit TempFile(const char* name) : path(fs::temp_directory_path() / name) {
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
};

nlohmann::ordered_json strip_timestamp(nlohmann::ordered_json j) {
  j.erase("timestamp");
  return j;
}

}  // namespace

TEST_CASE("exit code 0 on passing contracts") {
  CHECK(run({"verify-square", "--group", "A1", "--weight", "3", "--samples", "20"}) == 0);
  CHECK(run({"calibrate", "--group", "A2"}) == 0);
  CHECK(run({"verlinde", "--group", "A1", "--level", "1"}) == 0);
  CHECK(run({"torus-potential", "--rank", "1", "--form", "2", "--mu", "1/2", "--translate", "1"}) == 0);
}

TEST_CASE("exit code 2 on usage errors") {
  CHECK(run({"no-such-subcommand"}) == 2);
  CHECK(run({}) == 2);
  CHECK(run({"verify-square"}) == 2);                             // missing --group
  CHECK(run({"verify-square", "--group", "A1", "--samples", "-3"}) == 2);
  CHECK(run({"scan-kernel", "--group", "A1", "--grid-count", "1"}) == 2);
  CHECK(run({"verify-square", "--group", "A1", "--tol", "0"}) == 2);
}

TEST_CASE("exit code 1 on runtime failures") {
  CHECK(run({"verify-square", "--group", "E8"}) == 1);            // unsupported group
  CHECK(run({"verlinde", "--rank", "1", "--form", "3"}) == 1);    // odd form
  CHECK(run({"cocycle", "--group", "A1", "--mu", "1/2"}) == 1);   // cut-locus tie
  // unwritable report path
  CHECK(run({"calibrate", "--group", "A1", "--output", "/nonexistent-dir/r.json"}) == 1);
}

TEST_CASE("report structure and determinism") {
  TempFile f1("diracmf-cli-r1.json"), f2("diracmf-cli-r2.json");
  const std::vector<const char*> cmd{"verify-square", "--group", "A1", "--weight", "2",
                                     "--samples",     "5",       "--output"};
  auto with_output = [&](const char* path) {
    auto c = cmd;
    c.push_back(path);
    return c;
  };
  REQUIRE(run(with_output(f1.path.c_str())) == 0);
  REQUIRE(run(with_output(f2.path.c_str())) == 0);

  const RunReport r1 = load_report(f1.path);
  CHECK(r1.schema_version == "1");
  CHECK(r1.pass);
  CHECK(r1.config["group"] == "A1");
  CHECK(r1.results.size() == 5);
  CHECK(r1.residuals["max_residual"].get<double>() <= 1e-9);

  // identical reruns agree byte-for-byte modulo the timestamp
  const RunReport r2 = load_report(f2.path);
  CHECK(strip_timestamp(report_json(r1)).dump(2) == strip_timestamp(report_json(r2)).dump(2));

  // parse -> re-serialise round-trips byte for byte
  std::ifstream in(f1.path);
  std::string on_disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(render_report(parse_report(nlohmann::ordered_json::parse(on_disk))) == on_disk);
}

TEST_CASE("key order of the report is fixed") {
  RunReport r;
  r.timestamp = "2026-01-01T00:00:00Z";
  const std::string dumped = report_json(r).dump();
  CHECK(dumped.find("\"schema_version\"") < dumped.find("\"config\""));
  CHECK(dumped.find("\"config\"") < dumped.find("\"results\""));
  CHECK(dumped.find("\"results\"") < dumped.find("\"residuals\""));
  CHECK(dumped.find("\"residuals\"") < dumped.find("\"pass\""));
  CHECK(dumped.find("\"pass\"") < dumped.find("\"timestamp\""));
  // empty results serialise as an empty array with pass true
  CHECK(report_json(r)["results"].is_array());
  CHECK(report_json(r)["results"].empty());
  CHECK(report_json(r)["pass"] == true);
}

TEST_CASE("config file supplies defaults, flags win") {
  TempFile cfg("diracmf-cli-cfg.ini"), out("diracmf-cli-cfg-out.json");
  {
    std::ofstream c(cfg.path);
    c << "group=A1\nweight=1\nsamples=4\n";
  }
  CHECK(run({"verify-square", "--config", cfg.path.c_str(), "--output", out.path.c_str()}) == 0);
  const RunReport from_cfg = load_report(out.path);
  CHECK(from_cfg.config["weight"] == std::vector<int>{1});
  CHECK(from_cfg.results.size() == 4);

  CHECK(run({"verify-square", "--config", cfg.path.c_str(), "--weight", "2", "--output",
             out.path.c_str()}) == 0);
  CHECK(load_report(out.path).config["weight"] == std::vector<int>{2});
}

TEST_CASE("scan-kernel localises through the CLI") {
  TempFile out("diracmf-cli-scan.json");
  CHECK(run({"scan-kernel", "--group", "A1", "--weight", "2", "--grid-count", "60", "--output",
             out.path.c_str()}) == 0);
  const RunReport r = load_report(out.path);
  CHECK(r.results.size() == 60);
  CHECK(r.residuals["refined_sigma"].get<double>() < 1e-8);
  // s* = |lambda + rho| = 3/sqrt(2)
  CHECK(r.residuals["refined_s"].get<double>() == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-3));
}

TEST_CASE("verlinde report content") {
  TempFile out("diracmf-cli-verlinde.json");
  CHECK(run({"verlinde", "--group", "A1", "--level", "1", "--output", out.path.c_str()}) == 0);
  const RunReport r = load_report(out.path);
  CHECK(r.results[0]["representative_count"] == 2);
  CHECK(r.results[0]["kernel_count"] == 6);
}
