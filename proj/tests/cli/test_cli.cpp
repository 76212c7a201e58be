#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "pavsel/report_schema.hpp"
#include "support/fixtures.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("pavsel-cli-" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path path = work_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  REQUIRE(out.good());
  return path;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CmdResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CmdResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_path = work_dir() / ("stdout." + std::to_string(counter));
  const fs::path err_path = work_dir() / ("stderr." + std::to_string(counter));
  ++counter;
  const std::string command = std::string(PAVSEL_CLI_PATH) + " " + args + " >" +
                              out_path.string() + " 2>" + err_path.string();
  const int status = std::system(command.c_str());
  CmdResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

json load_schema(const std::string& name) {
  const std::string text = read_file(fs::path(PAVSEL_SCHEMA_DIR) / name);
  REQUIRE(!text.empty());
  return json::parse(text);
}

void check_valid(const json& instance, const std::string& schema_name) {
  const auto error = pavsel::validate_against_schema(instance, load_schema(schema_name));
  if (error) FAIL_CHECK("schema violation: " << *error);
}

const fs::path& rect_profile() {
  static const fs::path p = write_file("rect.profile", pavsel::testing::kRectangleProfile);
  return p;
}

const fs::path& camps_profile() {
  static const fs::path p = write_file("camps.profile", pavsel::testing::kTwoCampsProfile);
  return p;
}

}  // namespace

TEST_CASE("run with audit emits a schema-valid report") {
  const CmdResult r = run_cli("run " + rect_profile().string() + " --k 3 --audit");
  REQUIRE(r.exit_code == 0);
  CHECK(r.err.empty());
  const json report = json::parse(r.out);
  check_valid(report, "run_report.schema.json");
  CHECK(report["rule"] == "lspav");
  CHECK(report["k"] == 3);
  CHECK(report["committee"] == json::array({"a", "b", "c"}));
  CHECK(report["pav_score"] == "11/1");
  CHECK(report["trace_summary"]["swap_count"] == 0);
  CHECK(report["audit"]["ejr"] == true);
  CHECK(report["audit"]["min_avg_satisfaction"][0]["group"]["avg_satisfaction"] == "1/2");
}

TEST_CASE("k defaults to the profile's k line") {
  const CmdResult r = run_cli("run " + rect_profile().string() + " --rule exact-pav");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  check_valid(report, "run_report.schema.json");
  CHECK(report["k"] == 3);
  CHECK(report["pav_score"] == "11/1");
  CHECK(report["trace_summary"].is_null());
  CHECK(report["audit"].is_null());
}

TEST_CASE("approx adds decimal fields") {
  const CmdResult r = run_cli("run " + rect_profile().string() + " --rule approval-top-k --approx");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  check_valid(report, "run_report.schema.json");
  CHECK(report["pav_score_approx"].get<double>() == doctest::Approx(11.0));
}

TEST_CASE("full trace is embedded on request") {
  const fs::path shuffled =
      write_file("shuffled.profile", "candidates: c d a b\nk: 2\n2: a\n2: b\n");
  const CmdResult r = run_cli("run " + shuffled.string() + " --init first-k --trace");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  check_valid(report, "run_report.schema.json");
  REQUIRE(report.contains("trace"));
  CHECK(report["trace"]["swaps"].size() == 2);
  CHECK(report["trace"]["final_committee"] == json::array({"a", "b"}));
}

TEST_CASE("missing and malformed profiles exit 1") {
  const CmdResult missing = run_cli("run " + (work_dir() / "nope.profile").string() + " --k 3");
  CHECK(missing.exit_code == 1);
  CHECK(missing.out.empty());
  CHECK(!missing.err.empty());

  const fs::path bad = write_file("bad.profile", "candidates: a b\n1: z\n");
  const CmdResult malformed = run_cli("run " + bad.string() + " --k 1");
  CHECK(malformed.exit_code == 1);
  CHECK(malformed.out.empty());
  CHECK(malformed.err.find("line 2") != std::string::npos);
}

TEST_CASE("invalid committee sizes exit 2") {
  CHECK(run_cli("run " + rect_profile().string() + " --k 99").exit_code == 2);
  CHECK(run_cli("run " + rect_profile().string() + " --k 0").exit_code == 2);
  const fs::path no_k = write_file("nok.profile", "candidates: a b\n1: a\n");
  CHECK(run_cli("run " + no_k.string()).exit_code == 2);
}

TEST_CASE("blown budgets exit 3") {
  const CmdResult r =
      run_cli("run " + rect_profile().string() + " --rule exact-pav --max-combinations 2");
  CHECK(r.exit_code == 3);
  CHECK(r.out.empty());
  const CmdResult audit_r = run_cli("run " + rect_profile().string() +
                                    " --k 3 --audit --max-candidate-sets 2");
  CHECK(audit_r.exit_code == 3);
}

TEST_CASE("audit command reports and re-audits verbatim") {
  const fs::path committee = write_file("rect.committee", "a b c\n");
  const CmdResult audited =
      run_cli("audit " + rect_profile().string() + " " + committee.string());
  REQUIRE(audited.exit_code == 0);
  const json audit_report = json::parse(audited.out);
  check_valid(audit_report, "audit_report.schema.json");
  CHECK(audit_report["locally_optimal"] == true);
  CHECK(audit_report["audit"]["ejr"] == true);

  const CmdResult ran = run_cli("run " + rect_profile().string() + " --k 3 --audit");
  REQUIRE(ran.exit_code == 0);
  CHECK(json::parse(ran.out)["audit"] == audit_report["audit"]);
}

TEST_CASE("audit flags a committee that ignores a cohesive camp") {
  const fs::path committee = write_file("camps.committee", "c d\n");
  const CmdResult r = run_cli("audit " + camps_profile().string() + " " + committee.string());
  REQUIRE(r.exit_code == 0);  // reporting a violation is a successful audit
  const json report = json::parse(r.out);
  check_valid(report, "audit_report.schema.json");
  CHECK(report["audit"]["ejr"] == false);
  CHECK(report["audit"]["ejr_counterexample"]["witness_candidates"] == json::array({"a"}));
  CHECK(report["locally_optimal"] == false);
}

TEST_CASE("bad committee files exit 4") {
  const fs::path wrong_size = write_file("two.committee", "a b\n");
  CHECK(run_cli("audit " + rect_profile().string() + " " + wrong_size.string()).exit_code == 4);
  const fs::path unknown = write_file("unknown.committee", "a z\n");
  CHECK(run_cli("audit " + rect_profile().string() + " " + unknown.string()).exit_code == 4);
  const fs::path dup = write_file("dup.committee", "a a b\n");
  CHECK(run_cli("audit " + rect_profile().string() + " " + dup.string()).exit_code == 4);
}

TEST_CASE("gen cycle is byte-identical across runs and matches the fixture") {
  const fs::path f1 = work_dir() / "cycle1.profile";
  const fs::path f2 = work_dir() / "cycle2.profile";
  REQUIRE(run_cli("gen cycle --k 3 -o " + f1.string()).exit_code == 0);
  REQUIRE(run_cli("gen cycle --k 3 -o " + f2.string()).exit_code == 0);
  const std::string text = read_file(f1);
  CHECK(text == read_file(f2));
  const pavsel::Election e = pavsel::parse_election(text);
  CHECK(e.num_voters() == 12);
  CHECK(e.default_committee_size() == 3);
  CHECK(run_cli("gen cycle --k 1").exit_code == 2);
}

TEST_CASE("gen random is deterministic and validates parameters") {
  const fs::path f1 = work_dir() / "rand1.profile";
  const fs::path f2 = work_dir() / "rand2.profile";
  REQUIRE(run_cli("gen random --n 8 --m 6 --p 0.5 --seed 42 -o " + f1.string()).exit_code == 0);
  REQUIRE(run_cli("gen random --n 8 --m 6 --p 0.5 --seed 42 -o " + f2.string()).exit_code == 0);
  CHECK(read_file(f1) == read_file(f2));
  const pavsel::Election e = pavsel::parse_election(read_file(f1));
  CHECK(e.num_voters() == 8);
  CHECK(e.num_candidates() == 6);

  CHECK(run_cli("gen random --n 8 --m 6 --p 0 --seed 1").exit_code == 2);
  CHECK(run_cli("gen random --n 8 --m 6 --p 1.5 --seed 1").exit_code == 2);
  CHECK(run_cli("gen random --n 8 --m 6 --s 9 --seed 1").exit_code == 2);
  CHECK(run_cli("gen random --n 8 --m 6 --seed 1").exit_code == 2);          // no model
  CHECK(run_cli("gen random --n 8 --m 6 --p 0.5 --s 2 --seed 1").exit_code == 2);
  CHECK(run_cli("gen random --n 0 --m 6 --p 0.5 --seed 1").exit_code == 2);
}

TEST_CASE("gen replicate doubles candidates and stamps provenance") {
  const fs::path out = work_dir() / "replicated.profile";
  REQUIRE(run_cli("gen replicate -i " + rect_profile().string() +
                  " --ell 2 --gamma 3/2 --committee-size 6 -o " + out.string())
              .exit_code == 0);
  const std::string text = read_file(out);
  CHECK(text.find("# replicated from sha256:") == 0);
  CHECK(text.find("ell=2") != std::string::npos);
  CHECK(text.find("gamma=3/2") != std::string::npos);
  const pavsel::Election e = pavsel::parse_election(text);
  CHECK(e.num_candidates() == 8);
  CHECK(e.num_voters() == 12);
  CHECK(e.default_committee_size() == 6);

  CHECK(run_cli("gen replicate -i " + rect_profile().string() + " --ell 0").exit_code == 2);
  CHECK(run_cli("gen replicate -i " + (work_dir() / "nope").string() + " --ell 2").exit_code ==
        1);
}

TEST_CASE("seeded-random runs reproduce exactly") {
  const std::string args = "run " + rect_profile().string() +
                           " --k 3 --init seeded-random --seed 7 --trace";
  const CmdResult a = run_cli(args);
  const CmdResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  json ja = json::parse(a.out);
  json jb = json::parse(b.out);
  ja.erase("timing_ms");
  jb.erase("timing_ms");
  CHECK(ja == jb);
  CHECK(run_cli("run " + rect_profile().string() + " --k 3 --init seeded-random").exit_code ==
        2);  // seed required
}
