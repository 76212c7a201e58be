// Command line front end: solve profiles, audit committees, generate
// instances. Reports go to stdout as JSON; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 unreadable or malformed profile, 2 invalid
// committee size or generator parameters, 3 enumeration budget exceeded,
// 4 bad committee file (unknown names, duplicates, wrong size).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pavsel/audit.hpp"
#include "pavsel/exact_pav.hpp"
#include "pavsel/lspav.hpp"
#include "pavsel/pav_score.hpp"
#include "pavsel/profile_gen.hpp"
#include "pavsel/profile_io.hpp"
#include "pavsel/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kInvalidParams = 2;
constexpr int kBudgetExceeded = 3;
constexpr int kBadCommittee = 4;

struct ExitWith {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitWith{kParseError, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush())
    throw ExitWith{kParseError, "cannot write '" + path + "'"};
}

pavsel::Election load_election(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return pavsel::parse_election(text);
  } catch (const pavsel::ProfileParseError& e) {
    throw ExitWith{kParseError, path + ": " + e.what()};
  }
}

int resolve_k(const pavsel::Election& e, std::optional<int> flag_k,
              std::optional<int> fallback = std::nullopt) {
  std::optional<int> k = flag_k ? flag_k : e.default_committee_size();
  if (!k) k = fallback;
  if (!k) throw ExitWith{kInvalidParams, "no committee size: pass --k or add a 'k:' line"};
  if (*k < 1 || *k > e.num_candidates())
    throw ExitWith{kInvalidParams, "committee size " + std::to_string(*k) +
                                       " out of range 1.." + std::to_string(e.num_candidates())};
  return *k;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

struct RunOptions {
  std::string profile_path;
  std::optional<int> k;
  std::string rule = "lspav";
  std::string init = "approval-top-k";
  std::string pivot = "best-improvement";
  std::optional<std::uint64_t> seed;
  bool with_audit = false;
  bool approx = false;
  bool full_trace = false;
  std::uint64_t max_combinations = pavsel::OracleBudget{}.max_combinations;
  std::uint64_t max_candidate_sets = pavsel::AuditBudget{}.max_candidate_sets;
};

int cmd_run(const RunOptions& opt) {
  const pavsel::Election e = load_election(opt.profile_path);
  const int k = resolve_k(e, opt.k);
  const auto start = std::chrono::steady_clock::now();

  std::optional<pavsel::LsPavResult> ls_result;
  std::optional<pavsel::Committee> committee;
  if (opt.rule == "lspav") {
    pavsel::LsPavConfig config;
    if (opt.init == "approval-top-k") config.init = pavsel::InitStrategy::kApprovalTopK;
    else if (opt.init == "first-k") config.init = pavsel::InitStrategy::kFirstK;
    else if (opt.init == "seeded-random") config.init = pavsel::InitStrategy::kSeededRandom;
    else throw ExitWith{kInvalidParams, "unknown init strategy '" + opt.init + "'"};
    if (opt.pivot == "best-improvement") config.pivot = pavsel::PivotRule::kBestImprovement;
    else if (opt.pivot == "first-improvement")
      config.pivot = pavsel::PivotRule::kFirstImprovement;
    else throw ExitWith{kInvalidParams, "unknown pivot rule '" + opt.pivot + "'"};
    config.seed = opt.seed;
    if (config.init == pavsel::InitStrategy::kSeededRandom && !config.seed)
      throw ExitWith{kInvalidParams, "seeded-random init requires --seed"};
    ls_result = pavsel::ls_pav(e, k, config);
    committee = ls_result->committee;
  } else if (opt.rule == "exact-pav") {
    committee = pavsel::exact_pav(e, k, {opt.max_combinations}).committee;
  } else if (opt.rule == "approval-top-k") {
    committee = pavsel::approval_top_k(e, k);
  } else {
    throw ExitWith{kInvalidParams, "unknown rule '" + opt.rule + "'"};
  }

  const pavsel::Rational score = pavsel::pav_score(e, *committee);
  std::optional<pavsel::AuditReport> audit_report;
  if (opt.with_audit)
    audit_report = pavsel::audit(e, *committee, {opt.max_candidate_sets});

  const nlohmann::json report = pavsel::build_run_report(
      e, opt.rule, *committee, score, ls_result ? &ls_result->trace : nullptr,
      audit_report ? &*audit_report : nullptr, opt.full_trace, opt.approx, elapsed_ms(start));
  std::cout << report.dump(2) << '\n';
  return kOk;
}

struct AuditOptions {
  std::string profile_path;
  std::string committee_path;
  std::optional<int> k;
  bool approx = false;
  std::uint64_t max_candidate_sets = pavsel::AuditBudget{}.max_candidate_sets;
};

int cmd_audit(const AuditOptions& opt) {
  const pavsel::Election e = load_election(opt.profile_path);
  const std::string committee_text = read_file(opt.committee_path);
  std::optional<pavsel::Committee> committee;
  try {
    committee = pavsel::parse_committee(committee_text, e);
  } catch (const pavsel::CommitteeParseError& err) {
    throw ExitWith{kBadCommittee, opt.committee_path + ": " + err.what()};
  }
  // Without --k or a profile default, the committee's own size is audited.
  const int k = resolve_k(e, opt.k, committee->size());
  if (committee->size() != k)
    throw ExitWith{kBadCommittee, opt.committee_path + ": committee has " +
                                      std::to_string(committee->size()) +
                                      " members, expected " + std::to_string(k)};

  const auto start = std::chrono::steady_clock::now();
  const pavsel::Rational score = pavsel::pav_score(e, *committee);
  const bool locally_optimal = pavsel::local_optimality_certificate(e, *committee);
  const pavsel::AuditReport report = pavsel::audit(e, *committee, {opt.max_candidate_sets});
  const nlohmann::json out = pavsel::build_audit_report(e, *committee, score, locally_optimal,
                                                        report, opt.approx, elapsed_ms(start));
  std::cout << out.dump(2) << '\n';
  return kOk;
}

struct GenCycleOptions {
  int k = 0;
  std::string output;
};

int cmd_gen_cycle(const GenCycleOptions& opt) {
  if (opt.k < 2) throw ExitWith{kInvalidParams, "gen cycle: --k must be at least 2"};
  const pavsel::Election e = pavsel::gen_cycle(opt.k);
  std::string text = "# cycle profile, k=" + std::to_string(opt.k) + "\n";
  text += pavsel::serialize_election(e);
  write_output(opt.output, text);
  return kOk;
}

struct GenReplicateOptions {
  std::string input_path;
  int ell = 0;
  std::string gamma;
  std::optional<int> committee_size;
  std::string output;
};

int cmd_gen_replicate(const GenReplicateOptions& opt) {
  const pavsel::Election base = load_election(opt.input_path);
  pavsel::ReplicationParams params;
  params.ell = opt.ell;
  params.committee_size = opt.committee_size;
  if (!opt.gamma.empty()) {
    auto g = pavsel::parse_fraction(opt.gamma);
    if (!g || *g <= 0) throw ExitWith{kInvalidParams, "gen replicate: --gamma must be positive"};
    params.gamma = *g;
  }
  if (params.ell < 1) throw ExitWith{kInvalidParams, "gen replicate: --ell must be positive"};
  if (params.committee_size && *params.committee_size < 1)
    throw ExitWith{kInvalidParams, "gen replicate: --committee-size must be positive"};

  pavsel::Election replicated = [&] {
    try {
      return pavsel::replicate(base, params);
    } catch (const std::invalid_argument& err) {
      throw ExitWith{kInvalidParams, std::string("gen replicate: ") + err.what()};
    }
  }();

  std::string text = "# replicated from " + pavsel::profile_fingerprint(base) +
                     ", ell=" + std::to_string(params.ell);
  if (params.gamma) text += ", gamma=" + pavsel::fraction_string(*params.gamma);
  text += "\n";
  text += pavsel::serialize_election(replicated);
  write_output(opt.output, text);
  return kOk;
}

struct GenRandomOptions {
  int n = 0;
  int m = 0;
  std::optional<int> k;
  std::string p;
  std::optional<int> s;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen_random(const GenRandomOptions& opt) {
  pavsel::RandomProfileParams params;
  params.num_voters = opt.n;
  params.num_candidates = opt.m;
  params.committee_size = opt.k;
  params.seed = opt.seed;
  std::string model_note;
  if (!opt.p.empty()) {
    auto p = pavsel::parse_fraction(opt.p);
    if (!p || *p <= 0 || *p > 1)
      throw ExitWith{kInvalidParams, "gen random: --p must be in (0, 1]"};
    params.ballot_model = pavsel::UniformApprovalModel{
        numerator(*p).convert_to<std::uint64_t>(),
        denominator(*p).convert_to<std::uint64_t>()};
    model_note = "p=" + pavsel::fraction_string(*p);
  } else {
    params.ballot_model = pavsel::FixedSizeBallotModel{opt.s.value()};
    model_note = "s=" + std::to_string(opt.s.value());
  }

  pavsel::Election e = [&] {
    try {
      return pavsel::gen_random(params);
    } catch (const std::invalid_argument& err) {
      throw ExitWith{kInvalidParams, std::string("gen random: ") + err.what()};
    }
  }();

  std::string text = "# random profile, n=" + std::to_string(opt.n) +
                     " m=" + std::to_string(opt.m) + " " + model_note +
                     " seed=" + std::to_string(opt.seed) + "\n";
  text += pavsel::serialize_election(e);
  write_output(opt.output, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approval-based committee selection and representation auditing"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "select a committee for a profile");
  run->add_option("profile", run_opt.profile_path, "profile file")->required();
  run->add_option("--k", run_opt.k, "committee size (default: the profile's k line)");
  run->add_option("--rule", run_opt.rule, "lspav | exact-pav | approval-top-k")
      ->check(CLI::IsMember({"lspav", "exact-pav", "approval-top-k"}));
  run->add_option("--init", run_opt.init, "lspav start: approval-top-k | first-k | seeded-random")
      ->check(CLI::IsMember({"approval-top-k", "first-k", "seeded-random"}));
  run->add_option("--pivot", run_opt.pivot, "lspav pivot: best-improvement | first-improvement")
      ->check(CLI::IsMember({"best-improvement", "first-improvement"}));
  run->add_option("--seed", run_opt.seed, "seed for seeded-random init");
  run->add_flag("--audit", run_opt.with_audit, "embed a full audit in the report");
  run->add_flag("--approx", run_opt.approx, "add decimal approximations next to rationals");
  run->add_flag("--trace", run_opt.full_trace, "embed the full swap trace (lspav only)");
  run->add_option("--max-combinations", run_opt.max_combinations,
                  "committee enumeration budget for exact-pav");
  run->add_option("--max-candidate-sets", run_opt.max_candidate_sets,
                  "witness enumeration budget for audits");

  AuditOptions audit_opt;
  CLI::App* audit_cmd = app.add_subcommand("audit", "audit a committee against a profile");
  audit_cmd->add_option("profile", audit_opt.profile_path, "profile file")->required();
  audit_cmd->add_option("committee", audit_opt.committee_path, "committee file")->required();
  audit_cmd->add_option("--k", audit_opt.k, "expected committee size");
  audit_cmd->add_flag("--approx", audit_opt.approx,
                      "add decimal approximations next to rationals");
  audit_cmd->add_option("--max-candidate-sets", audit_opt.max_candidate_sets,
                        "witness enumeration budget");

  CLI::App* gen = app.add_subcommand("gen", "generate profiles");
  gen->require_subcommand(1);

  GenCycleOptions cycle_opt;
  CLI::App* gen_cycle_cmd = gen->add_subcommand("cycle", "ring profile over k+1 candidates");
  gen_cycle_cmd->add_option("--k", cycle_opt.k, "committee size, at least 2")->required();
  gen_cycle_cmd->add_option("-o,--output", cycle_opt.output, "output file (default stdout)");

  GenReplicateOptions repl_opt;
  CLI::App* gen_repl_cmd = gen->add_subcommand("replicate", "replace candidates by ell copies");
  gen_repl_cmd->add_option("-i,--input", repl_opt.input_path, "base profile")->required();
  gen_repl_cmd->add_option("--ell", repl_opt.ell, "copies per candidate")->required();
  gen_repl_cmd->add_option("--gamma", repl_opt.gamma, "slack parameter recorded in the header");
  gen_repl_cmd->add_option("--committee-size", repl_opt.committee_size,
                           "default committee size for the output profile");
  gen_repl_cmd->add_option("-o,--output", repl_opt.output, "output file (default stdout)");

  GenRandomOptions rand_opt;
  CLI::App* gen_rand_cmd = gen->add_subcommand("random", "seeded random profile");
  gen_rand_cmd->add_option("--n", rand_opt.n, "number of voters")->required();
  gen_rand_cmd->add_option("--m", rand_opt.m, "number of candidates")->required();
  gen_rand_cmd->add_option("--k", rand_opt.k, "default committee size for the output profile");
  auto* p_opt = gen_rand_cmd->add_option("--p", rand_opt.p,
                                         "per-candidate approval probability, e.g. 0.5 or 1/3");
  auto* s_opt = gen_rand_cmd->add_option("--s", rand_opt.s, "fixed ballot size");
  p_opt->excludes(s_opt);
  s_opt->excludes(p_opt);
  gen_rand_cmd->add_option("--seed", rand_opt.seed, "64-bit seed")->required();
  gen_rand_cmd->add_option("-o,--output", rand_opt.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidParams;
  }

  try {
    if (run->parsed()) return cmd_run(run_opt);
    if (audit_cmd->parsed()) return cmd_audit(audit_opt);
    if (gen_cycle_cmd->parsed()) return cmd_gen_cycle(cycle_opt);
    if (gen_repl_cmd->parsed()) return cmd_gen_replicate(repl_opt);
    if (gen_rand_cmd->parsed()) {
      if (rand_opt.p.empty() && !rand_opt.s)
        throw ExitWith{kInvalidParams, "gen random: pass --p or --s"};
      return cmd_gen_random(rand_opt);
    }
  } catch (const ExitWith& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const pavsel::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidParams;
  }
  return kOk;
}
