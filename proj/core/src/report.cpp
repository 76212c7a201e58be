#include "pavsel/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <stdexcept>

#include "pavsel/pav_score.hpp"
#include "pavsel/profile_io.hpp"

namespace pavsel {

namespace {

using nlohmann::json;

void put_rational(json& obj, const std::string& key, const Rational& value, bool approx) {
  obj[key] = fraction_string(value);
  if (approx) obj[key + "_approx"] = approx_double(value);
}

json sorted_names(const Election& e, const IndexSet& candidates) {
  std::vector<std::string> names;
  candidates.for_each([&](int c) { names.push_back(e.candidate_name(c)); });
  std::sort(names.begin(), names.end());
  return json(names);
}

}  // namespace

std::string profile_fingerprint(const Election& e) {
  const std::string canonical = serialize_election(e);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), digest, &digest_len, EVP_sha256(),
                 nullptr) != 1)
    throw std::runtime_error("profile_fingerprint: digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < digest_len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

nlohmann::json committee_names_json(const Election& e, const Committee& w) {
  return sorted_names(e, w.members());
}

nlohmann::json cohesive_group_json(const Election& e, const CohesiveGroupReport& group,
                                   bool approx) {
  json j;
  j["ell"] = group.ell;
  j["witness_candidates"] = sorted_names(e, group.witness_candidates);
  j["voters"] = group.group_voters.indices();
  j["group_size"] = group.group_size;
  put_rational(j, "avg_satisfaction", group.avg_satisfaction, approx);
  j["threshold_size"] = group.threshold_size;
  return j;
}

nlohmann::json audit_report_json(const Election& e, const AuditReport& report, bool approx) {
  json j;
  j["k"] = report.committee_size;
  j["ejr"] = report.ejr_holds;
  j["ejr_counterexample"] = report.ejr_counterexample
                                ? cohesive_group_json(e, *report.ejr_counterexample, approx)
                                : json(nullptr);
  json entries = json::array();
  for (const auto& [ell, group] : report.min_avg_satisfaction) {
    json entry;
    entry["ell"] = ell;
    entry["group"] = group ? cohesive_group_json(e, *group, approx) : json(nullptr);
    entries.push_back(std::move(entry));
  }
  j["min_avg_satisfaction"] = std::move(entries);
  j["avg_implies_ejr"] = report.avg_implies_ejr;
  return j;
}

nlohmann::json trace_json(const Election& e, const LsPavTrace& trace, bool approx) {
  json j;
  j["initial_committee"] = sorted_names(e, trace.initial_committee.members());
  put_rational(j, "initial_score", trace.initial_score, approx);
  json swaps = json::array();
  for (const SwapRecord& s : trace.swaps) {
    json rec;
    rec["out"] = e.candidate_name(s.out_candidate);
    rec["in"] = e.candidate_name(s.in_candidate);
    put_rational(rec, "delta", s.delta, approx);
    put_rational(rec, "score_after", s.score_after, approx);
    swaps.push_back(std::move(rec));
  }
  j["swaps"] = std::move(swaps);
  j["final_committee"] = sorted_names(e, trace.final_committee.members());
  return j;
}

nlohmann::json build_run_report(const Election& e, std::string_view rule,
                                const Committee& committee, const Rational& score,
                                const LsPavTrace* trace, const AuditReport* audit_report,
                                bool include_full_trace, bool approx, double timing_ms) {
  json j;
  j["schema"] = kReportSchemaVersion;
  j["input_fingerprint"] = profile_fingerprint(e);
  j["rule"] = std::string(rule);
  j["k"] = committee.size();
  j["committee"] = committee_names_json(e, committee);
  put_rational(j, "pav_score", score, approx);
  if (trace != nullptr) {
    json summary;
    summary["swap_count"] = trace->swaps.size();
    put_rational(summary, "initial_score", trace->initial_score, approx);
    put_rational(summary, "final_score",
                 trace->swaps.empty() ? trace->initial_score : trace->swaps.back().score_after,
                 approx);
    j["trace_summary"] = std::move(summary);
    if (include_full_trace) j["trace"] = trace_json(e, *trace, approx);
  } else {
    j["trace_summary"] = nullptr;
  }
  j["audit"] = audit_report ? audit_report_json(e, *audit_report, approx) : json(nullptr);
  j["timing_ms"] = timing_ms;
  return j;
}

nlohmann::json build_audit_report(const Election& e, const Committee& committee,
                                  const Rational& score, bool locally_optimal,
                                  const AuditReport& audit_report, bool approx,
                                  double timing_ms) {
  json j;
  j["schema"] = kReportSchemaVersion;
  j["input_fingerprint"] = profile_fingerprint(e);
  j["k"] = committee.size();
  j["committee"] = committee_names_json(e, committee);
  put_rational(j, "pav_score", score, approx);
  j["locally_optimal"] = locally_optimal;
  j["audit"] = audit_report_json(e, audit_report, approx);
  j["timing_ms"] = timing_ms;
  return j;
}

}  // namespace pavsel
