#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "pavsel/audit.hpp"
#include "pavsel/election.hpp"
#include "pavsel/lspav.hpp"

namespace pavsel {

// All reports share the conventions pinned here: every rational is a "p/q"
// string (with "_approx" double fields added next to it when approx is set),
// candidate sets are arrays of names sorted lexicographically, voter sets are
// ascending index arrays, and every top-level report carries "schema": 1.

inline constexpr int kReportSchemaVersion = 1;

// "sha256:<hex>" over the canonical serialization, so two profiles that parse
// to the same election fingerprint identically regardless of formatting.
std::string profile_fingerprint(const Election& e);

nlohmann::json committee_names_json(const Election& e, const Committee& w);
nlohmann::json cohesive_group_json(const Election& e, const CohesiveGroupReport& group,
                                   bool approx = false);
nlohmann::json audit_report_json(const Election& e, const AuditReport& report,
                                 bool approx = false);
nlohmann::json trace_json(const Election& e, const LsPavTrace& trace, bool approx = false);

// Report for a solve: rule is "lspav", "exact-pav" or "approval-top-k"; trace
// may be null (non-lspav rules), audit may be null (not requested).
nlohmann::json build_run_report(const Election& e, std::string_view rule,
                                const Committee& committee, const Rational& score,
                                const LsPavTrace* trace, const AuditReport* audit_report,
                                bool include_full_trace, bool approx, double timing_ms);

// Report for auditing a given committee against a profile.
nlohmann::json build_audit_report(const Election& e, const Committee& committee,
                                  const Rational& score, bool locally_optimal,
                                  const AuditReport& audit_report, bool approx,
                                  double timing_ms);

}  // namespace pavsel
