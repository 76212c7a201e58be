#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pavsel/election.hpp"

namespace pavsel {

// Profile text format, line oriented:
//   # comment lines and blank lines are ignored
//   candidates: a b c d          (required, first significant line)
//   k: 3                         (optional, at most once, after candidates)
//   2: a b                       (a ballot with multiplicity 2)
// Candidate names are whitespace-free tokens and may not contain ':' or '#'.
// A ballot line may list no names, which is an empty ballot.

struct ProfileParseError : std::runtime_error {
  ProfileParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : "profile: " + message),
        line(line) {}
  int line;  // 1-based; 0 when the error is not tied to a single line
};

struct CommitteeParseError : std::runtime_error {
  explicit CommitteeParseError(const std::string& message) : std::runtime_error(message) {}
};

Election parse_election(std::string_view text);

// Canonical text for an election: candidates line, optional k line, then one
// ballot line per run of consecutive identical ballots, candidates listed in
// index order. parse_election(serialize_election(e)) reproduces e exactly,
// voter order included.
std::string serialize_election(const Election& e);

// A committee file is whitespace-separated candidate names. Duplicates and
// unknown names are errors; the caller checks the size against its k.
Committee parse_committee(std::string_view text, const Election& e);
std::string serialize_committee(const Committee& w, const Election& e);

}  // namespace pavsel
