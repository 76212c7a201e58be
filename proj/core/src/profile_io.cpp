#include "pavsel/profile_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pavsel {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool parse_int(std::string_view s, long long& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

void check_name_token(std::string_view name, int line_no) {
  if (name.find(':') != std::string_view::npos || name.find('#') != std::string_view::npos)
    throw ProfileParseError(line_no, "candidate name '" + std::string(name) +
                                         "' may not contain ':' or '#'");
}

}  // namespace

Election parse_election(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> name_index;
  std::optional<int> default_k;
  std::vector<IndexSet> ballots;
  bool saw_candidates = false;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#') continue;

    if (!saw_candidates) {
      if (tokens[0] != "candidates:")
        throw ProfileParseError(line_no, "expected 'candidates:' declaration");
      if (tokens.size() < 2) throw ProfileParseError(line_no, "empty candidate list");
      for (size_t t = 1; t < tokens.size(); ++t) {
        check_name_token(tokens[t], line_no);
        std::string name(tokens[t]);
        if (!name_index.emplace(name, static_cast<int>(names.size())).second)
          throw ProfileParseError(line_no, "duplicate candidate name '" + name + "'");
        names.push_back(std::move(name));
      }
      saw_candidates = true;
      continue;
    }

    if (tokens[0] == "candidates:")
      throw ProfileParseError(line_no, "duplicate 'candidates:' declaration");

    if (tokens[0] == "k:") {
      if (default_k) throw ProfileParseError(line_no, "duplicate 'k:' declaration");
      long long k = 0;
      if (tokens.size() != 2 || !parse_int(tokens[1], k))
        throw ProfileParseError(line_no, "malformed 'k:' declaration");
      if (k < 1 || k > static_cast<long long>(names.size()))
        throw ProfileParseError(line_no, "committee size out of range");
      default_k = static_cast<int>(k);
      continue;
    }

    // Ballot line: "<multiplicity>: name name ...".
    if (tokens[0].back() != ':')
      throw ProfileParseError(line_no, "expected '<multiplicity>:' at start of ballot line");
    long long mult = 0;
    if (!parse_int(tokens[0].substr(0, tokens[0].size() - 1), mult))
      throw ProfileParseError(line_no, "malformed ballot multiplicity");
    if (mult < 1) throw ProfileParseError(line_no, "ballot multiplicity must be positive");

    IndexSet ballot(static_cast<int>(names.size()));
    for (size_t t = 1; t < tokens.size(); ++t) {
      auto it = name_index.find(std::string(tokens[t]));
      if (it == name_index.end())
        throw ProfileParseError(line_no,
                                "unknown candidate name '" + std::string(tokens[t]) + "'");
      if (ballot.contains(it->second))
        throw ProfileParseError(line_no, "candidate '" + std::string(tokens[t]) +
                                             "' listed twice in one ballot");
      ballot.insert(it->second);
    }
    for (long long r = 0; r < mult; ++r) ballots.push_back(ballot);
  }

  if (!saw_candidates) throw ProfileParseError(0, "missing 'candidates:' declaration");
  if (ballots.empty()) throw ProfileParseError(0, "profile declares no ballots");
  const int num_candidates = static_cast<int>(names.size());
  return Election(num_candidates, std::move(ballots), std::move(names), default_k);
}

std::string serialize_election(const Election& e) {
  std::ostringstream out;
  out << "candidates:";
  for (const std::string& name : e.candidate_names()) out << ' ' << name;
  out << '\n';
  if (e.default_committee_size()) out << "k: " << *e.default_committee_size() << '\n';

  int i = 0;
  while (i < e.num_voters()) {
    int run = 1;
    while (i + run < e.num_voters() && e.ballot(i + run) == e.ballot(i)) ++run;
    out << run << ':';
    e.ballot(i).for_each([&](int c) { out << ' ' << e.candidate_name(c); });
    out << '\n';
    i += run;
  }
  return out.str();
}

Committee parse_committee(std::string_view text, const Election& e) {
  IndexSet members(e.num_candidates());
  bool any = false;
  for (std::string_view token : split_ws(text)) {
    auto idx = e.candidate_index(token);
    if (!idx)
      throw CommitteeParseError("unknown candidate name '" + std::string(token) + "'");
    if (members.contains(*idx))
      throw CommitteeParseError("candidate '" + std::string(token) + "' listed twice");
    members.insert(*idx);
    any = true;
  }
  if (!any) throw CommitteeParseError("committee file lists no candidates");
  return Committee(std::move(members));
}

std::string serialize_committee(const Committee& w, const Election& e) {
  require_valid(e, w);
  std::string out;
  w.members().for_each([&](int c) {
    if (!out.empty()) out += ' ';
    out += e.candidate_name(c);
  });
  out += '\n';
  return out;
}

}  // namespace pavsel
