#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pavsel/index_set.hpp"

namespace pavsel {

// An approval election: n voters with approval ballots over m candidates.
// Candidates are dense indices everywhere inside the library; names exist for
// the I/O boundary only. Immutable after construction. Per-candidate approver
// lists are precomputed here because swap deltas and cohesive-group
// enumeration are both driven by them.
class Election {
 public:
  // ballots[i] is voter i's approval set over [0, num_candidates). Empty
  // ballots are allowed; an election must have at least one voter and one
  // candidate. When candidate_names is empty, names default to c1..cm.
  Election(int num_candidates, std::vector<IndexSet> ballots,
           std::vector<std::string> candidate_names = {},
           std::optional<int> default_committee_size = std::nullopt);

  int num_voters() const { return static_cast<int>(ballots_.size()); }
  int num_candidates() const { return num_candidates_; }

  const IndexSet& ballot(int voter) const { return ballots_.at(static_cast<size_t>(voter)); }
  const std::vector<IndexSet>& ballots() const { return ballots_; }

  const std::vector<std::string>& candidate_names() const { return names_; }
  const std::string& candidate_name(int c) const { return names_.at(static_cast<size_t>(c)); }
  std::optional<int> candidate_index(std::string_view name) const;

  // Committee size declared by the profile file, when present.
  std::optional<int> default_committee_size() const { return default_committee_size_; }

  // Voters approving candidate c, ascending.
  std::span<const int> approvers(int c) const;
  const IndexSet& approver_set(int c) const;
  int approval_count(int c) const { return static_cast<int>(approvers(c).size()); }

 private:
  int num_candidates_ = 0;
  std::vector<IndexSet> ballots_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> name_index_;
  std::optional<int> default_committee_size_;
  std::vector<std::vector<int>> approvers_;
  std::vector<IndexSet> approver_sets_;
};

// A committee is a nonempty candidate subset; its size k is fixed at
// construction. The member set's universe must be the election's candidate
// count for the committee to be usable with that election.
class Committee {
 public:
  explicit Committee(IndexSet members);
  static Committee of(int num_candidates, std::initializer_list<int> members) {
    return Committee(IndexSet::of(num_candidates, members));
  }

  int size() const { return size_; }
  const IndexSet& members() const { return members_; }
  bool contains(int c) const { return members_.contains(c); }
  std::vector<int> indices() const { return members_.indices(); }

  // Committee with out_candidate replaced by in_candidate; both must be valid.
  Committee with_swap(int out_candidate, int in_candidate) const;

  friend bool operator==(const Committee&, const Committee&) = default;

 private:
  IndexSet members_;
  int size_ = 0;
};

// satisfaction(e, w)[i] == |A_i intersect W|.
using SatisfactionVector = std::vector<int>;
SatisfactionVector satisfaction(const Election& e, const Committee& w);

// Throws std::invalid_argument unless w is a committee over e's candidates.
void require_valid(const Election& e, const Committee& w);

}  // namespace pavsel
