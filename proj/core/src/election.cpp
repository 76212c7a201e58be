#include "pavsel/election.hpp"

#include <stdexcept>

namespace pavsel {

Election::Election(int num_candidates, std::vector<IndexSet> ballots,
                   std::vector<std::string> candidate_names,
                   std::optional<int> default_committee_size)
    : num_candidates_(num_candidates),
      ballots_(std::move(ballots)),
      names_(std::move(candidate_names)),
      default_committee_size_(default_committee_size) {
  if (num_candidates_ < 1) throw std::invalid_argument("election: need at least one candidate");
  if (ballots_.empty()) throw std::invalid_argument("election: need at least one voter");
  for (const IndexSet& b : ballots_)
    if (b.universe() != num_candidates_)
      throw std::invalid_argument("election: ballot universe does not match candidate count");

  if (names_.empty()) {
    names_.reserve(static_cast<size_t>(num_candidates_));
    for (int c = 0; c < num_candidates_; ++c) names_.push_back("c" + std::to_string(c + 1));
  }
  if (static_cast<int>(names_.size()) != num_candidates_)
    throw std::invalid_argument("election: name count does not match candidate count");
  for (int c = 0; c < num_candidates_; ++c) {
    if (names_[static_cast<size_t>(c)].empty())
      throw std::invalid_argument("election: empty candidate name");
    if (!name_index_.emplace(names_[static_cast<size_t>(c)], c).second)
      throw std::invalid_argument("election: duplicate candidate name '" +
                                  names_[static_cast<size_t>(c)] + "'");
  }

  if (default_committee_size_ &&
      (*default_committee_size_ < 1 || *default_committee_size_ > num_candidates_))
    throw std::invalid_argument("election: default committee size out of range");

  approvers_.resize(static_cast<size_t>(num_candidates_));
  approver_sets_.assign(static_cast<size_t>(num_candidates_), IndexSet(num_voters()));
  for (int i = 0; i < num_voters(); ++i) {
    ballots_[static_cast<size_t>(i)].for_each([&](int c) {
      approvers_[static_cast<size_t>(c)].push_back(i);
      approver_sets_[static_cast<size_t>(c)].insert(i);
    });
  }
}

std::optional<int> Election::candidate_index(std::string_view name) const {
  auto it = name_index_.find(std::string(name));
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

std::span<const int> Election::approvers(int c) const {
  if (c < 0 || c >= num_candidates_) throw std::out_of_range("election: candidate out of range");
  return approvers_[static_cast<size_t>(c)];
}

const IndexSet& Election::approver_set(int c) const {
  if (c < 0 || c >= num_candidates_) throw std::out_of_range("election: candidate out of range");
  return approver_sets_[static_cast<size_t>(c)];
}

Committee::Committee(IndexSet members) : members_(std::move(members)), size_(members_.count()) {
  if (size_ == 0) throw std::invalid_argument("committee: must be nonempty");
}

Committee Committee::with_swap(int out_candidate, int in_candidate) const {
  if (!members_.contains(out_candidate))
    throw std::invalid_argument("committee: swapped-out candidate not a member");
  if (members_.contains(in_candidate))
    throw std::invalid_argument("committee: swapped-in candidate already a member");
  IndexSet next = members_;
  next.erase(out_candidate);
  next.insert(in_candidate);
  return Committee(std::move(next));
}

SatisfactionVector satisfaction(const Election& e, const Committee& w) {
  require_valid(e, w);
  SatisfactionVector sat(static_cast<size_t>(e.num_voters()));
  for (int i = 0; i < e.num_voters(); ++i)
    sat[static_cast<size_t>(i)] = intersection_count(e.ballot(i), w.members());
  return sat;
}

void require_valid(const Election& e, const Committee& w) {
  if (w.members().universe() != e.num_candidates())
    throw std::invalid_argument("committee: universe does not match election");
}

}  // namespace pavsel
