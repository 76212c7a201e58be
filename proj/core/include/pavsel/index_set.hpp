#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace pavsel {

// Set of integers over a fixed universe [0, universe), packed into 64-bit
// words. Ballots, committees, witness candidate sets and voter groups all use
// this representation; intersection counts are the hot operation everywhere.
//
// Unused high bits of the last word are kept zero, so whole-word equality and
// popcounts are valid without masking.
class IndexSet {
 public:
  IndexSet() = default;

  explicit IndexSet(int universe)
      : universe_(universe), words_((static_cast<size_t>(universe) + 63) / 64, 0) {
    if (universe < 0) throw std::invalid_argument("IndexSet: negative universe");
  }

  static IndexSet of(int universe, std::initializer_list<int> items) {
    IndexSet s(universe);
    for (int i : items) s.insert(i);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int i) const {
    check(i);
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void insert(int i) {
    check(i);
    words_[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void erase(int i) {
    check(i);
    words_[static_cast<size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  // Members in ascending order.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for_each([&out](int i) { out.push_back(i); });
    return out;
  }

  // Visits members in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        int b = std::countr_zero(w);
        f(static_cast<int>(wi * 64) + b);
        w &= w - 1;
      }
    }
  }

  bool is_subset_of(const IndexSet& other) const {
    require_same_universe(other);
    for (size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  void intersect_with(const IndexSet& other) {
    require_same_universe(other);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  }

  friend int intersection_count(const IndexSet& a, const IndexSet& b) {
    a.require_same_universe(b);
    int c = 0;
    for (size_t i = 0; i < a.words_.size(); ++i)
      c += std::popcount(a.words_[i] & b.words_[i]);
    return c;
  }

  friend IndexSet operator&(const IndexSet& a, const IndexSet& b) {
    IndexSet r = a;
    r.intersect_with(b);
    return r;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  void check(int i) const {
    if (i < 0 || i >= universe_) throw std::out_of_range("IndexSet: index out of range");
  }
  void require_same_universe(const IndexSet& other) const {
    if (universe_ != other.universe_)
      throw std::invalid_argument("IndexSet: universe mismatch");
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pavsel
