#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "relmat/universe.hpp"

namespace relmat {

/// Finite collection of distinct subsets of one universe. The collection is
/// canonical: members are kept sorted by ascending bit value with duplicates
/// removed, so equal families compare equal and print identically.
class SetFamily {
 public:
  SetFamily() = default;

  explicit SetFamily(int universe_size) : universe_size_(universe_size) {
    if (universe_size < 0 || universe_size > kMaxUniverseSize) {
      throw error("universe size out of range: " + std::to_string(universe_size));
    }
  }

  SetFamily(int universe_size, std::vector<ElemSet> sets)
      : SetFamily(universe_size) {
    for (const ElemSet& s : sets) {
      if (s.universe_size() != universe_size) {
        throw universe_mismatch("family member is over a different universe");
      }
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    sets_ = std::move(sets);
  }

  /// Convenience builder from element-index lists, e.g. of(3, {{0}, {1, 2}}).
  static SetFamily of(int universe_size,
                      std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<ElemSet> members;
    members.reserve(sets.size());
    for (const auto& s : sets) members.push_back(ElemSet::of(universe_size, s));
    return SetFamily(universe_size, std::move(members));
  }

  int universe_size() const { return universe_size_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  const ElemSet& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const std::vector<ElemSet>& sets() const { return sets_; }

  bool contains(const ElemSet& s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s);
  }

  SetFamily with(const ElemSet& s) const {
    std::vector<ElemSet> out = sets_;
    out.push_back(s);
    return SetFamily(universe_size_, std::move(out));
  }

  bool operator==(const SetFamily&) const = default;

 private:
  int universe_size_ = 0;
  std::vector<ElemSet> sets_;  // sorted by bit value, unique
};

/// Every subset of the universe, in canonical order.
inline SetFamily all_subsets(int universe_size) {
  std::vector<ElemSet> sets;
  sets.reserve(std::size_t{1} << universe_size);
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << universe_size); ++bits) {
    sets.emplace_back(universe_size, bits);
  }
  return SetFamily(universe_size, std::move(sets));
}

/// Members of `family` that contain no other member as a proper subset.
/// The result is always an antichain.
inline SetFamily fmin(const SetFamily& family) {
  std::vector<ElemSet> out;
  for (const ElemSet& a : family) {
    bool minimal = true;
    for (const ElemSet& b : family) {
      if (b.proper_subset_of(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return SetFamily(family.universe_size(), std::move(out));
}

/// Upward closure: every subset of the universe that contains some member.
inline SetFamily upp(const SetFamily& family) {
  const int n = family.universe_size();
  std::vector<ElemSet> out;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    for (const ElemSet& a : family) {
      if ((a.bits() & ~bits) == 0) {
        out.emplace_back(n, bits);
        break;
      }
    }
  }
  return SetFamily(n, std::move(out));
}

/// Complement within the powerset: every subset of the universe not in `family`.
inline SetFamily opp(const SetFamily& family) {
  const int n = family.universe_size();
  std::vector<bool> present(std::size_t{1} << n, false);
  for (const ElemSet& a : family) present[a.bits()] = true;
  std::vector<ElemSet> out;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    if (!present[bits]) out.emplace_back(n, bits);
  }
  return SetFamily(n, std::move(out));
}

/// True iff the members are nonempty, pairwise disjoint, and cover the
/// universe. The empty family is a partition only of the empty universe.
inline bool is_partition(const SetFamily& family) {
  std::uint32_t seen = 0;
  for (const ElemSet& a : family) {
    if (a.empty()) return false;
    if ((seen & a.bits()) != 0) return false;
    seen |= a.bits();
  }
  return seen == ElemSet::full_set(family.universe_size()).bits();
}

/// True iff every member of `f1` is contained in some member of `f2`.
inline bool finer(const SetFamily& f1, const SetFamily& f2) {
  if (f1.universe_size() != f2.universe_size()) {
    throw universe_mismatch("finer: families are over different universes");
  }
  for (const ElemSet& a : f1) {
    bool covered = false;
    for (const ElemSet& b : f2) {
      if (a.subset_of(b)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace relmat
