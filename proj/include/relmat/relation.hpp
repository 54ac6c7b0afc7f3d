#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "relmat/set_family.hpp"
#include "relmat/universe.hpp"

namespace relmat {

struct RelationProperties {
  bool serial = false;
  bool transitive = false;
  bool reflexive = false;
  bool symmetric = false;
  bool equivalence = false;

  bool operator==(const RelationProperties&) const = default;
};

/// Binary relation on a universe, stored row-wise: row(x) is the bit vector of
/// successors of x, i.e. the successor neighborhood RN(x). Immutable.
class BinaryRelation {
 public:
  BinaryRelation() = default;

  explicit BinaryRelation(int universe_size) : universe_size_(universe_size) {
    if (universe_size < 0 || universe_size > kMaxUniverseSize) {
      throw error("universe size out of range: " + std::to_string(universe_size));
    }
  }

  BinaryRelation(int universe_size,
                 std::initializer_list<std::pair<int, int>> pairs)
      : BinaryRelation(universe_size) {
    for (auto [x, y] : pairs) add_pair(x, y);
  }

  static BinaryRelation from_pairs(int universe_size,
                                   const std::vector<std::pair<int, int>>& pairs) {
    BinaryRelation r(universe_size);
    for (auto [x, y] : pairs) r.add_pair(x, y);
    return r;
  }

  static BinaryRelation from_rows(int universe_size,
                                  const std::array<std::uint16_t, kMaxUniverseSize>& rows) {
    BinaryRelation r(universe_size);
    const std::uint32_t mask = ElemSet::full_set(universe_size).bits();
    for (int i = 0; i < universe_size; ++i) {
      if ((rows[static_cast<std::size_t>(i)] & ~mask) != 0) {
        throw invalid_element("relation row has bits outside the universe");
      }
      r.rows_[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)];
    }
    return r;
  }

  static BinaryRelation identity(int universe_size) {
    BinaryRelation r(universe_size);
    for (int i = 0; i < universe_size; ++i) r.add_pair(i, i);
    return r;
  }

  static BinaryRelation full(int universe_size) {
    BinaryRelation r(universe_size);
    const auto all = static_cast<std::uint16_t>(ElemSet::full_set(universe_size).bits());
    for (int i = 0; i < universe_size; ++i) r.rows_[static_cast<std::size_t>(i)] = all;
    return r;
  }

  int universe_size() const { return universe_size_; }

  bool contains(int x, int y) const {
    check_index(x);
    check_index(y);
    return (rows_[static_cast<std::size_t>(x)] >> y) & 1u;
  }

  /// Successor neighborhood RN(x) = {y : x R y}.
  ElemSet neighborhood(int x) const {
    check_index(x);
    return ElemSet(universe_size_, rows_[static_cast<std::size_t>(x)]);
  }

  bool empty() const {
    for (int i = 0; i < universe_size_; ++i) {
      if (rows_[static_cast<std::size_t>(i)] != 0) return false;
    }
    return true;
  }

  std::size_t pair_count() const {
    std::size_t total = 0;
    for (int i = 0; i < universe_size_; ++i) {
      total += static_cast<std::size_t>(
          std::popcount(std::uint32_t{rows_[static_cast<std::size_t>(i)]}));
    }
    return total;
  }

  /// All pairs in row-major order.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(pair_count());
    for (int x = 0; x < universe_size_; ++x) {
      for (int y = 0; y < universe_size_; ++y) {
        if ((rows_[static_cast<std::size_t>(x)] >> y) & 1u) out.emplace_back(x, y);
      }
    }
    return out;
  }

  bool subset_of(const BinaryRelation& other) const {
    if (universe_size_ != other.universe_size_) {
      throw universe_mismatch("relations are over different universes");
    }
    for (int i = 0; i < universe_size_; ++i) {
      if ((rows_[static_cast<std::size_t>(i)] &
           ~other.rows_[static_cast<std::size_t>(i)]) != 0) {
        return false;
      }
    }
    return true;
  }

  bool operator==(const BinaryRelation&) const = default;

 private:
  void check_index(int i) const {
    if (i < 0 || i >= universe_size_) {
      throw invalid_element("element index out of range: " + std::to_string(i));
    }
  }

  void add_pair(int x, int y) {
    check_index(x);
    check_index(y);
    rows_[static_cast<std::size_t>(x)] |= static_cast<std::uint16_t>(1u << y);
  }

  int universe_size_ = 0;
  std::array<std::uint16_t, kMaxUniverseSize> rows_{};
};

/// Property flags of a relation. Serial and transitive are evaluated through
/// the neighborhood characterizations: serial ⇔ every RN(x) is nonempty,
/// transitive ⇔ y ∈ RN(x) implies RN(y) ⊆ RN(x).
inline RelationProperties relation_properties(const BinaryRelation& r) {
  const int n = r.universe_size();
  RelationProperties p;
  p.serial = true;
  p.transitive = true;
  p.reflexive = true;
  p.symmetric = true;
  for (int x = 0; x < n; ++x) {
    const ElemSet rn = r.neighborhood(x);
    if (rn.empty()) p.serial = false;
    if (!rn.contains(x)) p.reflexive = false;
    for (int y = 0; y < n; ++y) {
      if (!rn.contains(y)) continue;
      if (!r.neighborhood(y).subset_of(rn)) p.transitive = false;
      if (!r.contains(y, x)) p.symmetric = false;
    }
  }
  p.equivalence = p.reflexive && p.symmetric && p.transitive;
  return p;
}

/// R together with every diagonal pair (x, x).
inline BinaryRelation reflexive_closure(const BinaryRelation& r) {
  std::array<std::uint16_t, kMaxUniverseSize> rows{};
  for (int x = 0; x < r.universe_size(); ++x) {
    rows[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(
        r.neighborhood(x).bits() | (1u << x));
  }
  return BinaryRelation::from_rows(r.universe_size(), rows);
}

/// Lower approximation L(X) = {x : RN(x) ⊆ X}.
inline ElemSet lower_approx(const BinaryRelation& r, const ElemSet& x) {
  if (x.universe_size() != r.universe_size()) {
    throw universe_mismatch("lower_approx: set is over a different universe");
  }
  ElemSet out = ElemSet::empty_set(r.universe_size());
  for (int u = 0; u < r.universe_size(); ++u) {
    if (r.neighborhood(u).subset_of(x)) out = out.with(u);
  }
  return out;
}

/// Upper approximation H(X) = {x : RN(x) ∩ X ≠ ∅}.
inline ElemSet upper_approx(const BinaryRelation& r, const ElemSet& x) {
  if (x.universe_size() != r.universe_size()) {
    throw universe_mismatch("upper_approx: set is over a different universe");
  }
  ElemSet out = ElemSet::empty_set(r.universe_size());
  for (int u = 0; u < r.universe_size(); ++u) {
    if (r.neighborhood(u).intersects(x)) out = out.with(u);
  }
  return out;
}

}  // namespace relmat
