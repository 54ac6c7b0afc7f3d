#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relmat/errors.hpp"

namespace relmat {

// Everything in this library lives on a ground set of at most 16 elements, so
// that any subset fits a single bit vector and full powerset sweeps stay cheap.
inline constexpr int kMaxUniverseSize = 16;

/// Finite ground set. Elements are addressed by index 0..size()-1; labels are
/// opaque display tokens, pairwise distinct, kept in index order.
class Universe {
 public:
  Universe() = default;

  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > kMaxUniverseSize) {
      throw error("universe has more than " + std::to_string(kMaxUniverseSize) +
                  " elements");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      for (std::size_t j = i + 1; j < labels_.size(); ++j) {
        if (labels_[i] == labels_[j]) {
          throw error("duplicate element label '" + labels_[i] + "'");
        }
      }
    }
  }

  /// Universe with the default labels "1".."n".
  static Universe with_size(int n) {
    if (n < 0 || n > kMaxUniverseSize) {
      throw error("universe size out of range: " + std::to_string(n));
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return Universe(std::move(labels));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::string& label(int i) const {
    if (i < 0 || i >= size()) {
      throw invalid_element("element index out of range: " + std::to_string(i));
    }
    return labels_[static_cast<std::size_t>(i)];
  }

  std::optional<int> index_of(std::string_view token) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == token) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  bool operator==(const Universe&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Subset of a universe, stored as a bit vector: bit i set = element i present.
/// Values are immutable; every operation returns a new set.
class ElemSet {
 public:
  ElemSet() = default;

  ElemSet(int universe_size, std::uint32_t bits)
      : bits_(bits), universe_size_(universe_size) {
    if (universe_size < 0 || universe_size > kMaxUniverseSize) {
      throw invalid_element("universe size out of range: " +
                            std::to_string(universe_size));
    }
    if ((bits & ~mask_for(universe_size)) != 0) {
      throw invalid_element("set contains bits outside the universe");
    }
  }

  static ElemSet empty_set(int universe_size) { return ElemSet(universe_size, 0); }

  static ElemSet full_set(int universe_size) {
    return ElemSet(universe_size, mask_for(universe_size));
  }

  static ElemSet singleton(int universe_size, int element) {
    check_index(universe_size, element);
    return ElemSet(universe_size, std::uint32_t{1} << element);
  }

  static ElemSet of(int universe_size, std::initializer_list<int> elements) {
    std::uint32_t bits = 0;
    for (int e : elements) {
      check_index(universe_size, e);
      bits |= std::uint32_t{1} << e;
    }
    return ElemSet(universe_size, bits);
  }

  int universe_size() const { return universe_size_; }
  std::uint32_t bits() const { return bits_; }

  bool contains(int element) const {
    check_index(universe_size_, element);
    return (bits_ >> element) & 1u;
  }

  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == mask_for(universe_size_); }

  bool subset_of(const ElemSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  bool proper_subset_of(const ElemSet& other) const {
    return subset_of(other) && bits_ != other.bits_;
  }

  bool intersects(const ElemSet& other) const { return (bits_ & other.bits_) != 0; }

  ElemSet operator|(const ElemSet& other) const {
    return ElemSet(universe_size_, bits_ | other.bits_);
  }

  ElemSet operator&(const ElemSet& other) const {
    return ElemSet(universe_size_, bits_ & other.bits_);
  }

  /// Set difference.
  ElemSet operator-(const ElemSet& other) const {
    return ElemSet(universe_size_, bits_ & ~other.bits_);
  }

  ElemSet complement() const {
    return ElemSet(universe_size_, mask_for(universe_size_) & ~bits_);
  }

  ElemSet with(int element) const {
    check_index(universe_size_, element);
    return ElemSet(universe_size_, bits_ | (std::uint32_t{1} << element));
  }

  ElemSet without(int element) const {
    check_index(universe_size_, element);
    return ElemSet(universe_size_, bits_ & ~(std::uint32_t{1} << element));
  }

  /// Member indices in ascending order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int i = 0; i < universe_size_; ++i) {
      if ((bits_ >> i) & 1u) out.push_back(i);
    }
    return out;
  }

  // Ordering is (universe size, bit value); within one universe this is the
  // canonical ascending-bit-value order used by SetFamily.
  auto operator<=>(const ElemSet& other) const {
    if (auto c = universe_size_ <=> other.universe_size_; c != 0) return c;
    return bits_ <=> other.bits_;
  }
  bool operator==(const ElemSet&) const = default;

 private:
  static std::uint32_t mask_for(int n) {
    return n == 0 ? 0u : ((std::uint32_t{1} << n) - 1u);
  }

  static void check_index(int universe_size, int element) {
    if (element < 0 || element >= universe_size) {
      throw invalid_element("element index out of range: " +
                            std::to_string(element));
    }
  }

  std::uint32_t bits_ = 0;
  int universe_size_ = 0;
};

}  // namespace relmat
