#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relmat/format.hpp"
#include "relmat/set_family.hpp"
#include "relmat/universe.hpp"

namespace relmat {

/// First violated circuit or independence axiom, with the witness sets that
/// break it (and, for C3, the shared element).
struct AxiomViolation {
  enum class Axiom { C1, C2, C3, I1, I2, I3 };

  Axiom axiom;
  std::vector<ElemSet> witness;
  std::optional<int> common_element;  // C3 only

  std::string describe(const Universe& u) const {
    switch (axiom) {
      case Axiom::C1:
        return "C1 violated: the empty set is a member";
      case Axiom::C2:
        return "C2 violated: " + format_elem_set(witness[0], u) +
               " is contained in " + format_elem_set(witness[1], u);
      case Axiom::C3:
        return "C3 violated: " + format_elem_set(witness[0], u) + " and " +
               format_elem_set(witness[1], u) + " share element " +
               u.label(*common_element) +
               " but no member lies in their union minus it";
      case Axiom::I1:
        return "I1 violated: the empty set is not a member";
      case Axiom::I2:
        return "I2 violated: " + format_elem_set(witness[0], u) +
               " is a member but its subset " + format_elem_set(witness[1], u) +
               " is not";
      case Axiom::I3:
        return "I3 violated: " + format_elem_set(witness[0], u) +
               " cannot be augmented from " + format_elem_set(witness[1], u);
    }
    return "";
  }
};

inline const char* axiom_name(AxiomViolation::Axiom a) {
  switch (a) {
    case AxiomViolation::Axiom::C1: return "C1";
    case AxiomViolation::Axiom::C2: return "C2";
    case AxiomViolation::Axiom::C3: return "C3";
    case AxiomViolation::Axiom::I1: return "I1";
    case AxiomViolation::Axiom::I2: return "I2";
    case AxiomViolation::Axiom::I3: return "I3";
  }
  return "";
}

/// Thrown when a family offered as circuits (or independents) fails its axioms.
struct axiom_error : error {
  explicit axiom_error(AxiomViolation v, int universe_size)
      : error(v.describe(Universe::with_size(universe_size))),
        violation(std::move(v)) {}
  AxiomViolation violation;
};

/// Checks (C1) no empty member, (C2) antichain, (C3) circuit elimination.
/// Returns the first violation in canonical member order, or nullopt.
inline std::optional<AxiomViolation> check_circuit_axioms(const SetFamily& family) {
  for (const ElemSet& c : family) {
    if (c.empty()) {
      return AxiomViolation{AxiomViolation::Axiom::C1, {c}, std::nullopt};
    }
  }
  for (const ElemSet& c1 : family) {
    for (const ElemSet& c2 : family) {
      if (c1.proper_subset_of(c2)) {
        return AxiomViolation{AxiomViolation::Axiom::C2, {c1, c2}, std::nullopt};
      }
    }
  }
  for (const ElemSet& c1 : family) {
    for (const ElemSet& c2 : family) {
      if (c1 == c2) continue;
      for (int c : (c1 & c2).members()) {
        const ElemSet target = (c1 | c2).without(c);
        bool eliminated = false;
        for (const ElemSet& c3 : family) {
          if (c3.subset_of(target)) {
            eliminated = true;
            break;
          }
        }
        if (!eliminated) {
          return AxiomViolation{AxiomViolation::Axiom::C3, {c1, c2}, c};
        }
      }
    }
  }
  return std::nullopt;
}

/// Checks (I1) contains the empty set, (I2) downward closed, (I3) augmentation.
inline std::optional<AxiomViolation> check_independence_axioms(const SetFamily& family) {
  const int n = family.universe_size();
  if (!family.contains(ElemSet::empty_set(n))) {
    return AxiomViolation{AxiomViolation::Axiom::I1, {}, std::nullopt};
  }
  for (const ElemSet& i : family) {
    // Subsets in ascending bit order so the reported witness is canonical.
    for (std::uint32_t sub = 0; sub < i.bits(); ++sub) {
      if ((sub & ~i.bits()) != 0) continue;
      if (!family.contains(ElemSet(n, sub))) {
        return AxiomViolation{AxiomViolation::Axiom::I2, {i, ElemSet(n, sub)}, std::nullopt};
      }
    }
  }
  for (const ElemSet& i1 : family) {
    for (const ElemSet& i2 : family) {
      if (i1.count() >= i2.count()) continue;
      bool augmented = false;
      for (int u : (i2 - i1).members()) {
        if (family.contains(i1.with(u))) {
          augmented = true;
          break;
        }
      }
      if (!augmented) {
        return AxiomViolation{AxiomViolation::Axiom::I3, {i1, i2}, std::nullopt};
      }
    }
  }
  return std::nullopt;
}

/// Matroid on a universe, represented canonically by its circuit family
/// (validated against the circuit axioms on construction). The independent
/// sets are derived as Opp(Upp(circuits)) and cached on first use.
class Matroid {
 public:
  Matroid() : Matroid(from_circuits(SetFamily(0))) {}

  static Matroid from_circuits(SetFamily circuits) {
    if (auto violation = check_circuit_axioms(circuits)) {
      throw axiom_error(*violation, circuits.universe_size());
    }
    return Matroid(std::move(circuits));
  }

  static Matroid free_matroid(int universe_size) {
    return from_circuits(SetFamily(universe_size));
  }

  int universe_size() const { return circuits_.universe_size(); }
  const SetFamily& circuits() const { return circuits_; }

  /// Independent sets, materialized once (race-free) and then read-only.
  const SetFamily& independents() const {
    std::call_once(cache_->once, [this] { cache_->value = opp(upp(circuits_)); });
    return cache_->value;
  }

  /// True iff no circuit is contained in x.
  bool is_independent(const ElemSet& x) const {
    check_universe(x);
    for (const ElemSet& c : circuits_) {
      if (c.subset_of(x)) return false;
    }
    return true;
  }

  /// cl(X) = X plus every outside element completed into a circuit within
  /// X ∪ {u}.
  ElemSet closure(const ElemSet& x) const {
    check_universe(x);
    ElemSet out = x;
    for (int u : x.complement().members()) {
      const ElemSet extended = x.with(u);
      for (const ElemSet& c : circuits_) {
        if (c.contains(u) && c.subset_of(extended)) {
          out = out.with(u);
          break;
        }
      }
    }
    return out;
  }

  /// Size of a largest independent subset of x, by exhaustive subset search.
  /// Deliberately brute force so it stays an independent cross-check for the
  /// circuit-based closure.
  int rank(const ElemSet& x) const {
    check_universe(x);
    int best = 0;
    std::uint32_t sub = x.bits();
    while (true) {
      const ElemSet candidate(x.universe_size(), sub);
      if (is_independent(candidate) && candidate.count() > best) {
        best = candidate.count();
      }
      if (sub == 0) break;
      sub = (sub - 1) & x.bits();
    }
    return best;
  }

  /// True iff every circuit has exactly two elements (vacuously true when
  /// there are no circuits).
  bool is_2circuit() const {
    for (const ElemSet& c : circuits_) {
      if (c.count() != 2) return false;
    }
    return true;
  }

  bool operator==(const Matroid& other) const { return circuits_ == other.circuits_; }

 private:
  explicit Matroid(SetFamily circuits)
      : circuits_(std::move(circuits)), cache_(std::make_shared<Cache>()) {}

  void check_universe(const ElemSet& x) const {
    if (x.universe_size() != universe_size()) {
      throw universe_mismatch("set is over a different universe than the matroid");
    }
  }

  struct Cache {
    std::once_flag once;
    SetFamily value;
  };

  SetFamily circuits_;
  mutable std::shared_ptr<Cache> cache_;  // shared by copies; same circuits
};

/// FMIN(Opp(independents)): the minimal dependent sets of a valid independence
/// family.
inline SetFamily circuits_from_independents(const SetFamily& independents) {
  if (auto violation = check_independence_axioms(independents)) {
    throw axiom_error(*violation, independents.universe_size());
  }
  return fmin(opp(independents));
}

/// Spec-level alias for Matroid::from_circuits.
inline Matroid matroid_from_circuits(SetFamily circuits) {
  return Matroid::from_circuits(std::move(circuits));
}

}  // namespace relmat
