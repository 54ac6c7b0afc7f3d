#pragma once

#include <string>
#include <vector>

#include "relmat/format.hpp"
#include "relmat/matroid.hpp"
#include "relmat/relation.hpp"
#include "relmat/set_family.hpp"

namespace relmat {

/// FMIN of the (distinct) successor neighborhoods {RN(x) : x ∈ U}. Defined for
/// every relation; it is a valid circuit family whenever the relation is
/// serial and transitive, and may be one accidentally otherwise.
inline SetFamily minimal_neighborhood_family(const BinaryRelation& r) {
  std::vector<ElemSet> neighborhoods;
  neighborhoods.reserve(static_cast<std::size_t>(r.universe_size()));
  for (int x = 0; x < r.universe_size(); ++x) {
    neighborhoods.push_back(r.neighborhood(x));
  }
  return fmin(SetFamily(r.universe_size(), std::move(neighborhoods)));
}

/// The matroid whose circuits are the minimal neighborhoods of r. Requires r
/// serial and transitive; rejects anything else, naming a witness.
inline Matroid matroid_from_relation(const BinaryRelation& r) {
  const Universe u = Universe::with_size(r.universe_size());
  for (int x = 0; x < r.universe_size(); ++x) {
    if (r.neighborhood(x).empty()) {
      throw not_serial_error(
          "relation is not serial: RN(" + u.label(x) + ") is empty", x);
    }
  }
  for (int x = 0; x < r.universe_size(); ++x) {
    const ElemSet rn = r.neighborhood(x);
    for (int y : rn.members()) {
      if (!r.neighborhood(y).subset_of(rn)) {
        throw not_transitive_error("relation is not transitive: " + u.label(y) +
                                       " is in RN(" + u.label(x) + ") but RN(" +
                                       u.label(y) + ") is not a subset of RN(" +
                                       u.label(x) + ")",
                                   x, y);
      }
    }
  }
  return Matroid::from_circuits(minimal_neighborhood_family(r));
}

/// The relation induced by a matroid: x related to y iff x = y or some
/// circuit contains both. Always an equivalence relation.
inline BinaryRelation relation_from_matroid(const Matroid& m) {
  const int n = m.universe_size();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) {
        pairs.emplace_back(x, y);
        continue;
      }
      for (const ElemSet& c : m.circuits()) {
        if (c.contains(x) && c.contains(y)) {
          pairs.emplace_back(x, y);
          break;
        }
      }
    }
  }
  return BinaryRelation::from_pairs(n, pairs);
}

/// For an equivalence relation whose classes all have at most two elements,
/// the closure of the induced matroid decomposes as
/// H(X) ∪ {u outside X : RN(u) = {u}}.
inline ElemSet equivalence_upper_decomposition(const BinaryRelation& r,
                                               const ElemSet& x) {
  if (x.universe_size() != r.universe_size()) {
    throw universe_mismatch(
        "equivalence_upper_decomposition: set is over a different universe");
  }
  if (!relation_properties(r).equivalence) {
    throw precondition_error(
        "equivalence_upper_decomposition: relation is not an equivalence");
  }
  for (int u = 0; u < r.universe_size(); ++u) {
    if (r.neighborhood(u).count() > 2) {
      throw precondition_error(
          "equivalence_upper_decomposition: class of element " +
          Universe::with_size(r.universe_size()).label(u) +
          " has more than two elements");
    }
  }
  ElemSet out = upper_approx(r, x);
  for (int u : x.complement().members()) {
    if (r.neighborhood(u) == ElemSet::singleton(r.universe_size(), u)) {
      out = out.with(u);
    }
  }
  return out;
}

/// M(R(M)): induce the equivalence relation of m, then the matroid of that
/// relation. Its circuits are exactly the equivalence classes.
inline Matroid compose_matroid_relation_matroid(const Matroid& m) {
  return matroid_from_relation(relation_from_matroid(m));
}

/// R(M(R)): induce the matroid of r (requires r serial and transitive), then
/// the equivalence relation of that matroid.
inline BinaryRelation compose_relation_matroid_relation(const BinaryRelation& r) {
  return relation_from_matroid(matroid_from_relation(r));
}

}  // namespace relmat
