#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "relmat/constructions.hpp"
#include "relmat/format.hpp"
#include "relmat/matroid.hpp"
#include "relmat/relation.hpp"
#include "relmat/set_family.hpp"

namespace relmat {

// Exhaustive enumeration is capped here: relations top out at 2^16 bit
// matrices and circuit-family candidates at 2^15 subset families, both
// tractable in well under a second.
inline constexpr int kMaxEnumerationSize = 4;

// Reports keep at most this many counterexample descriptions; a final entry
// notes how many more were found.
inline constexpr std::size_t kMaxWitnessesPerReport = 1000;

/// Conjunction of required property flags; default requires nothing.
struct PropertyFilter {
  bool serial = false;
  bool transitive = false;
  bool reflexive = false;
  bool symmetric = false;
  bool equivalence = false;

  bool matches(const RelationProperties& p) const {
    return (!serial || p.serial) && (!transitive || p.transitive) &&
           (!reflexive || p.reflexive) && (!symmetric || p.symmetric) &&
           (!equivalence || p.equivalence);
  }
};

namespace detail {

inline void check_enumeration_size(int n) {
  if (n < 0 || n > kMaxEnumerationSize) {
    throw space_too_large("search space too large: universe size " +
                          std::to_string(n) + " exceeds the cap of " +
                          std::to_string(kMaxEnumerationSize));
  }
}

}  // namespace detail

/// All 2^(n^2) relations on an n-element universe in ascending bit-matrix
/// order (bit x*n+y = pair (x, y)), keeping those matching `filter`.
inline std::vector<BinaryRelation> enumerate_relations(int n,
                                                       PropertyFilter filter = {}) {
  detail::check_enumeration_size(n);
  std::vector<BinaryRelation> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const std::uint16_t row_mask =
      n == 0 ? 0 : static_cast<std::uint16_t>((1u << n) - 1u);
  for (std::uint64_t m = 0; m < total; ++m) {
    std::array<std::uint16_t, kMaxUniverseSize> rows{};
    for (int i = 0; i < n; ++i) {
      rows[static_cast<std::size_t>(i)] =
          static_cast<std::uint16_t>((m >> (i * n)) & row_mask);
    }
    BinaryRelation r = BinaryRelation::from_rows(n, rows);
    if (filter.matches(relation_properties(r))) out.push_back(std::move(r));
  }
  return out;
}

/// One matroid per valid circuit family: every family of nonempty subsets of
/// the n-universe that passes the circuit axioms, in ascending family-mask
/// order (bit j = subset with bit value j+1 is a member).
inline std::vector<Matroid> enumerate_matroids(int n) {
  detail::check_enumeration_size(n);
  std::vector<Matroid> out;
  const int nonempty_subsets = (1 << n) - 1;
  const std::uint32_t family_count = std::uint32_t{1} << nonempty_subsets;
  for (std::uint32_t k = 0; k < family_count; ++k) {
    std::vector<ElemSet> members;
    for (int j = 0; j < nonempty_subsets; ++j) {
      if ((k >> j) & 1u) members.emplace_back(n, static_cast<std::uint32_t>(j + 1));
    }
    SetFamily family(n, std::move(members));
    if (check_circuit_axioms(family)) continue;
    out.push_back(Matroid::from_circuits(std::move(family)));
  }
  return out;
}

/// Outcome of exhaustively checking one catalog entry over universes
/// 0..max_n. `passed` is false exactly when `witnesses` is nonempty.
struct VerificationReport {
  std::string theorem_id;
  std::vector<int> universe_sizes;
  std::uint64_t space_size = 0;
  bool passed = true;
  std::vector<std::string> witnesses;
  std::chrono::duration<double> elapsed{0};
};

/// A registered claim. `sweep` examines every input of every universe size
/// 0..max_n, returns the number of hypothesis-satisfying inputs it checked,
/// and appends one description per counterexample in enumeration order.
struct TheoremEntry {
  std::string id;
  std::string claim;
  bool negative_control = false;
  std::function<std::uint64_t(int max_n, std::vector<std::string>&)> sweep;
};

namespace detail {

inline std::string rel_witness(const BinaryRelation& r) {
  const Universe u = Universe::with_size(r.universe_size());
  return "n=" + std::to_string(r.universe_size()) + " R=" +
         format_relation_inline(r, u);
}

inline std::string mat_witness(const Matroid& m) {
  const Universe u = Universe::with_size(m.universe_size());
  return "n=" + std::to_string(m.universe_size()) + " circuits=" +
         format_family_inline(m.circuits(), u);
}

inline std::string set_str(const ElemSet& s) {
  return format_elem_set(s, Universe::with_size(s.universe_size()));
}

inline std::string family_str(const SetFamily& f) {
  return format_family_inline(f, Universe::with_size(f.universe_size()));
}

// Every subset of an n-universe, ascending bit value.
template <typename Body>
void for_each_subset(int n, Body&& body) {
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    body(ElemSet(n, bits));
  }
}

inline bool max_class_size_at_most(const BinaryRelation& r, int limit) {
  for (int u = 0; u < r.universe_size(); ++u) {
    if (r.neighborhood(u).count() > limit) return false;
  }
  return true;
}

inline bool min_class_size_at_least(const BinaryRelation& r, int limit) {
  for (int u = 0; u < r.universe_size(); ++u) {
    if (r.neighborhood(u).count() < limit) return false;
  }
  return true;
}

inline std::vector<TheoremEntry> build_catalog() {
  std::vector<TheoremEntry> catalog;

  catalog.push_back(TheoremEntry{
      "P1",
      "the minimal-neighborhood family of a serial, transitive relation "
      "satisfies the circuit axioms",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const BinaryRelation& r :
               enumerate_relations(n, {.serial = true, .transitive = true})) {
            ++space;
            if (auto v = check_circuit_axioms(minimal_neighborhood_family(r))) {
              w.push_back(rel_witness(r) + ": " +
                          v->describe(Universe::with_size(n)));
            }
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P2",
      "an axiom-satisfying minimal-neighborhood family forces seriality "
      "(while at least one such relation is not transitive)",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        bool nontransitive_found = false;
        for (int n = 0; n <= max_n; ++n) {
          for (const BinaryRelation& r : enumerate_relations(n)) {
            if (check_circuit_axioms(minimal_neighborhood_family(r))) continue;
            ++space;
            const RelationProperties props = relation_properties(r);
            if (!props.serial) {
              w.push_back(rel_witness(r) +
                          ": minimal neighborhoods satisfy the circuit axioms "
                          "but the relation is not serial");
            }
            if (!props.transitive) nontransitive_found = true;
          }
        }
        if (!nontransitive_found) {
          w.push_back(
              "no relation with an axiom-satisfying minimal-neighborhood "
              "family and failing transitivity exists in the searched space");
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P3",
      "independents of the induced matroid are the sets with empty lower "
      "approximation, equivalently with H(complement) = U",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const BinaryRelation& r :
               enumerate_relations(n, {.serial = true, .transitive = true})) {
            ++space;
            const Matroid m = matroid_from_relation(r);
            for_each_subset(n, [&](const ElemSet& x) {
              const bool independent = m.independents().contains(x);
              const bool lower_empty = lower_approx(r, x).empty();
              const bool upper_full = upper_approx(r, x.complement()).is_full();
              if (independent != lower_empty || independent != upper_full) {
                w.push_back(rel_witness(r) + " X=" + set_str(x) +
                            ": independence/L/H characterizations disagree");
              }
            });
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P4",
      "a serial, transitive relation and its reflexive closure induce the "
      "same matroid",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const BinaryRelation& r :
               enumerate_relations(n, {.serial = true, .transitive = true})) {
            ++space;
            const Matroid direct = matroid_from_relation(r);
            const Matroid closed = matroid_from_relation(reflexive_closure(r));
            if (!(direct == closed)) {
              w.push_back(rel_witness(r) + ": circuits " +
                          family_str(direct.circuits()) +
                          " differ from reflexive-closure circuits " +
                          family_str(closed.circuits()));
            }
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P5",
      "equivalence relation with classes of size <= 2: H(X) lies within "
      "cl(X), and cl(X) = H(X) plus the untouched singleton classes",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const BinaryRelation& r :
               enumerate_relations(n, {.equivalence = true})) {
            if (!max_class_size_at_most(r, 2)) continue;
            ++space;
            const Matroid m = matroid_from_relation(r);
            for_each_subset(n, [&](const ElemSet& x) {
              const ElemSet h = upper_approx(r, x);
              const ElemSet cl = m.closure(x);
              if (!h.subset_of(cl)) {
                w.push_back(rel_witness(r) + " X=" + set_str(x) + ": H=" +
                            set_str(h) + " is not within cl=" + set_str(cl));
              }
              if (!(cl == equivalence_upper_decomposition(r, x))) {
                w.push_back(rel_witness(r) + " X=" + set_str(x) +
                            ": cl does not match the H-plus-singletons "
                            "decomposition");
              }
            });
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P6",
      "equivalence relation with classes of size >= 2: cl(X) lies within H(X)",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const BinaryRelation& r :
               enumerate_relations(n, {.equivalence = true})) {
            if (!min_class_size_at_least(r, 2)) continue;
            ++space;
            const Matroid m = matroid_from_relation(r);
            for_each_subset(n, [&](const ElemSet& x) {
              const ElemSet h = upper_approx(r, x);
              const ElemSet cl = m.closure(x);
              if (!cl.subset_of(h)) {
                w.push_back(rel_witness(r) + " X=" + set_str(x) + ": cl=" +
                            set_str(cl) + " is not within H=" + set_str(h));
              }
            });
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P7",
      "equivalence relation: H = cl on every subset exactly when the induced "
      "matroid is 2-circuit",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const BinaryRelation& r :
               enumerate_relations(n, {.equivalence = true})) {
            ++space;
            const Matroid m = matroid_from_relation(r);
            bool all_equal = true;
            for_each_subset(n, [&](const ElemSet& x) {
              if (!(upper_approx(r, x) == m.closure(x))) all_equal = false;
            });
            if (all_equal != m.is_2circuit()) {
              w.push_back(rel_witness(r) + ": H=cl holds " +
                          (all_equal ? "everywhere" : "not everywhere") +
                          " but the induced matroid is " +
                          (m.is_2circuit() ? "" : "not ") + "2-circuit");
            }
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P8",
      "the relation induced by a matroid is an equivalence relation",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const Matroid& m : enumerate_matroids(n)) {
            ++space;
            if (!relation_properties(relation_from_matroid(m)).equivalence) {
              w.push_back(mat_witness(m) +
                          ": induced relation is not an equivalence");
            }
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P9",
      "cl(empty) = empty implies cl(X) lies within H(X) under the induced "
      "relation",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const Matroid& m : enumerate_matroids(n)) {
            if (!m.closure(ElemSet::empty_set(n)).empty()) continue;
            ++space;
            const BinaryRelation induced = relation_from_matroid(m);
            for_each_subset(n, [&](const ElemSet& x) {
              const ElemSet cl = m.closure(x);
              const ElemSet h = upper_approx(induced, x);
              if (!cl.subset_of(h)) {
                w.push_back(mat_witness(m) + " X=" + set_str(x) + ": cl=" +
                            set_str(cl) + " is not within H=" + set_str(h));
              }
            });
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P10",
      "all circuits of size <= 2 implies H(X) lies within cl(X) under the "
      "induced relation",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const Matroid& m : enumerate_matroids(n)) {
            bool small_circuits = true;
            for (const ElemSet& c : m.circuits()) {
              if (c.count() > 2) small_circuits = false;
            }
            if (!small_circuits) continue;
            ++space;
            const BinaryRelation induced = relation_from_matroid(m);
            for_each_subset(n, [&](const ElemSet& x) {
              const ElemSet cl = m.closure(x);
              const ElemSet h = upper_approx(induced, x);
              if (!h.subset_of(cl)) {
                w.push_back(mat_witness(m) + " X=" + set_str(x) + ": H=" +
                            set_str(h) + " is not within cl=" + set_str(cl));
              }
            });
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P11",
      "H = cl under the induced relation exactly when there are no circuits "
      "or every circuit has size 2",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const Matroid& m : enumerate_matroids(n)) {
            ++space;
            const BinaryRelation induced = relation_from_matroid(m);
            bool all_equal = true;
            for_each_subset(n, [&](const ElemSet& x) {
              if (!(upper_approx(induced, x) == m.closure(x))) all_equal = false;
            });
            const bool rhs = m.circuits().empty() || m.is_2circuit();
            if (all_equal != rhs) {
              w.push_back(mat_witness(m) + ": H=cl holds " +
                          (all_equal ? "everywhere" : "not everywhere") +
                          " but the circuit condition is " +
                          (rhs ? "met" : "not met"));
            }
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P12",
      "circuits refine the circuits of M(R(M)); the composition is the "
      "identity exactly when the circuits form a partition",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const Matroid& m : enumerate_matroids(n)) {
            ++space;
            const Matroid composed = compose_matroid_relation_matroid(m);
            if (!finer(m.circuits(), composed.circuits())) {
              w.push_back(mat_witness(m) + ": circuits are not finer than " +
                          family_str(composed.circuits()));
            }
            const bool fixed_point = composed == m;
            if (fixed_point != is_partition(m.circuits())) {
              w.push_back(mat_witness(m) + ": M(R(M)) " +
                          (fixed_point ? "equals" : "differs from") +
                          " M but the circuits are " +
                          (is_partition(m.circuits()) ? "" : "not ") +
                          "a partition");
            }
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P13",
      "distinct minimal neighborhoods of a transitive relation are disjoint",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const BinaryRelation& r :
               enumerate_relations(n, {.transitive = true})) {
            ++space;
            const SetFamily family = minimal_neighborhood_family(r);
            for (std::size_t i = 0; i < family.size(); ++i) {
              for (std::size_t j = i + 1; j < family.size(); ++j) {
                if (family[i].intersects(family[j])) {
                  w.push_back(rel_witness(r) + ": minimal neighborhoods " +
                              set_str(family[i]) + " and " + set_str(family[j]) +
                              " intersect");
                }
              }
            }
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P14",
      "R(M(R)) lies within a reflexive, transitive R; for serial, transitive "
      "R the composition is the identity exactly for equivalence relations",
      false,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const BinaryRelation& r :
               enumerate_relations(n, {.serial = true, .transitive = true})) {
            ++space;
            const BinaryRelation composed = compose_relation_matroid_relation(r);
            const RelationProperties props = relation_properties(r);
            const Universe u = Universe::with_size(n);
            if (props.reflexive && !composed.subset_of(r)) {
              w.push_back(rel_witness(r) + ": R(M(R))=" +
                          format_relation_inline(composed, u) +
                          " is not within R");
            }
            if ((composed == r) != props.equivalence) {
              w.push_back(rel_witness(r) + ": R(M(R)) " +
                          ((composed == r) ? "equals" : "differs from") +
                          " R but R is " +
                          (props.equivalence ? "" : "not ") + "an equivalence");
            }
          }
        }
        return space;
      }});

  // Negative controls: claims that are deliberately false, so the harness
  // demonstrably can fail. Their expected outcome is "fail".
  catalog.push_back(TheoremEntry{
      "P2-converse-transitive",
      "negative control: an axiom-satisfying minimal-neighborhood family "
      "forces transitivity",
      true,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const BinaryRelation& r : enumerate_relations(n)) {
            const SetFamily family = minimal_neighborhood_family(r);
            if (check_circuit_axioms(family)) continue;
            ++space;
            if (!relation_properties(r).transitive) {
              w.push_back(rel_witness(r) + ": C(R)=" + family_str(family) +
                          " satisfies the circuit axioms but R is not "
                          "transitive");
            }
          }
        }
        return space;
      }});

  catalog.push_back(TheoremEntry{
      "P7-without-2circuit",
      "negative control: H = cl for every equivalence relation, with the "
      "2-circuit hypothesis dropped",
      true,
      [](int max_n, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= max_n; ++n) {
          for (const BinaryRelation& r :
               enumerate_relations(n, {.equivalence = true})) {
            ++space;
            const Matroid m = matroid_from_relation(r);
            for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
              const ElemSet x(n, bits);
              const ElemSet h = upper_approx(r, x);
              const ElemSet cl = m.closure(x);
              if (!(h == cl)) {
                w.push_back(rel_witness(r) + " X=" + set_str(x) + ": H=" +
                            set_str(h) + " but cl=" + set_str(cl));
                break;
              }
            }
          }
        }
        return space;
      }});

  return catalog;
}

}  // namespace detail

/// The registered claims: entries P1..P14 plus the negative controls, in
/// report order.
inline const std::vector<TheoremEntry>& theorem_catalog() {
  static const std::vector<TheoremEntry> catalog = detail::build_catalog();
  return catalog;
}

/// Runs one entry over all universe sizes 0..max_n.
inline VerificationReport run_entry(const TheoremEntry& entry, int max_n) {
  detail::check_enumeration_size(max_n);
  VerificationReport report;
  report.theorem_id = entry.id;
  for (int n = 0; n <= max_n; ++n) report.universe_sizes.push_back(n);
  const auto start = std::chrono::steady_clock::now();
  report.space_size = entry.sweep(max_n, report.witnesses);
  report.elapsed = std::chrono::steady_clock::now() - start;
  if (report.witnesses.size() > kMaxWitnessesPerReport) {
    const std::size_t dropped = report.witnesses.size() - kMaxWitnessesPerReport;
    report.witnesses.resize(kMaxWitnessesPerReport);
    report.witnesses.push_back("(" + std::to_string(dropped) +
                               " further counterexamples omitted)");
  }
  report.passed = report.witnesses.empty();
  return report;
}

inline VerificationReport run_theorem(const std::string& theorem_id, int max_n) {
  for (const TheoremEntry& entry : theorem_catalog()) {
    if (entry.id == theorem_id) return run_entry(entry, max_n);
  }
  throw unknown_theorem("unknown theorem id: " + theorem_id);
}

/// Runs every catalog entry, in catalog order.
inline std::vector<VerificationReport> run_all(int max_n) {
  std::vector<VerificationReport> reports;
  reports.reserve(theorem_catalog().size());
  for (const TheoremEntry& entry : theorem_catalog()) {
    reports.push_back(run_entry(entry, max_n));
  }
  return reports;
}

/// Informational probe, not part of the catalog: does "H = cl exactly when
/// the induced matroid is 2-circuit" extend from equivalence relations to all
/// serial, transitive relations? The report records the empirical answer.
inline VerificationReport probe_two_circuit_extension(int max_n) {
  TheoremEntry probe{
      "probe-two-circuit-extension",
      "H = cl exactly when the induced matroid is 2-circuit, over all serial, "
      "transitive relations",
      false,
      [](int limit, std::vector<std::string>& w) {
        std::uint64_t space = 0;
        for (int n = 0; n <= limit; ++n) {
          for (const BinaryRelation& r :
               enumerate_relations(n, {.serial = true, .transitive = true})) {
            ++space;
            const Matroid m = matroid_from_relation(r);
            bool all_equal = true;
            detail::for_each_subset(n, [&](const ElemSet& x) {
              if (!(upper_approx(r, x) == m.closure(x))) all_equal = false;
            });
            if (all_equal != m.is_2circuit()) {
              w.push_back(detail::rel_witness(r) + ": H=cl holds " +
                          (all_equal ? "everywhere" : "not everywhere") +
                          " but the induced matroid is " +
                          (m.is_2circuit() ? "" : "not ") + "2-circuit");
            }
          }
        }
        return space;
      }};
  return run_entry(probe, max_n);
}

}  // namespace relmat
