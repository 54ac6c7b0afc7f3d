#pragma once

#include <string>

#include "relmat/relation.hpp"
#include "relmat/set_family.hpp"
#include "relmat/universe.hpp"

namespace relmat {

/// "{1, 3}"; the empty set prints "{}". Elements appear in universe order.
inline std::string format_elem_set(const ElemSet& s, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ", ";
    out += u.label(i);
    first = false;
  }
  out += "}";
  return out;
}

/// One set per line, sets in canonical order; the empty family prints
/// "(empty)". No trailing newline.
inline std::string format_set_family(const SetFamily& f, const Universe& u) {
  if (f.empty()) return "(empty)";
  std::string out;
  bool first = true;
  for (const ElemSet& s : f) {
    if (!first) out += "\n";
    out += format_elem_set(s, u);
    first = false;
  }
  return out;
}

/// "{{1}, {2, 3}}" on a single line; the empty family prints "{}".
inline std::string format_family_inline(const SetFamily& f, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (const ElemSet& s : f) {
    if (!first) out += ", ";
    out += format_elem_set(s, u);
    first = false;
  }
  out += "}";
  return out;
}

/// "{(1,2), (2,1)}" on a single line, pairs in row-major order.
inline std::string format_relation_inline(const BinaryRelation& r, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : r.pairs()) {
    if (!first) out += ", ";
    out += "(" + u.label(x) + "," + u.label(y) + ")";
    first = false;
  }
  out += "}";
  return out;
}

/// One "x y" line per pair, row-major order. No trailing newline.
inline std::string format_pair_lines(const BinaryRelation& r, const Universe& u) {
  std::string out;
  bool first = true;
  for (auto [x, y] : r.pairs()) {
    if (!first) out += "\n";
    out += u.label(x) + " " + u.label(y);
    first = false;
  }
  return out;
}

}  // namespace relmat
