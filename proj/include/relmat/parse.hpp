#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relmat/format.hpp"
#include "relmat/matroid.hpp"
#include "relmat/relation.hpp"
#include "relmat/universe.hpp"

namespace relmat {

struct RelationDocument {
  Universe universe;
  BinaryRelation relation;
};

struct MatroidDocument {
  Universe universe;
  Matroid matroid;
};

namespace detail {

// One logical input line: tokens after comment stripping, plus its 1-based
// position in the document. Blank lines (including comment-only lines) are
// dropped.
struct Line {
  int number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

inline Universe parse_universe_header(const std::vector<Line>& lines) {
  if (lines.empty() || lines.front().tokens.front() != "universe:") {
    const int at = lines.empty() ? 1 : lines.front().number;
    throw parse_error("missing 'universe:' header (line " + std::to_string(at) +
                          ")",
                      at);
  }
  const Line& header = lines.front();
  std::vector<std::string> labels(header.tokens.begin() + 1, header.tokens.end());
  if (static_cast<int>(labels.size()) > kMaxUniverseSize) {
    throw parse_error("universe has more than " +
                          std::to_string(kMaxUniverseSize) + " elements (line " +
                          std::to_string(header.number) + ")",
                      header.number);
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) {
        throw parse_error("duplicate element '" + labels[i] + "' (line " +
                              std::to_string(header.number) + ")",
                          header.number);
      }
    }
  }
  return Universe(std::move(labels));
}

inline void expect_section(const std::vector<Line>& lines, const char* name) {
  if (lines.size() < 2 || lines[1].tokens.size() != 1 ||
      lines[1].tokens[0] != name) {
    const int at = lines.size() < 2 ? lines.front().number + 1 : lines[1].number;
    throw parse_error("expected '" + std::string(name) + "' section (line " +
                          std::to_string(at) + ")",
                      at);
  }
}

inline int resolve_element(const Universe& u, const std::string& token, int line) {
  if (auto index = u.index_of(token)) return *index;
  std::string msg = "unknown element '" + token + "'";
  if (line > 0) msg += " (line " + std::to_string(line) + ")";
  throw parse_error(msg, line);
}

}  // namespace detail

/// Parses a relation document:
///   universe: 1 2 3
///   relation:
///   1 1
///   1 3
/// Tokens are whitespace-separated; '#' starts a comment; blank lines are
/// ignored; duplicate pair lines are idempotent.
inline RelationDocument parse_relation(std::string_view text) {
  const auto lines = detail::tokenize(text);
  Universe universe = detail::parse_universe_header(lines);
  detail::expect_section(lines, "relation:");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const detail::Line& line = lines[i];
    if (line.tokens.size() != 2) {
      throw parse_error("malformed pair line: expected two elements (line " +
                            std::to_string(line.number) + ")",
                        line.number);
    }
    pairs.emplace_back(detail::resolve_element(universe, line.tokens[0], line.number),
                       detail::resolve_element(universe, line.tokens[1], line.number));
  }
  BinaryRelation relation = BinaryRelation::from_pairs(universe.size(), pairs);
  return RelationDocument{std::move(universe), std::move(relation)};
}

/// Parses a matroid document:
///   universe: 1 2 3
///   circuits:
///   2
///   3
/// One circuit per line. The circuit axioms are enforced at parse time; a
/// violation is reported with the offending line numbers.
inline MatroidDocument parse_matroid(std::string_view text) {
  const auto lines = detail::tokenize(text);
  Universe universe = detail::parse_universe_header(lines);
  detail::expect_section(lines, "circuits:");
  std::vector<ElemSet> circuits;
  std::map<std::uint32_t, int> first_line_of;  // circuit bits -> line number
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const detail::Line& line = lines[i];
    ElemSet circuit = ElemSet::empty_set(universe.size());
    for (const std::string& token : line.tokens) {
      circuit = circuit.with(detail::resolve_element(universe, token, line.number));
    }
    circuits.push_back(circuit);
    first_line_of.emplace(circuit.bits(), line.number);
  }
  SetFamily family(universe.size(), std::move(circuits));
  if (auto violation = check_circuit_axioms(family)) {
    std::string msg = "circuit axiom " +
                      std::string(axiom_name(violation->axiom)) +
                      " violated: " + violation->describe(universe);
    std::string at;
    for (const ElemSet& witness : violation->witness) {
      if (auto it = first_line_of.find(witness.bits()); it != first_line_of.end()) {
        at += (at.empty() ? "" : ", ") + std::to_string(it->second);
      }
    }
    int first = 0;
    if (!at.empty()) {
      msg += " (line" + std::string(violation->witness.size() > 1 ? "s " : " ") +
             at + ")";
      first = first_line_of.at(violation->witness.front().bits());
    }
    throw parse_error(msg, first);
  }
  return MatroidDocument{std::move(universe), Matroid::from_circuits(std::move(family))};
}

/// Parses an inline subset expression such as "1 3" against a universe.
/// The empty string denotes the empty set.
inline ElemSet parse_elem_set(std::string_view text, const Universe& u) {
  ElemSet out = ElemSet::empty_set(u.size());
  for (const detail::Line& line : detail::tokenize(text)) {
    for (const std::string& token : line.tokens) {
      out = out.with(detail::resolve_element(u, token, 0));
    }
  }
  return out;
}

/// Canonical document text for a relation; re-parses to an equal value.
inline std::string format_relation_document(const BinaryRelation& r,
                                            const Universe& u) {
  std::string out = "universe:";
  for (const std::string& label : u.labels()) out += " " + label;
  out += "\nrelation:\n";
  for (auto [x, y] : r.pairs()) out += u.label(x) + " " + u.label(y) + "\n";
  return out;
}

/// Canonical document text for a matroid; re-parses to an equal value.
inline std::string format_matroid_document(const Matroid& m, const Universe& u) {
  std::string out = "universe:";
  for (const std::string& label : u.labels()) out += " " + label;
  out += "\ncircuits:\n";
  for (const ElemSet& c : m.circuits()) {
    std::string line;
    for (int e : c.members()) line += (line.empty() ? "" : " ") + u.label(e);
    out += line + "\n";
  }
  return out;
}

}  // namespace relmat
