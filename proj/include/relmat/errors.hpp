#pragma once

#include <stdexcept>
#include <string>

namespace relmat {

// Base class of every error thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed. `line` is 1-based; 0 means the error is not
// tied to a specific line (e.g. an inline --set expression).
struct parse_error : error {
  explicit parse_error(const std::string& msg, int line_no = 0)
      : error(msg), line(line_no) {}
  int line;
};

// A documented operation precondition does not hold.
struct precondition_error : error {
  using error::error;
};

struct universe_mismatch : precondition_error {
  using precondition_error::precondition_error;
};

struct invalid_element : precondition_error {
  using precondition_error::precondition_error;
};

// Rejections of matroid_from_relation, with the offending element / pair
// (0-based indices).
struct not_serial_error : precondition_error {
  not_serial_error(const std::string& msg, int element_index)
      : precondition_error(msg), element(element_index) {}
  int element;
};

struct not_transitive_error : precondition_error {
  not_transitive_error(const std::string& msg, int from_index, int to_index)
      : precondition_error(msg), from(from_index), to(to_index) {}
  int from;
  int to;
};

// Enumeration guard rails.
struct space_too_large : error {
  using error::error;
};

struct unknown_theorem : error {
  using error::error;
};

}  // namespace relmat
