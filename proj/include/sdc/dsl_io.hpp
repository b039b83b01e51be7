#pragma once

// Reading and writing diagrams.
//
// Two formats are supported:
//
//   * JSON documents with top-level keys "title", "start", "states" and
//     "transitions". States are {"name", "kind", "x"?, "y"?} with kind one of
//     "concrete", "abstract", "unclassified"; transitions are
//     {"name", "from", "to"}.
//
//   * A line-oriented authoring format (.sd):
//
//       title A walk through the school
//       state Outside @start #concrete
//       state Hallway
//       GoInside: Outside -> Hallway
//
//     Blank lines and `//` comments are ignored.
//
// Both parsers reject documents that do not validate.

#include <stdexcept>
#include <string>
#include <string_view>

#include "sdc/diagram.hpp"

namespace sdc {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  // 1-based; column is 0 when unknown.
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

StateDiagram parse_json(std::string_view text);

/// Canonical JSON: fixed key order, two-space indent, '\n' line endings and a
/// trailing newline.
std::string emit_json(const StateDiagram& d);

StateDiagram parse_dsl(std::string_view text);

enum class InputFormat { Json, Dsl };

/// Format by file extension: ".sd" is the DSL, everything else JSON.
InputFormat format_for_path(std::string_view path) noexcept;

StateDiagram parse(std::string_view text, InputFormat format);

}  // namespace sdc
