#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

/// State and transition names. Well-formedness (ASCII alphanumeric, leading
/// uppercase letter) is checked by validate(), not on construction, so that
/// candidate diagrams can be loaded and reported on.
using Identifier = std::string;

bool is_identifier(std::string_view text) noexcept;

enum class StateKind { Unclassified, Concrete, Abstract };

std::string_view to_string(StateKind kind) noexcept;
std::optional<StateKind> parse_state_kind(std::string_view text) noexcept;

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

struct StateNode {
  Identifier name;
  StateKind kind = StateKind::Unclassified;
  std::optional<Position> position;

  friend bool operator==(const StateNode&, const StateNode&) = default;
};

struct Transition {
  Identifier name;
  Identifier from;
  Identifier to;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// A state diagram: named states, named directed transitions and a single
/// start state. There are no final states. List order is the canonical order
/// for every derived output.
struct StateDiagram {
  std::string title;
  std::vector<StateNode> states;
  std::vector<Transition> transitions;
  Identifier start;

  bool has_state(std::string_view name) const noexcept;
  bool has_message(std::string_view name) const noexcept;

  friend bool operator==(const StateDiagram&, const StateDiagram&) = default;
};

enum class ViolationCode {
  BadIdentifier,
  DuplicateStateName,
  StateTransitionNameClash,
  DuplicateOutgoingTransitionName,
  MissingStart,
  DanglingEndpoint,
  DuplicateEdgeTriple,
};

std::string_view to_string(ViolationCode code) noexcept;

struct Violation {
  ViolationCode code;
  std::string subject;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool contains(ViolationCode code) const noexcept;
  std::size_t count(ViolationCode code) const noexcept;
};

/// Checks every diagram invariant. One record per broken rule instance,
/// sorted by (code, subject, detail).
ValidationReport validate(const StateDiagram& d);

class UnknownStateError : public std::invalid_argument {
 public:
  explicit UnknownStateError(const std::string& state)
      : std::invalid_argument("unknown state '" + state + "'"), state_(state) {}
  const std::string& state() const noexcept { return state_; }

 private:
  std::string state_;
};

class UnknownMessageError : public std::invalid_argument {
 public:
  explicit UnknownMessageError(const std::string& message)
      : std::invalid_argument("unknown message '" + message + "'"),
        message_(message) {}
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
};

/// Single-step semantics of the generated update function: follow the
/// transition named `msg` leaving `current`, or stay put if there is none.
Identifier step(const StateDiagram& d, std::string_view current,
                std::string_view msg);

/// Transitions leaving `state`, in diagram order.
std::vector<Transition> outgoing(const StateDiagram& d, std::string_view state);

}  // namespace sdc
