#include "sdc/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace sdc {

namespace {

bool is_ascii_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }
bool is_ascii_lower(char c) noexcept { return c >= 'a' && c <= 'z'; }
bool is_ascii_digit(char c) noexcept { return c >= '0' && c <= '9'; }

const StateNode* find_state(const StateDiagram& d, std::string_view name) {
  auto it = std::find_if(d.states.begin(), d.states.end(),
                         [&](const StateNode& s) { return s.name == name; });
  return it == d.states.end() ? nullptr : &*it;
}

}  // namespace

bool is_identifier(std::string_view text) noexcept {
  if (text.empty() || !is_ascii_upper(text.front())) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return is_ascii_upper(c) || is_ascii_lower(c) || is_ascii_digit(c);
  });
}

std::string_view to_string(StateKind kind) noexcept {
  switch (kind) {
    case StateKind::Concrete:
      return "concrete";
    case StateKind::Abstract:
      return "abstract";
    case StateKind::Unclassified:
      break;
  }
  return "unclassified";
}

std::optional<StateKind> parse_state_kind(std::string_view text) noexcept {
  if (text == "concrete") return StateKind::Concrete;
  if (text == "abstract") return StateKind::Abstract;
  if (text == "unclassified") return StateKind::Unclassified;
  return std::nullopt;
}

bool StateDiagram::has_state(std::string_view name) const noexcept {
  return find_state(*this, name) != nullptr;
}

bool StateDiagram::has_message(std::string_view name) const noexcept {
  return std::any_of(transitions.begin(), transitions.end(),
                     [&](const Transition& t) { return t.name == name; });
}

std::string_view to_string(ViolationCode code) noexcept {
  switch (code) {
    case ViolationCode::BadIdentifier:
      return "BadIdentifier";
    case ViolationCode::DuplicateStateName:
      return "DuplicateStateName";
    case ViolationCode::StateTransitionNameClash:
      return "StateTransitionNameClash";
    case ViolationCode::DuplicateOutgoingTransitionName:
      return "DuplicateOutgoingTransitionName";
    case ViolationCode::MissingStart:
      return "MissingStart";
    case ViolationCode::DanglingEndpoint:
      return "DanglingEndpoint";
    case ViolationCode::DuplicateEdgeTriple:
      return "DuplicateEdgeTriple";
  }
  return "Unknown";
}

bool ValidationReport::contains(ViolationCode code) const noexcept {
  return count(code) > 0;
}

std::size_t ValidationReport::count(ViolationCode code) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [&](const Violation& v) { return v.code == code; }));
}

ValidationReport validate(const StateDiagram& d) {
  std::set<std::tuple<ViolationCode, std::string, std::string>> found;
  auto report = [&](ViolationCode code, std::string subject, std::string detail) {
    found.emplace(code, std::move(subject), std::move(detail));
  };

  std::map<std::string, std::size_t> state_counts;
  for (const auto& s : d.states) {
    ++state_counts[s.name];
    if (!is_identifier(s.name)) {
      report(ViolationCode::BadIdentifier, s.name,
             "state name must be alphanumeric and start with a capital letter");
    }
  }
  for (const auto& [name, n] : state_counts) {
    if (n > 1) {
      report(ViolationCode::DuplicateStateName, name,
             "state declared " + std::to_string(n) + " times");
    }
  }

  // (from, name) -> distinct targets; (name, from, to) -> multiplicity
  std::map<std::pair<std::string, std::string>, std::set<std::string>> targets;
  std::map<std::tuple<std::string, std::string, std::string>, std::size_t> triples;
  for (const auto& t : d.transitions) {
    if (!is_identifier(t.name)) {
      report(ViolationCode::BadIdentifier, t.name,
             "transition name must be alphanumeric and start with a capital letter");
    }
    if (state_counts.count(t.name) != 0) {
      report(ViolationCode::StateTransitionNameClash, t.name,
             "name is used by both a state and a transition");
    }
    if (state_counts.count(t.from) == 0) {
      report(ViolationCode::DanglingEndpoint, t.name,
             "source '" + t.from + "' is not a state");
    }
    if (state_counts.count(t.to) == 0) {
      report(ViolationCode::DanglingEndpoint, t.name,
             "target '" + t.to + "' is not a state");
    }
    targets[{t.from, t.name}].insert(t.to);
    ++triples[{t.name, t.from, t.to}];
  }
  for (const auto& [key, tos] : targets) {
    if (tos.size() > 1) {
      report(ViolationCode::DuplicateOutgoingTransitionName, key.first,
             "transition '" + key.second + "' leaves '" + key.first + "' " +
                 std::to_string(tos.size()) + " times");
    }
  }
  for (const auto& [key, n] : triples) {
    if (n > 1) {
      const auto& [name, from, to] = key;
      report(ViolationCode::DuplicateEdgeTriple, name,
             from + " -> " + to + " declared " + std::to_string(n) + " times");
    }
  }

  if (state_counts.count(d.start) == 0) {
    report(ViolationCode::MissingStart, d.start,
           d.start.empty() ? "no start state" : "start is not a state");
  }

  ValidationReport out;
  out.violations.reserve(found.size());
  for (auto& [code, subject, detail] : found) {
    out.violations.push_back({code, subject, detail});
  }
  return out;
}

Identifier step(const StateDiagram& d, std::string_view current,
                std::string_view msg) {
  if (!d.has_state(current)) throw UnknownStateError(std::string(current));
  if (!d.has_message(msg)) throw UnknownMessageError(std::string(msg));
  for (const auto& t : d.transitions) {
    if (t.from == current && t.name == msg) return t.to;
  }
  return Identifier(current);
}

std::vector<Transition> outgoing(const StateDiagram& d, std::string_view state) {
  if (!d.has_state(state)) throw UnknownStateError(std::string(state));
  std::vector<Transition> out;
  std::copy_if(d.transitions.begin(), d.transitions.end(), std::back_inserter(out),
               [&](const Transition& t) { return t.from == state; });
  return out;
}

}  // namespace sdc
