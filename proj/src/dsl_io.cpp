#include "sdc/dsl_io.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "json.hpp"

namespace sdc {

namespace {

using nlohmann::json;

std::string summarize(const ValidationReport& report) {
  std::string msg = "diagram is invalid:";
  for (const auto& v : report.violations) {
    msg += "\n  ";
    msg += to_string(v.code);
    msg += ": ";
    msg += v.subject.empty() ? std::string("<empty>") : v.subject;
    msg += ": ";
    msg += v.detail;
  }
  return msg;
}

void require_valid(const StateDiagram& d) {
  auto report = validate(d);
  if (!report.ok()) throw ValidationError(std::move(report));
}

// ---------------------------------------------------------------------------
// JSON

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         std::string_view where) {
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw SchemaError("unknown field '" + item.key() + "' in " + std::string(where));
    }
  }
}

const json& require_field(const json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError("missing field '" + std::string(key) + "' in " + std::string(where));
  }
  return *it;
}

std::string require_string(const json& obj, const char* key, std::string_view where) {
  const auto& v = require_field(obj, key, where);
  if (!v.is_string()) {
    throw SchemaError("field '" + std::string(key) + "' in " + std::string(where) +
                      " must be a string");
  }
  return v.get<std::string>();
}

StateNode read_state(const json& j, std::size_t index) {
  const std::string where = "states[" + std::to_string(index) + "]";
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  reject_unknown_keys(j, {"name", "kind", "x", "y"}, where);

  StateNode node;
  node.name = require_string(j, "name", where);
  const auto kind_text = require_string(j, "kind", where);
  const auto kind = parse_state_kind(kind_text);
  if (!kind) throw SchemaError("unknown kind '" + kind_text + "' in " + where);
  node.kind = *kind;

  const bool has_x = j.contains("x");
  const bool has_y = j.contains("y");
  if (has_x != has_y) throw SchemaError(where + " must give both x and y or neither");
  if (has_x) {
    if (!j["x"].is_number() || !j["y"].is_number()) {
      throw SchemaError(where + " coordinates must be numbers");
    }
    node.position = Position{j["x"].get<double>(), j["y"].get<double>()};
  }
  return node;
}

Transition read_transition(const json& j, std::size_t index) {
  const std::string where = "transitions[" + std::to_string(index) + "]";
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  reject_unknown_keys(j, {"name", "from", "to"}, where);
  return Transition{require_string(j, "name", where), require_string(j, "from", where),
                    require_string(j, "to", where)};
}

// ---------------------------------------------------------------------------
// DSL

constexpr std::string_view kWhitespace = " \t\r";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kWhitespace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kWhitespace);
  return s.substr(first, last - first + 1);
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    i = line.find_first_not_of(kWhitespace, i);
    if (i == std::string_view::npos) break;
    auto end = line.find_first_of(kWhitespace, i);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back({line.substr(i, end - i), i + 1});
    i = end;
  }
  return tokens;
}

std::size_t column_of(std::string_view line, std::string_view part) {
  return static_cast<std::size_t>(part.data() - line.data()) + 1;
}

bool is_single_token(std::string_view s) {
  return !s.empty() && s.find_first_of(kWhitespace) == std::string_view::npos;
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

StateDiagram parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw SyntaxError(e.what(), line, column);
  }

  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  reject_unknown_keys(doc, {"title", "start", "states", "transitions"}, "document");

  StateDiagram d;
  d.title = require_string(doc, "title", "document");
  d.start = require_string(doc, "start", "document");

  const auto& states = require_field(doc, "states", "document");
  if (!states.is_array()) throw SchemaError("'states' must be an array");
  for (std::size_t i = 0; i < states.size(); ++i) d.states.push_back(read_state(states[i], i));

  const auto& transitions = require_field(doc, "transitions", "document");
  if (!transitions.is_array()) throw SchemaError("'transitions' must be an array");
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    d.transitions.push_back(read_transition(transitions[i], i));
  }

  require_valid(d);
  return d;
}

std::string emit_json(const StateDiagram& d) {
  nlohmann::ordered_json doc;
  doc["title"] = d.title;
  doc["start"] = d.start;
  doc["states"] = nlohmann::ordered_json::array();
  for (const auto& s : d.states) {
    nlohmann::ordered_json node;
    node["name"] = s.name;
    node["kind"] = std::string(to_string(s.kind));
    if (s.position) {
      node["x"] = s.position->x;
      node["y"] = s.position->y;
    }
    doc["states"].push_back(std::move(node));
  }
  doc["transitions"] = nlohmann::ordered_json::array();
  for (const auto& t : d.transitions) {
    nlohmann::ordered_json edge;
    edge["name"] = t.name;
    edge["from"] = t.from;
    edge["to"] = t.to;
    doc["transitions"].push_back(std::move(edge));
  }
  return doc.dump(2) + "\n";
}

StateDiagram parse_dsl(std::string_view text) {
  StateDiagram d;
  bool have_title = false;
  std::size_t start_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty() || line.starts_with("//")) continue;

    auto syntax = [&](const std::string& what, std::size_t column) {
      return SyntaxError("line " + std::to_string(line_no) + ": " + what, line_no, column);
    };

    if (line == "title" || line.starts_with("title ") || line.starts_with("title\t")) {
      if (have_title) throw syntax("duplicate title", column_of(raw, line));
      d.title = std::string(trim(line.substr(5)));
      have_title = true;
      continue;
    }

    if (const auto comment = line.find("//"); comment != std::string_view::npos) {
      line = trim(line.substr(0, comment));
    }

    const auto tokens = tokenize(line);
    if (tokens.front().text == "state") {
      if (tokens.size() < 2) throw syntax("expected a state name", column_of(raw, line));
      StateNode node{std::string(tokens[1].text), StateKind::Unclassified, std::nullopt};
      bool kind_set = false;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const auto& tok = tokens[i];
        const auto col = column_of(raw, line) + tok.column - 1;
        if (tok.text == "@start") {
          if (start_line != 0) {
            throw syntax("start state already declared on line " + std::to_string(start_line),
                         col);
          }
          d.start = node.name;
          start_line = line_no;
        } else if (tok.text.starts_with("#")) {
          const auto kind = parse_state_kind(tok.text.substr(1));
          if (!kind) throw syntax("unknown state kind '" + std::string(tok.text) + "'", col);
          if (kind_set) throw syntax("state kind given twice", col);
          node.kind = *kind;
          kind_set = true;
        } else {
          throw syntax("unexpected '" + std::string(tok.text) + "'", col);
        }
      }
      d.states.push_back(std::move(node));
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw syntax("expected 'state', 'title' or '<Name>: <From> -> <To>'",
                   column_of(raw, line));
    }
    const auto name = trim(line.substr(0, colon));
    const auto rest = line.substr(colon + 1);
    const auto arrow = rest.find("->");
    if (arrow == std::string_view::npos) {
      throw syntax("expected '->' in transition", column_of(raw, rest));
    }
    const auto from = trim(rest.substr(0, arrow));
    const auto to = trim(rest.substr(arrow + 2));
    if (!is_single_token(name)) {
      throw syntax("expected a transition name before ':'", column_of(raw, line));
    }
    if (!is_single_token(from)) {
      throw syntax("expected a single source state", column_of(raw, rest));
    }
    if (!is_single_token(to)) {
      throw syntax("expected a single target state", column_of(raw, rest) + arrow + 2);
    }
    d.transitions.push_back({std::string(name), std::string(from), std::string(to)});
  }

  require_valid(d);
  return d;
}

InputFormat format_for_path(std::string_view path) noexcept {
  return path.ends_with(".sd") ? InputFormat::Dsl : InputFormat::Json;
}

StateDiagram parse(std::string_view text, InputFormat format) {
  return format == InputFormat::Dsl ? parse_dsl(text) : parse_json(text);
}

}  // namespace sdc
