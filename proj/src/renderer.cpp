#include "sdc/renderer.hpp"

namespace sdc {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const StateDiagram& d) {
  std::string out = "digraph " + quoted(d.title) + " {\n";
  out += "  node [shape=circle];\n";
  for (const auto& s : d.states) {
    out += "  " + quoted(s.name);
    if (s.name == d.start) out += " [style=filled, fillcolor=green]";
    out += ";\n";
  }
  for (const auto& t : d.transitions) {
    out += "  " + quoted(t.from) + " -> " + quoted(t.to) + " [label=" + quoted(t.name) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace sdc
