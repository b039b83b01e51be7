#include "sdc/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "json.hpp"

namespace sdc {

std::vector<bool> reachable_from(std::size_t n, std::span<const Edge> edges,
                                 std::size_t start) {
  std::vector<bool> seen(n, false);
  if (start >= n) return seen;

  // CSR adjacency
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& e : edges) ++offsets[e.from + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<std::size_t> targets(edges.size());
  auto fill = offsets;
  for (const auto& e : edges) targets[fill[e.from]++] = e.to;

  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto i = offsets[v]; i < offsets[v + 1]; ++i) {
      const auto w = targets[i];
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::size_t count_reachable(std::size_t n, std::span<const Edge> edges, std::size_t start) {
  const auto seen = reachable_from(n, edges, start);
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

std::set<Identifier> reachable_set(const StateDiagram& d) {
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < d.states.size(); ++i) index.emplace(d.states[i].name, i);

  std::vector<Edge> edges;
  edges.reserve(d.transitions.size());
  for (const auto& t : d.transitions) {
    auto from = index.find(t.from);
    auto to = index.find(t.to);
    if (from != index.end() && to != index.end()) edges.push_back({from->second, to->second});
  }

  std::set<Identifier> out;
  auto start = index.find(d.start);
  if (start == index.end()) return out;
  const auto seen = reachable_from(d.states.size(), edges, start->second);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.insert(d.states[i].name);
  }
  return out;
}

DiagramStats stats(const StateDiagram& d) {
  DiagramStats s;
  s.n_states = d.states.size();
  s.n_transitions = d.transitions.size();
  s.n_reachable = reachable_set(d).size();
  for (const auto& node : d.states) {
    switch (node.kind) {
      case StateKind::Concrete:
        ++s.n_concrete;
        break;
      case StateKind::Abstract:
        ++s.n_abstract;
        break;
      case StateKind::Unclassified:
        ++s.n_unclassified;
        break;
    }
    const bool has_exit =
        std::any_of(d.transitions.begin(), d.transitions.end(),
                    [&](const Transition& t) { return t.from == node.name; });
    if (!has_exit) s.dead_ends.push_back(node.name);
  }
  return s;
}

std::string stats_to_json(const DiagramStats& s) {
  nlohmann::ordered_json j;
  j["n_states"] = s.n_states;
  j["n_transitions"] = s.n_transitions;
  j["n_reachable"] = s.n_reachable;
  j["n_concrete"] = s.n_concrete;
  j["n_abstract"] = s.n_abstract;
  j["n_unclassified"] = s.n_unclassified;
  j["dead_ends"] = s.dead_ends;
  return j.dump() + "\n";
}

std::string stats_to_text(const DiagramStats& s) {
  std::string dead;
  for (const auto& name : s.dead_ends) {
    if (!dead.empty()) dead += ", ";
    dead += name;
  }
  if (dead.empty()) dead = "-";

  const std::pair<const char*, std::string> rows[] = {
      {"states", std::to_string(s.n_states)},
      {"transitions", std::to_string(s.n_transitions)},
      {"reachable", std::to_string(s.n_reachable)},
      {"concrete", std::to_string(s.n_concrete)},
      {"abstract", std::to_string(s.n_abstract)},
      {"unclassified", std::to_string(s.n_unclassified)},
      {"dead ends", dead},
  };
  std::string out;
  char buf[32];
  for (const auto& [label, value] : rows) {
    std::snprintf(buf, sizeof buf, "%-14s", label);
    out += buf;
    out += value;
    out += '\n';
  }
  return out;
}

}  // namespace sdc
