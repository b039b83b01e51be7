#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdc/diagram.hpp"

namespace sdc {

/// Directed edge between state indices.
struct Edge {
  std::size_t from;
  std::size_t to;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Marks every vertex reachable from `start` (inclusive) in a digraph on
/// `n` vertices.
std::vector<bool> reachable_from(std::size_t n, std::span<const Edge> edges,
                                 std::size_t start);

std::size_t count_reachable(std::size_t n, std::span<const Edge> edges, std::size_t start);

/// States reachable from the start state by zero or more transitions.
/// Transition names and multiplicity are ignored.
std::set<Identifier> reachable_set(const StateDiagram& d);

struct DiagramStats {
  std::size_t n_states = 0;
  std::size_t n_transitions = 0;
  std::size_t n_reachable = 0;
  std::size_t n_concrete = 0;
  std::size_t n_abstract = 0;
  std::size_t n_unclassified = 0;
  std::vector<Identifier> dead_ends;  // zero out-degree, diagram order

  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

DiagramStats stats(const StateDiagram& d);

std::string stats_to_json(const DiagramStats& s);
std::string stats_to_text(const DiagramStats& s);

}  // namespace sdc
