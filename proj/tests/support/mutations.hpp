#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sdc/diagram.hpp"

namespace sdc::testing {

inline void rename_state(StateDiagram& d, const std::string& from, const std::string& to) {
  for (auto& s : d.states)
    if (s.name == from) s.name = to;
  for (auto& t : d.transitions) {
    if (t.from == from) t.from = to;
    if (t.to == from) t.to = to;
  }
  if (d.start == from) d.start = to;
}

// One rule-breaking edit per mutation; exactly that violation must appear.
struct Mutation {
  ViolationCode code;
  std::function<bool(StateDiagram&, std::mt19937_64&)> apply;  // false: not applicable
};

inline std::vector<Mutation> mutations() {
  return {
      {ViolationCode::BadIdentifier,
       [](StateDiagram& d, std::mt19937_64& rng) {
         const auto name = d.states[rng() % d.states.size()].name;
         rename_state(d, name, "x" + name);
         return true;
       }},
      {ViolationCode::DuplicateStateName,
       [](StateDiagram& d, std::mt19937_64& rng) {
         d.states.push_back(d.states[rng() % d.states.size()]);
         return true;
       }},
      {ViolationCode::StateTransitionNameClash,
       [](StateDiagram& d, std::mt19937_64& rng) {
         if (d.transitions.empty()) return false;
         d.transitions[rng() % d.transitions.size()].name = d.states[rng() % d.states.size()].name;
         return true;
       }},
      {ViolationCode::DuplicateOutgoingTransitionName,
       [](StateDiagram& d, std::mt19937_64& rng) {
         if (d.transitions.empty() || d.states.size() < 2) return false;
         auto t = d.transitions[rng() % d.transitions.size()];
         for (const auto& s : d.states) {
           if (s.name != t.to) {
             t.to = s.name;
             break;
           }
         }
         d.transitions.push_back(t);
         return true;
       }},
      {ViolationCode::MissingStart,
       [](StateDiagram& d, std::mt19937_64&) {
         d.start = "NoSuchState0";
         return !d.has_state(d.start);
       }},
      {ViolationCode::DanglingEndpoint,
       [](StateDiagram& d, std::mt19937_64& rng) {
         if (d.transitions.empty()) return false;
         d.transitions[rng() % d.transitions.size()].to = "Nowhere0";
         return !d.has_state("Nowhere0");
       }},
      {ViolationCode::DuplicateEdgeTriple,
       [](StateDiagram& d, std::mt19937_64& rng) {
         if (d.transitions.empty()) return false;
         d.transitions.push_back(d.transitions[rng() % d.transitions.size()]);
         return true;
       }},
  };
}

}  // namespace sdc::testing
