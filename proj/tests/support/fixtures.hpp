#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sdc/diagram.hpp"

namespace sdc::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(SDC_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// The school navigation diagram, built by hand.
inline StateDiagram school() {
  StateDiagram d;
  d.title = "School";
  for (const char* name : {"Outside", "Hallway", "MusicRoom", "Gym"}) {
    d.states.push_back({name, StateKind::Concrete, std::nullopt});
  }
  d.start = "Outside";
  d.transitions = {
      {"GoInside", "Outside", "Hallway"},   {"EnterMusicRoom", "Hallway", "MusicRoom"},
      {"LeaveMusicRoom", "MusicRoom", "Hallway"}, {"EnterGym", "Hallway", "Gym"},
      {"EnterHallway", "Gym", "Hallway"},   {"TakeEmergencyExit", "Gym", "Outside"},
      {"GoOutside", "Hallway", "Outside"},
  };
  return d;
}

inline StateDiagram single_state() {
  StateDiagram d;
  d.title = "Single";
  d.states.push_back({"Start"});
  d.start = "Start";
  return d;
}

}  // namespace sdc::testing
