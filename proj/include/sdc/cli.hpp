#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sdc/diagram.hpp"
#include "sdc/stats_ad.hpp"

namespace sdc {

struct WalkStep {
  Identifier message;
  Identifier state;  // state after the message

  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

struct WalkTrace {
  Identifier start;
  std::vector<WalkStep> steps;

  const Identifier& final_state() const noexcept {
    return steps.empty() ? start : steps.back().state;
  }
};

/// Replays `messages` from the start state through step().
WalkTrace walk(const StateDiagram& d, const std::vector<Identifier>& messages);

/// Parses "states,transitions,reachable".
Observation parse_observation(const std::string& text);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kUsage = 2;
}  // namespace exit_code

/// Entry point of the `sdc` tool. Results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdc
