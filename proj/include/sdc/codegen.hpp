#pragma once

// Model-view-update application generation.
//
// A diagram becomes an Elm module built on GraphicSVG: every transition name
// is a constructor of `Msg` (after the built-in `Tick`), every state a
// constructor of `State`, and `update` pattern matches on the message and
// then on the current state, falling through to the unchanged model. Each
// state gets a page with its name as title and one button per outgoing
// transition.
//
// The semantic content of `update` is captured by UpdateIR, which is what
// tests compare against step().

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/diagram.hpp"

namespace sdc {

inline constexpr std::string_view kTickMessage = "Tick";

class ReservedNameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MessageCatalog {
  // kTickMessage first, then transition names in first-occurrence order.
  std::vector<Identifier> messages;

  friend bool operator==(const MessageCatalog&, const MessageCatalog&) = default;
};

struct UpdateIR {
  // message -> (source state -> target state), only where a transition applies
  std::map<Identifier, std::map<Identifier, Identifier>> table;

  /// Target of `msg` from `state`, or `state` itself if nothing applies.
  Identifier target(std::string_view msg, std::string_view state) const;

  friend bool operator==(const UpdateIR&, const UpdateIR&) = default;
};

struct AppIR {
  MessageCatalog catalog;
  UpdateIR update;
};

/// Throws ReservedNameError if a state or transition is named "Tick".
AppIR build_ir(const StateDiagram& d);

struct ButtonPlacement {
  std::string label;
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;

  friend bool operator==(const ButtonPlacement&, const ButtonPlacement&) = default;
};

namespace layout {
inline constexpr double kTitleY = 45.0;
inline constexpr double kFirstButtonY = 20.0;
inline constexpr double kButtonPitch = 16.0;
inline constexpr double kButtonHeight = 12.0;
inline constexpr double kMinButtonWidth = 40.0;
}  // namespace layout

/// Vertical stack of buttons centred on x = 0 below the page title.
std::vector<ButtonPlacement> render_button_layout(std::string_view page_state,
                                                  const std::vector<std::string>& labels);

struct GeneratedApp {
  std::string msg_type_src;
  std::string state_type_src;
  std::string update_src;
  std::string view_src;
  std::string full_module_src;
  UpdateIR ir;
};

GeneratedApp gen_app(const StateDiagram& d);

}  // namespace sdc
