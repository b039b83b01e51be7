#include "sdc/codegen.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "sdc/analysis.hpp"

namespace sdc {

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string elm_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  return out + "\"";
}

std::string indent(int levels) { return std::string(static_cast<std::size_t>(levels) * 4, ' '); }

std::string msg_type_src(const MessageCatalog& catalog) {
  std::string out = "type Msg = Tick Float GetKeyState\n";
  for (std::size_t i = 1; i < catalog.messages.size(); ++i) {
    out += "         | " + catalog.messages[i] + " \n";
  }
  return out;
}

std::string state_type_src(const StateDiagram& d) {
  std::string out;
  for (std::size_t i = 0; i < d.states.size(); ++i) {
    out += (i == 0 ? "type State = " : "           | ") + d.states[i].name + " \n";
  }
  return out;
}

std::string update_src(const StateDiagram& d, const MessageCatalog& catalog) {
  std::string out = "update : Msg -> Model -> Model\n";
  out += "update msg model =\n";
  out += indent(1) + "case msg of\n";
  bool first = true;
  for (std::size_t m = 1; m < catalog.messages.size(); ++m) {
    const auto& msg = catalog.messages[m];
    if (!first) out += "\n";
    first = false;
    out += indent(2) + msg + "  ->\n";
    out += indent(3) + "case model.state of\n";
    std::set<std::string_view> covered;
    for (const auto& t : d.transitions) {
      if (t.name != msg) continue;
      covered.insert(t.from);
      out += indent(4) + t.from + "  ->\n";
      out += indent(5) + "{ model | state = " + t.to + "  }\n";
    }
    // A catch-all after every state is matched would be a redundant pattern.
    if (covered.size() < d.states.size()) {
      out += indent(4) + "otherwise ->\n";
      out += indent(5) + "model\n";
    }
  }
  if (!first) out += "\n";
  out += indent(2) + "Tick t _ ->\n";
  out += indent(3) + "{ model | time = t }\n";
  return out;
}

std::string view_src(const StateDiagram& d) {
  std::string out = "view : Model -> Collage Msg\n";
  out += "view model =\n";
  out += indent(1) + "collage 192 128 <|\n";
  out += indent(2) + "case model.state of\n";
  for (std::size_t i = 0; i < d.states.size(); ++i) {
    const auto& state = d.states[i].name;
    if (i != 0) out += "\n";
    out += indent(3) + state + "  ->\n";
    out += indent(4) + "[ text " + elm_string(state) +
           " |> centered |> size 12 |> filled black |> move ( 0, " + number(layout::kTitleY) +
           " )\n";

    std::vector<std::string> labels;
    for (const auto& t : outgoing(d, state)) labels.push_back(t.name);
    for (const auto& b : render_button_layout(state, labels)) {
      out += indent(4) + ", button " + elm_string(b.label) + " " + b.label + " " +
             number(b.width) + " |> move ( " + number(b.x) + ", " + number(b.y) + " )\n";
    }
    out += indent(4) + "]\n";
  }
  return out;
}

std::string model_src() {
  return "type alias Model =\n"
         "    { state : State\n"
         "    , time : Float\n"
         "    }\n";
}

std::string init_src(const StateDiagram& d) {
  return "init : Model\n"
         "init =\n"
         "    { state = " +
         d.start +
         "\n"
         "    , time = 0\n"
         "    }\n";
}

std::string button_src() {
  return "button : String -> Msg -> Float -> Shape Msg\n"
         "button label msg width =\n"
         "    group\n"
         "        [ roundedRect width " +
         number(layout::kButtonHeight) +
         " 4 |> filled lightGrey\n"
         "        , roundedRect width " +
         number(layout::kButtonHeight) +
         " 4 |> outlined (solid 0.5) darkGrey\n"
         "        , text label |> centered |> size 7 |> filled black |> move ( 0, -2.5 )\n"
         "        ]\n"
         "        |> notifyTap msg\n";
}

std::string main_src(const StateDiagram& d) {
  return "main : GameApp Model Msg\n"
         "main =\n"
         "    gameApp Tick\n"
         "        { model = init\n"
         "        , view = view\n"
         "        , update = update\n"
         "        , title = " +
         elm_string(d.title) +
         "\n"
         "        }\n";
}

}  // namespace

Identifier UpdateIR::target(std::string_view msg, std::string_view state) const {
  if (auto by_msg = table.find(std::string(msg)); by_msg != table.end()) {
    if (auto hit = by_msg->second.find(std::string(state)); hit != by_msg->second.end()) {
      return hit->second;
    }
  }
  return Identifier(state);
}

AppIR build_ir(const StateDiagram& d) {
  for (const auto& s : d.states) {
    if (s.name == kTickMessage) throw ReservedNameError("state name 'Tick' is reserved");
  }
  AppIR ir;
  ir.catalog.messages.emplace_back(kTickMessage);
  for (const auto& t : d.transitions) {
    if (t.name == kTickMessage) throw ReservedNameError("transition name 'Tick' is reserved");
    auto& msgs = ir.catalog.messages;
    if (std::find(msgs.begin(), msgs.end(), t.name) == msgs.end()) msgs.push_back(t.name);
    ir.update.table[t.name].emplace(t.from, t.to);
  }
  return ir;
}

std::vector<ButtonPlacement> render_button_layout([[maybe_unused]] std::string_view page_state,
                                                  const std::vector<std::string>& labels) {
  std::vector<ButtonPlacement> out;
  out.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ButtonPlacement b;
    b.label = labels[i];
    b.x = 0.0;
    b.y = layout::kFirstButtonY - layout::kButtonPitch * static_cast<double>(i);
    b.width = std::max(layout::kMinButtonWidth, 12.0 + 5.0 * static_cast<double>(labels[i].size()));
    b.height = layout::kButtonHeight;
    out.push_back(std::move(b));
  }
  return out;
}

GeneratedApp gen_app(const StateDiagram& d) {
  auto ir = build_ir(d);

  GeneratedApp app;
  app.msg_type_src = msg_type_src(ir.catalog);
  app.state_type_src = state_type_src(d);
  app.update_src = update_src(d, ir.catalog);
  app.view_src = view_src(d);

  std::string& m = app.full_module_src;
  m += "module Main exposing (main)\n\n";
  m += "-- Generated from the state diagram " + elm_string(d.title) + ".\n";
  m += "-- Replace the default pages in `view` with your own graphics.\n\n";
  m += "import GraphicSVG exposing (..)\n";
  m += "import GraphicSVG.App exposing (..)\n\n\n";
  m += app.msg_type_src + "\n\n";
  m += app.state_type_src + "\n\n";
  m += model_src() + "\n\n";
  m += init_src(d) + "\n\n";
  m += app.update_src + "\n\n";
  m += app.view_src + "\n\n";
  m += button_src() + "\n\n";
  m += main_src(d);

  app.ir = std::move(ir.update);
  return app;
}

}  // namespace sdc
