#pragma once

// Turtle-graphics virtual machine and SVG output for drawings.
//
// Angles are degrees; positive turns are counterclockwise ("left"). Forward
// draws, Move travels with the pen up, Push/Pop save and restore the pose.
// Forward and Turn extend the current polyline; Move, Push and Pop end it.

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mathplay/geometry.hpp"

namespace mathplay::turtle {

struct Forward {
  double distance = 0.0;
};
struct Move {
  double distance = 0.0;
};
struct Turn {
  double degrees = 0.0;
};
struct Push {};
struct Pop {};

using Command = std::variant<Forward, Move, Turn, Push, Pop>;
using Program = std::vector<Command>;

struct Pose {
  Point position;
  double heading = 0.0;  // degrees in [0, 360), 0 = +x axis

  friend bool operator==(const Pose&, const Pose&) = default;
};

struct TurtleState {
  Pose pose;
  std::vector<Pose> stack;
};

struct Trace {
  Drawing drawing;
  TurtleState final_state;
};

double normalize_heading(double degrees) noexcept;

// Throws UnbalancedPop when a Pop meets an empty stack.
Trace run(std::span<const Command> program, TurtleState start = {});
Drawing interpret(std::span<const Command> program, TurtleState start = {});

// Recursive tree: trunk, three children at +theta, 0 and -theta relative to
// the trunk (each `decrement` shorter), then return to the base pen-up.
// Branches shorter than min_len are not drawn. Starts heading up (+y).
// Throws InvalidArgument unless decrement > 0, OutputTooLarge past max_commands.
Program recursive_tree_program(double length, double theta, double decrement, double min_len,
                               std::size_t max_commands = 10'000'000);
Drawing recursive_tree(double length, double theta, double decrement = 10.0, double min_len = 5.0);

struct SvgStyle {
  std::string stroke = "#000000";
  // Non-positive means 0.2% of the larger drawing extent.
  double stroke_width = 0.0;
};

// One <path> per polyline, 6-decimal fixed coordinates, y flipped so +y is
// up, viewBox = bounding box padded 5% per side. Output depends only on the
// arguments. Throws InvalidArgument for a stroke that is not #rrggbb.
std::string emit_svg(const Drawing& drawing, const SvgStyle& style = {});

// Fixed 6-decimal rendering with negative zero folded to "0.000000".
std::string format_fixed6(double value);

}  // namespace mathplay::turtle
