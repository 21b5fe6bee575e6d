#include "mathplay/turtle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "mathplay/error.hpp"

namespace mathplay {

BoundingBox bounding_box(const Drawing& drawing) noexcept {
  BoundingBox box;
  bool first = true;
  for (const auto& line : drawing.polylines) {
    for (const auto& p : line) {
      if (first) {
        box = {p.x, p.y, p.x, p.y};
        first = false;
        continue;
      }
      box.min_x = std::min(box.min_x, p.x);
      box.min_y = std::min(box.min_y, p.y);
      box.max_x = std::max(box.max_x, p.x);
      box.max_y = std::max(box.max_y, p.y);
    }
  }
  return box;
}

}  // namespace mathplay

namespace mathplay::turtle {

namespace {

// Exact values on the axes keep axis-aligned figures free of 1e-17 residue.
double cos_deg(double degrees) {
  const double h = normalize_heading(degrees);
  if (h == 0.0) return 1.0;
  if (h == 90.0 || h == 270.0) return 0.0;
  if (h == 180.0) return -1.0;
  return std::cos(h * std::numbers::pi / 180.0);
}

double sin_deg(double degrees) {
  const double h = normalize_heading(degrees);
  if (h == 0.0 || h == 180.0) return 0.0;
  if (h == 90.0) return 1.0;
  if (h == 270.0) return -1.0;
  return std::sin(h * std::numbers::pi / 180.0);
}

class Machine {
 public:
  explicit Machine(TurtleState start) : state_(std::move(start)) {
    state_.pose.heading = normalize_heading(state_.pose.heading);
  }

  void operator()(const Forward& f) {
    if (current_.empty()) current_.push_back(state_.pose.position);
    advance(f.distance);
    current_.push_back(state_.pose.position);
  }

  void operator()(const Move& m) {
    flush();
    advance(m.distance);
  }

  void operator()(const Turn& t) { state_.pose.heading = normalize_heading(state_.pose.heading + t.degrees); }

  void operator()(const Push&) {
    flush();
    state_.stack.push_back(state_.pose);
  }

  void operator()(const Pop&) {
    if (state_.stack.empty()) throw Error(ErrorCode::UnbalancedPop, "pop with an empty turtle stack");
    flush();
    state_.pose = state_.stack.back();
    state_.stack.pop_back();
  }

  Trace finish() {
    flush();
    return {std::move(drawing_), std::move(state_)};
  }

 private:
  void advance(double distance) {
    state_.pose.position.x += distance * cos_deg(state_.pose.heading);
    state_.pose.position.y += distance * sin_deg(state_.pose.heading);
  }

  void flush() {
    if (current_.size() >= 2) drawing_.polylines.push_back(std::move(current_));
    current_.clear();
  }

  TurtleState state_;
  Polyline current_;
  Drawing drawing_;
};

void grow_tree(Program& out, double length, double theta, double decrement, double min_len) {
  if (length < min_len) return;
  out.emplace_back(Forward{length});
  out.emplace_back(Turn{theta});
  grow_tree(out, length - decrement, theta, decrement, min_len);
  out.emplace_back(Turn{-theta});
  grow_tree(out, length - decrement, theta, decrement, min_len);
  out.emplace_back(Turn{-theta});
  grow_tree(out, length - decrement, theta, decrement, min_len);
  out.emplace_back(Turn{theta});
  out.emplace_back(Move{-length});
}

}  // namespace

double normalize_heading(double degrees) noexcept {
  double h = std::fmod(degrees, 360.0);
  if (h < 0) h += 360.0;
  if (h >= 360.0) h = 0.0;
  return h;
}

Trace run(std::span<const Command> program, TurtleState start) {
  Machine machine(std::move(start));
  for (const auto& cmd : program) std::visit(machine, cmd);
  return machine.finish();
}

Drawing interpret(std::span<const Command> program, TurtleState start) {
  return run(program, std::move(start)).drawing;
}

Program recursive_tree_program(double length, double theta, double decrement, double min_len,
                               std::size_t max_commands) {
  if (!(decrement > 0)) throw Error(ErrorCode::InvalidArgument, "decrement must be positive");
  if (!std::isfinite(length) || !std::isfinite(theta) || !std::isfinite(min_len)) {
    throw Error(ErrorCode::InvalidArgument, "tree parameters must be finite");
  }
  // Each drawn branch costs six commands and there are (3^levels - 1)/2 of them.
  double commands = 0;
  double level_nodes = 1;
  for (double len = length; len >= min_len; len -= decrement) {
    commands += 6 * level_nodes;
    level_nodes *= 3;
    if (commands > static_cast<double>(max_commands)) {
      throw Error(ErrorCode::OutputTooLarge, "tree has too many branches");
    }
  }
  Program program;
  program.reserve(static_cast<std::size_t>(commands));
  grow_tree(program, length, theta, decrement, min_len);
  return program;
}

Drawing recursive_tree(double length, double theta, double decrement, double min_len) {
  const auto program = recursive_tree_program(length, theta, decrement, min_len);
  TurtleState start;
  start.pose.heading = 90.0;
  return interpret(program, start);
}

std::string format_fixed6(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
  std::string out = ec == std::errc{} ? std::string(buf, end) : std::string("0.000000");
  if (out == "-0.000000") out.erase(0, 1);
  return out;
}

namespace {

bool valid_color(const std::string& c) {
  return c.size() == 7 && c[0] == '#' &&
         std::all_of(c.begin() + 1, c.end(), [](char ch) { return std::isxdigit(static_cast<unsigned char>(ch)); });
}

}  // namespace

std::string emit_svg(const Drawing& drawing, const SvgStyle& style) {
  if (!valid_color(style.stroke)) throw Error(ErrorCode::InvalidArgument, "stroke must be #rrggbb");

  double min_x = 0, min_y = 0, width = 1, height = 1;
  double stroke_width = style.stroke_width;
  if (!drawing.empty()) {
    const auto box = bounding_box(drawing);
    // Flipped y: the view spans [-max_y, -min_y].
    const double w = box.max_x - box.min_x;
    const double h = box.max_y - box.min_y;
    const double larger = std::max(w, h);
    const double pad_x = w > 0 ? 0.05 * w : (larger > 0 ? 0.05 * larger : 0.5);
    const double pad_y = h > 0 ? 0.05 * h : (larger > 0 ? 0.05 * larger : 0.5);
    min_x = box.min_x - pad_x;
    min_y = -box.max_y - pad_y;
    width = w + 2 * pad_x;
    height = h + 2 * pad_y;
    if (!(stroke_width > 0)) stroke_width = larger > 0 ? 0.002 * larger : 0.01;
  } else if (!(stroke_width > 0)) {
    stroke_width = 0.01;
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
  out += format_fixed6(min_x) + " " + format_fixed6(min_y) + " " + format_fixed6(width) + " " +
         format_fixed6(height) + "\">\n";
  for (const auto& line : drawing.polylines) {
    out += "<path d=\"";
    for (std::size_t i = 0; i < line.size(); ++i) {
      out += i == 0 ? "M " : " L ";
      out += format_fixed6(line[i].x);
      out += ' ';
      out += format_fixed6(-line[i].y);
    }
    out += "\" fill=\"none\" stroke=\"" + style.stroke + "\" stroke-width=\"" + format_fixed6(stroke_width) +
           "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mathplay::turtle
