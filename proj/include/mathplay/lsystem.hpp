#pragma once

// Deterministic context-free L-systems: text parsing, parallel rewriting and
// compilation to turtle programs.
//
// Text format, one statement per line ('#' starts a comment):
//
//   axiom = F++F++F
//   angle = 60
//   F -> F-F++F-F
//
// Symbols without a rule are constants. An empty replacement deletes the
// symbol and is reported as a warning.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mathplay/geometry.hpp"
#include "mathplay/turtle.hpp"

namespace mathplay::lsystem {

inline constexpr std::size_t kDefaultExpansionCap = 10'000'000;

struct LSystem {
  std::string axiom;
  std::map<char, std::string> rules;
  double angle = 90.0;
};

struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

struct ParseResult {
  LSystem system;
  std::vector<Diagnostic> warnings;
};

// Throws DuplicateRule, MissingAxiom or ParseError (with the line number).
ParseResult parse_with_diagnostics(std::string_view text);
LSystem parse(std::string_view text);

// `order` parallel rewriting passes. Throws OutputTooLarge when any
// intermediate word would exceed `cap` symbols.
std::string expand(const LSystem& system, std::size_t order, std::size_t cap = kDefaultExpansionCap);

struct RenderSpec {
  std::size_t order = 0;
  double step = 1.0;
  std::optional<double> angle;               // overrides LSystem::angle
  std::optional<std::set<char>> draw_symbols;  // default: 'A'..'Z'
  std::optional<std::set<char>> move_symbols;  // default: {'f'}
  std::size_t cap = kDefaultExpansionCap;
};

// Maps the expanded word to turtle commands: draw symbols -> Forward(step),
// move symbols -> Move(step), '+' -> Turn(+angle), '-' -> Turn(-angle),
// '[' -> Push, ']' -> Pop; anything else is skipped. A negative angle flips
// the chirality. Throws InvalidArgument for a bad spec and InvalidSystem when
// a ']' has no matching '['.
turtle::Program compile(const LSystem& system, const RenderSpec& spec);

// compile + interpret from the origin heading along +x.
Drawing render(const LSystem& system, const RenderSpec& spec);

struct Preset {
  std::string name;
  std::string text;
  RenderSpec spec;
};

// Koch curve, Koch snowflake, Sierpinski arrowhead, fractal plant, Hilbert
// curve and the A/AB growth system.
const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view name);

}  // namespace mathplay::lsystem
