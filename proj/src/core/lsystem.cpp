#include "mathplay/lsystem.hpp"

#include <cmath>
#include <string>

#include "mathplay/error.hpp"
#include "text_util.hpp"

namespace mathplay::lsystem {

namespace {

bool is_symbol(char c) { return c >= 33 && c <= 126; }

std::string symbols_of(std::string_view raw, std::size_t line) {
  std::string out;
  for (char c : raw) {
    if (text_util::is_space(c)) continue;
    if (!is_symbol(c)) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": symbols must be printable ASCII");
    }
    out.push_back(c);
  }
  return out;
}

// Matches "<key> = <value>" for a known key.
bool keyed(std::string_view line, std::string_view key, std::string_view& value) {
  if (!line.starts_with(key)) return false;
  auto rest = text_util::trim(line.substr(key.size()));
  if (rest.empty() || rest.front() != '=') return false;
  value = text_util::trim(rest.substr(1));
  return true;
}

}  // namespace

ParseResult parse_with_diagnostics(std::string_view text) {
  ParseResult result;
  bool have_axiom = false;
  bool have_angle = false;
  std::size_t line_no = 0;
  for (auto raw : text_util::lines(text)) {
    ++line_no;
    const auto line = text_util::trim(text_util::strip_comment(raw));
    if (line.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";

    std::string_view value;
    if (keyed(line, "axiom", value)) {
      if (have_axiom) throw Error(ErrorCode::ParseError, where + "axiom given twice");
      result.system.axiom = symbols_of(value, line_no);
      if (result.system.axiom.empty()) throw Error(ErrorCode::MissingAxiom, where + "axiom is empty");
      have_axiom = true;
      continue;
    }
    if (keyed(line, "angle", value)) {
      if (have_angle) throw Error(ErrorCode::ParseError, where + "angle given twice");
      double angle = 0;
      if (!text_util::parse_double(value, angle) || !std::isfinite(angle)) {
        throw Error(ErrorCode::ParseError, where + "angle must be a number");
      }
      result.system.angle = angle;
      have_angle = true;
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, where + "expected \"axiom = ...\", \"angle = ...\" or \"X -> ...\"");
    }
    const auto lhs = text_util::trim(line.substr(0, arrow));
    if (lhs.size() != 1 || !is_symbol(lhs[0])) {
      throw Error(ErrorCode::ParseError, where + "rule must rewrite exactly one symbol");
    }
    const char symbol = lhs[0];
    if (result.system.rules.contains(symbol)) {
      throw Error(ErrorCode::DuplicateRule, where + "duplicate rule for '" + std::string(1, symbol) + "'");
    }
    auto replacement = symbols_of(line.substr(arrow + 2), line_no);
    if (replacement.empty()) {
      result.warnings.push_back({line_no, "rule for '" + std::string(1, symbol) + "' deletes the symbol"});
    }
    result.system.rules.emplace(symbol, std::move(replacement));
  }
  if (!have_axiom) throw Error(ErrorCode::MissingAxiom, "no axiom given");
  return result;
}

LSystem parse(std::string_view text) { return parse_with_diagnostics(text).system; }

std::string expand(const LSystem& system, std::size_t order, std::size_t cap) {
  if (system.axiom.empty()) throw Error(ErrorCode::MissingAxiom, "axiom is empty");
  if (system.axiom.size() > cap) throw Error(ErrorCode::OutputTooLarge, "axiom exceeds the expansion cap");

  std::size_t growth[256];
  for (std::size_t c = 0; c < 256; ++c) growth[c] = 1;
  for (const auto& [symbol, replacement] : system.rules) growth[static_cast<unsigned char>(symbol)] = replacement.size();

  std::string word = system.axiom;
  std::string next;
  for (std::size_t pass = 0; pass < order; ++pass) {
    std::size_t length = 0;
    for (char c : word) {
      length += growth[static_cast<unsigned char>(c)];
      if (length > cap) {
        throw Error(ErrorCode::OutputTooLarge,
                    "expansion exceeds " + std::to_string(cap) + " symbols at order " + std::to_string(pass + 1));
      }
    }
    next.clear();
    next.reserve(length);
    for (char c : word) {
      const auto it = system.rules.find(c);
      if (it == system.rules.end()) {
        next.push_back(c);
      } else {
        next += it->second;
      }
    }
    word.swap(next);
  }
  return word;
}

turtle::Program compile(const LSystem& system, const RenderSpec& spec) {
  if (!(spec.step > 0) || !std::isfinite(spec.step)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  const double angle = spec.angle.value_or(system.angle);
  if (!std::isfinite(angle)) throw Error(ErrorCode::InvalidArgument, "angle must be finite");

  auto is_draw = [&](char c) {
    return spec.draw_symbols ? spec.draw_symbols->contains(c) : (c >= 'A' && c <= 'Z');
  };
  auto is_move = [&](char c) { return spec.move_symbols ? spec.move_symbols->contains(c) : c == 'f'; };

  const auto word = expand(system, spec.order, spec.cap);
  turtle::Program program;
  std::size_t depth = 0;
  for (char c : word) {
    if (is_draw(c)) {
      program.emplace_back(turtle::Forward{spec.step});
    } else if (is_move(c)) {
      program.emplace_back(turtle::Move{spec.step});
    } else if (c == '+') {
      program.emplace_back(turtle::Turn{angle});
    } else if (c == '-') {
      program.emplace_back(turtle::Turn{-angle});
    } else if (c == '[') {
      ++depth;
      program.emplace_back(turtle::Push{});
    } else if (c == ']') {
      if (depth == 0) throw Error(ErrorCode::InvalidSystem, "']' without a matching '['");
      --depth;
      program.emplace_back(turtle::Pop{});
    }
  }
  return program;
}

Drawing render(const LSystem& system, const RenderSpec& spec) {
  const auto program = compile(system, spec);
  try {
    return turtle::interpret(program);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnbalancedPop) throw Error(ErrorCode::InvalidSystem, e.what());
    throw;
  }
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    std::vector<Preset> out;
    auto add = [&](std::string name, std::string text, std::size_t order, std::optional<std::set<char>> draw = {}) {
      RenderSpec spec;
      spec.order = order;
      spec.draw_symbols = std::move(draw);
      out.push_back({std::move(name), std::move(text), std::move(spec)});
    };
    add("koch", "axiom = F\nangle = -60\nF -> F-F++F-F\n", 4);
    add("koch-snowflake", "axiom = F++F++F\nangle = -60\nF -> F-F++F-F\n", 4);
    add("sierpinski", "axiom = F\nangle = -60\nF -> G-F-G\nG -> F+G+F\n", 8);
    add("plant", "axiom = X\nangle = -25\nX -> F-[[X]+X]+F[+FX]-X\nF -> FF\n", 6);
    add("hilbert", "axiom = L\nangle = 90\nL -> +RF-LFL-FR+\nR -> -LF+RFR+FL-\n", 6, std::set<char>{'F'});
    add("fibonacci-ab", "axiom = A\nA -> AB\nB -> A\n", 3);
    return out;
  }();
  return all;
}

const Preset* find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace mathplay::lsystem
