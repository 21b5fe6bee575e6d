#pragma once

// Plane figures built from modular arithmetic, rolling circles and the
// Mandelbrot iteration.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mathplay/geometry.hpp"

namespace mathplay::curves {

// Chords {m, k*m mod n} between residues on a circle of n points, with fixed
// points dropped and unordered duplicates removed (first occurrence kept).
// Pairs are stored smaller residue first.
struct ChordDiagram {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chords;
};

ChordDiagram modular_chords(std::uint32_t n, std::uint32_t k);

// Circle point for residue m: unit radius, residue 0 at the top, increasing
// counterclockwise.
Point circle_point(std::uint32_t n, std::uint32_t residue, double radius = 1.0);

// Display label for a residue: 1..n, with residue 0 shown as n.
std::uint32_t residue_label(std::uint32_t n, std::uint32_t residue) noexcept;

Drawing chord_drawing(const ChordDiagram& diagram, bool include_circle = false);

struct GalleryPreset {
  std::string name;
  std::uint32_t n;
  std::uint32_t k;
};

// Multiplication-mod-360 figures (k = 6, 7, 9, 10) plus the n = 36 and
// n = 360 doubling cardioids.
const std::vector<GalleryPreset>& gallery_presets();

// Labels visited when hopping over `skip` points at a time on a circle
// labelled 1..n, from `start` until it recurs; the start closes the list.
std::vector<std::uint32_t> skip_count_path(std::uint32_t n, std::uint32_t skip, std::uint32_t start);

// Every distinct skip-counting cycle on the circle, as closed polygons.
Drawing skip_count_drawing(std::uint32_t n, std::uint32_t skip);

struct Segment {
  Point a;
  Point b;
};

enum class StitchStyle {
  PerpendicularSum,  // (i,0)-(0,N-i) in the first quadrant
  VShape,            // plus its mirror image across the y axis
  Star,              // mirrored into all four quadrants
};

std::vector<Segment> curve_stitch(std::uint32_t count, StitchStyle style = StitchStyle::PerpendicularSum);
Drawing segments_drawing(const std::vector<Segment>& segments);

struct Cardioid {};  // r = 1 + cos(theta), theta in [0, 2pi]
struct Cycloid {     // x = r(t - sin t), y = r(1 - cos t), t in [0, 4pi]
  double radius = 1.0;
};
struct Epicycloid {  // circle of radius r rolling outside a fixed circle of radius R
  double fixed_radius = 1.0;
  double rolling_radius = 1.0;
};
using ParametricCurve = std::variant<Cardioid, Cycloid, Epicycloid>;

struct ParameterRange {
  double start = 0.0;
  double end = 0.0;
};

ParameterRange parameter_range(const ParametricCurve& curve);
Point evaluate(const ParametricCurve& curve, double parameter);

// `samples` uniformly spaced parameters across the full range (ends included).
// Throws InvalidArgument for samples < 2 or non-positive radii.
Drawing sample_parametric(const ParametricCurve& curve, std::size_t samples);

struct Complex {
  double re = 0.0;
  double im = 0.0;
};

// Iterates z <- z^2 + c from z = 0. Iteration k produces z_k (z_1 = c);
// the result is the first k with |z_k| > 2, or 0 when z stays bounded for
// max_iter iterations.
struct EscapeResult {
  bool escaped = false;
  std::uint32_t iteration = 0;
};

EscapeResult mandelbrot_escape(Complex c, std::uint32_t max_iter);

// Escape results on a width x height grid spanning [re_min, re_max] x
// [im_min, im_max], row-major from im_max downwards. Rows are split across
// `workers` threads; the result does not depend on the split.
std::vector<EscapeResult> mandelbrot_grid(double re_min, double re_max, double im_min, double im_max,
                                          std::size_t width, std::size_t height, std::uint32_t max_iter,
                                          unsigned workers = 1);

}  // namespace mathplay::curves
