#include "mathplay/curves.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <thread>

#include "mathplay/error.hpp"

namespace mathplay::curves {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* message) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, message);
}

// Smallest q <= 1000 with ratio ~ p/q, found by continued fractions.
std::uint64_t ratio_denominator(double ratio) {
  double x = ratio;
  std::uint64_t h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  for (int i = 0; i < 40; ++i) {
    const double a = std::floor(x);
    const auto ai = static_cast<std::uint64_t>(a);
    const std::uint64_t h2 = ai * h0 + h1;
    const std::uint64_t k2 = ai * k0 + k1;
    if (k2 > 1000) break;
    h1 = h0; h0 = h2;
    k1 = k0; k0 = k2;
    if (std::abs(ratio - static_cast<double>(h0) / static_cast<double>(k0)) < 1e-9 * std::max(1.0, ratio)) return k0;
    const double frac = x - a;
    if (frac < 1e-12) break;
    x = 1.0 / frac;
  }
  return k0 == 0 ? 1 : k0;
}

}  // namespace

ChordDiagram modular_chords(std::uint32_t n, std::uint32_t k) {
  require(n >= 2, "modular chords need at least 2 points");
  ChordDiagram d{n, k, {}};
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::uint32_t m = 0; m < n; ++m) {
    const auto image = static_cast<std::uint32_t>((std::uint64_t{k} * m) % n);
    if (image == m) continue;
    const auto chord = std::minmax(m, image);
    if (seen.insert(chord).second) d.chords.emplace_back(chord);
  }
  return d;
}

Point circle_point(std::uint32_t n, std::uint32_t residue, double radius) {
  const double angle = kPi / 2 + 2 * kPi * static_cast<double>(residue % n) / static_cast<double>(n);
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::uint32_t residue_label(std::uint32_t n, std::uint32_t residue) noexcept {
  const auto r = residue % n;
  return r == 0 ? n : r;
}

Drawing chord_drawing(const ChordDiagram& diagram, bool include_circle) {
  Drawing d;
  if (include_circle) {
    Polyline circle;
    constexpr int kSegments = 360;
    for (int i = 0; i <= kSegments; ++i) {
      const double a = 2 * kPi * i / kSegments;
      circle.push_back({std::cos(a), std::sin(a)});
    }
    d.polylines.push_back(std::move(circle));
  }
  for (const auto& [a, b] : diagram.chords) {
    d.polylines.push_back({circle_point(diagram.n, a), circle_point(diagram.n, b)});
  }
  return d;
}

const std::vector<GalleryPreset>& gallery_presets() {
  static const std::vector<GalleryPreset> all = {
      {"times2-mod7", 7, 2},    {"cardioid-36", 36, 2}, {"cardioid-360", 360, 2},
      {"times6-mod360", 360, 6}, {"times7-mod360", 360, 7}, {"times9-mod360", 360, 9},
      {"times10-mod360", 360, 10},
  };
  return all;
}

std::vector<std::uint32_t> skip_count_path(std::uint32_t n, std::uint32_t skip, std::uint32_t start) {
  require(n >= 2, "skip counting needs at least 2 points");
  require(skip >= 1, "skip must be at least 1");
  require(start >= 1 && start <= n, "start label must be in 1..n");
  const std::uint64_t stride = std::uint64_t{skip} + 1;
  std::vector<std::uint32_t> path{start};
  std::uint32_t label = start;
  do {
    label = static_cast<std::uint32_t>((label - 1 + stride) % n + 1);
    path.push_back(label);
  } while (label != start);
  return path;
}

Drawing skip_count_drawing(std::uint32_t n, std::uint32_t skip) {
  Drawing d;
  std::vector<bool> visited(n + 1, false);
  for (std::uint32_t start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    const auto path = skip_count_path(n, skip, start);
    for (auto label : path) visited[label] = true;
    if (path.size() < 3) continue;  // the stride is a multiple of n
    Polyline line;
    for (auto label : path) line.push_back(circle_point(n, label % n));
    d.polylines.push_back(std::move(line));
  }
  return d;
}

std::vector<Segment> curve_stitch(std::uint32_t count, StitchStyle style) {
  require(count >= 2, "curve stitching needs N >= 2");
  std::vector<Segment> out;
  const double n = count;
  std::vector<std::pair<double, double>> mirrors{{1, 1}};
  if (style == StitchStyle::VShape) mirrors.push_back({-1, 1});
  if (style == StitchStyle::Star) mirrors = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  for (const auto& [sx, sy] : mirrors) {
    for (std::uint32_t i = 1; i < count; ++i) {
      const double x = i;
      out.push_back({{sx * x, 0.0}, {0.0, sy * (n - x)}});
    }
  }
  return out;
}

Drawing segments_drawing(const std::vector<Segment>& segments) {
  Drawing d;
  for (const auto& s : segments) d.polylines.push_back({s.a, s.b});
  return d;
}

ParameterRange parameter_range(const ParametricCurve& curve) {
  return std::visit(
      [](const auto& c) -> ParameterRange {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Cardioid>) {
          return {0.0, 2 * kPi};
        } else if constexpr (std::is_same_v<T, Cycloid>) {
          return {0.0, 4 * kPi};
        } else {
          // The curve closes after q turns when R/r = p/q in lowest terms.
          const auto q = ratio_denominator(c.fixed_radius / c.rolling_radius);
          return {0.0, 2 * kPi * static_cast<double>(q)};
        }
      },
      curve);
}

Point evaluate(const ParametricCurve& curve, double t) {
  return std::visit(
      [t](const auto& c) -> Point {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Cardioid>) {
          const double r = 1 + std::cos(t);
          return {r * std::cos(t), r * std::sin(t)};
        } else if constexpr (std::is_same_v<T, Cycloid>) {
          return {c.radius * (t - std::sin(t)), c.radius * (1 - std::cos(t))};
        } else {
          const double big = c.fixed_radius;
          const double small = c.rolling_radius;
          const double sum = big + small;
          return {sum * std::cos(t) - small * std::cos(sum / small * t),
                  sum * std::sin(t) - small * std::sin(sum / small * t)};
        }
      },
      curve);
}

Drawing sample_parametric(const ParametricCurve& curve, std::size_t samples) {
  require(samples >= 2, "need at least 2 samples");
  if (const auto* c = std::get_if<Cycloid>(&curve)) {
    require(c->radius > 0 && std::isfinite(c->radius), "cycloid radius must be positive");
  }
  if (const auto* e = std::get_if<Epicycloid>(&curve)) {
    require(e->fixed_radius > 0 && e->rolling_radius > 0 && std::isfinite(e->fixed_radius) &&
                std::isfinite(e->rolling_radius),
            "epicycloid radii must be positive");
  }
  const auto range = parameter_range(curve);
  Polyline line;
  line.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = i + 1 == samples
                         ? range.end
                         : range.start + (range.end - range.start) * static_cast<double>(i) /
                                             static_cast<double>(samples - 1);
    line.push_back(evaluate(curve, t));
  }
  Drawing d;
  d.polylines.push_back(std::move(line));
  return d;
}

EscapeResult mandelbrot_escape(Complex c, std::uint32_t max_iter) {
  require(max_iter >= 1, "max_iter must be at least 1");
  double re = 0.0;
  double im = 0.0;
  for (std::uint32_t k = 1; k <= max_iter; ++k) {
    const double next_re = re * re - im * im + c.re;
    const double next_im = 2 * re * im + c.im;
    re = next_re;
    im = next_im;
    if (re * re + im * im > 4.0) return {true, k};
  }
  return {false, 0};
}

std::vector<EscapeResult> mandelbrot_grid(double re_min, double re_max, double im_min, double im_max,
                                          std::size_t width, std::size_t height, std::uint32_t max_iter,
                                          unsigned workers) {
  require(width >= 1 && height >= 1, "grid must be non-empty");
  std::vector<EscapeResult> out(width * height);
  auto coord = [](double lo, double hi, std::size_t i, std::size_t count) {
    return count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  };
  auto rows = [&](std::size_t first, std::size_t last) {
    for (std::size_t j = first; j < last; ++j) {
      const double im = coord(im_max, im_min, j, height);
      for (std::size_t i = 0; i < width; ++i) {
        out[j * width + i] = mandelbrot_escape({coord(re_min, re_max, i, width), im}, max_iter);
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(height)));
  if (workers == 1) {
    rows(0, height);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(rows, height * w / workers, height * (w + 1) / workers);
    }
  }
  return out;
}

}  // namespace mathplay::curves
