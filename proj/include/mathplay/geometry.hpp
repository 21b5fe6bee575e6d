#pragma once

#include <cstddef>
#include <vector>

namespace mathplay {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

using Polyline = std::vector<Point>;

// Ordered polylines in abstract user units; the common output of every
// figure generator.
struct Drawing {
  std::vector<Polyline> polylines;

  bool empty() const noexcept { return polylines.empty(); }
  std::size_t segment_count() const noexcept {
    std::size_t n = 0;
    for (const auto& p : polylines) n += p.size() - 1;
    return n;
  }
};

struct BoundingBox {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;
};

// Zero box for an empty drawing.
BoundingBox bounding_box(const Drawing& drawing) noexcept;

}  // namespace mathplay
