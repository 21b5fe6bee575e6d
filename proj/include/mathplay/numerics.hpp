#pragma once

// Small exact and floating-point kernels: plane rotation, disk masks, 2x2
// positive definiteness, Buffon's needle, and integer sequence identities.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mathplay/geometry.hpp"

namespace mathplay::numerics {

using Point2 = Point;

// Counterclockwise rotation by `theta` radians.
std::vector<Point2> rotate(std::span<const Point2> points, double theta);

// Pixel (x, y) is masked when it lies outside the disk of radius ratio*lx
// centred on (lx/2, ly/2).
class DiskMask {
 public:
  DiskMask(std::uint32_t lx, std::uint32_t ly, double ratio = 0.45);
  bool masked(std::int64_t x, std::int64_t y) const noexcept;

 private:
  double cx_;
  double cy_;
  double radius_sq_;
};

struct Mat2 {
  std::array<double, 4> m{};  // row-major
  double operator()(int r, int c) const { return m[r * 2 + c]; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct ResistorSet {
  double r1 = 1, r2 = 1, r3 = 1, r4 = 1, r5 = 1;
};

// [[R1+R2+R4, R2], [R2, R2+R3+R5]]. Throws InvalidArgument unless every R > 0.
Mat2 resistor_matrix(const ResistorSet& r);

// Leading principal minors test. Throws NotSymmetric for m(0,1) != m(1,0).
bool is_positive_definite(const Mat2& m);

double quadratic_form(const Mat2& m, double x0, double x1) noexcept;

// Reproducibility contract for buffon_estimate: std::mt19937_64 seeded with
// the 64-bit seed; each drop draws two raw outputs, u -> (u >> 11) * 2^-53,
// first the centre distance d = u1 * t/2, then the angle phi = u2 * pi/2.
inline constexpr const char* kBuffonSampler = "mt19937_64/53bit/d-then-phi";

struct NeedleSpec {
  double length = 1.0;   // l
  double spacing = 1.0;  // t, with 0 < l <= t
  std::uint64_t drops = 1;
  std::uint64_t seed = 0;
};

struct BuffonResult {
  double pi_estimate = 0.0;
  std::uint64_t crossings = 0;
};

bool needle_crosses(double length, double centre_distance, double angle) noexcept;

// Throws InvalidArgument for a bad spec and EstimateUndefined when no needle
// crosses a line.
BuffonResult buffon_estimate(const NeedleSpec& spec);

// Splits the drops over `workers` streams. Worker w is seeded through
// std::seed_seq{seed_lo, seed_hi, w}; results are reproducible per
// (seed, workers) pair. workers == 1 is identical to buffon_estimate.
BuffonResult buffon_estimate_parallel(const NeedleSpec& spec, unsigned workers);

// 2l*n / (t*c); throws EstimateUndefined for c == 0.
double buffon_pi(double length, double spacing, std::uint64_t drops, std::uint64_t crossings);

// F(1) = F(2) = 1. Throws InvalidArgument for n == 0, Overflow past F(93).
std::uint64_t fibonacci(std::uint64_t n);

// (F(1) + ... + F(n), F(n+2) - 1)
std::pair<std::uint64_t, std::uint64_t> fib_sum_check(std::uint64_t n);
// (F(1)^2 + ... + F(n)^2, F(n) * F(n+1))
std::pair<std::uint64_t, std::uint64_t> fib_square_sum_check(std::uint64_t n);

// Row n of Pascal's triangle (row 0 = [1]) by the additive recurrence.
std::vector<std::uint64_t> pascal_row(std::uint64_t n);

// First `count` fractional digits of 1/(b^2 - b - 1) in base b (2..36), by
// integer long division. Digits above 9 use lowercase letters.
std::string fib_reciprocal_digits(std::uint32_t base, std::size_t count);

std::uint64_t gauss_sum(std::uint64_t n);

}  // namespace mathplay::numerics
