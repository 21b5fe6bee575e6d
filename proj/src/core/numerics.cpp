#include "mathplay/numerics.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include "mathplay/error.hpp"

namespace mathplay::numerics {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "result exceeds 64-bit range");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "result exceeds 64-bit range");
  return out;
}

double unit_double(std::uint64_t raw) { return static_cast<double>(raw >> 11) * 0x1.0p-53; }

void validate(const NeedleSpec& spec) {
  if (!(spec.length > 0) || !std::isfinite(spec.length)) {
    throw Error(ErrorCode::InvalidArgument, "needle length must be positive");
  }
  if (!(spec.spacing >= spec.length) || !std::isfinite(spec.spacing)) {
    throw Error(ErrorCode::InvalidArgument, "line spacing must be at least the needle length");
  }
  if (spec.drops == 0) throw Error(ErrorCode::InvalidArgument, "need at least one drop");
}

std::uint64_t count_crossings(const NeedleSpec& spec, std::mt19937_64& rng, std::uint64_t drops) {
  std::uint64_t crossings = 0;
  const double half_spacing = spec.spacing / 2;
  for (std::uint64_t i = 0; i < drops; ++i) {
    const double d = unit_double(rng()) * half_spacing;
    const double phi = unit_double(rng()) * (std::numbers::pi / 2);
    if (needle_crosses(spec.length, d, phi)) ++crossings;
  }
  return crossings;
}

}  // namespace

std::vector<Point2> rotate(std::span<const Point2> points, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<Point2> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({p.x * c - p.y * s, p.x * s + p.y * c});
  return out;
}

DiskMask::DiskMask(std::uint32_t lx, std::uint32_t ly, double ratio)
    : cx_(lx / 2.0), cy_(ly / 2.0), radius_sq_((ratio * lx) * (ratio * lx)) {
  if (lx == 0 || ly == 0) throw Error(ErrorCode::InvalidArgument, "image dimensions must be positive");
  if (!(ratio > 0)) throw Error(ErrorCode::InvalidArgument, "disk ratio must be positive");
}

bool DiskMask::masked(std::int64_t x, std::int64_t y) const noexcept {
  const double dx = static_cast<double>(x) - cx_;
  const double dy = static_cast<double>(y) - cy_;
  return dx * dx + dy * dy > radius_sq_;
}

Mat2 resistor_matrix(const ResistorSet& r) {
  for (double v : {r.r1, r.r2, r.r3, r.r4, r.r5}) {
    if (!(v > 0) || !std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "resistances must be positive");
  }
  return Mat2{{r.r1 + r.r2 + r.r4, r.r2, r.r2, r.r2 + r.r3 + r.r5}};
}

bool is_positive_definite(const Mat2& m) {
  if (m(0, 1) != m(1, 0)) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
  return m(0, 0) > 0 && m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) > 0;
}

double quadratic_form(const Mat2& m, double x0, double x1) noexcept {
  return x0 * (m(0, 0) * x0 + m(0, 1) * x1) + x1 * (m(1, 0) * x0 + m(1, 1) * x1);
}

bool needle_crosses(double length, double centre_distance, double angle) noexcept {
  return centre_distance <= (length / 2) * std::sin(angle);
}

double buffon_pi(double length, double spacing, std::uint64_t drops, std::uint64_t crossings) {
  if (crossings == 0) throw Error(ErrorCode::EstimateUndefined, "no needle crossed a line");
  return 2 * length * static_cast<double>(drops) / (spacing * static_cast<double>(crossings));
}

BuffonResult buffon_estimate(const NeedleSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  const auto crossings = count_crossings(spec, rng, spec.drops);
  return {buffon_pi(spec.length, spec.spacing, spec.drops, crossings), crossings};
}

BuffonResult buffon_estimate_parallel(const NeedleSpec& spec, unsigned workers) {
  validate(spec);
  if (workers <= 1) return buffon_estimate(spec);
  std::vector<std::uint64_t> counts(workers, 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32), w};
        std::mt19937_64 rng(seq);
        const auto share = spec.drops / workers + (w < spec.drops % workers ? 1 : 0);
        counts[w] = count_crossings(spec, rng, share);
      });
    }
  }
  std::uint64_t crossings = 0;
  for (auto c : counts) crossings += c;
  return {buffon_pi(spec.length, spec.spacing, spec.drops, crossings), crossings};
}

std::uint64_t fibonacci(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Fibonacci index starts at 1");
  std::uint64_t prev = 0;
  std::uint64_t cur = 1;
  for (std::uint64_t i = 1; i < n; ++i) {
    const auto next = checked_add(prev, cur);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::pair<std::uint64_t, std::uint64_t> fib_sum_check(std::uint64_t n) {
  std::uint64_t lhs = 0;
  for (std::uint64_t k = 1; k <= n; ++k) lhs = checked_add(lhs, fibonacci(k));
  return {lhs, fibonacci(n + 2) - 1};
}

std::pair<std::uint64_t, std::uint64_t> fib_square_sum_check(std::uint64_t n) {
  std::uint64_t lhs = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const auto f = fibonacci(k);
    lhs = checked_add(lhs, checked_mul(f, f));
  }
  return {lhs, checked_mul(fibonacci(n), fibonacci(n + 1))};
}

std::vector<std::uint64_t> pascal_row(std::uint64_t n) {
  if (n > 67) throw Error(ErrorCode::Overflow, "Pascal row exceeds 64-bit range");
  std::vector<std::uint64_t> row{1};
  for (std::uint64_t r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next(r + 1, 1);
    for (std::uint64_t k = 1; k < r; ++k) next[k] = checked_add(row[k - 1], row[k]);
    row = std::move(next);
  }
  return row;
}

std::string fib_reciprocal_digits(std::uint32_t base, std::size_t count) {
  if (base < 2 || base > 36) throw Error(ErrorCode::InvalidArgument, "base must be in 2..36");
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "need at least one digit");
  const std::uint64_t denominator = std::uint64_t{base} * base - base - 1;
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  out.reserve(count);
  // Base 2 gives 1/1: no fractional part, all digits zero.
  std::uint64_t remainder = 1 % denominator;
  for (std::size_t i = 0; i < count; ++i) {
    remainder *= base;
    out.push_back(kDigits[remainder / denominator]);
    remainder %= denominator;
  }
  return out;
}

std::uint64_t gauss_sum(std::uint64_t n) {
  return n % 2 == 0 ? checked_mul(n / 2, n + 1) : checked_mul(n, (n + 1) / 2);
}

}  // namespace mathplay::numerics
