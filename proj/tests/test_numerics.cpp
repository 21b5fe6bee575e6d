#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mathplay/error.hpp"
#include "mathplay/numerics.hpp"

using namespace mathplay;
using namespace mathplay::numerics;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

// Plain iterative Fibonacci, F(1) = F(2) = 1.
std::vector<std::uint64_t> fib_table(std::size_t n) {
  std::vector<std::uint64_t> f{0, 1};
  while (f.size() <= n + 2) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

}  // namespace

TEST_CASE("rotation") {
  const Point2 unit[] = {{1, 0}};
  const auto quarter = rotate(unit, std::numbers::pi / 2);
  CHECK(std::abs(quarter[0].x) < 1e-15);
  CHECK(std::abs(quarter[0].y - 1) < 1e-15);

  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-100, 100);
  std::uniform_real_distribution<double> angle(-10, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const Point2 p[] = {{u(rng), u(rng)}};
    const double a = angle(rng);
    const double b = angle(rng);
    const auto once = rotate(p, a);
    const double norm = std::hypot(p[0].x, p[0].y);
    CHECK(std::abs(std::hypot(once[0].x, once[0].y) - norm) <= 1e-12 * std::max(1.0, norm));
    const auto twice = rotate(once, b);
    const auto direct = rotate(p, a + b);
    CHECK(std::abs(twice[0].x - direct[0].x) <= 1e-12 * std::max(1.0, norm));
    CHECK(std::abs(twice[0].y - direct[0].y) <= 1e-12 * std::max(1.0, norm));
  }
}

TEST_CASE("disk mask") {
  const DiskMask mask(100, 100);
  CHECK_FALSE(mask.masked(50, 50));
  CHECK(mask.masked(0, 0));
  CHECK(mask.masked(99, 99));
  CHECK_FALSE(mask.masked(50, 6));
  CHECK(mask.masked(50, 4));

  const DiskMask big(1000, 1000);
  std::size_t masked = 0;
  for (int y = 0; y < 1000; ++y)
    for (int x = 0; x < 1000; ++x) masked += big.masked(x, y);
  const double fraction = static_cast<double>(masked) / 1e6;
  CHECK(std::abs(fraction - (1 - std::numbers::pi * 0.45 * 0.45)) < 0.002);
  CHECK(std::abs(fraction - 0.3638) < 0.002);
}

TEST_CASE("resistor matrix") {
  const auto m = resistor_matrix({1, 2, 3, 4, 5});
  CHECK(m == Mat2{{7, 2, 2, 10}});
  CHECK(is_positive_definite(m));
  CHECK(quadratic_form(m, 1, -1) == 7 - 4 + 10);
  CHECK_FALSE(is_positive_definite(Mat2{{1, 2, 2, 1}}));
  CHECK_FALSE(is_positive_definite(Mat2{{0, 0, 0, 1}}));
  CHECK(code_of([] { is_positive_definite(Mat2{{1, 2, 3, 4}}); }) == ErrorCode::NotSymmetric);
  CHECK(code_of([] { resistor_matrix({1, 0, 1, 1, 1}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("resistor quadratic form is positive off the origin") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> r(0.01, 100);
  std::uniform_real_distribution<double> x(-10, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = resistor_matrix({r(rng), r(rng), r(rng), r(rng), r(rng)});
    CHECK(is_positive_definite(m));
    for (int k = 0; k < 100; ++k) {
      const double a = x(rng);
      const double b = x(rng);
      if (a == 0 && b == 0) continue;
      CHECK(quadratic_form(m, a, b) > 0);
    }
  }
}

TEST_CASE("needle crossing rule") {
  CHECK(needle_crosses(1, 0.0, 0.3));
  CHECK(needle_crosses(1, 0.5, std::numbers::pi / 2));
  CHECK_FALSE(needle_crosses(1, 0.5, 0.5));
  CHECK(buffon_pi(1, 1, 100, 64) == doctest::Approx(200.0 / 64));
  CHECK(code_of([] { buffon_pi(1, 1, 100, 0); }) == ErrorCode::EstimateUndefined);
}

TEST_CASE("buffon estimate") {
  const NeedleSpec spec{1.0, 1.0, 1'000'000, 42};
  const auto a = buffon_estimate(spec);
  CHECK(std::abs(a.pi_estimate - std::numbers::pi) < 0.02);
  for (int rerun = 0; rerun < 2; ++rerun) {
    const auto b = buffon_estimate(spec);
    CHECK(b.crossings == a.crossings);
    CHECK(std::memcmp(&b.pi_estimate, &a.pi_estimate, sizeof(double)) == 0);
  }
  CHECK(buffon_estimate({1.0, 1.0, 1'000'000, 43}).crossings != a.crossings);

  // With l = t/2 the crossing frequency is 2l/(pi t) = 1/pi.
  const auto half = buffon_estimate({0.5, 1.0, 1'000'000, 7});
  CHECK(std::abs(static_cast<double>(half.crossings) / 1e6 - 1 / std::numbers::pi) < 0.003);
}

TEST_CASE("buffon sampler contract") {
  // Replays the documented stream to count crossings independently.
  const NeedleSpec spec{0.8, 1.0, 5000, 99};
  std::mt19937_64 rng(spec.seed);
  std::uint64_t crossings = 0;
  for (std::uint64_t i = 0; i < spec.drops; ++i) {
    const double d = static_cast<double>(rng() >> 11) * 0x1.0p-53 * spec.spacing / 2;
    const double phi = static_cast<double>(rng() >> 11) * 0x1.0p-53 * std::numbers::pi / 2;
    crossings += d <= spec.length / 2 * std::sin(phi);
  }
  CHECK(buffon_estimate(spec).crossings == crossings);
}

TEST_CASE("buffon validation") {
  CHECK(code_of([] { buffon_estimate({2.0, 1.0, 10, 0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { buffon_estimate({0.0, 1.0, 10, 0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { buffon_estimate({1.0, 1.0, 0, 0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { buffon_estimate({1e-9, 1.0, 1, 0}); }) == ErrorCode::EstimateUndefined);
}

TEST_CASE("parallel buffon is reproducible") {
  const NeedleSpec spec{1.0, 1.0, 200'000, 5};
  CHECK(buffon_estimate_parallel(spec, 1).crossings == buffon_estimate(spec).crossings);
  const auto four = buffon_estimate_parallel(spec, 4);
  CHECK(buffon_estimate_parallel(spec, 4).crossings == four.crossings);
  CHECK(std::abs(four.pi_estimate - std::numbers::pi) < 0.05);
}

TEST_CASE("fibonacci identities") {
  const auto f = fib_table(45);
  for (std::uint64_t n = 1; n <= 40; ++n) {
    CHECK(fibonacci(n) == f[n]);
    const auto [sum, closed] = fib_sum_check(n);
    CHECK(sum == closed);
    CHECK(sum == f[n + 2] - 1);
    const auto [sq, prod] = fib_square_sum_check(n);
    CHECK(sq == prod);
    CHECK(prod == f[n] * f[n + 1]);
  }
  CHECK(fibonacci(93) == 12200160415121876738ull);
  CHECK(code_of([] { fibonacci(94); }) == ErrorCode::Overflow);
  CHECK(code_of([] { fibonacci(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("pascal rows") {
  CHECK(pascal_row(0) == std::vector<std::uint64_t>{1});
  CHECK(pascal_row(4) == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
  const auto f = fib_table(30);
  for (std::uint64_t n = 0; n <= 25; ++n) {
    const auto row = pascal_row(n);
    std::uint64_t total = 0;
    for (auto v : row) total += v;
    CHECK(total == (std::uint64_t{1} << n));
    // Shallow diagonal through row n: sum of C(n-k, k) = F(n+1).
    std::uint64_t diagonal = 0;
    for (std::uint64_t k = 0; 2 * k <= n; ++k) diagonal += pascal_row(n - k)[k];
    CHECK(diagonal == f[n + 1]);
  }
}

TEST_CASE("fibonacci reciprocal digits") {
  CHECK(fib_reciprocal_digits(10, 8) == "01123595");
  CHECK(fib_reciprocal_digits(5, 5) == "01124");
  CHECK(code_of([] { fib_reciprocal_digits(10, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { fib_reciprocal_digits(1, 4); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { fib_reciprocal_digits(37, 4); }) == ErrorCode::InvalidArgument);
  // Long division agrees with the digits of 1/89 computed in floating point.
  const auto digits = fib_reciprocal_digits(10, 12);
  double x = 1.0 / 89;
  for (char c : digits) {
    x *= 10;
    const int d = static_cast<int>(x);
    CHECK(c - '0' == d);
    x -= d;
  }
}

TEST_CASE("gauss sums") {
  CHECK(gauss_sum(100) == 5050);
  CHECK(gauss_sum(0) == 0);
  for (std::uint64_t n = 1; n <= 200; ++n) CHECK(gauss_sum(n) == gauss_sum(n - 1) + n);
}
