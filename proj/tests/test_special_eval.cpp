#include <doctest.h>

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "bessel_interlace/error.hpp"
#include "bessel_interlace/special_eval.hpp"
#include "oracle/fixtures.hpp"

using namespace bessel;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

ErrorCode code_of(void (*fn)()) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("mpmath reference values away from zeros") {
  double worst = 0.0;
  for (const auto& f : oracle::kFunctionFixtures) {
    CAPTURE(f.nu);
    CAPTURE(f.x);
    const CylinderSet v = eval_all(f.nu, f.x);
    CHECK(rel_err(v.j.value, f.j) <= 1e-12);
    CHECK(rel_err(v.y.value, f.y) <= 1e-12);
    CHECK(rel_err(v.dj.value, f.dj) <= 1e-12);
    CHECK(rel_err(v.dy.value, f.dy) <= 1e-12);
    worst = std::max({worst, rel_err(v.j.value, f.j), rel_err(v.y.value, f.y), rel_err(v.dj.value, f.dj),
                      rel_err(v.dy.value, f.dy)});
  }
  MESSAGE("worst relative error " << worst);
}

TEST_CASE("error estimate covers the observed error on the reference set") {
  for (const auto& f : oracle::kFunctionFixtures) {
    CAPTURE(f.nu);
    CAPTURE(f.x);
    const CylinderSet v = eval_all(f.nu, f.x);
    CHECK(v.j.est_abs_error >= 0.0);
    CHECK(std::abs(v.j.value - f.j) <= v.j.est_abs_error + 1e-300);
    CHECK(std::abs(v.dj.value - f.dj) <= v.dj.est_abs_error + 1e-300);
  }
}

TEST_CASE("J examples") {
  CHECK(std::abs(eval_j(0, 1e-300).value - 1.0) <= 1e-12);
  CHECK(std::abs(eval_j(1, 1).value - 0.4400505857449335) <= 1e-15);
  CHECK(std::abs(eval_j(0, 2.404825557695773).value) <= 1e-12);
}

TEST_CASE("Y examples") {
  CHECK(std::abs(eval_y(0.5, kPi / 2).value) <= 1e-12);
  CHECK(std::abs(eval_y(0, 0.893576966279167).value) <= 1e-12);
  CHECK(eval_y(0, 0.01).value < 0.0);
  for (const double nu : {0.0, 0.3, 1.0, 7.5, 40.0}) CHECK(eval_y(nu, 1e-3).value < 0.0);
}

TEST_CASE("derivative examples") {
  CHECK(std::abs(eval_dj(0, 3.831705970207512).value) <= 1e-12);
  CHECK(eval_dj(0, 2.404825557695773).value < 0.0);
  CHECK(std::abs(eval_dj(1, 1.841183781340659).value) <= 1e-12);
  CHECK(std::abs(eval_dy(0, 2.197141326031017).value) <= 1e-12);
  CHECK(eval_dy(0, 0.893576966279167).value > 0.0);
  const double composed = -eval_y(3, 1).value + 2.0 * eval_y(2, 1).value;
  CHECK(std::abs(eval_dy(2, 1).value - composed) <= 1e-12 * std::abs(composed));
}

TEST_CASE("half-order closed forms") {
  for (const double x : {0.01, 0.7, 1.9, 2.0, 3.3, 19.9, 20.0, 45.0, 1000.0}) {
    CAPTURE(x);
    const double a = std::sqrt(2.0 / (kPi * x));
    CHECK(rel_err(eval_j(0.5, x).value, a * std::sin(x)) <= 1e-13);
    CHECK(rel_err(eval_y(0.5, x).value, -a * std::cos(x)) <= 1e-13);
  }
}

TEST_CASE("cylinder mix") {
  CHECK(eval_cylinder(0.0, 1, 1).value == eval_j(1, 1).value);
  const double y0 = eval_y(0, 1).value;
  CHECK(std::abs(eval_cylinder(kPi / 2, 0, 1).value + y0) <= 1e-15);
  const double expected = (eval_j(0, 1).value - y0) / std::sqrt(2.0);
  CHECK(std::abs(eval_cylinder(kPi / 4, 0, 1).value - expected) <= 1e-15);
  // alpha = 0 never touches Y, so it stays finite where Y overflows.
  CHECK(std::isfinite(eval_cylinder(0.0, 300, 1e-3).value));
  CHECK_THROWS_AS(eval_cylinder(NAN, 1, 1), Error);
}

TEST_CASE("domain errors carry machine-readable codes") {
  CHECK(code_of([] { eval_j(-1, 1); }) == ErrorCode::DomainNu);
  CHECK(code_of([] { eval_j(NAN, 1); }) == ErrorCode::DomainNu);
  CHECK(code_of([] { eval_y(600.5, 1); }) == ErrorCode::OverflowNu);
  CHECK(code_of([] { eval_dj(1, 0); }) == ErrorCode::DomainX);
  CHECK(code_of([] { eval_dy(1, -2); }) == ErrorCode::DomainX);
  CHECK(code_of([] { eval_j(1, INFINITY); }) == ErrorCode::DomainX);
  CHECK(to_string(ErrorCode::DomainNu) == "DOMAIN_NU");
  CHECK(to_string(ErrorCode::OverflowNu) == "OVERFLOW_NU");
  CHECK_NOTHROW(eval_all(600, 1));
}

TEST_CASE("never NaN on valid input, including overflow and underflow corners") {
  for (const double nu : {0.0, 0.5, 1.0, 99.5, 300.0, 600.0}) {
    for (const double x : {1e-300, 1e-10, 1e-3, 1.0, 50.0, 700.0, 1e5}) {
      CAPTURE(nu);
      CAPTURE(x);
      const CylinderSet v = eval_all(nu, x);
      CHECK_FALSE(std::isnan(v.j.value));
      CHECK_FALSE(std::isnan(v.y.value));
      CHECK_FALSE(std::isnan(v.dj.value));
      CHECK_FALSE(std::isnan(v.dy.value));
    }
  }
}

TEST_CASE("regime boundaries are continuous") {
  // Each pair straddles a switch between evaluation methods.
  const std::vector<std::pair<double, double>> edges{{0.3, 2.0}, {7.0, 2.0}, {3.0, 20.0}, {15.0, 20.0},
                                                     {25.0, 25.0}, {4.0, 38.0}, {1.0, 30.5}};
  for (const auto& [nu, x] : edges) {
    CAPTURE(nu);
    CAPTURE(x);
    const double lo = std::nextafter(x, 0.0);
    const CylinderSet a = eval_all(nu, lo);
    const CylinderSet b = eval_all(nu, x);
    const double amp = std::sqrt(a.j.value * a.j.value + a.y.value * a.y.value);
    CHECK(std::abs(a.j.value - b.j.value) <= 1e-13 * amp);
    CHECK(std::abs(a.y.value - b.y.value) <= 1e-13 * amp);
  }
}

TEST_CASE("concurrent evaluation matches serial evaluation") {
  std::vector<double> serial;
  for (int i = 0; i < 400; ++i) serial.push_back(eval_y(0.37 * i, 0.5 + 0.25 * i).value);
  std::vector<double> parallel(serial.size());
  std::vector<std::jthread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < 400; i += 4) parallel[i] = eval_y(0.37 * i, 0.5 + 0.25 * i).value;
    });
  }
  pool.clear();
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i] == parallel[i]);
  }
}
