#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "wente/elliptic.hpp"
#include "wente/errors.hpp"
#include "wente/quadrature.hpp"

using namespace wente;
using std::numbers::pi;

TEST_CASE("config validation") {
  CHECK_NOTHROW(QuadratureConfig{}.validate());
  CHECK_THROWS_AS((QuadratureConfig{0.0, 1e-9, 10}.validate()), DomainError);
  CHECK_THROWS_AS((QuadratureConfig{1e-9, -1.0, 10}.validate()), DomainError);
  CHECK_THROWS_AS((QuadratureConfig{1e-9, 1e-9, 0}.validate()), DomainError);
}

TEST_CASE("1d examples") {
  CHECK(integrate_1d([](double) { return 1.0; }, 0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(integrate_1d([](double x) { return std::sin(x); }, 0, pi) - 2.0) < 1e-10);
  const double k = 0.5;
  const double I = integrate_1d(
      [&](double p) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(p) * std::sin(p)); }, 0, pi / 2);
  CHECK(std::abs(I - elliptic_K(Modulus(k))) < 1e-10);
  CHECK(integrate_1d([](double) { return 5.0; }, 2, 2) == 0.0);
  CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, 1, 0), DomainError);
}

TEST_CASE("1d breakpoints and hard integrands") {
  const std::vector<double> cuts{0.5, -3.0, 7.0};
  const double I = integrate_1d([](double x) { return std::abs(x - 0.5); }, 0, 1, cuts, {});
  CHECK(std::abs(I - 0.25) < 1e-14);
  const double s = integrate_1d([](double x) { return 1.0 / std::sqrt(x); }, 0, 1,
                                QuadratureConfig{1e-10, 1e-10, 100000});
  CHECK(std::abs(s - 2.0) < 1e-8);
}

TEST_CASE("exhausted subdivisions throw") {
  CHECK_THROWS_AS(integrate_1d([](double x) { return std::sin(1.0 / (x + 1e-9)); }, 0, 1,
                               QuadratureConfig{1e-14, 1e-14, 5}),
                  QuadratureError);
  CHECK_THROWS_AS(integrate_2d([](double x, double) { return 1.0 / std::sqrt(x); }, Rect{0, 1, 0, 1},
                               QuadratureConfig{1e-14, 1e-14, 3}),
                  QuadratureError);
}

TEST_CASE("2d examples") {
  CHECK(integrate_2d([](double, double) { return 1.0; }, Rect{0, 2, 0, 3}) ==
        doctest::Approx(6.0).epsilon(1e-14));
  CHECK(std::abs(integrate_2d([](double x, double y) { return std::cos(x) * std::cos(y); },
                              Rect{0, pi / 2, 0, pi / 2}) -
                 1.0) < 1e-10);
  CHECK_THROWS_AS(integrate_2d([](double, double) { return 1.0; }, Rect{0, 0, 0, 1}), DomainError);
}

TEST_CASE("2d equals nested 1d on separable integrands") {
  auto fx = [](double x) { return std::exp(-x) * std::cos(3 * x); };
  auto fy = [](double y) { return 1.0 / (1.0 + y * y); };
  const Rect r{0.0, 2.5, -1.0, 3.0};
  const double nested = integrate_1d(
      [&](double x) { return integrate_1d([&](double y) { return fx(x) * fy(y); }, r.ay, r.by); },
      r.ax, r.bx);
  const double direct = integrate_2d([&](double x, double y) { return fx(x) * fy(y); }, r);
  CHECK(std::abs(nested - direct) < 1e-9);
  const std::vector<double> xb{1.25}, yb{0.0, 1.5};
  CHECK(std::abs(integrate_2d([&](double x, double y) { return fx(x) * fy(y); }, r, xb, yb, {}) -
                 nested) < 1e-9);
}

TEST_CASE("2d anisotropic peak") {
  const double w = 1e-2;
  auto f = [&](double x, double y) { return std::exp(-(x * x) / (w * w) - y * y); };
  const double exact = std::sqrt(pi) * w / 2 * std::sqrt(pi) * std::erf(2.0) / 2 * 2;
  CHECK(std::abs(integrate_2d(f, Rect{0, 1, -2, 2}) - exact) < 1e-9);
}

TEST_CASE("results are reproducible") {
  auto f = [](double x, double y) { return std::cos(7 * x * y) + x; };
  CHECK(integrate_2d(f, Rect{0, 2, 0, 1}) == integrate_2d(f, Rect{0, 2, 0, 1}));
}
