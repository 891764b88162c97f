#pragma once

#include <functional>
#include <span>

namespace wente {

// Tolerances for the adaptive Gauss-Kronrod integrators. The integral is
// accepted once the summed error estimate is below
// max(abs_tol, rel_tol * |result|).
struct QuadratureConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  long max_subdivisions = 1'000'000;

  // Throws DomainError unless all fields are positive.
  void validate() const;
};

struct Rect {
  double ax, bx;
  double ay, by;
};

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

// Globally adaptive G7/K15 on [a, b]. Throws QuadratureError when
// cfg.max_subdivisions is exhausted before the tolerance is met.
double integrate_1d(const Integrand1D& f, double a, double b,
                    const QuadratureConfig& cfg = {});

// Same, with the initial partition split at the given interior points.
// Points outside (a, b) are ignored.
double integrate_1d(const Integrand1D& f, double a, double b,
                    std::span<const double> breakpoints,
                    const QuadratureConfig& cfg);

// Globally adaptive tensor-product G7/K15 over a rectangle; the region with
// the largest error estimate is bisected along its dominant direction.
// Fully sequential within one call, so the result depends only on (f, rect,
// cfg) and not on the calling thread.
double integrate_2d(const Integrand2D& f, const Rect& rect,
                    const QuadratureConfig& cfg = {});

double integrate_2d(const Integrand2D& f, const Rect& rect,
                    std::span<const double> x_breaks,
                    std::span<const double> y_breaks,
                    const QuadratureConfig& cfg);

}  // namespace wente
