#pragma once
// Reference computations used only by the tests.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace oracle {

// K(k) = (pi/2) sum_m ((2m-1)!! / (2m)!!)^2 k^(2m), truncated.
inline double elliptic_K_series(double k, int terms = 50) {
  double sum = 1.0, coef = 1.0, k2m = 1.0;
  for (int m = 1; m < terms; ++m) {
    coef *= (2.0 * m - 1.0) / (2.0 * m);
    k2m *= k * k;
    sum += coef * coef * k2m;
  }
  return std::numbers::pi / 2 * sum;
}

// Fourth-order central-difference Laplacian with step h.
inline double laplacian(const std::function<double(double, double)>& f, double x, double y,
                        double h) {
  auto d2 = [&](double fm2, double fm1, double f0, double fp1, double fp2) {
    return (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  };
  const double f0 = f(x, y);
  return d2(f(x - 2 * h, y), f(x - h, y), f0, f(x + h, y), f(x + 2 * h, y)) +
         d2(f(x, y - 2 * h), f(x, y - h), f0, f(x, y + h), f(x, y + 2 * h));
}

inline std::mt19937_64 rng(unsigned seed = 20240611u) { return std::mt19937_64(seed); }

}  // namespace oracle
