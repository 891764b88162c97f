#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wente/elliptic.hpp"
#include "wente/quadrature.hpp"

namespace wente {

// Reduced fraction l/n in (1, 2); labels the Wente torus W_{l/n}.
class Fraction {
 public:
  // Throws DomainError unless gcd(ell, n) = 1 and 1 < ell/n < 2.
  Fraction(int ell, int n);

  // Parses "l/n". Throws DomainError on malformed input.
  static Fraction parse(std::string_view text);

  int ell() const noexcept { return ell_; }
  int n() const noexcept { return n_; }
  bool ell_odd() const noexcept { return ell_ % 2 != 0; }
  double ratio() const noexcept { return static_cast<double>(ell_) / n_; }
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  // Report order: by n, then ell.
  friend bool operator<(const Fraction& a, const Fraction& b) noexcept {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.ell_ < b.ell_;
  }

 private:
  int ell_;
  int n_;
};

// Geometric parameters of one torus. Angles in radians.
struct WenteParams {
  double theta;
  double theta_bar;
  double H;
  double k;
  double k_bar;
  double gamma;
  double gamma_bar;
  double alpha;      // x-frequency scale
  double alpha_bar;  // y-frequency scale
};

struct Periods {
  double x_len;
  double y_len;
};

struct Vec2 {
  double x;
  double y;
};

// Fundamental lattice span_Z{v1, v2} of the conformal torus.
struct Lattice {
  Vec2 v1;
  Vec2 v2;
  double area;
};

// Tolerances for the period-problem root solve. The residual integral is
// evaluated far tighter than the report tolerance so that the converged
// root satisfies the period equation to ~1e-12.
struct SolverConfig {
  double theta_tol = 1e-12;  // bracket width at termination, radians
  double bracket_eps = 1e-6;  // distance kept from the ends of (0, pi/2 - theta_bar)
  QuadratureConfig quadrature{1e-13, 1e-13, 100'000};
};

// 65.354955 degrees: the value of theta_bar that closes the first period
// problem, taken as a fixed constant.
double theta_bar_constant();

double degrees(double radians);
double radians(double degrees);

// Derives k, gamma, alpha, ... from (theta, theta_bar, H). Throws DomainError
// if the angle constraints or H > 0 fail.
WenteParams make_params(double theta, double theta_bar, double H);

// LHS - RHS of the second period condition for the ratio l/n. Throws
// DomainError if tan(theta) tan(theta_bar) >= 1.
double period_residual(double theta, double ratio, double H,
                       const QuadratureConfig& cfg = {});
double period_residual(double theta, const Fraction& frac, double H,
                       const QuadratureConfig& cfg = {});

// Unique root of period_residual on (0, pi/2 - theta_bar). Throws NoRootError
// when the residual does not change sign over the bracket, which is the
// case for every ratio outside (1, 2).
double solve_theta_for_ratio(double ratio, double H, const SolverConfig& cfg = {});
double solve_theta(const Fraction& frac, double H, const SolverConfig& cfg = {});

// x_len = 4 K(k) / alpha, y_len = 4 K(k_bar) / alpha_bar.
Periods periods(const WenteParams& params);

// odd l:  span{(n x, 0), (0, y)}
// even l: span{(n x / 2, y / 2), (0, y)}
Lattice lattice(const Fraction& frac, double x_len, double y_len);

// All reduced l/n in (1, 2) with n <= n_max, sorted by (n, l).
std::vector<Fraction> enumerate_fractions(int n_max);

// Everything downstream needs about one torus at one H.
struct Surface {
  Fraction frac;
  WenteParams params;
  Periods period;
  Lattice lat;
};

Surface make_surface(const Fraction& frac, double H, const SolverConfig& cfg = {});

}  // namespace wente
