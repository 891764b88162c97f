#include "wente/wente_params.hpp"

#include <boost/math/tools/roots.hpp>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>

#include "wente/errors.hpp"

namespace wente {

using std::numbers::pi;

Fraction::Fraction(int ell, int n) : ell_(ell), n_(n) {
  if (n <= 0 || ell <= 0) throw DomainError("fraction must have positive terms");
  if (std::gcd(ell, n) != 1) throw DomainError(str() + " is not reduced");
  if (!(ell > n && ell < 2 * n)) throw DomainError(str() + " is not in (1, 2)");
}

Fraction Fraction::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw DomainError("expected l/n, got '" + std::string(text) + "'");
  auto to_int = [&](std::string_view part) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw DomainError("expected l/n, got '" + std::string(text) + "'");
    return v;
  };
  return Fraction(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

std::string Fraction::str() const {
  return std::to_string(ell_) + "/" + std::to_string(n_);
}

double theta_bar_constant() { return radians(65.354955); }

double degrees(double rad) { return rad * 180.0 / pi; }
double radians(double deg) { return deg * pi / 180.0; }

WenteParams make_params(double theta, double theta_bar, double H) {
  if (!(H > 0.0)) throw DomainError("mean curvature H must be positive");
  if (!(theta > 0.0 && theta_bar > 0.0 && theta + theta_bar < pi / 2))
    throw DomainError("need theta, theta_bar > 0 and theta + theta_bar < pi/2");
  const double tt = std::tan(theta) * std::tan(theta_bar);
  if (!(tt < 1.0)) throw DomainError("tan(theta) tan(theta_bar) must be < 1");

  WenteParams p{};
  p.theta = theta;
  p.theta_bar = theta_bar;
  p.H = H;
  p.k = std::sin(theta);
  p.k_bar = std::sin(theta_bar);
  p.gamma = std::sqrt(std::tan(theta));
  p.gamma_bar = std::sqrt(std::tan(theta_bar));
  const double denom = std::sin(2.0 * (theta + theta_bar));
  p.alpha = std::sqrt(4.0 * H * std::sin(2.0 * theta_bar) / denom);
  p.alpha_bar = std::sqrt(4.0 * H * std::sin(2.0 * theta) / denom);
  return p;
}

double period_residual(double theta, double ratio, double H,
                       const QuadratureConfig& cfg) {
  (void)H;  // the condition is scale free; H is accepted for symmetry with the pipeline
  const double tb = theta_bar_constant();
  const double tt = std::tan(theta) * std::tan(tb);
  if (!(theta > 0.0) || !(tt < 1.0) || !(theta + tb < pi / 2))
    throw DomainError("period_residual: theta outside (0, pi/2 - theta_bar)");
  const double s2 = std::sin(theta) * std::sin(theta);
  const double one_minus_tt = std::cos(theta + tb) / (std::cos(theta) * std::cos(tb));
  const double lhs = integrate_1d(
      [=](double phi) {
        const double sp = std::sin(phi);
        const double c2 = 1.0 - sp * sp;
        return (1.0 + tt * c2) / (one_minus_tt + tt * sp * sp) / std::sqrt(1.0 - s2 * sp * sp);
      },
      0.0, pi / 2, cfg);
  const double rhs =
      ratio * (pi / 2) * std::sqrt(std::sin(2.0 * tb) / std::sin(2.0 * (theta + tb)));
  return lhs - rhs;
}

double period_residual(double theta, const Fraction& frac, double H,
                       const QuadratureConfig& cfg) {
  return period_residual(theta, frac.ratio(), H, cfg);
}

double solve_theta_for_ratio(double ratio, double H, const SolverConfig& cfg) {
  const double lo = cfg.bracket_eps;
  const double hi = pi / 2 - theta_bar_constant() - cfg.bracket_eps;
  auto f = [&](double t) { return period_residual(t, ratio, H, cfg.quadrature); };
  const double flo = f(lo), fhi = f(hi);
  if (!(flo * fhi < 0.0))
    throw NoRootError("period problem has no root for ratio " + std::to_string(ratio) +
                      " (residual does not change sign on the bracket)");

  std::uintmax_t max_iter = 200;
  auto done = [&](double a, double b) { return std::abs(b - a) < cfg.theta_tol; };
  const auto [a, b] =
      boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, max_iter);
  if (!done(a, b)) throw NoRootError("period problem root did not converge");
  return 0.5 * (a + b);
}

double solve_theta(const Fraction& frac, double H, const SolverConfig& cfg) {
  return solve_theta_for_ratio(frac.ratio(), H, cfg);
}

Periods periods(const WenteParams& p) {
  return {4.0 / p.alpha * elliptic_K(Modulus(p.k)),
          4.0 / p.alpha_bar * elliptic_K(Modulus(p.k_bar))};
}

Lattice lattice(const Fraction& frac, double x_len, double y_len) {
  if (!(x_len > 0.0 && y_len > 0.0)) throw DomainError("periods must be positive");
  const double n = frac.n();
  Lattice lat{};
  if (frac.ell_odd()) {
    lat.v1 = {n * x_len, 0.0};
  } else {
    lat.v1 = {n * x_len / 2, y_len / 2};
  }
  lat.v2 = {0.0, y_len};
  lat.area = lat.v1.x * lat.v2.y - lat.v1.y * lat.v2.x;
  return lat;
}

std::vector<Fraction> enumerate_fractions(int n_max) {
  if (n_max < 2) throw DomainError("enumerate_fractions: n_max must be >= 2");
  std::vector<Fraction> out;
  for (int n = 2; n <= n_max; ++n)
    for (int ell = n + 1; ell < 2 * n; ++ell)
      if (std::gcd(ell, n) == 1) out.emplace_back(ell, n);
  return out;
}

Surface make_surface(const Fraction& frac, double H, const SolverConfig& cfg) {
  const double theta = solve_theta(frac, H, cfg);
  const WenteParams p = make_params(theta, theta_bar_constant(), H);
  const Periods per = periods(p);
  return {frac, p, per, lattice(frac, per.x_len, per.y_len)};
}

}  // namespace wente
