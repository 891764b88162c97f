#include "wente/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wente/errors.hpp"

namespace wente {

Modulus::Modulus(double k) : k_(k) {
  if (!(k >= 0.0 && k < 1.0))
    throw DomainError("elliptic modulus must satisfy 0 <= k < 1, got " +
                      std::to_string(k));
}

double Modulus::complementary() const noexcept {
  return std::sqrt((1.0 - k_) * (1.0 + k_));
}

double elliptic_K(Modulus k) {
  double a = 1.0;
  double g = k.complementary();
  // Quadratic convergence; a handful of steps even for k' ~ 1e-8.
  for (int i = 0; i < 64 && std::abs(a - g) > 1e-15 * a; ++i) {
    const double next = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = next;
  }
  return std::numbers::pi / (a + g);
}

double jacobi_cn(double u, Modulus k) {
  return JacobiCnEvaluator(k).cn(u);
}

JacobiCnEvaluator::JacobiCnEvaluator(Modulus k)
    : k_(k.value()), K_(elliptic_K(k)) {
  double a = 1.0;
  double b = k.complementary();
  double c = k.value();
  while (depth_ < kMaxLadder && std::abs(c) > 1e-16 * a) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    c = 0.5 * (a - b);
    a = an;
    b = bn;
    ratio_[static_cast<std::size_t>(depth_)] = c / a;
    ++depth_;
  }
  a_last_ = a;
}

double JacobiCnEvaluator::cn(double u) const { return sncndn(u).cn; }

JacobiCnEvaluator::SnCnDn JacobiCnEvaluator::sncndn(double u) const {
  if (!std::isfinite(u)) throw DomainError("jacobi_cn: argument is not finite");

  // Reduce to r in [0, 2K]: cn is even with period 4K, sn is odd.
  double sign = u < 0.0 ? -1.0 : 1.0;
  double r = std::fmod(std::abs(u), 4.0 * K_);
  if (r > 2.0 * K_) {
    r = 4.0 * K_ - r;
    sign = -sign;
  }

  double phi = std::ldexp(a_last_ * r, depth_);
  double prev = phi;
  for (int i = depth_ - 1; i >= 0; --i) {
    const double s = std::clamp(ratio_[static_cast<std::size_t>(i)] * std::sin(phi), -1.0, 1.0);
    prev = phi;
    phi = 0.5 * (phi + std::asin(s));
  }
  const double c = std::cos(phi);
  const double dn = depth_ == 0 ? 1.0 : c / std::cos(prev - phi);
  return {sign * std::sin(phi), c, dn};
}

}  // namespace wente
