#pragma once

// Jacobi cn and the complete elliptic integral of the first kind.
//
// Convention: every function here takes the MODULUS k. Libraries that take
// the parameter m = k^2 differ: cn(u, k) here equals JacobiCN[u, k^2] in
// Mathematica, and scipy.special.ellipj(u, m) must be called with m = k * k.

#include <array>

namespace wente {

// Elliptic modulus, 0 <= k < 1. Construction throws DomainError otherwise.
class Modulus {
 public:
  explicit Modulus(double k);
  double value() const noexcept { return k_; }
  // k' = sqrt(1 - k^2)
  double complementary() const noexcept;

 private:
  double k_;
};

// K(k) = int_0^{pi/2} dphi / sqrt(1 - k^2 sin^2 phi), by the AGM.
double elliptic_K(Modulus k);

// cn(u, k). Throws DomainError for non-finite u.
double jacobi_cn(double u, Modulus k);

// Precomputed descending Landen (AGM) ladder for a fixed modulus. The
// potential kernels evaluate cn millions of times at one k, so the ladder
// and the quarter period are built once here.
class JacobiCnEvaluator {
 public:
  explicit JacobiCnEvaluator(Modulus k);

  double modulus() const noexcept { return k_; }
  double quarter_period() const noexcept { return K_; }

  double cn(double u) const;

  struct SnCnDn {
    double sn;
    double cn;
    double dn;
  };
  // Companion values; sn^2 + cn^2 = 1 and dn^2 + k^2 sn^2 = 1.
  SnCnDn sncndn(double u) const;

 private:
  static constexpr int kMaxLadder = 16;

  double k_;
  double K_;
  int depth_ = 0;
  std::array<double, kMaxLadder> ratio_{};  // c_n / a_n
  double a_last_ = 1.0;
};

}  // namespace wente
