#pragma once

// Potential of the Jacobi operator L = -Laplace - V on the flat torus, the
// basic integrals, and the 9x9 index matrices built from them.

#include <Eigen/Dense>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wente/elliptic.hpp"
#include "wente/parallel.hpp"
#include "wente/quadrature.hpp"
#include "wente/torus_spectrum.hpp"
#include "wente/wente_params.hpp"

namespace wente {

// F and V = 4H cosh F for one surface, with
//   tanh(F / 4) = gamma gamma_bar cn(alpha x, k) cn(alpha_bar y, k_bar).
// V has periods x_len / 2 and y_len / 2 and is even in x and in y.
class PotentialContext {
 public:
  explicit PotentialContext(const Surface& surface);

  const Surface& surface() const noexcept { return surface_; }
  double x_len() const noexcept { return surface_.period.x_len; }
  double y_len() const noexcept { return surface_.period.y_len; }
  double H() const noexcept { return surface_.params.H; }

  // gamma gamma_bar cn(alpha x) cn(alpha_bar y); throws DomainError if
  // |t| >= 1 - 1e-12.
  double tanh_quarter_F(double x, double y) const;
  double F(double x, double y) const;
  double V(double x, double y) const;

 private:
  Surface surface_;
  JacobiCnEvaluator cn_x_;
  JacobiCnEvaluator cn_y_;
  double gamma_product_;
};

double eval_F(double x, double y, const PotentialContext& ctx);
double eval_V(double x, double y, const PotentialContext& ctx);

// I_0(A, B) when j == 0, otherwise I_j (A, B unused and kept 0).
struct IntegralLabel {
  int j = 0;
  int A = 0;
  int B = 0;

  static IntegralLabel i0(int A, int B) { return {0, A, B}; }
  static IntegralLabel ij(int j) { return {j, 0, 0}; }
  std::string str() const;
  friend auto operator<=>(const IntegralLabel&, const IntegralLabel&) = default;
};

struct BasicIntegralTable {
  std::map<std::pair<int, int>, double> i0;
  std::array<std::optional<double>, 8> ij{};  // slots 1..7

  // Throws MissingIntegralError when the value was not computed.
  double get(const IntegralLabel& label) const;
  double I0(int A, int B) const { return get(IntegralLabel::i0(A, B)); }
  double I(int j) const { return get(IntegralLabel::ij(j)); }
};

// I_0 over [0, x/4] x [0, y/4] with prefactor 1 / (n x y); I_1..I_7 over
// [0, n x / 4] x [0, y / 4] with prefactor 8 / (n x y), the x range split at
// multiples of x / 4. I_3 uses the weight cos(16 pi x / (n x)).
BasicIntegralTable basic_integrals(const PotentialContext& ctx,
                                   const std::vector<IntegralLabel>& needed,
                                   const QuadratureConfig& cfg = {},
                                   Execution exec = Execution::parallel);

double basic_integral(const PotentialContext& ctx, const IntegralLabel& label,
                      const QuadratureConfig& cfg = {});

// Basis indices of the nine eigenfunctions spanning the negative subspace
// for each of the eight surfaces. Throws UnknownSurfaceError otherwise.
std::array<int, 9> table3_selection(const Fraction& frac);

// Basic integrals referenced by the closed-form matrix for this surface.
std::vector<IntegralLabel> table4_integrals(const Fraction& frac);

struct IndexMatrix {
  Fraction frac;
  std::array<int, 9> selection;    // basis indices, in row order
  Eigen::Matrix<double, 9, 9> entries = Eigen::Matrix<double, 9, 9>::Zero();

  // Row/column of a basis index within the selection.
  int position(int table1_index) const;
  double at_label(int i, int j) const { return entries(position(i), position(j)); }
  // Stores M_ij and M_ji together.
  void set_label(int i, int j, double value);
};

// Closed-form assembly from the basic integrals. Entries not listed by the
// formulas are exact zeros.
IndexMatrix assemble_matrix_table4(const Fraction& frac, const BasicIntegralTable& integrals,
                                   const Table1Basis& basis);

// M_ij = alpha_j delta_ij - int_{C/Gamma} V u_i u_j by direct quadrature over
// [0, n x] x [0, y] (odd l) or [0, n x / 2] x [0, y] (even l). The 45
// upper-triangle integrals are independent and run under `exec`.
IndexMatrix assemble_matrix_direct(const PotentialContext& ctx, const Table1Basis& basis,
                                   const QuadratureConfig& cfg = {},
                                   Execution exec = Execution::parallel);

// The fundamental rectangle used by assemble_matrix_direct and the oracle.
Rect fundamental_rect(const Surface& surface);

// max_eigenvalue < -max(relative * max|M_ij|, min_margin) certifies negative
// definiteness.
struct DefinitenessThreshold {
  double relative = 1e-6;
  double min_margin = 0.0;
};

struct DefinitenessReport {
  std::vector<double> eigenvalues;  // ascending
  double max_eigenvalue = 0.0;
  bool negative_definite = false;
  double margin = 0.0;  // -max_eigenvalue
};

DefinitenessReport definiteness(const Eigen::MatrixXd& M, const DefinitenessThreshold& threshold = {});
DefinitenessReport definiteness(const IndexMatrix& M, const DefinitenessThreshold& threshold = {});

// N - 1 for an N x N negative definite matrix, nothing otherwise.
std::optional<int> theorem1_bound(const DefinitenessReport& report);

}  // namespace wente
