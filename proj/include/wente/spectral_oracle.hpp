#pragma once

// Fourier-Galerkin discretization of L = -Laplace - V on C/Gamma over the
// flat eigenbasis with |m1|, |m2| <= cutoff. The number of negative
// eigenvalues of the Galerkin matrix is a lower bound for the number of
// negative eigenvalues of L and is non-decreasing in the cutoff.

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "wente/jacobi_operator.hpp"
#include "wente/parallel.hpp"
#include "wente/quadrature.hpp"
#include "wente/torus_spectrum.hpp"

namespace wente {

// A potential that is even in x and in y and periodic with periods
// (x_period, y_period), sampled through `value`. The period lattice must
// contain the torus lattice.
struct PeriodicPotential {
  std::function<double(double, double)> value;
  double x_period;
  double y_period;
};

// V of a Wente torus: periods x_len / 2 and y_len / 2.
PeriodicPotential wente_potential(const PotentialContext& ctx);

struct GalerkinProblem {
  Fraction frac;
  int cutoff;
  std::vector<FlatEigenpair> basis;
  Eigen::MatrixXd matrix;
  std::size_t moments_integrated = 0;  // quadratures actually performed
};

// matrix(i, j) = alpha_i delta_ij - int V u_i u_j. Products of basis
// functions are reduced to cosine moments int V cos(c . r); moments whose
// wave vector is not a multiple of V's own periods vanish by symmetry and
// are set to zero without integrating, the rest are integrated once over a
// single period cell and cached.
GalerkinProblem build_galerkin(const Fraction& frac, const Lattice& lat,
                               const PeriodicPotential& potential, int cutoff,
                               const QuadratureConfig& cfg = {},
                               Execution exec = Execution::parallel);

GalerkinProblem build_galerkin(const PotentialContext& ctx, int cutoff,
                               const QuadratureConfig& cfg = {},
                               Execution exec = Execution::parallel);

// Ascending eigenvalues of the Galerkin matrix.
std::vector<double> galerkin_eigenvalues(const GalerkinProblem& problem);

// Eigenvalues below -relative_threshold * max|matrix_ij|.
int negative_count(const GalerkinProblem& problem, double relative_threshold = 1e-8);

// negative_count at H_a equals negative_count at H_b, with periods and V
// recomputed for each H.
bool h_invariance_check(const Fraction& frac, int cutoff, double H_a = 0.5, double H_b = 1.0,
                        const QuadratureConfig& cfg = {}, Execution exec = Execution::parallel);

}  // namespace wente
