#include "wente/spectral_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "wente/errors.hpp"

namespace wente {

using std::numbers::pi;

PeriodicPotential wente_potential(const PotentialContext& ctx) {
  return {[&ctx](double x, double y) { return ctx.V(x, y); }, ctx.x_len() / 2,
          ctx.y_len() / 2};
}

namespace {

bool near_integer(double v) { return std::abs(v - std::round(v)) < 1e-9; }

// Cosine moments int_{C/Gamma} V cos(c(P) . r) for P in [-span, span]^2,
// stored densely; M(P) = M(-P).
class MomentTable {
 public:
  MomentTable(const Lattice& lat, const PeriodicPotential& pot, int span,
              const QuadratureConfig& cfg, Execution exec)
      : span_(span), side_(2 * span + 1), values_(static_cast<std::size_t>(side_ * side_), 0.0) {
    const double xp = pot.x_period, yp = pot.y_period;
    const double scale = lat.area / (xp * yp);
    const double xb[] = {xp / 2};
    const double yb[] = {yp / 2};

    std::vector<std::pair<int, int>> todo;
    for (int p1 = -span; p1 <= span; ++p1) {
      for (int p2 = -span; p2 <= span; ++p2) {
        if (std::make_pair(p1, p2) < std::make_pair(-p1, -p2)) continue;  // use M(P) = M(-P)
        const FlatEigenpair e = make_eigenpair(lat, p1, p2, Parity::cos);
        if (near_integer(e.cx * xp / (2 * pi)) && near_integer(e.cy * yp / (2 * pi)))
          todo.emplace_back(p1, p2);
      }
    }
    integrated_ = todo.size();

    std::vector<double> moment(todo.size());
    for_each_index(exec, todo.size(), [&](std::size_t i) {
      const FlatEigenpair e = make_eigenpair(lat, todo[i].first, todo[i].second, Parity::cos);
      const double cx = e.cx, cy = e.cy;
      moment[i] = scale * integrate_2d(
                              [&](double x, double y) {
                                return pot.value(x, y) * std::cos(cx * x) * std::cos(cy * y);
                              },
                              Rect{0.0, xp, 0.0, yp}, xb, yb, cfg);
    });
    for (std::size_t i = 0; i < todo.size(); ++i) {
      const auto [p1, p2] = todo[i];
      slot(p1, p2) = moment[i];
      slot(-p1, -p2) = moment[i];
    }
  }

  double operator()(int p1, int p2) const {
    return values_[static_cast<std::size_t>((p1 + span_) * side_ + (p2 + span_))];
  }
  std::size_t integrated() const { return integrated_; }

 private:
  double& slot(int p1, int p2) {
    return values_[static_cast<std::size_t>((p1 + span_) * side_ + (p2 + span_))];
  }

  int span_;
  int side_;
  std::vector<double> values_;
  std::size_t integrated_ = 0;
};

}  // namespace

GalerkinProblem build_galerkin(const Fraction& frac, const Lattice& lat,
                               const PeriodicPotential& potential, int cutoff,
                               const QuadratureConfig& cfg, Execution exec) {
  if (cutoff < 1) throw DomainError("build_galerkin: cutoff must be >= 1");
  GalerkinProblem prob{frac, cutoff, flat_eigenpairs(lat, cutoff), {}, 0};
  const MomentTable moments(lat, potential, 2 * cutoff, cfg, exec);
  prob.moments_integrated = moments.integrated();

  const auto& basis = prob.basis;
  const auto n = static_cast<Eigen::Index>(basis.size());
  prob.matrix = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const FlatEigenpair& a = basis[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i; j < n; ++j) {
      const FlatEigenpair& b = basis[static_cast<std::size_t>(j)];
      double overlap = 0.0;
      if (a.parity == b.parity) {
        // cos a cos b = (cos(a-b) + cos(a+b)) / 2, sin a sin b = (cos(a-b) - cos(a+b)) / 2
        const double sign = a.parity == Parity::cos ? 1.0 : -1.0;
        overlap = 0.5 * a.norm_const * b.norm_const *
                  (moments(a.m1 - b.m1, a.m2 - b.m2) + sign * moments(a.m1 + b.m1, a.m2 + b.m2));
      }
      const double value = (i == j ? a.alpha : 0.0) - overlap;
      prob.matrix(i, j) = value;
      prob.matrix(j, i) = value;
    }
  }
  return prob;
}

GalerkinProblem build_galerkin(const PotentialContext& ctx, int cutoff,
                               const QuadratureConfig& cfg, Execution exec) {
  return build_galerkin(ctx.surface().frac, ctx.surface().lat, wente_potential(ctx), cutoff,
                        cfg, exec);
}

std::vector<double> galerkin_eigenvalues(const GalerkinProblem& problem) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(problem.matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("Galerkin eigensolve failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

int negative_count(const GalerkinProblem& problem, double relative_threshold) {
  const double cut = relative_threshold * problem.matrix.cwiseAbs().maxCoeff();
  int count = 0;
  for (double e : galerkin_eigenvalues(problem))
    if (e < -cut) ++count;
  return count;
}

bool h_invariance_check(const Fraction& frac, int cutoff, double H_a, double H_b,
                        const QuadratureConfig& cfg, Execution exec) {
  auto count_at = [&](double H) {
    const PotentialContext ctx(make_surface(frac, H));
    return negative_count(build_galerkin(ctx, cutoff, cfg, exec));
  };
  return count_at(H_a) == count_at(H_b);
}

}  // namespace wente
