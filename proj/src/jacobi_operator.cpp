#include "wente/jacobi_operator.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "wente/errors.hpp"

namespace wente {

using std::numbers::pi;
using std::numbers::sqrt2;

PotentialContext::PotentialContext(const Surface& surface)
    : surface_(surface),
      cn_x_(Modulus(surface.params.k)),
      cn_y_(Modulus(surface.params.k_bar)),
      gamma_product_(surface.params.gamma * surface.params.gamma_bar) {}

double PotentialContext::tanh_quarter_F(double x, double y) const {
  const double t = gamma_product_ * cn_x_.cn(surface_.params.alpha * x) *
                   cn_y_.cn(surface_.params.alpha_bar * y);
  if (!(std::abs(t) < 1.0 - 1e-12))
    throw DomainError("tanh(F/4) left (-1, 1); parameters are not a valid Wente torus");
  return t;
}

double PotentialContext::F(double x, double y) const {
  return 4.0 * std::atanh(tanh_quarter_F(x, y));
}

double PotentialContext::V(double x, double y) const {
  // cosh(4a) = 2 cosh(2a)^2 - 1 with cosh(2a) = (1 + t^2) / (1 - t^2), t = tanh a.
  const double t2 = [&] {
    const double t = tanh_quarter_F(x, y);
    return t * t;
  }();
  const double c2 = (1.0 + t2) / (1.0 - t2);
  return 4.0 * H() * (2.0 * c2 * c2 - 1.0);
}

double eval_F(double x, double y, const PotentialContext& ctx) { return ctx.F(x, y); }
double eval_V(double x, double y, const PotentialContext& ctx) { return ctx.V(x, y); }

std::string IntegralLabel::str() const {
  if (j == 0) return "I0(" + std::to_string(A) + "," + std::to_string(B) + ")";
  return "I" + std::to_string(j);
}

double BasicIntegralTable::get(const IntegralLabel& label) const {
  if (label.j == 0) {
    const auto it = i0.find({label.A, label.B});
    if (it != i0.end()) return it->second;
  } else if (label.j >= 1 && label.j <= 7 && ij[static_cast<std::size_t>(label.j)]) {
    return *ij[static_cast<std::size_t>(label.j)];
  }
  throw MissingIntegralError("basic integral " + label.str() + " was not computed");
}

namespace {

std::vector<double> multiples(double step, double upto) {
  std::vector<double> out;
  for (int i = 1; i * step < upto * (1.0 - 1e-14); ++i) out.push_back(i * step);
  return out;
}

// Weight of I_j as a function of (x, y); nx = n * x_len.
double ij_weight(int j, double x, double y, double nx, double y_len) {
  const double w = 2.0 * pi / nx;
  switch (j) {
    case 1: return std::cos(2 * w * x);
    case 2: return std::cos(4 * w * x);
    case 3: return std::cos(8 * w * x);
    case 4: return std::cos(2 * w * x) * std::cos(4 * pi * y / y_len);
    case 5: return std::cos(2 * w * x) * std::cos(4 * w * x);
    case 6: return std::cos(4 * w * x) * std::cos(4 * pi * y / y_len);
    case 7: return std::cos(6 * w * x) * std::cos(4 * pi * y / y_len);
    default: throw DomainError("basic integral index must be 0..7");
  }
}

}  // namespace

double basic_integral(const PotentialContext& ctx, const IntegralLabel& label,
                      const QuadratureConfig& cfg) {
  const double x = ctx.x_len(), y = ctx.y_len();
  const double n = ctx.surface().frac.n();
  const double nxy = n * x * y;
  if (label.j == 0) {
    if (label.A < 0 || label.B < 0 || label.A % 2 || label.B % 2)
      throw DomainError("I0 exponents must be even and non-negative");
    const int A = label.A, B = label.B;
    const double v = integrate_2d(
        [&](double px, double py) {
          return ctx.V(px, py) * std::pow(std::cos(2 * pi * px / x), A) *
                 std::pow(std::cos(2 * pi * py / y), B);
        },
        Rect{0.0, x / 4, 0.0, y / 4}, cfg);
    return v / nxy;
  }
  const int j = label.j;
  if (j < 1 || j > 7) throw DomainError("basic integral index must be 0..7");
  const auto xb = multiples(x / 4, n * x / 4);
  const double v = integrate_2d(
      [&](double px, double py) { return ctx.V(px, py) * ij_weight(j, px, py, n * x, y); },
      Rect{0.0, n * x / 4, 0.0, y / 4}, xb, {}, cfg);
  return 8.0 * v / nxy;
}

BasicIntegralTable basic_integrals(const PotentialContext& ctx,
                                   const std::vector<IntegralLabel>& needed,
                                   const QuadratureConfig& cfg, Execution exec) {
  std::vector<double> values(needed.size());
  for_each_index(exec, needed.size(),
                 [&](std::size_t i) { values[i] = basic_integral(ctx, needed[i], cfg); });
  BasicIntegralTable table;
  for (std::size_t i = 0; i < needed.size(); ++i) {
    const IntegralLabel& l = needed[i];
    if (l.j == 0)
      table.i0[{l.A, l.B}] = values[i];
    else
      table.ij[static_cast<std::size_t>(l.j)] = values[i];
  }
  return table;
}

std::array<int, 9> table3_selection(const Fraction& frac) {
  const int l = frac.ell(), n = frac.n();
  if (l == 3 && n == 2) return {1, 2, 3, 4, 5, 7, 8, 9, 17};
  if (l == 4 && n == 3) return {1, 2, 3, 4, 5, 6, 7, 8, 9};
  if (l == 5 && n == 3) return {1, 2, 3, 5, 6, 7, 8, 9, 15};
  if (l == 7 && n == 4) return {1, 2, 3, 6, 7, 8, 9, 14, 15};
  if ((l == 8 && n == 5) || (l == 12 && n == 7) || (l == 14 && n == 9) || (l == 16 && n == 9))
    return {1, 2, 3, 4, 5, 10, 11, 12, 13};
  throw UnknownSurfaceError("no tabulated eigenfunction selection for W_" + frac.str());
}

std::vector<IntegralLabel> table4_integrals(const Fraction& frac) {
  using L = IntegralLabel;
  (void)table3_selection(frac);
  const int l = frac.ell(), n = frac.n();
  if (l == 3 && n == 2) return {L::i0(0, 0), L::i0(0, 2), L::i0(2, 0), L::i0(2, 2)};
  if (l == 4 && n == 3)
    return {L::i0(0, 0), L::i0(0, 2), L::i0(0, 4), L::ij(1), L::ij(2), L::ij(4)};
  if (l == 5 && n == 3)
    return {L::i0(0, 0), L::i0(0, 2), L::i0(2, 0), L::ij(1), L::ij(2), L::ij(4)};
  if (l == 7 && n == 4) return {L::i0(0, 0)};
  std::vector<L> out{L::i0(0, 0)};
  for (int j = 1; j <= 7; ++j) out.push_back(L::ij(j));
  return out;
}

int IndexMatrix::position(int table1_index) const {
  const auto it = std::find(selection.begin(), selection.end(), table1_index);
  if (it == selection.end())
    throw DomainError("u_" + std::to_string(table1_index) + " is not selected for W_" +
                      frac.str());
  return static_cast<int>(it - selection.begin());
}

void IndexMatrix::set_label(int i, int j, double value) {
  const int a = position(i), b = position(j);
  entries(a, b) = value;
  entries(b, a) = value;
}

IndexMatrix assemble_matrix_table4(const Fraction& frac, const BasicIntegralTable& I,
                                   const Table1Basis& basis) {
  IndexMatrix M{frac, table3_selection(frac)};
  auto alpha = [&](int i) { return basis[i].alpha; };
  auto diag = [&](int i, double v) { M.set_label(i, i, v); };
  const int l = frac.ell(), n = frac.n();

  if (l == 3 && n == 2) {
    const double a = I.I0(0, 0), b = I.I0(0, 2), c = I.I0(2, 0), d = I.I0(2, 2);
    diag(1, -32 * a);
    diag(4, alpha(4) - 64 * (a - b));
    diag(5, alpha(5) - 64 * b);
    diag(7, alpha(7) - 64 * c);
    diag(17, alpha(17) - 64 * (a - b - c + 2 * d));
    for (int i : {2, 3, 8, 9}) diag(i, alpha(i) - 32 * a);
  } else if (l == 4 && n == 3) {
    const double a = I.I0(0, 0), b = I.I0(0, 2), c = I.I0(0, 4);
    const double i1 = I.I(1), i2 = I.I(2), i4 = I.I(4);
    diag(1, -48 * a);
    diag(2, alpha(2) - 48 * a + 2 * i2);
    diag(3, alpha(3) - 48 * a - 2 * i2);
    diag(4, alpha(4) - 48 * a + 2 * i4);
    diag(5, alpha(5) - 48 * a - 2 * i4);
    diag(6, alpha(6) - 48 * a + 2 * i4);
    diag(7, alpha(7) - 48 * a - 2 * i4);
    diag(8, alpha(8) - 384 * (b - c));
    diag(9, alpha(9) - 96 * (4 * c - 4 * b + a));
    M.set_label(1, 3, -2 * sqrt2 * i1);
    M.set_label(1, 9, -48 * sqrt2 * (-a + 2 * b));
    M.set_label(4, 6, -48 * (-a + 2 * b) + 2 * i1);
    M.set_label(5, 7, -48 * (-a + 2 * b) - 2 * i1);
    M.set_label(3, 9, -4 * i4);
  } else if (l == 5 && n == 3) {
    const double a = I.I0(0, 0), b = I.I0(0, 2), c = I.I0(2, 0);
    const double i1 = I.I(1), i2 = I.I(2), i4 = I.I(4);
    diag(1, -48 * a);
    diag(2, alpha(2) - 48 * a + 2 * i1);
    diag(3, alpha(3) - 48 * a - 2 * i1);
    diag(5, alpha(5) - 96 * b);
    diag(6, alpha(6) - 48 * a + 2 * i2);
    diag(7, alpha(7) - 48 * a - 2 * i2);
    diag(8, alpha(8) - 48 * a + 2 * i4);
    diag(9, alpha(9) - 48 * a - 2 * i4);
    diag(15, alpha(15) - 96 * c);
    M.set_label(1, 7, -2 * sqrt2 * i1);
    M.set_label(3, 15, -2 * (i1 + i2));
  } else if (l == 7 && n == 4) {
    const double a = I.I0(0, 0);
    for (int i : M.selection) diag(i, alpha(i) - 64 * a);
  } else {
    // W_{8/5}, W_{12/7}, W_{14/9}, W_{16/9}
    const double a16 = 16.0 * n * I.I0(0, 0);
    const double i1 = I.I(1), i2 = I.I(2), i3 = I.I(3), i4 = I.I(4);
    const double i5 = I.I(5), i6 = I.I(6), i7 = I.I(7);
    diag(1, -a16);
    diag(2, alpha(2) - a16 + 2 * i1);
    diag(3, alpha(3) - a16 - 2 * i1);
    diag(4, alpha(4) - a16 + 2 * i4);
    diag(5, alpha(5) - a16 - 2 * i4);
    diag(10, alpha(10) - a16 + 2 * i3);
    diag(11, alpha(11) - a16 - 2 * i3);
    diag(12, alpha(12) - a16 + 2 * i7);
    diag(13, alpha(13) - a16 - 2 * i7);
    M.set_label(1, 3, -2 * sqrt2 * i1);
    M.set_label(1, 11, -2 * sqrt2 * i2);
    M.set_label(2, 10, -4 * i1 + 4 * i5);
    M.set_label(3, 11, -4 * i5);
    M.set_label(4, 12, -2 * i1 + 2 * i6);
    M.set_label(5, 13, -2 * i1 - 2 * i6);
  }
  return M;
}

Rect fundamental_rect(const Surface& s) {
  const double nx = s.frac.n() * s.period.x_len;
  return {0.0, s.frac.ell_odd() ? nx : nx / 2, 0.0, s.period.y_len};
}

namespace {

// For even l the rectangle is a fundamental domain only if V is invariant
// under the half-period shift v1 = (n x / 2, y / 2).
void check_shift_invariance(const PotentialContext& ctx) {
  const Lattice& lat = ctx.surface().lat;
  for (int i = 0; i < 7; ++i) {
    const double x = 0.37 * ctx.x_len() * (i + 1) / 7.0;
    const double y = 0.21 * ctx.y_len() * (7 - i) / 7.0;
    const double v = ctx.V(x, y);
    const double w = ctx.V(x + lat.v1.x, y + lat.v1.y);
    if (std::abs(v - w) > 1e-10 * std::abs(v))
      throw NumericalError("V is not invariant under the lattice vector v1");
  }
}

}  // namespace

IndexMatrix assemble_matrix_direct(const PotentialContext& ctx, const Table1Basis& basis,
                                   const QuadratureConfig& cfg, Execution exec) {
  const Surface& s = ctx.surface();
  IndexMatrix M{s.frac, table3_selection(s.frac)};
  check_shift_invariance(ctx);

  const Rect dom = fundamental_rect(s);
  const auto xb = multiples(ctx.x_len() / 4, dom.bx);
  const auto yb = multiples(ctx.y_len() / 4, dom.by);

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 9; ++a)
    for (int b = a; b < 9; ++b) pairs.emplace_back(a, b);

  std::vector<double> overlap(pairs.size());
  for_each_index(exec, pairs.size(), [&](std::size_t p) {
    const FlatEigenpair& ui = basis[M.selection[static_cast<std::size_t>(pairs[p].first)]];
    const FlatEigenpair& uj = basis[M.selection[static_cast<std::size_t>(pairs[p].second)]];
    overlap[p] = integrate_2d(
        [&](double x, double y) { return ctx.V(x, y) * ui(x, y) * uj(x, y); }, dom, xb, yb,
        cfg);
  });

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [a, b] = pairs[p];
    const double alpha = a == b ? basis[M.selection[static_cast<std::size_t>(a)]].alpha : 0.0;
    M.entries(a, b) = M.entries(b, a) = alpha - overlap[p];
  }
  return M;
}

DefinitenessReport definiteness(const Eigen::MatrixXd& M, const DefinitenessThreshold& threshold) {
  if (M.rows() != M.cols() || M.rows() == 0)
    throw DomainError("definiteness: matrix must be square and non-empty");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolve failed");

  DefinitenessReport r;
  const auto& ev = solver.eigenvalues();
  r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  r.max_eigenvalue = r.eigenvalues.back();
  r.margin = -r.max_eigenvalue;
  const double cut = std::max(threshold.relative * M.cwiseAbs().maxCoeff(), threshold.min_margin);
  r.negative_definite = r.max_eigenvalue < -cut;
  return r;
}

DefinitenessReport definiteness(const IndexMatrix& M, const DefinitenessThreshold& threshold) {
  return definiteness(Eigen::MatrixXd(M.entries), threshold);
}

std::optional<int> theorem1_bound(const DefinitenessReport& report) {
  if (!report.negative_definite) return std::nullopt;
  return static_cast<int>(report.eigenvalues.size()) - 1;
}

}  // namespace wente
