#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wente/errors.hpp"
#include "wente/jacobi_operator.hpp"
#include "wente/reference_values.hpp"

using namespace wente;

namespace {

const std::vector<Fraction> kEight{Fraction(3, 2), Fraction(4, 3), Fraction(5, 3), Fraction(7, 4),
                                   Fraction(8, 5), Fraction(12, 7), Fraction(14, 9), Fraction(16, 9)};

struct Fixture {
  Surface s;
  PotentialContext ctx;
  Table1Basis basis;
  explicit Fixture(Fraction f, double H = 0.5)
      : s(make_surface(f, H)), ctx(s), basis(f, s.period.x_len, s.period.y_len) {}
};

}  // namespace

TEST_CASE("F at special points") {
  const Fixture w(Fraction(3, 2));
  const double x = w.ctx.x_len(), y = w.ctx.y_len();
  for (double yy : {0.0, 0.3, 1.7, -2.0}) {
    CHECK(std::abs(eval_F(x / 4, yy, w.ctx)) < 1e-14);
    CHECK(std::abs(eval_V(x / 4, yy, w.ctx) - 2.0) < 1e-13);
  }
  const auto& p = w.s.params;
  CHECK(std::abs(eval_F(0, 0, w.ctx) - 4 * std::atanh(p.gamma * p.gamma_bar)) < 1e-13);
  CHECK(eval_F(0, 0, w.ctx) > 0.0);
  CHECK(eval_F(0.4, 0.9, w.ctx) == eval_F(-0.4, 0.9, w.ctx));
  CHECK(eval_F(0.4, 0.9, w.ctx) == eval_F(0.4, -0.9, w.ctx));
  CHECK(std::abs(eval_V(0.4, 0.9, w.ctx) - 4 * 0.5 * std::cosh(eval_F(0.4, 0.9, w.ctx))) < 1e-12);
  CHECK(std::abs(eval_V(0.4 + x, 0.9, w.ctx) - eval_V(0.4, 0.9, w.ctx)) < 1e-12);
  CHECK(std::abs(eval_V(0.4, 0.9 + y, w.ctx) - eval_V(0.4, 0.9, w.ctx)) < 1e-12);
}

TEST_CASE("V symmetries, lower bound and lattice periodicity") {
  auto gen = oracle::rng();
  for (const Fraction f : kEight) {
    const Fixture w(f);
    const double x = w.ctx.x_len(), y = w.ctx.y_len();
    const Lattice& lat = w.s.lat;
    std::uniform_real_distribution<double> ux(-x, x), uy(-y, y);
    double worst = 0.0;
    bool above = true;
    for (int i = 0; i < 1000; ++i) {
      const double a = ux(gen), b = uy(gen);
      const double v = w.ctx.V(a, b);
      for (double other : {w.ctx.V(-a, b), w.ctx.V(a, -b), w.ctx.V(x / 2 - a, b), w.ctx.V(a, y / 2 - b),
                           w.ctx.V(a + lat.v1.x, b + lat.v1.y), w.ctx.V(a + lat.v2.x, b + lat.v2.y)})
        worst = std::max(worst, std::abs(other - v));
      above = above && v >= 2.0 - 1e-13;
    }
    CAPTURE(f.str());
    CHECK(worst < 1e-10);
    CHECK(above);
  }
}

TEST_CASE("sinh-Gordon identity holds for F") {
  auto gen = oracle::rng(7);
  for (const Fraction f : kEight) {
    const Fixture w(f);
    const double H = w.ctx.H();
    std::uniform_real_distribution<double> ux(0.0, w.ctx.x_len()), uy(0.0, w.ctx.y_len());
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double a = ux(gen), b = uy(gen);
      const double lap = oracle::laplacian([&](double p, double q) { return w.ctx.F(p, q); }, a, b, 1e-4);
      worst = std::max(worst, std::abs(lap + 4 * H * std::sinh(w.ctx.F(a, b))));
    }
    CAPTURE(f.str());
    CHECK(worst < 1e-4);
  }
}

TEST_CASE("basic integral examples") {
  const Fixture w32(Fraction(3, 2));
  CHECK(std::abs(basic_integral(w32.ctx, IntegralLabel::i0(0, 0)) - 0.2968) < 0.001);
  const Fixture w43(Fraction(4, 3));
  CHECK(std::abs(basic_integral(w43.ctx, IntegralLabel::i0(0, 4)) - 0.0667) < 0.001);
  CHECK(std::abs(basic_integral(w43.ctx, IntegralLabel::ij(1))) < 0.01);
  CHECK_THROWS_AS(basic_integral(w43.ctx, IntegralLabel::i0(1, 0)), DomainError);
  CHECK_THROWS_AS(basic_integral(w43.ctx, IntegralLabel::ij(8)), DomainError);

  const auto t = basic_integrals(w32.ctx, table4_integrals(Fraction(3, 2)));
  CHECK_THROWS_AS(t.I(5), MissingIntegralError);
  const double i00 = t.I0(0, 0);
  for (const auto& [ab, v] : t.i0) {
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
    CHECK(v <= i00);
  }
}

TEST_CASE("all reference I0 values") {
  for (const auto& ref : reference::i0_values()) {
    const Fixture w(ref.frac);
    CAPTURE(ref.frac.str());
    CHECK(std::abs(basic_integral(w.ctx, IntegralLabel::i0(ref.A, ref.B)) - ref.value) < reference::kI0Tol);
  }
}

TEST_CASE("selections") {
  CHECK(table3_selection(Fraction(3, 2)) == std::array<int, 9>{1, 2, 3, 4, 5, 7, 8, 9, 17});
  CHECK(table3_selection(Fraction(4, 3)) == std::array<int, 9>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(table3_selection(Fraction(8, 5)) == std::array<int, 9>{1, 2, 3, 4, 5, 10, 11, 12, 13});
  CHECK_THROWS_AS(table3_selection(Fraction(5, 4)), UnknownSurfaceError);
}

TEST_CASE("closed-form matrix examples") {
  const Fixture w32(Fraction(3, 2));
  const auto t32 = basic_integrals(w32.ctx, table4_integrals(Fraction(3, 2)));
  const IndexMatrix m32 = assemble_matrix_table4(Fraction(3, 2), t32, w32.basis);
  CHECK(std::abs(m32.at_label(1, 1) - (-9.50)) < 0.05);
  CHECK(m32.at_label(1, 1) == -32 * t32.I0(0, 0));
  CHECK(std::abs(m32.at_label(4, 4) - (w32.basis[4].alpha - 64 * (t32.I0(0, 0) - t32.I0(0, 2)))) < 1e-12);
  CHECK(std::abs(m32.at_label(4, 4) - (-1.36)) < 0.05);
  CHECK(m32.entries == m32.entries.transpose());

  const Fixture w43(Fraction(4, 3));
  const auto t43 = basic_integrals(w43.ctx, table4_integrals(Fraction(4, 3)));
  const IndexMatrix m43 = assemble_matrix_table4(Fraction(4, 3), t43, w43.basis);
  CHECK(std::abs(m43.at_label(1, 9) - (-3.23)) < 0.05);
  CHECK(m43.at_label(3, 9) == -4 * t43.I(4));
  CHECK_THROWS_AS(m43.position(10), DomainError);
}

TEST_CASE("closed form and direct quadrature agree") {
  for (const Fraction f : {Fraction(3, 2), Fraction(4, 3), Fraction(7, 4)}) {
    const Fixture w(f);
    const auto t = basic_integrals(w.ctx, table4_integrals(f));
    const IndexMatrix a = assemble_matrix_table4(f, t, w.basis);
    const IndexMatrix b = assemble_matrix_direct(w.ctx, w.basis);
    CAPTURE(f.str());
    CHECK(a.selection == b.selection);
    CHECK(b.entries == b.entries.transpose());
    CHECK((a.entries - b.entries).cwiseAbs().maxCoeff() < reference::kDualPathTol);
    if (f == Fraction(3, 2)) CHECK(std::abs(b.at_label(1, 1) + 32 * t.I0(0, 0)) < 1e-6);
  }
}

TEST_CASE("serial and parallel assembly are bit identical") {
  const Fixture w(Fraction(3, 2));
  const auto labels = table4_integrals(Fraction(3, 2));
  const auto ts = basic_integrals(w.ctx, labels, {}, Execution::serial);
  const auto tp = basic_integrals(w.ctx, labels, {}, Execution::parallel);
  for (const auto& l : labels) CHECK(ts.get(l) == tp.get(l));
  const IndexMatrix ds = assemble_matrix_direct(w.ctx, w.basis, {}, Execution::serial);
  const IndexMatrix dp = assemble_matrix_direct(w.ctx, w.basis, {}, Execution::parallel);
  CHECK(ds.entries == dp.entries);
}

TEST_CASE("definiteness") {
  const auto neg = definiteness(Eigen::MatrixXd(-Eigen::MatrixXd::Identity(9, 9)));
  CHECK(neg.negative_definite);
  CHECK(std::abs(neg.margin - 1.0) < 1e-15);
  CHECK(theorem1_bound(neg) == 8);
  const auto zero = definiteness(Eigen::MatrixXd(Eigen::MatrixXd::Zero(9, 9)));
  CHECK_FALSE(zero.negative_definite);
  CHECK_FALSE(theorem1_bound(zero).has_value());
  CHECK_FALSE(definiteness(Eigen::MatrixXd(-Eigen::MatrixXd::Identity(9, 9)), {1e-6, 2.0}).negative_definite);
  CHECK_THROWS_AS(definiteness(Eigen::MatrixXd(2, 3)), DomainError);

  const Eigen::VectorXd diag = (Eigen::VectorXd(9) << -9.50, -7.99, -7.99, -1.36, -13.2, -8.70, -5.76, -5.76, -5.50).finished();
  const auto shown = definiteness(Eigen::MatrixXd(diag.asDiagonal()));
  CHECK(shown.negative_definite);
  CHECK(std::abs(shown.max_eigenvalue + 1.36) < 1e-12);

  const Fixture w(Fraction(3, 2));
  const IndexMatrix m = assemble_matrix_table4(Fraction(3, 2), basic_integrals(w.ctx, table4_integrals(Fraction(3, 2))), w.basis);
  const auto rep = definiteness(m);
  CHECK(rep.negative_definite);
  std::vector<double> want(diag.data(), diag.data() + 9);
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(rep.eigenvalues[i] - want[i]) < 0.05);

  auto gen = oracle::rng(3);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::Matrix<double, 9, 1> a;
    for (int i = 0; i < 9; ++i) a(i) = nd(gen);
    CHECK(a.dot(m.entries * a) < 0.0);
  }
}
