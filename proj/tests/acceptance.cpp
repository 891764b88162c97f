// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <random>
#include <string>

#include "oracles.hpp"
#include "wente/reference_values.hpp"
#include "wente/reports.hpp"
#include "wente/spectral_oracle.hpp"
#include "wente/torus_spectrum.hpp"

using namespace wente;
namespace ref = wente::reference;

namespace {

constexpr double kTable2Seconds = 10.0;
constexpr double kIntegralSeconds = 120.0;
constexpr double kOracleSeconds = 600.0;
constexpr double kMinMargin = 0.1;
constexpr double kSinhGordonTol = 1e-4;
constexpr double kFdStep = 1e-4;
constexpr double kSymmetryTol = 1e-10;
constexpr double kIdentityTol = 1e-10;
constexpr double kOrthoTol = 1e-8;
constexpr int kOracleCutoff = 6;
constexpr int kHInvarianceCutoff = 4;

const std::vector<Fraction> kEight{Fraction(3, 2), Fraction(4, 3), Fraction(5, 3), Fraction(7, 4),
                                   Fraction(8, 5), Fraction(12, 7), Fraction(14, 9), Fraction(16, 9)};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;
void verdict(int id, bool ok, const std::string& what) {
  fmt::print("{} {}: {}\n", ok ? "PASS" : "FAIL", id, what);
  std::fflush(stdout);
  if (!ok) ++failures;
}

void criterion1() {
  const auto t0 = Clock::now();
  double worst_theta = 0.0, worst_period = 0.0;
  for (const auto& row : ref::table2()) {
    const Surface s = make_surface(row.frac, 0.5);
    worst_theta = std::max(worst_theta, std::abs(degrees(s.params.theta) - row.theta_deg));
    worst_period = std::max({worst_period, std::abs(s.period.x_len - row.x_len),
                             std::abs(s.period.y_len - row.y_len)});
  }
  const double t = seconds_since(t0);
  verdict(1,
          worst_theta <= ref::kThetaTolDeg && worst_period <= ref::kPeriodTol && t < kTable2Seconds,
          fmt::format("table 2 angles and periods: max |dtheta| = {:.2e} deg, max |dperiod| = {:.2e}, {:.2f} s",
                      worst_theta, worst_period, t));
}

void criterion2() {
  const auto t0 = Clock::now();
  double worst_i0 = 0.0, worst_ij = 0.0;
  int count = 0;
  for (const Fraction f : kEight) {
    const PotentialContext ctx(make_surface(f, 0.5));
    const auto labels = table4_integrals(f);
    const auto table = basic_integrals(ctx, labels);
    for (const auto& l : labels)
      if (l.j > 0) worst_ij = std::max(worst_ij, std::abs(table.get(l)));
    for (const auto& want : ref::i0_values())
      if (want.frac == f) {
        worst_i0 = std::max(worst_i0, std::abs(basic_integral(ctx, IntegralLabel::i0(want.A, want.B)) - want.value));
        ++count;
      }
  }
  const double t = seconds_since(t0);
  verdict(2, count == 15 && worst_i0 <= ref::kI0Tol && worst_ij < ref::kIjSmall && t < kIntegralSeconds,
          fmt::format("{} reference I0 values: max deviation {:.2e}; max |I_j| = {:.2e}; {:.1f} s", count,
                      worst_i0, worst_ij, t));
}

void criteria3to6(const VerifyAllResult& res) {
  double worst_num = 0.0, worst_zero = 0.0, worst_small = 0.0, worst_dual = 0.0, min_margin = 1e300;
  bool all_eight = true;
  int checked = 0;
  for (const auto& r : res.reports) {
    const auto& disp = ref::displayed_matrix(r.frac);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        const auto& c = disp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        switch (c.kind) {
          case ref::Cell::Kind::number:
            worst_num = std::max(worst_num, std::abs(r.matrix_table4(i, j) - c.value));
            ++checked;
            break;
          case ref::Cell::Kind::exact_zero:
            worst_zero = std::max(worst_zero, std::abs(r.matrix_table4(i, j)));
            break;
          case ref::Cell::Kind::small:
            worst_small = std::max(worst_small, std::abs(r.matrix_direct(i, j)));
            break;
        }
      }
    worst_dual = std::max(worst_dual, r.max_path_discrepancy);
    min_margin = std::min(min_margin, r.margin);
    all_eight = all_eight && r.negative_definite && r.theorem1_bound == 8;
  }
  const bool have_eight = res.surfaces == kEight && res.reports.size() == 8;
  verdict(3,
          have_eight && worst_num <= ref::kMatrixTol && worst_zero < ref::kExactZeroTol &&
              worst_small < ref::kSmallEntryTol,
          fmt::format("{} reference matrix entries: max deviation {:.3f}; exact zeros max {:.1e}; O entries max {:.1e}",
                      checked, worst_num, worst_zero, worst_small));
  verdict(4, have_eight && res.success && all_eight && min_margin > kMinMargin,
          fmt::format("verify-all success = {}; all eight negative definite with bound 8 = {}; smallest margin {:.4f}",
                      res.success, all_eight, min_margin));
  verdict(5, have_eight && worst_dual < ref::kDualPathTol,
          fmt::format("closed form vs direct quadrature: max entrywise difference {:.2e}", worst_dual));

  bool bounds_ok = true;
  for (const auto& row : ref::table2()) {
    bounds_ok = bounds_ok && lemma4_bound(row.frac, 0.5) == row.lemma4 && lemma5_bound(row.frac) == row.lemma5;
  }
  const std::vector<Fraction> pre{Fraction(3, 2),  Fraction(4, 3),  Fraction(5, 3),  Fraction(5, 4),
                                  Fraction(7, 4),  Fraction(6, 5),  Fraction(8, 5),  Fraction(8, 7),
                                  Fraction(10, 7), Fraction(12, 7), Fraction(10, 9), Fraction(14, 9),
                                  Fraction(16, 9)};
  const bool lists_ok = lemma5_candidates() == pre && candidate_surfaces() == kEight;
  verdict(6, bounds_ok && lists_ok,
          fmt::format("lemma bound columns match = {}; 13-fraction and 8-surface lists match = {}", bounds_ok,
                      lists_ok));
}

void criterion7() {
  auto gen = oracle::rng(11);
  double sg = 0.0, sym = 0.0, ident = 0.0, ortho = 0.0;
  for (const Fraction f : kEight) {
    const Surface s = make_surface(f, 0.5);
    const PotentialContext ctx(s);
    const double x = ctx.x_len(), y = ctx.y_len(), H = ctx.H();
    std::uniform_real_distribution<double> ux(0.0, x), uy(0.0, y), sx(-x, x), sy(-y, y);
    for (int i = 0; i < 100; ++i) {
      const double a = ux(gen), b = uy(gen);
      const double lap = oracle::laplacian([&](double p, double q) { return ctx.F(p, q); }, a, b, kFdStep);
      sg = std::max(sg, std::abs(lap + 4 * H * std::sinh(ctx.F(a, b))));
    }
    for (int i = 0; i < 1000; ++i) {
      const double a = sx(gen), b = sy(gen), v = ctx.V(a, b);
      for (double w : {ctx.V(-a, b), ctx.V(a, -b), ctx.V(x / 2 - a, b), ctx.V(a, y / 2 - b)})
        sym = std::max(sym, std::abs(w - v));
    }
    for (const Modulus k : {Modulus(s.params.k), Modulus(s.params.k_bar)}) {
      const JacobiCnEvaluator ev(k);
      const double K = ev.quarter_period();
      ident = std::max(ident, std::abs(ev.cn(K)));
      for (int i = 0; i < 200; ++i) {
        const double u = sx(gen);
        const auto v = ev.sncndn(u);
        ident = std::max({ident, std::abs(v.sn * v.sn + v.cn * v.cn - 1.0), std::abs(ev.cn(u + 2 * K) + v.cn),
                          std::abs(elliptic_K(k) - oracle::elliptic_K_series(k.value(), 400))});
      }
    }
    const Table1Basis t(f, x, y);
    const Rect r = fundamental_rect(s);
    for (int i = 1; i <= 17; ++i)
      for (int j = i; j <= 17; ++j) {
        const double ip = integrate_2d([&](double p, double q) { return t[i](p, q) * t[j](p, q); }, r,
                                       QuadratureConfig{1e-11, 1e-11, 100000});
        ortho = std::max(ortho, std::abs(ip - (i == j ? 1.0 : 0.0)));
      }
  }
  verdict(7, sg < kSinhGordonTol && sym < kSymmetryTol && ident < kIdentityTol && ortho < kOrthoTol,
          fmt::format("sinh-Gordon residual {:.1e}; V symmetry {:.1e}; cn/K identities {:.1e}; orthogonality {:.1e}",
                      sg, sym, ident, ortho));
}

void criterion8() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string counts;
  for (const Fraction f : kEight) {
    const PotentialContext ctx(make_surface(f, 0.5));
    int prev = -1;
    for (int c = 2; c <= kOracleCutoff; ++c) {
      const int n = negative_count(build_galerkin(ctx, c));
      ok = ok && n >= prev;
      prev = n;
    }
    ok = ok && prev >= 9 && h_invariance_check(f, kHInvarianceCutoff);
    counts += fmt::format(" {}:{}", f.str(), prev);
  }
  const double t = seconds_since(t0);
  verdict(8, ok && t < kOracleSeconds,
          fmt::format("negative counts at cutoff {}:{}; monotone and H invariant = {}; {:.1f} s", kOracleCutoff,
                      counts, ok, t));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  const VerifyAllResult res = verify_all(RunConfig{});
  criteria3to6(res);
  criterion7();
  criterion8();
  fmt::print("{} of 8 criteria passed\n", 8 - failures);
  return failures;
}
