#include "wente/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "wente/errors.hpp"

namespace wente {
namespace {

// Kronrod 15-point abscissae on [-1, 1] (non-negative half, descending);
// odd indices 1, 3, 5 and the centre 7 are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Full 15-point rule laid out left to right: node offsets and weights, and
// the Gauss weight for each node (zero where the node is Kronrod-only).
struct Rule15 {
  std::array<double, 15> x{};
  std::array<double, 15> wk{};
  std::array<double, 15> wg{};
};

constexpr Rule15 make_rule() {
  Rule15 r;
  for (int i = 0; i < 7; ++i) {
    r.x[i] = -kXk[i];
    r.x[14 - i] = kXk[i];
    r.wk[i] = r.wk[14 - i] = kWk[i];
    const double g = (i % 2 == 1) ? kWg[i / 2] : 0.0;
    r.wg[i] = r.wg[14 - i] = g;
  }
  r.x[7] = 0.0;
  r.wk[7] = kWk[7];
  r.wg[7] = kWg[3];
  return r;
}

constexpr Rule15 kRule = make_rule();

struct Segment {
  double a, b;
  double value, error;
};

Segment gk15(const Integrand1D& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double k = 0.0;
  double g = 0.0;
  for (std::size_t i = 0; i < 15; ++i) {
    const double fx = f(c + h * kRule.x[i]);
    k += kRule.wk[i] * fx;
    g += kRule.wg[i] * fx;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

struct Region {
  Rect r;
  double value, error;
  bool split_x;  // dominant error direction
};

Region gk15x15(const Integrand2D& f, const Rect& r) {
  const double cx = 0.5 * (r.ax + r.bx), hx = 0.5 * (r.bx - r.ax);
  const double cy = 0.5 * (r.ay + r.by), hy = 0.5 * (r.by - r.ay);
  std::array<double, 15> ys{};
  for (std::size_t j = 0; j < 15; ++j) ys[j] = cy + hy * kRule.x[j];

  double kk = 0.0, gk = 0.0, kg = 0.0, gg = 0.0;
  for (std::size_t i = 0; i < 15; ++i) {
    const double x = cx + hx * kRule.x[i];
    double row_k = 0.0, row_g = 0.0;
    for (std::size_t j = 0; j < 15; ++j) {
      const double v = f(x, ys[j]);
      row_k += kRule.wk[j] * v;
      row_g += kRule.wg[j] * v;
    }
    kk += kRule.wk[i] * row_k;
    kg += kRule.wk[i] * row_g;
    gk += kRule.wg[i] * row_k;
    gg += kRule.wg[i] * row_g;
  }
  const double jac = hx * hy;
  const double err_x = std::abs(kk - gk);  // Gauss in x only
  const double err_y = std::abs(kk - kg);
  return {r, kk * jac, std::abs(kk - gg) * jac, err_x >= err_y};
}

std::vector<double> partition(double a, double b, std::span<const double> pts) {
  std::vector<double> cuts{a};
  for (double p : pts)
    if (p > a && p < b) cuts.push_back(p);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// Max-heap on error; ties resolved by creation order so the refinement
// sequence is reproducible.
template <class Item>
struct WorstFirst {
  const std::vector<Item>* items;
  bool operator()(std::size_t lhs, std::size_t rhs) const {
    const double el = (*items)[lhs].error, er = (*items)[rhs].error;
    if (el != er) return el < er;
    return lhs > rhs;
  }
};

template <class Item>
double ordered_sum(const std::vector<Item>& items, double Item::*field) {
  double s = 0.0;
  for (const auto& it : items) s += it.*field;
  return s;
}

[[noreturn]] void fail(const char* which, const QuadratureConfig& cfg,
                       double value, double error) {
  throw QuadratureError(std::string(which) + ": no convergence within " +
                        std::to_string(cfg.max_subdivisions) +
                        " subdivisions (estimate " + std::to_string(value) +
                        ", error " + std::to_string(error) + ")");
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1)
    throw DomainError("QuadratureConfig: tolerances and max_subdivisions must be positive");
}

double integrate_1d(const Integrand1D& f, double a, double b,
                    const QuadratureConfig& cfg) {
  return integrate_1d(f, a, b, {}, cfg);
}

double integrate_1d(const Integrand1D& f, double a, double b,
                    std::span<const double> breakpoints,
                    const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a <= b)) throw DomainError("integrate_1d: requires a <= b");
  if (a == b) return 0.0;

  std::vector<Segment> segs;
  const auto cuts = partition(a, b, breakpoints);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    segs.push_back(gk15(f, cuts[i], cuts[i + 1]));

  // Retired segments keep error 0 so ordered_sum still covers them.
  std::priority_queue<std::size_t, std::vector<std::size_t>, WorstFirst<Segment>>
      heap(WorstFirst<Segment>{&segs});
  for (std::size_t i = 0; i < segs.size(); ++i) heap.push(i);

  double value = ordered_sum(segs, &Segment::value);
  double error = ordered_sum(segs, &Segment::error);
  long splits = 0;
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
    if (splits >= cfg.max_subdivisions) fail("integrate_1d", cfg, value, error);
    const std::size_t worst = heap.top();
    heap.pop();
    const Segment s = segs[worst];
    const double mid = 0.5 * (s.a + s.b);
    if (!(mid > s.a && mid < s.b)) fail("integrate_1d", cfg, value, error);
    segs[worst].value = 0.0;
    segs[worst].error = 0.0;
    segs.push_back(gk15(f, s.a, mid));
    segs.push_back(gk15(f, mid, s.b));
    heap.push(segs.size() - 2);
    heap.push(segs.size() - 1);
    ++splits;
    const auto& l = segs[segs.size() - 2];
    const auto& r = segs[segs.size() - 1];
    value += l.value + r.value - s.value;
    error += l.error + r.error - s.error;
  }
  // Running totals only steer refinement; the result is a fixed-order sum.
  return ordered_sum(segs, &Segment::value);
}

double integrate_2d(const Integrand2D& f, const Rect& rect,
                    const QuadratureConfig& cfg) {
  return integrate_2d(f, rect, {}, {}, cfg);
}

double integrate_2d(const Integrand2D& f, const Rect& rect,
                    std::span<const double> x_breaks,
                    std::span<const double> y_breaks,
                    const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(rect.ax < rect.bx) || !(rect.ay < rect.by))
    throw DomainError("integrate_2d: degenerate rectangle");

  std::vector<Region> regions;
  const auto xs = partition(rect.ax, rect.bx, x_breaks);
  const auto ys = partition(rect.ay, rect.by, y_breaks);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    for (std::size_t j = 0; j + 1 < ys.size(); ++j)
      regions.push_back(gk15x15(f, {xs[i], xs[i + 1], ys[j], ys[j + 1]}));

  std::priority_queue<std::size_t, std::vector<std::size_t>, WorstFirst<Region>>
      heap(WorstFirst<Region>{&regions});
  for (std::size_t i = 0; i < regions.size(); ++i) heap.push(i);

  double value = ordered_sum(regions, &Region::value);
  double error = ordered_sum(regions, &Region::error);
  long splits = 0;
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
    if (splits >= cfg.max_subdivisions) fail("integrate_2d", cfg, value, error);
    const std::size_t worst = heap.top();
    heap.pop();
    const Region g = regions[worst];
    Rect lo = g.r, hi = g.r;
    if (g.split_x) {
      const double mid = 0.5 * (g.r.ax + g.r.bx);
      if (!(mid > g.r.ax && mid < g.r.bx)) fail("integrate_2d", cfg, value, error);
      lo.bx = hi.ax = mid;
    } else {
      const double mid = 0.5 * (g.r.ay + g.r.by);
      if (!(mid > g.r.ay && mid < g.r.by)) fail("integrate_2d", cfg, value, error);
      lo.by = hi.ay = mid;
    }
    regions[worst].value = 0.0;
    regions[worst].error = 0.0;
    regions.push_back(gk15x15(f, lo));
    regions.push_back(gk15x15(f, hi));
    heap.push(regions.size() - 2);
    heap.push(regions.size() - 1);
    ++splits;
    const auto& l = regions[regions.size() - 2];
    const auto& r = regions[regions.size() - 1];
    value += l.value + r.value - g.value;
    error += l.error + r.error - g.error;
  }
  // Running totals only steer refinement; the result is a fixed-order sum.
  return ordered_sum(regions, &Region::value);
}

}  // namespace wente
