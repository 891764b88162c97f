#include "wente/torus_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "wente/errors.hpp"

namespace wente {

using std::numbers::pi;

namespace {

Vec2 dual1(const Lattice& lat) {
  return {2 * pi / lat.area * lat.v2.y, -2 * pi / lat.area * lat.v2.x};
}
Vec2 dual2(const Lattice& lat) {
  return {-2 * pi / lat.area * lat.v1.y, 2 * pi / lat.area * lat.v1.x};
}

bool canonical(double cx, double cy) {
  const double tol = 1e-12 * (std::abs(cx) + std::abs(cy));
  if (std::abs(cx) > tol) return cx > 0.0;
  return cy > 0.0;
}

// (p, q, parity): wave vector (2 pi p / (n x), 2 pi q / y).
struct TableEntry {
  int p, q;
  Parity parity;
};

// Odd l. Entry 10 is the sin partner of entry 11.
constexpr std::array<TableEntry, 17> kOddTable = {{
    {0, 0, Parity::cos},  {1, 0, Parity::sin},  {1, 0, Parity::cos},
    {0, 1, Parity::sin},  {0, 1, Parity::cos},  {2, 0, Parity::sin},
    {2, 0, Parity::cos},  {1, 1, Parity::sin},  {1, 1, Parity::cos},
    {1, -1, Parity::sin}, {1, -1, Parity::cos}, {0, 2, Parity::sin},
    {0, 2, Parity::cos},  {3, 0, Parity::sin},  {3, 0, Parity::cos},
    {2, 1, Parity::sin},  {2, 1, Parity::cos},
}};

// Even l. Entries 14, 15 are the (3, -1) partners of entries 12, 13.
constexpr std::array<TableEntry, 17> kEvenTable = {{
    {0, 0, Parity::cos},  {2, 0, Parity::sin},  {2, 0, Parity::cos},
    {1, 1, Parity::sin},  {1, 1, Parity::cos},  {1, -1, Parity::sin},
    {1, -1, Parity::cos}, {0, 2, Parity::sin},  {0, 2, Parity::cos},
    {4, 0, Parity::sin},  {4, 0, Parity::cos},  {3, 1, Parity::sin},
    {3, 1, Parity::cos},  {3, -1, Parity::sin}, {3, -1, Parity::cos},
    {2, 2, Parity::sin},  {2, 2, Parity::cos},
}};

}  // namespace

double FlatEigenpair::operator()(double x, double y) const {
  const double phase = cx * x + cy * y;
  return norm_const * (parity == Parity::sin ? std::sin(phase) : std::cos(phase));
}

FlatEigenpair make_eigenpair(const Lattice& lat, int m1, int m2, Parity parity) {
  if (m1 == 0 && m2 == 0 && parity == Parity::sin)
    throw DomainError("the (0, 0) sin eigenfunction vanishes identically");
  const Vec2 d1 = dual1(lat), d2 = dual2(lat);
  FlatEigenpair e;
  e.m1 = m1;
  e.m2 = m2;
  e.parity = parity;
  e.cx = m2 * d1.x + m1 * d2.x;
  e.cy = m2 * d1.y + m1 * d2.y;
  const double s = m2 * lat.v2.y - m1 * lat.v1.y;
  const double t = m1 * lat.v1.x - m2 * lat.v2.x;
  e.alpha = 4 * pi * pi / (lat.area * lat.area) * (s * s + t * t);
  e.norm_const = std::sqrt(((m1 == 0 && m2 == 0) ? 1.0 : 2.0) / lat.area);
  return e;
}

FlatEigenpair eigenpair_from_wavevector(const Lattice& lat, double cx, double cy,
                                        Parity parity) {
  const double f2 = (cx * lat.v1.x + cy * lat.v1.y) / (2 * pi);
  const double f1 = (cx * lat.v2.x + cy * lat.v2.y) / (2 * pi);
  const double r1 = std::round(f1), r2 = std::round(f2);
  if (std::abs(f1 - r1) > 1e-9 || std::abs(f2 - r2) > 1e-9)
    throw DomainError("wave vector is not in the dual lattice");
  return make_eigenpair(lat, static_cast<int>(r1), static_cast<int>(r2), parity);
}

std::vector<FlatEigenpair> flat_eigenpairs(const Lattice& lat, int m_cutoff) {
  if (m_cutoff < 1) throw DomainError("flat_eigenpairs: m_cutoff must be >= 1");
  std::vector<FlatEigenpair> out;
  out.push_back(make_eigenpair(lat, 0, 0, Parity::cos));
  for (int m1 = -m_cutoff; m1 <= m_cutoff; ++m1) {
    for (int m2 = -m_cutoff; m2 <= m_cutoff; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      const FlatEigenpair c = make_eigenpair(lat, m1, m2, Parity::cos);
      if (!canonical(c.cx, c.cy)) continue;
      out.push_back(make_eigenpair(lat, m1, m2, Parity::sin));
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), [](const FlatEigenpair& a, const FlatEigenpair& b) {
    return std::tie(a.alpha, a.m1, a.m2, a.parity) < std::tie(b.alpha, b.m1, b.m2, b.parity);
  });
  return out;
}

Table1Basis::Table1Basis(const Fraction& frac, double x_len, double y_len)
    : lat_(wente::lattice(frac, x_len, y_len)), nx_(frac.n() * x_len), y_(y_len) {
  const auto& table = frac.ell_odd() ? kOddTable : kEvenTable;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const TableEntry& t = table[i];
    entries_[i] = eigenpair_from_wavevector(lat_, 2 * pi * t.p / nx_, 2 * pi * t.q / y_,
                                            t.parity);
    pq_[i] = {t.p, t.q};
  }
}

const FlatEigenpair& Table1Basis::operator[](int index) const {
  if (index < 1 || index > size())
    throw DomainError("Table1Basis index out of range: " + std::to_string(index));
  return entries_[static_cast<std::size_t>(index - 1)];
}

double Table1Basis::tabulated_alpha(int index) const {
  (void)(*this)[index];
  const auto [p, q] = pq_[static_cast<std::size_t>(index - 1)];
  return 4 * pi * pi * (p * p / (nx_ * nx_) + q * q / (y_ * y_));
}

Table1Basis table1_basis(const Fraction& frac, double x_len, double y_len) {
  return Table1Basis(frac, x_len, y_len);
}

int lemma4_bound(const Surface& surface) {
  const Lattice& lat = surface.lat;
  const double threshold = 4.0 * surface.params.H;

  // |c|^2 = m^T G m with m = (m1, m2). Every eigenvalue outside the box
  // |m|_inf <= cutoff is at least lambda_min(G) (cutoff + 1)^2.
  const Vec2 d1 = dual1(lat), d2 = dual2(lat);
  const double g11 = d2.x * d2.x + d2.y * d2.y;
  const double g22 = d1.x * d1.x + d1.y * d1.y;
  const double g12 = d1.x * d2.x + d1.y * d2.y;
  const double lambda_min =
      0.5 * (g11 + g22) - std::sqrt(0.25 * (g11 - g22) * (g11 - g22) + g12 * g12);

  int cutoff = 8;
  while (lambda_min * (cutoff + 1.0) * (cutoff + 1.0) <= threshold) cutoff *= 2;

  const auto spectrum = flat_eigenpairs(lat, cutoff);
  const auto below = std::count_if(spectrum.begin(), spectrum.end(),
                                   [&](const FlatEigenpair& e) { return e.alpha < threshold; });
  return static_cast<int>(below) - 1;
}

int lemma4_bound(const Fraction& frac, double H, const SolverConfig& cfg) {
  return lemma4_bound(make_surface(frac, H, cfg));
}

int lemma5_bound(const Fraction& frac) {
  return frac.ell_odd() ? 2 * frac.n() - 2 : frac.n() - 2;
}

std::vector<Fraction> lemma5_candidates() {
  std::vector<Fraction> out;
  for (const Fraction& f : enumerate_fractions(kCandidateMaxN))
    if (lemma5_bound(f) < 8) out.push_back(f);
  return out;
}

std::vector<Fraction> candidate_surfaces(double H, Execution exec, const SolverConfig& cfg) {
  const auto pre = lemma5_candidates();
  std::vector<int> bound(pre.size());
  for_each_index(exec, pre.size(), [&](std::size_t i) { bound[i] = lemma4_bound(pre[i], H, cfg); });
  std::vector<Fraction> out;
  for (std::size_t i = 0; i < pre.size(); ++i)
    if (bound[i] < 8) out.push_back(pre[i]);
  return out;
}

}  // namespace wente
