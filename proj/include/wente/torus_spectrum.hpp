#pragma once

#include <array>
#include <vector>

#include "wente/parallel.hpp"
#include "wente/wente_params.hpp"

namespace wente {

enum class Parity { sin, cos };

// One L^2-normalized eigenfunction of -Laplace on C/Gamma:
//   u(x, y) = norm_const * parity(cx * x + cy * y),   -Laplace u = alpha u,
// where (cx, cy) = m2 * d1 + m1 * d2 for the dual basis (d1, d2) of the
// lattice. Equivalently m2 = (c . v1) / 2pi and m1 = (c . v2) / 2pi.
struct FlatEigenpair {
  int m1 = 0;
  int m2 = 0;
  Parity parity = Parity::cos;
  double alpha = 0.0;
  double norm_const = 0.0;
  double cx = 0.0;
  double cy = 0.0;

  double operator()(double x, double y) const;
};

// Throws DomainError for (0, 0, sin), which is identically zero.
FlatEigenpair make_eigenpair(const Lattice& lat, int m1, int m2, Parity parity);

// Recovers (m1, m2) from a wave vector; throws DomainError if the wave
// vector is not in the dual lattice.
FlatEigenpair eigenpair_from_wavevector(const Lattice& lat, double cx, double cy,
                                        Parity parity);

// All eigenpairs with |m1|, |m2| <= m_cutoff, one per distinct function
// ((m1, m2) and (-m1, -m2) give the same function up to sign; the
// representative has cx > 0, or cx = 0 and cy > 0). Sorted by
// (alpha, m1, m2, parity).
std::vector<FlatEigenpair> flat_eigenpairs(const Lattice& lat, int m_cutoff);

// The 17 tabulated eigenpairs in their fixed, parity-of-l dependent order.
// Indices are 1-based to match the numbering used by the eigenfunction
// selections and the matrix formulas.
class Table1Basis {
 public:
  Table1Basis(const Fraction& frac, double x_len, double y_len);

  static constexpr int size() { return 17; }
  const FlatEigenpair& operator[](int index) const;  // 1..17
  const Lattice& lattice() const noexcept { return lat_; }

  // Closed-form eigenvalue as tabulated: 4 pi^2 (p^2 / (n x)^2 + q^2 / y^2)
  // for entry (p, q). Independent of the generic lattice formula.
  double tabulated_alpha(int index) const;

 private:
  Lattice lat_;
  double nx_;
  double y_;
  std::array<FlatEigenpair, 17> entries_;
  std::array<std::array<int, 2>, 17> pq_;
};

Table1Basis table1_basis(const Fraction& frac, double x_len, double y_len);

// Number of flat eigenvalues (with multiplicity) strictly below 4H, minus 1.
int lemma4_bound(const Surface& surface);
int lemma4_bound(const Fraction& frac, double H, const SolverConfig& cfg = {});

// 2n - 2 for odd l, n - 2 for even l.
int lemma5_bound(const Fraction& frac);

// Beyond this denominator lemma5_bound is >= 8 for both parities of l.
inline constexpr int kCandidateMaxN = 9;

// Fractions whose lemma5_bound is below 8 (13 of them).
std::vector<Fraction> lemma5_candidates();

// lemma5_candidates() with lemma4_bound(frac, H) >= 8 removed.
std::vector<Fraction> candidate_surfaces(double H = 0.5,
                                         Execution exec = Execution::parallel,
                                         const SolverConfig& cfg = {});

}  // namespace wente
