#pragma once

// Reference values for the eight surfaces: angles, periods and bounds, fifteen
// I_0 values, and the 9x9 matrices to three significant figures. Used by
// --paper-check and by the acceptance suite.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wente/wente_params.hpp"

namespace wente::reference {

struct Table2Row {
  Fraction frac;
  double theta_deg;
  double x_len;
  double y_len;
  int lemma4;
  int lemma5;
};

const std::vector<Table2Row>& table2();
const Table2Row& table2_row(const Fraction& frac);  // throws UnknownSurfaceError

struct I0Value {
  Fraction frac;
  int A;
  int B;
  double value;
};

const std::vector<I0Value>& i0_values();

// Matrix cell: a number, an exact "0", or an "O" (numerically small).
struct Cell {
  enum class Kind { number, exact_zero, small } kind;
  double value = 0.0;
};

using DisplayedMatrix = std::array<std::array<Cell, 9>, 9>;

const DisplayedMatrix& displayed_matrix(const Fraction& frac);  // throws UnknownSurfaceError

// Tolerances the reference values are checked against.
inline constexpr double kThetaTolDeg = 0.0005;
inline constexpr double kPeriodTol = 0.0005;
inline constexpr double kI0Tol = 0.001;
inline constexpr double kIjSmall = 0.01;
inline constexpr double kMatrixTol = 0.05;
inline constexpr double kExactZeroTol = 1e-6;
inline constexpr double kSmallEntryTol = 1e-2;
inline constexpr double kDualPathTol = 5e-3;

}  // namespace wente::reference
