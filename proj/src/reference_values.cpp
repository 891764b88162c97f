#include "wente/reference_values.hpp"

#include <map>
#include <sstream>

#include "wente/errors.hpp"

namespace wente::reference {

const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows = {
      {Fraction(3, 2), 17.7324, 2.5556, 4.2131, 2, 2},
      {Fraction(4, 3), 12.7898, 3.2767, 6.3355, 6, 1},
      {Fraction(5, 3), 21.4807, 1.7557, 2.6402, 2, 4},
      {Fraction(7, 4), 22.8449, 1.3315, 1.9447, 2, 6},
      {Fraction(8, 5), 20.1374, 2.0842, 3.2321, 2, 3},
      {Fraction(12, 7), 22.3044, 1.5150, 2.2380, 2, 5},
      {Fraction(14, 9), 19.1243, 2.2970, 3.6514, 4, 7},
      {Fraction(16, 9), 23.2182, 1.1872, 1.7208, 2, 7},
  };
  return rows;
}

const Table2Row& table2_row(const Fraction& frac) {
  for (const auto& r : table2())
    if (r.frac == frac) return r;
  throw UnknownSurfaceError("no reference row for W_" + frac.str());
}

const std::vector<I0Value>& i0_values() {
  static const std::vector<I0Value> values = {
      {Fraction(3, 2), 0, 0, 0.2968},  {Fraction(3, 2), 2, 0, 0.2304},
      {Fraction(3, 2), 0, 2, 0.2408},  {Fraction(3, 2), 2, 2, 0.1947},
      {Fraction(4, 3), 0, 0, 0.1077},  {Fraction(4, 3), 0, 2, 0.0776},
      {Fraction(4, 3), 0, 4, 0.0667},  {Fraction(5, 3), 0, 0, 0.4532},
      {Fraction(5, 3), 2, 0, 0.3910},  {Fraction(5, 3), 0, 2, 0.4046},
      {Fraction(7, 4), 0, 0, 0.6072},  {Fraction(8, 5), 0, 0, 0.1878},
      {Fraction(12, 7), 0, 0, 0.2652}, {Fraction(14, 9), 0, 0, 0.0841},
      {Fraction(16, 9), 0, 0, 0.3419},
  };
  return values;
}

namespace {

DisplayedMatrix parse(const char* text) {
  DisplayedMatrix m{};
  std::istringstream in(text);
  for (auto& row : m) {
    for (auto& cell : row) {
      std::string tok;
      in >> tok;
      if (tok == "0")
        cell = {Cell::Kind::exact_zero, 0.0};
      else if (tok == "O")
        cell = {Cell::Kind::small, 0.0};
      else
        cell = {Cell::Kind::number, std::stod(tok)};
    }
  }
  return m;
}

// Nine rows of nine cells per surface, in eigenfunction-selection order.
const std::map<std::pair<int, int>, const char*> kDisplays = {
    {{3, 2},
     "-9.50 0 0 0 0 0 0 0 0  0 -7.99 0 0 0 0 0 0 0  0 0 -7.99 0 0 0 0 0 0 "
     " 0 0 0 -1.36 0 0 0 0 0  0 0 0 0 -13.2 0 0 0 0  0 0 0 0 0 -8.70 0 0 0 "
     " 0 0 0 0 0 0 -5.76 0 0  0 0 0 0 0 0 0 -5.76 0  0 0 0 0 0 0 0 0 -5.50"},
    {{4, 3},
     "-5.17 0 O 0 0 0 0 0 -3.23  0 -3.53 0 0 0 0 0 0 0  O 0 -3.53 0 0 0 0 0 O "
     " 0 0 0 -3.78 0 -2.29 0 0 0  0 0 0 0 -3.78 0 -2.29 0 0 "
     " 0 0 0 -2.29 0 -3.78 0 0 0  0 0 0 0 -2.29 0 -3.78 0 0 "
     " 0 0 0 0 0 0 0 -0.25 0  -3.23 0 O 0 0 0 0 0 -2.21"},
    {{5, 3},
     "-21.8 0 0 0 0 O 0 0 0  0 -20.3 0 0 0 0 0 0 0  0 0 -20.3 0 0 0 0 0 O "
     " 0 0 0 -33.2 0 0 0 0 0  0 0 0 0 -16.1 0 0 0 0  O 0 0 0 0 -16.1 0 0 0 "
     " 0 0 0 0 0 0 -14.7 0 0  0 0 0 0 0 0 0 -14.7 0  0 0 O 0 0 0 0 0 -24.7"},
    {{7, 4},
     "-38.9 0 0 0 0 0 0 0 0  0 -37.5 0 0 0 0 0 0 0  0 0 -37.5 0 0 0 0 0 0 "
     " 0 0 0 -33.3 0 0 0 0 0  0 0 0 0 -33.3 0 0 0 0  0 0 0 0 0 -27.0 0 0 0 "
     " 0 0 0 0 0 0 -27.0 0 0  0 0 0 0 0 0 0 -26.3 0  0 0 0 0 0 0 0 0 -26.3"},
    {{8, 5},
     "-15.0 0 O 0 0 0 O 0 0  0 -13.6 0 0 0 O 0 0 0  O 0 -13.6 0 0 0 O 0 0 "
     " 0 0 0 -10.9 0 0 0 O 0  0 0 0 0 -10.9 0 0 0 O  0 O 0 0 0 -9.2 0 0 0 "
     " O 0 O 0 0 0 -9.2 0 0  0 0 0 O 0 0 0 -8.0 0  0 0 0 0 O 0 0 0 -8.0"},
    {{12, 7},
     "-29.7 0 O 0 0 0 O 0 0  0 -28.3 0 0 0 O 0 0 0  O 0 -28.3 0 0 0 O 0 0 "
     " 0 0 0 -21.5 0 0 0 O 0  0 0 0 0 -21.5 0 0 0 O  0 O 0 0 0 -24.1 0 0 0 "
     " O 0 O 0 0 0 -24.1 0 0  0 0 0 O 0 0 0 -18.7 0  0 0 0 0 O 0 0 0 -18.7"},
    {{14, 9},
     "-12.1 0 O 0 0 0 O 0 0  0 -11.7 0 0 0 O 0 0 0  O 0 -11.7 0 0 0 O 0 0 "
     " 0 0 0 -9.1 0 0 0 O 0  0 0 0 0 -9.1 0 0 0 O  0 O 0 0 0 -10.6 0 0 0 "
     " O 0 O 0 0 0 -10.6 0 0  0 0 0 O 0 0 0 -8.3 0  0 0 0 0 O 0 0 0 -8.3"},
    {{16, 9},
     "-49.2 0 O 0 0 0 O 0 0  0 -47.9 0 0 0 O 0 0 0  O 0 -47.9 0 0 0 O 0 0 "
     " 0 0 0 -35.6 0 0 0 O 0  0 0 0 0 -35.6 0 0 0 O  0 O 0 0 0 -43.7 0 0 0 "
     " O 0 O 0 0 0 -43.7 0 0  0 0 0 O 0 0 0 -32.8 0  0 0 0 0 O 0 0 0 -32.8"},
};

}  // namespace

const DisplayedMatrix& displayed_matrix(const Fraction& frac) {
  static const std::map<std::pair<int, int>, DisplayedMatrix> parsed = [] {
    std::map<std::pair<int, int>, DisplayedMatrix> out;
    for (const auto& [key, text] : kDisplays) out.emplace(key, parse(text));
    return out;
  }();
  const auto it = parsed.find({frac.ell(), frac.n()});
  if (it == parsed.end()) throw UnknownSurfaceError("no displayed matrix for W_" + frac.str());
  return it->second;
}

}  // namespace wente::reference
