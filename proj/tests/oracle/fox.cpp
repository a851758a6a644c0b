#include "fox.hpp"

#include <stdexcept>

namespace oracle {

using concord::LaurentPoly2;

LaurentPoly2 cofactor_det(std::vector<std::vector<LaurentPoly2>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("cofactor_det: not square");
  if (n == 0) return LaurentPoly2::one();
  if (n == 1) return m[0][0];
  LaurentPoly2 det;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<LaurentPoly2>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly2> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    LaurentPoly2 term = m[0][j] * cofactor_det(std::move(minor));
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

namespace {

// det(free-derivative matrix, one generator column dropped) = Delta * (g - 1)
// where g is the dropped generator's image; here always a first-component
// meridian, image x.
LaurentPoly2 delta_from_reduced(std::vector<std::vector<LaurentPoly2>> reduced) {
  LaurentPoly2 det = cofactor_det(std::move(reduced));
  LaurentPoly2 x_minus_1 = LaurentPoly2::x() - LaurentPoly2::one();
  return normalize_units_2(exact_divide(det, x_minus_1));
}

}  // namespace

LaurentPoly2 hopf_fox_delta() {
  // pi_1 = <a, b | a b a^-1 b^-1>, meridians a -> x, b -> y. Free derivatives
  // of the relator: d/da = 1 - y, d/db = x - 1. Drop the a column.
  const LaurentPoly2 one = LaurentPoly2::one();
  const LaurentPoly2 x = LaurentPoly2::x();
  return delta_from_reduced({{x - one}});
}

LaurentPoly2 t24_fox_delta() {
  // Closure of the 2-braid s^4 with arcs a, a' on one component and b, b' on
  // the other; each crossing gives a relation "outgoing = over * incoming *
  // over^-1". Free derivatives over the columns (a, a', b, b') with meridian
  // images a, a' -> x and b, b' -> y; the last relation is redundant and is
  // dropped together with the a column.
  const LaurentPoly2 zero;
  const LaurentPoly2 one = LaurentPoly2::one();
  const LaurentPoly2 x = LaurentPoly2::x();
  const LaurentPoly2 y = LaurentPoly2::y();
  std::vector<std::vector<LaurentPoly2>> rows = {
      {one - y, zero, x, -one},
      {y, -one, zero, one - x},
      {zero, one - y, -one, x},
  };
  std::vector<std::vector<LaurentPoly2>> reduced;
  for (auto& row : rows)
    reduced.push_back({row[1], row[2], row[3]});
  return delta_from_reduced(std::move(reduced));
}

}  // namespace oracle
