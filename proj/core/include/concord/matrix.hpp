#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "concord/bigint.hpp"
#include "concord/laurent.hpp"

namespace concord {

// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix negated() const;
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& o) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

IntMatrix symmetrized(const IntMatrix& v);  // V + V^T

// Exact integer determinant (fraction-free Bareiss elimination).
Int determinant_int(const IntMatrix& m);

// det(V - V^T) == +-1, the condition for V to present a knot Seifert pairing.
bool is_unimodular_seifert_pairing(const IntMatrix& v);

// Signature of a symmetric integer matrix by exact symmetric congruence
// diagonalization over the rationals. Zero diagonals are handled by
// splitting off hyperbolic 2x2 blocks (signature contribution 0).
// Throws std::invalid_argument if the matrix is not symmetric.
int signature_symmetric(const IntMatrix& w);

// normalize_units_1(det(V - t V^T)); the 0x0 matrix yields 1.
LaurentPoly1 alexander_from_seifert(const IntMatrix& v);

namespace detail {

// Fraction-free determinant over any integral domain with exact division.
// `a` is consumed. is_zero(r) tests for the ring zero; div(a, b) must be the
// exact quotient (only ever called when it exists).
template <class R, class IsZero, class Div>
R bareiss_determinant(std::vector<std::vector<R>> a, IsZero is_zero, Div div, const R& one) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("bareiss: matrix not square");
  R prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t pivot = k;
      for (std::size_t i = k + 1; i < n && pivot == k; ++i)
        if (!is_zero(a[i][k])) pivot = i;
      if (pivot == k) return R{};  // entire column zero below: singular
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  R det = a[n - 1][n - 1];
  return negate ? R{} - det : det;
}

Int bareiss_int(std::vector<std::vector<Int>> a);
LaurentPoly1 bareiss_poly1(std::vector<std::vector<LaurentPoly1>> a);
LaurentPoly2 bareiss_poly2(std::vector<std::vector<LaurentPoly2>> a);

}  // namespace detail

}  // namespace concord
