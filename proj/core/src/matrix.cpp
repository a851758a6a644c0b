#include "concord/matrix.hpp"

#include <numeric>

namespace concord {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  for (const auto& row : rows)
    if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = -at(i, j);
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum: dimension mismatch");
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
  return m;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

IntMatrix symmetrized(const IntMatrix& v) { return v + v.transpose(); }

namespace detail {

Int bareiss_int(std::vector<std::vector<Int>> a) {
  return bareiss_determinant<Int>(
      std::move(a), [](const Int& v) { return v == 0; },
      [](const Int& x, const Int& y) { return Int(x / y); }, Int(1));
}

LaurentPoly1 bareiss_poly1(std::vector<std::vector<LaurentPoly1>> a) {
  return bareiss_determinant<LaurentPoly1>(
      std::move(a), [](const LaurentPoly1& v) { return v.is_zero(); },
      [](const LaurentPoly1& x, const LaurentPoly1& y) { return exact_divide(x, y); },
      LaurentPoly1::one());
}

LaurentPoly2 bareiss_poly2(std::vector<std::vector<LaurentPoly2>> a) {
  return bareiss_determinant<LaurentPoly2>(
      std::move(a), [](const LaurentPoly2& v) { return v.is_zero(); },
      [](const LaurentPoly2& x, const LaurentPoly2& y) { return exact_divide(x, y); },
      LaurentPoly2::one());
}

}  // namespace detail

Int determinant_int(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  return detail::bareiss_int(std::move(a));
}

bool is_unimodular_seifert_pairing(const IntMatrix& v) {
  if (!v.is_square()) return false;
  const Int d = determinant_int(v + v.transpose().negated());
  return d == 1 || d == -1;
}

int signature_symmetric(const IntMatrix& w) {
  if (!w.is_square()) throw std::invalid_argument("signature: matrix not square");
  const std::size_t n = w.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (w.at(i, j) != w.at(j, i)) throw std::invalid_argument("signature: matrix not symmetric");

  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(w.at(i, j));

  std::vector<std::size_t> act(n);
  std::iota(act.begin(), act.end(), std::size_t{0});
  int sig = 0;
  while (!act.empty()) {
    // Prefer a nonzero diagonal pivot: split off a 1x1 block.
    std::size_t pi = act.size();
    for (std::size_t k = 0; k < act.size(); ++k)
      if (m[act[k]][act[k]] != 0) {
        pi = k;
        break;
      }
    if (pi != act.size()) {
      const std::size_t r = act[pi];
      const Rat d = m[r][r];
      sig += d > 0 ? 1 : -1;
      act.erase(act.begin() + static_cast<std::ptrdiff_t>(pi));
      for (const std::size_t i : act)
        for (const std::size_t j : act) m[i][j] -= m[i][r] * m[j][r] / d;
      continue;
    }
    // All active diagonals vanish: any nonzero off-diagonal entry spans a
    // hyperbolic 2x2 block [[0,a],[a,0]] (signature 0); clear it by its
    // inverse [[0,1/a],[1/a,0]].
    std::size_t ri = act.size(), si = 0;
    for (std::size_t a2 = 0; a2 < act.size() && ri == act.size(); ++a2)
      for (std::size_t b2 = a2 + 1; b2 < act.size(); ++b2)
        if (m[act[a2]][act[b2]] != 0) {
          ri = a2;
          si = b2;
          break;
        }
    if (ri == act.size()) break;  // zero form on the rest
    const std::size_t r = act[ri], s = act[si];
    const Rat a = m[r][s];
    act.erase(act.begin() + static_cast<std::ptrdiff_t>(si));
    act.erase(act.begin() + static_cast<std::ptrdiff_t>(ri));
    for (const std::size_t i : act)
      for (const std::size_t j : act) m[i][j] -= (m[i][r] * m[j][s] + m[i][s] * m[j][r]) / a;
  }
  return sig;
}

LaurentPoly1 alexander_from_seifert(const IntMatrix& v) {
  if (!v.is_square()) throw std::invalid_argument("alexander_from_seifert: matrix not square");
  const std::size_t n = v.rows();
  std::vector<std::vector<LaurentPoly1>> a(n, std::vector<LaurentPoly1>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = LaurentPoly1::constant(v.at(i, j)) - LaurentPoly1::term(1, v.at(j, i));
  return normalize_units_1(detail::bareiss_poly1(std::move(a)));
}

}  // namespace concord
