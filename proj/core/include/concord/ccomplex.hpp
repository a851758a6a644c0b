#pragma once

#include <string>

#include "concord/knots.hpp"
#include "concord/laurent.hpp"
#include "concord/matrix.hpp"

namespace concord {

// C-complex data for a 2-component link: a union of Seifert surfaces for the
// two components meeting only in clasps. The four matrices record linking
// numbers lk(b_i^{eps,delta}, b_j) of basis curves pushed off the first
// surface to side eps and off the second to side delta (p = +, m = -).
// Duality convention: A_mm = A_pp^T and A_mp = A_pm^T.
struct CComplex {
  std::size_t basis_size = 0;
  IntMatrix A_pp, A_pm, A_mp, A_mm;
  long long lk = 0;  // linking number of the two components
  // Alexander polynomials of the components (x-component first).
  LaurentPoly1 component_poly1 = LaurentPoly1::one();
  LaurentPoly1 component_poly2 = LaurentPoly1::one();
};

// Two-variable Alexander polynomial via the pushoff-matrix determinant
//   det(A_pp - x A_mp - y A_pm + xy A_mm)
// with every (x-1) and (y-1) factor divided out, normalized. Basis curves
// local to one surface contribute exactly those factors (their rows are
// (1-y)- resp. (1-x)-multiples), and for lk != 0 the Torres condition keeps
// the polynomial itself free of them, so the stripped determinant is the
// Alexander polynomial. For lk = 0 the same stripping is applied and the
// result is the Alexander polynomial only up to (x-1)^a (y-1)^b factors.
// Throws std::domain_error when the duality/shape invariants fail.
LaurentPoly2 two_variable_alexander(const CComplex& c);

// The fixed 2x2 C-complex of the link L(K): a Hopf-style pair where the
// first surface has genus one, with basis (a, b); a is the core of a 0-framed
// band tied in K and b passes once through the single positive clasp with the
// second component's disk. The pushoff data is independent of K (the K-band
// has framing 0 and winding number 0), which is exactly why the polynomial
// comes out 1 for every K.
CComplex build_LK_ccomplex(const KnotPtr& k);

// Torres condition for 2-component links:
//   p(t, 1) = Delta_1(t) * (t^lk - 1) / (t - 1)   up to units.
// For lk = 0 the right-hand side is taken to be the zero polynomial
// (degenerate convention; see two_variable_alexander on stripping).
bool torres_check(const LaurentPoly2& p, long long lk, const LaurentPoly1& delta1);

// JSON schema:
//   { "basis_size": n, "A_pp": [[..]], "A_pm": [[..]], "A_mp": [[..]],
//     "A_mm": [[..]], "lk": k, "component_polys": ["1", "1"] }
// component_polys is optional on input and defaults to ["1", "1"].
std::string ccomplex_to_json(const CComplex& c);
CComplex ccomplex_from_json(const std::string& text);

}  // namespace concord
