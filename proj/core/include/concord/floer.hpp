#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concord/bigint.hpp"
#include "concord/knots.hpp"

namespace concord {

// One rule application in a tau derivation.
struct TauStep {
  std::string rule;
  std::string node;  // rendered subexpression the rule was applied to
};

// Value of the concordance invariant tau together with the derivation that
// produced it. value is empty when no rule in the closed catalogue applies
// somewhere in the expression.
struct TauResult {
  std::optional<long long> value;
  std::vector<TauStep> derivation;
};

// Rule catalogue (each AST node must be matched by exactly one rule):
//   unknot                  tau(U) = 0
//   torus_2q                tau(T(2,2n+1)) = n
//   alternating_signature   tau = -sigma/2 for alternating expressions
//   connected_sum           tau(K1 # K2) = tau(K1) + tau(K2)
//   reverse                 tau(r(K)) = tau(K)
//   mirror                  tau(m(K)) = -tau(K)
//   whitehead_double        tau(Wh+(K,t)) = 1 if t < 2 tau(K), else 0
//   twisted_double          tau(D(U,-2,K,0)) = 1 if tau(K) > 0, else 0
// When several rules match one node (e.g. T(2,3) is a torus leaf and
// alternating) all of them are evaluated and must agree; a disagreement is a
// hard internal error (std::logic_error), never a silent preference.
TauResult tau(const KnotExpr& e);

// max(0, ceil(-sigma/4)) for alternating expressions; throws
// std::domain_error otherwise.
long long v0_alternating(const KnotExpr& e);

// A correction term: exact rational value attached to a spin-c structure.
// For a homology sphere spinc_index is 0 and 4 * value is an integer.
struct DValue {
  Rat value;
  unsigned long long spinc_index = 0;
};

// d of 1/n-surgery (n >= 1) on an alternating knot: -2 * v0_alternating(e),
// independent of n. Throws std::domain_error (not alternating) or
// std::invalid_argument (n < 1).
DValue d_one_over_n_surgery(const KnotExpr& e, long long n);

// Correction terms of the lens space L(p,q), computed by the iterative form
// of the recursion
//   d(p,q,i) = ((2i+1-p-q)^2 - pq) / (4pq) - d(q, p mod q, i mod q),
//   d(1,0,0) = 0.
// pre: p >= 1, 0 <= q < p (q = 0 only for p = 1), gcd(p,q) = 1, 0 <= i < p.
DValue d_lens(long long p, long long q, long long spinc);

}  // namespace concord
