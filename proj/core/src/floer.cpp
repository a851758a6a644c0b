#include "concord/floer.hpp"

#include <numeric>
#include <stdexcept>
#include <variant>

namespace concord {

namespace {

struct Candidate {
  const char* rule;
  long long value;
};

std::optional<long long> tau_rec(const KnotExpr& e, std::vector<TauStep>& steps);

// Every rule whose hypotheses are satisfied is evaluated; disagreement between
// two applicable rules is a broken invariant of the catalogue, not a tie to
// break, hence logic_error.
std::optional<long long> resolve(const KnotExpr& e, std::vector<Candidate> cands,
                                 std::vector<TauStep>& steps) {
  if (is_alternating(e)) {
    long long s = signature(e);
    if (s % 2 != 0) throw std::logic_error("tau: knot signature must be even");
    cands.push_back({"alternating_signature", -s / 2});
  }
  if (cands.empty()) return std::nullopt;
  for (const Candidate& c : cands) {
    if (c.value != cands.front().value)
      throw std::logic_error("tau: rule catalogue disagrees at " + to_string(e) +
                             " (" + std::string(cands.front().rule) + " vs " +
                             c.rule + ")");
  }
  steps.push_back({cands.front().rule, to_string(e)});
  return cands.front().value;
}

std::optional<long long> tau_rec(const KnotExpr& e, std::vector<TauStep>& steps) {
  const std::size_t mark = steps.size();
  std::vector<Candidate> cands;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, UnknotNode>) {
          cands.push_back({"unknot", 0});
        } else if constexpr (std::is_same_v<T, TorusNode>) {
          if (n.p == 2) cands.push_back({"torus_2q", (n.q - 1) / 2});
        } else if constexpr (std::is_same_v<T, RawSeifertNode>) {
          // only the alternating fallback can apply
        } else if constexpr (std::is_same_v<T, SumNode>) {
          auto l = tau_rec(*n.left, steps);
          auto r = tau_rec(*n.right, steps);
          if (l && r) cands.push_back({"connected_sum", *l + *r});
        } else if constexpr (std::is_same_v<T, MirrorNode>) {
          auto v = tau_rec(*n.inner, steps);
          if (v) cands.push_back({"mirror", -*v});
        } else if constexpr (std::is_same_v<T, ReverseNode>) {
          auto v = tau_rec(*n.inner, steps);
          if (v) cands.push_back({"reverse", *v});
        } else if constexpr (std::is_same_v<T, WhiteheadPosNode>) {
          auto v = tau_rec(*n.companion, steps);
          if (v) cands.push_back({"whitehead_double", n.twists < 2 * *v ? 1LL : 0LL});
        } else {
          static_assert(std::is_same_v<T, GenDoubleNode>);
          if (is_structural_unknot(*n.clasp_tie) && n.clasp_twists == -2 &&
              n.core_twists == 0) {
            auto v = tau_rec(*n.core_tie, steps);
            if (v) cands.push_back({"twisted_double", *v > 0 ? 1LL : 0LL});
          }
        }
      },
      e.node());
  auto value = resolve(e, std::move(cands), steps);
  if (!value) steps.resize(mark);  // drop partial sub-derivations
  return value;
}

}  // namespace

TauResult tau(const KnotExpr& e) {
  TauResult result;
  result.value = tau_rec(e, result.derivation);
  return result;
}

long long v0_alternating(const KnotExpr& e) {
  if (!is_alternating(e))
    throw std::domain_error("v0_alternating: expression is not in the alternating catalogue");
  long long a = -static_cast<long long>(signature(e));
  return a > 0 ? (a + 3) / 4 : 0;  // max(0, ceil(-sigma/4))
}

DValue d_one_over_n_surgery(const KnotExpr& e, long long n) {
  if (n < 1) throw std::invalid_argument("d_one_over_n_surgery: n must be >= 1");
  // d(S^3_{1/n}(K)) = -2 V_0(K) for alternating K, independent of n >= 1.
  return DValue{Rat(-2 * v0_alternating(e)), 0};
}

DValue d_lens(long long p, long long q, long long spinc) {
  if (p < 1) throw std::invalid_argument("d_lens: p must be >= 1");
  if (q < 0 || q >= p) {
    if (!(p == 1 && q == 0)) throw std::invalid_argument("d_lens: need 0 <= q < p");
  }
  if (q == 0 && p != 1) throw std::invalid_argument("d_lens: q = 0 only for p = 1");
  if (std::gcd(p, q == 0 ? p : q) != 1)
    throw std::invalid_argument("d_lens: p and q must be coprime");
  if (spinc < 0 || spinc >= p)
    throw std::invalid_argument("d_lens: spin-c index must lie in [0, p)");

  Rat acc = 0;
  int sign = 1;
  long long pp = p, qq = q, ii = spinc;
  while (qq != 0) {
    Int t = Int(2 * ii + 1 - pp - qq);
    Rat term = Rat(t * t - Int(pp) * Int(qq)) / Rat(Int(4) * Int(pp) * Int(qq));
    acc += sign > 0 ? term : -term;
    long long np = qq, nq = pp % qq, ni = ii % qq;
    pp = np;
    qq = nq;
    ii = ni;
    sign = -sign;
  }
  // qq == 0 forces pp == 1 by coprimality, the base case d(1,0,0) = 0.
  return DValue{acc, static_cast<unsigned long long>(spinc)};
}

}  // namespace concord
