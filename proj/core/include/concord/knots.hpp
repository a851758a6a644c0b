#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "concord/laurent.hpp"
#include "concord/matrix.hpp"

namespace concord {

class KnotExpr;
using KnotPtr = std::shared_ptr<const KnotExpr>;

struct UnknotNode {};
// Positive (right-handed) torus knot T(p,q), 2 <= p < q, gcd(p,q) = 1.
struct TorusNode {
  int p, q;
};
// Caller-supplied Seifert pairing V with det(V - V^T) = +-1. The alternating
// flag is caller-asserted and gates the alternating-only formulas.
struct RawSeifertNode {
  IntMatrix pairing;
  bool alternating;
};
struct SumNode {
  KnotPtr left, right;
};
struct MirrorNode {
  KnotPtr inner;
};
struct ReverseNode {
  KnotPtr inner;
};
// Positive-clasped t-twisted Whitehead double of the companion.
struct WhiteheadPosNode {
  KnotPtr companion;
  long long twists;
};
// Two-annulus plumbing D_{J,s}(K,t): one band tied in K with t twists, the
// other tied in J with s twists. Wh+(K,t) is the case J = U, s = -1.
struct GenDoubleNode {
  KnotPtr clasp_tie;        // J
  long long clasp_twists;   // s
  KnotPtr core_tie;         // K
  long long core_twists;    // t
};

class KnotExpr {
 public:
  using Node = std::variant<UnknotNode, TorusNode, RawSeifertNode, SumNode, MirrorNode,
                            ReverseNode, WhiteheadPosNode, GenDoubleNode>;
  explicit KnotExpr(Node n) : node_(std::move(n)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

// Factories (the only way well-formedness is enforced; they throw
// std::invalid_argument on bad parameters).
KnotPtr unknot();
KnotPtr torus_knot(int p, int q);
KnotPtr raw_seifert(IntMatrix pairing, bool alternating);
KnotPtr connected_sum(KnotPtr left, KnotPtr right);
KnotPtr mirror(KnotPtr inner);
KnotPtr reverse(KnotPtr inner);
KnotPtr whitehead_pos(KnotPtr companion, long long twists);
KnotPtr gen_double(KnotPtr clasp_tie, long long clasp_twists, KnotPtr core_tie,
                   long long core_twists);

// Grammar (# is left-associative; integers may be negative):
//   EXPR := "U" | "T(p,q)" | EXPR "#" EXPR | "m(" EXPR ")" | "r(" EXPR ")"
//         | "Wh+(" EXPR "," int ")" | "D(" EXPR "," int "," EXPR "," int ")"
//         | "seifert([[..],..])"
struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(std::size_t pos, const std::string& what);
};
KnotPtr parse_knot_expression(const std::string& text);

// Canonical rendering; parse_knot_expression(to_string(e)) reproduces e up to
// reassociation of connected sums (every invariant here is associative).
std::string to_string(const KnotExpr& e);
std::string to_string(const KnotPtr& e);

bool structurally_equal(const KnotExpr& a, const KnotExpr& b);

// Seifert matrix, total on the AST. Torus knots use the positive-braid
// surface basis; T(2,2n+1) yields the 2n x 2n bidiagonal matrix with -1 on
// the diagonal and +1 on the superdiagonal. Sum is a block sum, Mirror is
// -V^T, Reverse is V^T. WhiteheadPos(K,s) yields [[-1,1],[0,s]] and
// GenDouble(J,s,K,t) yields [[t,1],[0,s]]: the pattern surface only, which is
// exactly what the classical invariants below see (the bands have winding
// number 0, so tying them in J or K does not change the pairing).
IntMatrix seifert_matrix(const KnotExpr& e);

LaurentPoly1 alexander_polynomial(const KnotExpr& e);  // normalized det(V - tV^T)
int signature(const KnotExpr& e);                      // sign(V + V^T), exact
Int determinant(const KnotExpr& e);                    // |Delta(-1)|

// Torsion coefficients t_i = sum_{j>=1} j * a_{i+j} of the symmetrized
// Alexander polynomial a_0 + sum_j a_j (t^j + t^-j) normalized to value 1 at
// t = 1. Throws std::domain_error if Delta(1) != +-1.
std::vector<Int> torsion_coefficients(const KnotExpr& e, std::size_t upto);
std::vector<Int> torsion_coefficients_from_alexander(const LaurentPoly1& delta, std::size_t upto);

// Alternating is propagated structurally: Unknot and T(2,q) are alternating,
// sums/mirrors/reverses of alternating pieces are alternating, RawSeifert
// carries its flag, and nothing else is marked.
bool is_alternating(const KnotExpr& e);

// Closed catalogue of strong quasipositivity: positive torus leaves are SQP
// and connected sums of SQP pieces are SQP. Nothing else is marked (in
// particular mirrors are never marked).
bool is_catalogued_sqp(const KnotExpr& e);

// Structurally the unknot: U, or m/r of one, or a sum of such.
bool is_structural_unknot(const KnotExpr& e);

}  // namespace concord
