#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "concord/bigint.hpp"
#include "concord/knots.hpp"
#include "concord/matrix.hpp"

namespace concord {

struct ChainComponent {
  Rat framing;
  KnotPtr knot;
};

// Linear chain of surgery components: consecutive components link once,
// non-consecutive ones are unlinked. Slam-dunking requires the tail
// (everything after the head) to be integer-framed unknots; see
// slam_dunk_reduce.
struct ChainSurgery {
  std::vector<ChainComponent> components;
};

// General surgery presentation: symmetric integer linking matrix with the
// integer framings on the diagonal. labels[i] is the component's knot type
// when known; std::nullopt marks a label the moves below could not track.
struct LinkedSurgery {
  IntMatrix matrix;
  std::vector<std::optional<KnotPtr>> labels;
};

using FramedChain = std::variant<ChainSurgery, LinkedSurgery>;

struct RationalSurgery {
  KnotPtr knot;
  Rat coefficient;
};

struct slam_dunk_error : std::runtime_error {
  std::size_t index;  // component whose fold hit 1/0
  slam_dunk_error(std::size_t idx, const std::string& what);
};

// Fold the chain into a single rational surgery on the head knot by repeated
// slam-dunks from the far end: r = a_k, then r = a_i - 1/r walking inward.
// pre: tail components are integer-framed unknots. Throws slam_dunk_error
// when a fold step would divide by zero and std::invalid_argument when the
// chain shape is wrong.
RationalSurgery slam_dunk_reduce(const ChainSurgery& chain);

// Blow down component u (an unknot with framing eps = +-1): remaining
// framings a_i -= eps * lk(i,u)^2 and linkings lk(i,j) -= eps * lk(i,u) *
// lk(j,u); det changes by the factor eps. Labels are rewritten only for the
// catalogued configuration (a lone surviving unknot meeting u once stays an
// unknot); any other component that meets u is marked label-unknown.
LinkedSurgery blow_down(const LinkedSurgery& s, std::size_t u);

// Catalogued geometric blow-down of the +1-framed second component of L(K):
// the image of the first component is D(U,-2,K,0).
KnotPtr blow_down_LK(const KnotPtr& k);

// Double branched cover of S^3 along the boundary of a genus-1 Seifert
// surface, with the two bands tied in core_band and clasp_band: a two
// component chain with framings diag(V + V^T), consecutive linking
// (V + V^T)_12, and band knots replaced by band # reverse(band).
// pre: V is 2x2 with det(V - V^T) = +-1.
ChainSurgery double_branched_cover_genus1(const IntMatrix& v, const KnotPtr& core_band,
                                          const KnotPtr& clasp_band);

// Genus-1 presentation of an expression, when it has one:
//   GenDouble(J,s,K,t)   -> V = [[t,1],[0,s]], bands (K, J)
//   WhiteheadPos(K,t)    -> V = [[t,1],[0,-1]], bands (K, U)
//   RawSeifert 2x2       -> V itself, bands (U, U)
// Throws std::domain_error otherwise.
struct Genus1Pattern {
  IntMatrix pairing;
  KnotPtr core_band;
  KnotPtr clasp_band;
};
Genus1Pattern genus1_pattern(const KnotExpr& e);

// Chain -> general presentation (tridiagonal linking); requires integer
// framings.
LinkedSurgery chain_to_linked(const ChainSurgery& chain);

// JSON schema:
//   { "components": [ { "framing": "p/q", "knot": "<expr>" }, ... ] }
// for chains, plus a "linking" matrix (framings on its diagonal, "framing"
// fields integer and redundant with it) for the general form. A null "knot"
// is a label-unknown component.
std::string framed_chain_to_json(const FramedChain& c);
FramedChain framed_chain_from_json(const std::string& text);
std::string rational_surgery_to_json(const RationalSurgery& s);

}  // namespace concord
