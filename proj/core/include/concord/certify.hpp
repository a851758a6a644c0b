#pragma once

#include <string>
#include <vector>

#include "concord/knots.hpp"

namespace concord {

enum class Conclusion {
  NotConcordantToHopf,
  NotConcordantToLocallyKnottedHopf,
  FamilyPairwiseDistinct,
  Inconclusive,
};
std::string conclusion_name(Conclusion c);

// One certificate step. Computation steps carry an invariant name, its input
// and the computed value (replay recomputes and compares). Inference steps
// carry a rule from the closed catalogue, and their claim text is rebuilt
// verbatim by the replayer. premises lists the ids of earlier steps a step
// depends on; replay validation requires the whole step list to be exactly
// the dependency closure of the conclusion (removing any step breaks it).
struct CertStep {
  std::string id;
  std::string kind;  // "computation" | "inference"
  std::string invariant;
  std::string input;
  std::string value;
  std::string rule;
  std::vector<std::string> premises;
  std::string claim;
};

struct Certificate {
  std::string subject_kind;   // "LK" (subject_param = knot expr) | "family" (= n max)
  std::string subject_param;
  std::vector<CertStep> steps;
  std::vector<std::string> conclusion_premises;
  Conclusion conclusion = Conclusion::Inconclusive;
};

// Closed inference-rule catalogue. Certificates may only cite these.
struct InferenceRule {
  std::string name;
  std::string premise_shape;
  std::string conclusion_shape;
};
const std::vector<InferenceRule>& inference_rule_catalogue();

// Certificate that L(K) is not smoothly concordant to the Hopf link, nor to
// any locally knotted Hopf link, via two independent routes:
//   A: the 2-fold covering knot Wh+(K # Kr, 0) has tau = 1, so it is not
//      slice in a rational homology 4-ball, which concordance to the Hopf
//      link would force;
//   B: blowing down the second component maps L(K) to D(U,-2,K,0), whose
//      tau = 1 obstructs sliceness in a homotopy 4-ball, which concordance
//      to the Hopf link would force.
// Both routes need tau(K) > 0; otherwise (including tau unknown, or K = U,
// where L(U) is the Hopf link itself) the conclusion is Inconclusive: tau is
// a one-sided obstruction and proves nothing about the mirror side.
Certificate certify_not_hopf(const KnotPtr& k);

// Pairwise non-concordance of the family L(K(n)), K(n) = T(2,2n+1): for each
// n the blow-down/cover/slam-dunk pipeline computes
//   d(S^3_{1/4}(K(n) # K(n)r)) = -2n,
// cross-checked against the direct -2 * v0 formula (disagreement is a hard
// internal error), and the values are pairwise distinct. Rows carry
// (n, sigma(K#Kr), tau(K), v0(K#Kr), d). Throws std::invalid_argument when
// n_max < 1.
struct FamilyRow {
  long long n;
  long long signature_pair;
  long long tau_value;
  long long v0_pair;
  long long d_value;
};
struct FamilyResult {
  Certificate certificate;
  std::vector<FamilyRow> rows;
};
FamilyResult certify_family(long long n_max);

// Alternative obstruction avoiding tau: if K is a nontrivial catalogued
// strongly quasipositive knot, the blow-down knot D(U,-2,K,0) is again
// nontrivial strongly quasipositive, hence not slice in a homotopy 4-ball,
// so L(K) is not concordant to the Hopf link. Inconclusive when K is not
// marked SQP (e.g. mirrors) or is trivial.
Certificate sqp_certificate(const KnotPtr& k);

// two_variable_alexander(build_LK_ccomplex(K)) == 1 up to units.
bool check_LK_alexander(const KnotPtr& k);

// Canonical JSON (sorted keys, 2-space indent, trailing newline); the
// round trip certificate_to_json . certificate_from_json is the identity on
// bytes, which is what makes replay comparisons byte-exact.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

// Re-run every computation step, re-check every inference step against the
// rule catalogue (including rule-specific side conditions and claim text),
// verify the conclusion is supported, and verify every step is reachable
// from the conclusion (no vacuous steps). Throws std::runtime_error with a
// reason on any failure.
void replay_validate(const Certificate& c);

std::string certificate_to_markdown(const Certificate& c);
std::string family_rows_to_csv(const std::vector<FamilyRow>& rows);
std::string family_rows_to_markdown(const std::vector<FamilyRow>& rows);
std::string family_result_to_json(const FamilyResult& r);

}  // namespace concord
