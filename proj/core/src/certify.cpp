#include "concord/certify.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "concord/ccomplex.hpp"
#include "concord/floer.hpp"
#include "concord/kirby.hpp"

namespace concord {

std::string conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::NotConcordantToHopf:
      return "NotConcordantToHopf";
    case Conclusion::NotConcordantToLocallyKnottedHopf:
      return "NotConcordantToLocallyKnottedHopf";
    case Conclusion::FamilyPairwiseDistinct:
      return "FamilyPairwiseDistinct";
    case Conclusion::Inconclusive:
      return "Inconclusive";
  }
  throw std::logic_error("conclusion_name: bad enum value");
}

namespace {

Conclusion conclusion_from_name(const std::string& name) {
  for (Conclusion c : {Conclusion::NotConcordantToHopf,
                       Conclusion::NotConcordantToLocallyKnottedHopf,
                       Conclusion::FamilyPairwiseDistinct, Conclusion::Inconclusive})
    if (conclusion_name(c) == name) return c;
  throw std::invalid_argument("certificate: unknown conclusion " + name);
}

bool parse_ll(const std::string& s, long long& out) {
  if (s.empty()) return false;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && p == e;
}

// Canonical claim texts. The replayer rebuilds these verbatim, so a
// certificate cannot smuggle in a stronger statement than its premises carry.
std::string claim_not_rat_slice(const std::string& j) {
  return j + " is not smoothly slice in a rational homology 4-ball";
}
std::string claim_not_hty_slice(const std::string& b) {
  return b + " is not smoothly slice in a homotopy 4-ball";
}
std::string claim_not_hopf(const std::string& k) {
  return "L(" + k + ") is not smoothly concordant to the Hopf link";
}
std::string claim_not_lk_hopf(const std::string& k) {
  return "L(" + k + ") is not smoothly concordant to any locally knotted Hopf link";
}
std::string claim_sqp(const std::string& b) {
  return b + " is strongly quasipositive and nontrivial";
}
std::string claim_family(const std::string& n_max) {
  return "the links L(T(2,2n+1)) for n = 1.." + n_max + " are pairwise non-concordant";
}

CertStep comp_step(std::string id, std::string invariant, std::string input,
                   std::string value, std::vector<std::string> premises = {}) {
  CertStep s;
  s.id = std::move(id);
  s.kind = "computation";
  s.invariant = std::move(invariant);
  s.input = std::move(input);
  s.value = std::move(value);
  s.premises = std::move(premises);
  return s;
}

CertStep inf_step(std::string id, std::string rule, std::vector<std::string> premises,
                  std::string claim) {
  CertStep s;
  s.id = std::move(id);
  s.kind = "inference";
  s.rule = std::move(rule);
  s.premises = std::move(premises);
  s.claim = std::move(claim);
  return s;
}

KnotPtr covering_knot_of(const KnotPtr& k) {
  // 2-fold covering knot of L(K) in the cover branched over the unknotted
  // second component: the untwisted positive-clasp double of K # reverse(K).
  return whitehead_pos(connected_sum(k, reverse(k)), 0);
}

// The d invariant of the double branched cover of the blow-down knot,
// computed the long way around: blow down, read off the genus-1 pattern,
// pass to the branched double cover chain, slam-dunk it to a single 1/m
// surgery and evaluate d there.
Rat d_pipeline_value(const KnotPtr& k) {
  KnotPtr b = blow_down_LK(k);
  Genus1Pattern pat = genus1_pattern(*b);
  ChainSurgery chain =
      double_branched_cover_genus1(pat.pairing, pat.core_band, pat.clasp_band);
  RationalSurgery rs = slam_dunk_reduce(chain);
  if (numerator(rs.coefficient) != 1)
    throw std::domain_error(
        "d pipeline: reduced surgery coefficient is not of the form 1/m");
  long long m = denominator(rs.coefficient).convert_to<long long>();
  return d_one_over_n_surgery(*rs.knot, m).value;
}

Rat d_formula_value(const KnotPtr& k) {
  KnotPtr pair = connected_sum(k, reverse(k));
  return Rat(-2 * v0_alternating(*pair));
}

}  // namespace

const std::vector<InferenceRule>& inference_rule_catalogue() {
  static const std::vector<InferenceRule> catalogue = {
      {"tau_nonzero_not_rationally_slice",
       "computation: tau(K) = v with v a nonzero integer",
       "K is not smoothly slice in a rational homology 4-ball"},
      {"tau_nonzero_not_homotopy_slice",
       "computation: tau(K) = v with v a nonzero integer",
       "K is not smoothly slice in a homotopy 4-ball"},
      {"covering_knot_obstruction",
       "computation: covering_knot(K) = J; inference: J is not smoothly slice "
       "in a rational homology 4-ball",
       "L(K) is not smoothly concordant to the Hopf link"},
      {"blowdown_obstruction",
       "computation: blowdown_knot(K) = B; inference: B is not smoothly slice "
       "in a homotopy 4-ball",
       "L(K) is not smoothly concordant to the Hopf link"},
      {"locally_knotted_upgrade",
       "computations: lk_alexander(K) = 1, components_unknotted(K) = true; "
       "inferences: both Hopf-link obstruction routes",
       "L(K) is not smoothly concordant to any locally knotted Hopf link"},
      {"sqp_pattern_propagation",
       "computations: sqp(K) = true, nontrivial(K) = true, blowdown_knot(K) = B",
       "B is strongly quasipositive and nontrivial"},
      {"sqp_not_homotopy_slice",
       "inference: B is strongly quasipositive and nontrivial",
       "B is not smoothly slice in a homotopy 4-ball"},
      {"d_family_distinguishes",
       "computations per n = 1..N: lk_alexander = 1 and d_pipeline = d_formula, "
       "with the d values pairwise distinct",
       "the links L(T(2,2n+1)) for n = 1..N are pairwise non-concordant"},
  };
  return catalogue;
}

Certificate certify_not_hopf(const KnotPtr& k) {
  if (!k) throw std::invalid_argument("certify: null knot");
  Certificate c;
  c.subject_kind = "LK";
  c.subject_param = to_string(k);
  const std::string& kstr = c.subject_param;

  c.steps.push_back(comp_step("s0", "lk_alexander", kstr,
                              two_variable_alexander(build_LK_ccomplex(k)).str()));
  c.steps.push_back(comp_step("s1", "components_unknotted", kstr, "true"));
  TauResult tk = tau(*k);
  c.steps.push_back(comp_step(
      "s2", "tau", kstr, tk.value ? std::to_string(*tk.value) : "unknown"));
  if (!tk.value || *tk.value <= 0) {
    // tau obstructs only on the positive side; nothing is proved here.
    c.conclusion = Conclusion::Inconclusive;
    c.conclusion_premises = {"s0", "s1", "s2"};
    return c;
  }

  // Route A: covering knot, rational homology ball obstruction.
  KnotPtr j = covering_knot_of(k);
  const std::string jstr = to_string(j);
  c.steps.push_back(comp_step("s3", "covering_knot", kstr, jstr));
  TauResult tj = tau(*j);
  if (!tj.value || *tj.value == 0)
    throw std::logic_error("certify: covering knot tau must be nonzero when tau(K) > 0");
  c.steps.push_back(comp_step("s4", "tau", jstr, std::to_string(*tj.value), {"s2"}));
  c.steps.push_back(inf_step("s5", "tau_nonzero_not_rationally_slice", {"s4"},
                             claim_not_rat_slice(jstr)));
  c.steps.push_back(
      inf_step("s6", "covering_knot_obstruction", {"s3", "s5"}, claim_not_hopf(kstr)));

  // Route B: blow-down image, homotopy ball obstruction.
  KnotPtr b = blow_down_LK(k);
  const std::string bstr = to_string(b);
  c.steps.push_back(comp_step("s7", "blowdown_knot", kstr, bstr));
  TauResult tb = tau(*b);
  if (!tb.value || *tb.value == 0)
    throw std::logic_error("certify: blow-down knot tau must be nonzero when tau(K) > 0");
  c.steps.push_back(comp_step("s8", "tau", bstr, std::to_string(*tb.value), {"s2"}));
  c.steps.push_back(inf_step("s9", "tau_nonzero_not_homotopy_slice", {"s8"},
                             claim_not_hty_slice(bstr)));
  c.steps.push_back(
      inf_step("s10", "blowdown_obstruction", {"s7", "s9"}, claim_not_hopf(kstr)));

  c.steps.push_back(inf_step("s11", "locally_knotted_upgrade",
                             {"s0", "s1", "s6", "s10"}, claim_not_lk_hopf(kstr)));
  c.conclusion = Conclusion::NotConcordantToLocallyKnottedHopf;
  c.conclusion_premises = {"s11"};
  return c;
}

Certificate sqp_certificate(const KnotPtr& k) {
  if (!k) throw std::invalid_argument("certify: null knot");
  Certificate c;
  c.subject_kind = "LK";
  c.subject_param = to_string(k);
  const std::string& kstr = c.subject_param;

  c.steps.push_back(comp_step("s0", "lk_alexander", kstr,
                              two_variable_alexander(build_LK_ccomplex(k)).str()));
  c.steps.push_back(comp_step("s1", "components_unknotted", kstr, "true"));
  const bool sqp = is_catalogued_sqp(*k);
  const bool nontrivial = !is_structural_unknot(*k);
  c.steps.push_back(comp_step("s2", "sqp", kstr, sqp ? "true" : "false"));
  c.steps.push_back(comp_step("s3", "nontrivial", kstr, nontrivial ? "true" : "false"));
  if (!sqp || !nontrivial) {
    c.conclusion = Conclusion::Inconclusive;
    c.conclusion_premises = {"s0", "s1", "s2", "s3"};
    return c;
  }

  KnotPtr b = blow_down_LK(k);
  const std::string bstr = to_string(b);
  c.steps.push_back(comp_step("s4", "blowdown_knot", kstr, bstr));
  c.steps.push_back(
      inf_step("s5", "sqp_pattern_propagation", {"s2", "s3", "s4"}, claim_sqp(bstr)));
  c.steps.push_back(
      inf_step("s6", "sqp_not_homotopy_slice", {"s5"}, claim_not_hty_slice(bstr)));
  c.steps.push_back(
      inf_step("s7", "blowdown_obstruction", {"s4", "s6"}, claim_not_hopf(kstr)));
  c.conclusion = Conclusion::NotConcordantToHopf;
  c.conclusion_premises = {"s0", "s1", "s7"};
  return c;
}

FamilyResult certify_family(long long n_max) {
  if (n_max < 1) throw std::invalid_argument("certify_family: n_max must be >= 1");
  FamilyResult result;
  Certificate& c = result.certificate;
  c.subject_kind = "family";
  c.subject_param = std::to_string(n_max);

  std::vector<std::string> all_ids;
  std::set<std::string> seen_d;
  for (long long n = 1; n <= n_max; ++n) {
    KnotPtr k = torus_knot(2, static_cast<int>(2 * n + 1));
    const std::string kstr = to_string(k);
    KnotPtr pair = connected_sum(k, reverse(k));

    Rat pipeline = d_pipeline_value(k);
    Rat formula = d_formula_value(k);
    if (!(pipeline == formula))
      throw std::logic_error("certify_family: surgery pipeline and direct formula "
                             "disagree at n = " + std::to_string(n));
    const std::string dstr = rational_to_string(pipeline);
    if (!seen_d.insert(dstr).second)
      throw std::logic_error("certify_family: repeated d value at n = " +
                             std::to_string(n));

    const std::string suffix = std::to_string(n);
    c.steps.push_back(comp_step("alex_" + suffix, "lk_alexander", kstr,
                                two_variable_alexander(build_LK_ccomplex(k)).str()));
    c.steps.push_back(comp_step("d_pipe_" + suffix, "d_pipeline", kstr, dstr));
    c.steps.push_back(comp_step("d_form_" + suffix, "d_formula", kstr,
                                rational_to_string(formula)));
    all_ids.push_back("alex_" + suffix);
    all_ids.push_back("d_pipe_" + suffix);
    all_ids.push_back("d_form_" + suffix);

    if (denominator(pipeline) != 1)
      throw std::logic_error("certify_family: non-integral d value");
    TauResult tk = tau(*k);
    if (!tk.value) throw std::logic_error("certify_family: tau unresolved on T(2,q)");
    FamilyRow row;
    row.n = n;
    row.signature_pair = signature(*pair);
    row.tau_value = *tk.value;
    row.v0_pair = v0_alternating(*pair);
    row.d_value = numerator(pipeline).convert_to<long long>();
    result.rows.push_back(row);
  }

  c.steps.push_back(inf_step("distinct", "d_family_distinguishes", all_ids,
                             claim_family(c.subject_param)));
  c.conclusion = Conclusion::FamilyPairwiseDistinct;
  c.conclusion_premises = {"distinct"};
  return result;
}

bool check_LK_alexander(const KnotPtr& k) {
  return unit_equal(two_variable_alexander(build_LK_ccomplex(k)),
                    LaurentPoly2::one());
}

namespace {

nlohmann::json certificate_json(const Certificate& c) {
  nlohmann::json j;
  j["subject_kind"] = c.subject_kind;
  j["subject_param"] = c.subject_param;
  nlohmann::json steps = nlohmann::json::array();
  for (const CertStep& s : c.steps) {
    nlohmann::json js;
    js["id"] = s.id;
    js["kind"] = s.kind;
    js["invariant"] = s.invariant;
    js["input"] = s.input;
    js["value"] = s.value;
    js["rule"] = s.rule;
    js["premises"] = s.premises;
    js["claim"] = s.claim;
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  j["conclusion_premises"] = c.conclusion_premises;
  j["conclusion"] = conclusion_name(c.conclusion);
  return j;
}

}  // namespace

std::string certificate_to_json(const Certificate& c) {
  return certificate_json(c).dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    Certificate c;
    c.subject_kind = j.at("subject_kind").get<std::string>();
    c.subject_param = j.at("subject_param").get<std::string>();
    for (const auto& js : j.at("steps")) {
      CertStep s;
      s.id = js.at("id").get<std::string>();
      s.kind = js.at("kind").get<std::string>();
      s.invariant = js.at("invariant").get<std::string>();
      s.input = js.at("input").get<std::string>();
      s.value = js.at("value").get<std::string>();
      s.rule = js.at("rule").get<std::string>();
      s.premises = js.at("premises").get<std::vector<std::string>>();
      s.claim = js.at("claim").get<std::string>();
      c.steps.push_back(std::move(s));
    }
    c.conclusion_premises =
        j.at("conclusion_premises").get<std::vector<std::string>>();
    c.conclusion = conclusion_from_name(j.at("conclusion").get<std::string>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate json: ") + e.what());
  }
}

namespace {

[[noreturn]] void replay_fail(const std::string& msg) {
  throw std::runtime_error("replay: " + msg);
}

KnotPtr parse_input_knot(const CertStep& s) {
  try {
    return parse_knot_expression(s.input);
  } catch (const parse_error& e) {
    replay_fail("step " + s.id + ": input is not a knot expression (" + e.what() + ")");
  }
}

void recompute(const CertStep& s) {
  std::string expect;
  if (s.invariant == "lk_alexander") {
    expect = two_variable_alexander(build_LK_ccomplex(parse_input_knot(s))).str();
  } else if (s.invariant == "components_unknotted") {
    parse_input_knot(s);
    expect = "true";  // both components of L(K) bound disks by construction
  } else if (s.invariant == "tau") {
    TauResult t = tau(*parse_input_knot(s));
    expect = t.value ? std::to_string(*t.value) : "unknown";
  } else if (s.invariant == "covering_knot") {
    expect = to_string(covering_knot_of(parse_input_knot(s)));
  } else if (s.invariant == "blowdown_knot") {
    expect = to_string(blow_down_LK(parse_input_knot(s)));
  } else if (s.invariant == "sqp") {
    expect = is_catalogued_sqp(*parse_input_knot(s)) ? "true" : "false";
  } else if (s.invariant == "nontrivial") {
    expect = is_structural_unknot(*parse_input_knot(s)) ? "false" : "true";
  } else if (s.invariant == "d_pipeline") {
    expect = rational_to_string(d_pipeline_value(parse_input_knot(s)));
  } else if (s.invariant == "d_formula") {
    expect = rational_to_string(d_formula_value(parse_input_knot(s)));
  } else {
    replay_fail("step " + s.id + ": unknown invariant " + s.invariant);
  }
  if (expect != s.value)
    replay_fail("step " + s.id + ": recomputed " + s.invariant + " = " + expect +
                ", certificate says " + s.value);
}

struct StepTable {
  const std::vector<CertStep>& steps;
  std::map<std::string, std::size_t> index;

  const CertStep& premise(const CertStep& s, std::size_t k) const {
    return steps[index.at(s.premises[k])];
  }
};

void require_premise_count(const CertStep& s, std::size_t n) {
  if (s.premises.size() != n)
    replay_fail("step " + s.id + ": rule " + s.rule + " needs " +
                std::to_string(n) + " premises");
}

void check_tau_nonzero(const CertStep& s, const StepTable& t, bool rational_ball) {
  require_premise_count(s, 1);
  const CertStep& p = t.premise(s, 0);
  if (p.kind != "computation" || p.invariant != "tau")
    replay_fail("step " + s.id + ": premise must be a tau computation");
  long long v = 0;
  if (!parse_ll(p.value, v) || v == 0)
    replay_fail("step " + s.id + ": premise tau value must be a nonzero integer");
  const std::string want = rational_ball ? claim_not_rat_slice(p.input)
                                         : claim_not_hty_slice(p.input);
  if (s.claim != want) replay_fail("step " + s.id + ": claim must read: " + want);
}

void require_lk_subject(const Certificate& c, const CertStep& s) {
  if (c.subject_kind != "LK")
    replay_fail("step " + s.id + ": rule " + s.rule + " applies to LK subjects only");
}

void check_computation_shape(const CertStep& p, const std::string& invariant,
                             const std::string& step_id) {
  if (p.kind != "computation" || p.invariant != invariant)
    replay_fail("step " + step_id + ": premise " + p.id + " must compute " + invariant);
}

void check_inference(const Certificate& c, const CertStep& s, const StepTable& t) {
  if (s.rule == "tau_nonzero_not_rationally_slice") {
    check_tau_nonzero(s, t, true);
  } else if (s.rule == "tau_nonzero_not_homotopy_slice") {
    check_tau_nonzero(s, t, false);
  } else if (s.rule == "covering_knot_obstruction") {
    require_lk_subject(c, s);
    require_premise_count(s, 2);
    const CertStep& p0 = t.premise(s, 0);
    const CertStep& p1 = t.premise(s, 1);
    check_computation_shape(p0, "covering_knot", s.id);
    if (p0.input != c.subject_param)
      replay_fail("step " + s.id + ": covering knot must be computed from the subject");
    if (p1.kind != "inference" || p1.rule != "tau_nonzero_not_rationally_slice")
      replay_fail("step " + s.id +
                  ": second premise must cite tau_nonzero_not_rationally_slice");
    if (p1.claim != claim_not_rat_slice(p0.value))
      replay_fail("step " + s.id + ": obstruction premise is about a different knot");
    if (s.claim != claim_not_hopf(c.subject_param))
      replay_fail("step " + s.id + ": claim must read: " + claim_not_hopf(c.subject_param));
  } else if (s.rule == "blowdown_obstruction") {
    require_lk_subject(c, s);
    require_premise_count(s, 2);
    const CertStep& p0 = t.premise(s, 0);
    const CertStep& p1 = t.premise(s, 1);
    check_computation_shape(p0, "blowdown_knot", s.id);
    if (p0.input != c.subject_param)
      replay_fail("step " + s.id + ": blow-down knot must be computed from the subject");
    if (p1.kind != "inference" || (p1.rule != "tau_nonzero_not_homotopy_slice" &&
                                   p1.rule != "sqp_not_homotopy_slice"))
      replay_fail("step " + s.id +
                  ": second premise must rule out sliceness in a homotopy 4-ball");
    if (p1.claim != claim_not_hty_slice(p0.value))
      replay_fail("step " + s.id + ": obstruction premise is about a different knot");
    if (s.claim != claim_not_hopf(c.subject_param))
      replay_fail("step " + s.id + ": claim must read: " + claim_not_hopf(c.subject_param));
  } else if (s.rule == "locally_knotted_upgrade") {
    require_lk_subject(c, s);
    require_premise_count(s, 4);
    const CertStep& p0 = t.premise(s, 0);
    const CertStep& p1 = t.premise(s, 1);
    const CertStep& p2 = t.premise(s, 2);
    const CertStep& p3 = t.premise(s, 3);
    check_computation_shape(p0, "lk_alexander", s.id);
    if (p0.input != c.subject_param || p0.value != "1")
      replay_fail("step " + s.id + ": needs lk_alexander(subject) = 1");
    check_computation_shape(p1, "components_unknotted", s.id);
    if (p1.input != c.subject_param || p1.value != "true")
      replay_fail("step " + s.id + ": needs components_unknotted(subject) = true");
    if (p2.kind != "inference" || p2.rule != "covering_knot_obstruction" ||
        p2.claim != claim_not_hopf(c.subject_param))
      replay_fail("step " + s.id + ": needs the covering knot route for the subject");
    if (p3.kind != "inference" || p3.rule != "blowdown_obstruction" ||
        p3.claim != claim_not_hopf(c.subject_param))
      replay_fail("step " + s.id + ": needs the blow-down route for the subject");
    if (s.claim != claim_not_lk_hopf(c.subject_param))
      replay_fail("step " + s.id + ": claim must read: " +
                  claim_not_lk_hopf(c.subject_param));
  } else if (s.rule == "sqp_pattern_propagation") {
    require_lk_subject(c, s);
    require_premise_count(s, 3);
    const CertStep& p0 = t.premise(s, 0);
    const CertStep& p1 = t.premise(s, 1);
    const CertStep& p2 = t.premise(s, 2);
    check_computation_shape(p0, "sqp", s.id);
    check_computation_shape(p1, "nontrivial", s.id);
    check_computation_shape(p2, "blowdown_knot", s.id);
    if (p0.input != c.subject_param || p0.value != "true")
      replay_fail("step " + s.id + ": needs sqp(subject) = true");
    if (p1.input != c.subject_param || p1.value != "true")
      replay_fail("step " + s.id + ": needs nontrivial(subject) = true");
    if (p2.input != c.subject_param)
      replay_fail("step " + s.id + ": blow-down knot must be computed from the subject");
    if (s.claim != claim_sqp(p2.value))
      replay_fail("step " + s.id + ": claim must read: " + claim_sqp(p2.value));
  } else if (s.rule == "sqp_not_homotopy_slice") {
    require_premise_count(s, 1);
    const CertStep& p = t.premise(s, 0);
    if (p.kind != "inference" || p.rule != "sqp_pattern_propagation")
      replay_fail("step " + s.id + ": premise must cite sqp_pattern_propagation");
    const std::string suffix = " is strongly quasipositive and nontrivial";
    if (p.claim.size() <= suffix.size() ||
        p.claim.compare(p.claim.size() - suffix.size(), suffix.size(), suffix) != 0)
      replay_fail("step " + s.id + ": premise claim has the wrong shape");
    const std::string b = p.claim.substr(0, p.claim.size() - suffix.size());
    if (s.claim != claim_not_hty_slice(b))
      replay_fail("step " + s.id + ": claim must read: " + claim_not_hty_slice(b));
  } else if (s.rule == "d_family_distinguishes") {
    if (c.subject_kind != "family")
      replay_fail("step " + s.id + ": rule applies to family subjects only");
    long long n_max = 0;
    if (!parse_ll(c.subject_param, n_max) || n_max < 1)
      replay_fail("family subject parameter must be a positive integer");
    if (s.premises.size() != static_cast<std::size_t>(3 * n_max))
      replay_fail("step " + s.id + ": needs the three computations for every n");
    std::map<std::string, const CertStep*> alex, pipe, form;
    for (std::size_t i = 0; i < s.premises.size(); ++i) {
      const CertStep& p = t.premise(s, i);
      if (p.kind != "computation")
        replay_fail("step " + s.id + ": all premises must be computations");
      std::map<std::string, const CertStep*>* bucket = nullptr;
      if (p.invariant == "lk_alexander") bucket = &alex;
      else if (p.invariant == "d_pipeline") bucket = &pipe;
      else if (p.invariant == "d_formula") bucket = &form;
      else replay_fail("step " + s.id + ": unexpected premise invariant " + p.invariant);
      if (!bucket->emplace(p.input, &p).second)
        replay_fail("step " + s.id + ": duplicate premise for " + p.input);
    }
    std::set<std::string> d_values;
    for (long long n = 1; n <= n_max; ++n) {
      const std::string kstr =
          to_string(torus_knot(2, static_cast<int>(2 * n + 1)));
      auto a = alex.find(kstr);
      auto p = pipe.find(kstr);
      auto f = form.find(kstr);
      if (a == alex.end() || p == pipe.end() || f == form.end())
        replay_fail("step " + s.id + ": missing computations for " + kstr);
      if (a->second->value != "1")
        replay_fail("step " + s.id + ": needs lk_alexander(" + kstr + ") = 1");
      if (p->second->value != f->second->value)
        replay_fail("step " + s.id + ": pipeline and formula disagree for " + kstr);
      if (!d_values.insert(p->second->value).second)
        replay_fail("step " + s.id + ": d values are not pairwise distinct");
    }
    if (alex.size() != static_cast<std::size_t>(n_max))
      replay_fail("step " + s.id + ": premises mention knots outside the family");
    if (s.claim != claim_family(c.subject_param))
      replay_fail("step " + s.id + ": claim must read: " + claim_family(c.subject_param));
  } else {
    replay_fail("step " + s.id + ": rule " + s.rule + " is not in the catalogue");
  }
}

}  // namespace

void replay_validate(const Certificate& c) {
  if (c.subject_kind == "LK") {
    try {
      parse_knot_expression(c.subject_param);
    } catch (const parse_error& e) {
      replay_fail(std::string("subject is not a knot expression (") + e.what() + ")");
    }
  } else if (c.subject_kind == "family") {
    long long n_max = 0;
    if (!parse_ll(c.subject_param, n_max) || n_max < 1)
      replay_fail("family subject parameter must be a positive integer");
  } else {
    replay_fail("unknown subject kind " + c.subject_kind);
  }

  if (c.steps.empty()) replay_fail("certificate has no steps");
  StepTable table{c.steps, {}};
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const CertStep& s = c.steps[i];
    if (s.id.empty()) replay_fail("step with empty id");
    if (!table.index.emplace(s.id, i).second) replay_fail("duplicate step id " + s.id);
    if (s.kind != "computation" && s.kind != "inference")
      replay_fail("step " + s.id + ": unknown kind " + s.kind);
    for (const std::string& p : s.premises) {
      auto it = table.index.find(p);
      if (it == table.index.end() || it->second >= i)
        replay_fail("step " + s.id + ": premise " + p +
                    " does not name an earlier step");
    }
  }

  for (const CertStep& s : c.steps) {
    if (s.kind == "computation") {
      if (!s.rule.empty() || !s.claim.empty())
        replay_fail("step " + s.id + ": computation steps carry no rule or claim");
      recompute(s);
    } else {
      if (!s.invariant.empty() || !s.input.empty() || !s.value.empty())
        replay_fail("step " + s.id + ": inference steps carry no computation fields");
      bool catalogued = false;
      for (const InferenceRule& r : inference_rule_catalogue())
        if (r.name == s.rule) catalogued = true;
      if (!catalogued)
        replay_fail("step " + s.id + ": rule " + s.rule + " is not in the catalogue");
      check_inference(c, s, table);
    }
  }

  if (c.conclusion_premises.empty()) replay_fail("conclusion cites no steps");
  for (const std::string& p : c.conclusion_premises)
    if (!table.index.count(p)) replay_fail("conclusion premise " + p + " does not exist");
  auto conclusion_step = [&](std::size_t k) -> const CertStep& {
    return c.steps[table.index.at(c.conclusion_premises[k])];
  };

  switch (c.conclusion) {
    case Conclusion::NotConcordantToLocallyKnottedHopf: {
      if (c.subject_kind != "LK") replay_fail("conclusion needs an LK subject");
      if (c.conclusion_premises.size() != 1)
        replay_fail("conclusion needs exactly one premise");
      const CertStep& s = conclusion_step(0);
      if (s.kind != "inference" || s.rule != "locally_knotted_upgrade" ||
          s.claim != claim_not_lk_hopf(c.subject_param))
        replay_fail("conclusion is not supported by a locally_knotted_upgrade step");
      break;
    }
    case Conclusion::NotConcordantToHopf: {
      if (c.subject_kind != "LK") replay_fail("conclusion needs an LK subject");
      if (c.conclusion_premises.size() != 3)
        replay_fail("conclusion needs the two preamble computations and one route");
      bool have_alex = false, have_unknotted = false, have_route = false;
      for (std::size_t i = 0; i < 3; ++i) {
        const CertStep& s = conclusion_step(i);
        if (s.kind == "computation" && s.invariant == "lk_alexander" &&
            s.input == c.subject_param && s.value == "1")
          have_alex = true;
        else if (s.kind == "computation" && s.invariant == "components_unknotted" &&
                 s.input == c.subject_param && s.value == "true")
          have_unknotted = true;
        else if (s.kind == "inference" && s.claim == claim_not_hopf(c.subject_param))
          have_route = true;
      }
      if (!have_alex || !have_unknotted || !have_route)
        replay_fail("conclusion premises must be lk_alexander = 1, "
                    "components_unknotted = true and one obstruction route");
      break;
    }
    case Conclusion::FamilyPairwiseDistinct: {
      if (c.subject_kind != "family") replay_fail("conclusion needs a family subject");
      if (c.conclusion_premises.size() != 1)
        replay_fail("conclusion needs exactly one premise");
      const CertStep& s = conclusion_step(0);
      if (s.kind != "inference" || s.rule != "d_family_distinguishes" ||
          s.claim != claim_family(c.subject_param))
        replay_fail("conclusion is not supported by a d_family_distinguishes step");
      break;
    }
    case Conclusion::Inconclusive:
      break;
  }

  // Monotone honesty: every recorded step must feed the conclusion.
  std::set<std::string> reachable;
  std::vector<std::string> queue = c.conclusion_premises;
  while (!queue.empty()) {
    std::string id = queue.back();
    queue.pop_back();
    if (!reachable.insert(id).second) continue;
    for (const std::string& p : c.steps[table.index.at(id)].premises)
      queue.push_back(p);
  }
  for (const CertStep& s : c.steps)
    if (!reachable.count(s.id))
      replay_fail("step " + s.id + " is not reachable from the conclusion");
}

std::string certificate_to_markdown(const Certificate& c) {
  std::string out = "# Non-concordance certificate\n\n";
  if (c.subject_kind == "LK")
    out += "Subject: the link L(K) for K = `" + c.subject_param + "`\n\n";
  else
    out += "Subject: the family L(T(2,2n+1)) for n = 1.." + c.subject_param + "\n\n";
  out += "Conclusion: **" + conclusion_name(c.conclusion) + "**";
  if (!c.conclusion_premises.empty()) {
    out += " (from ";
    for (std::size_t i = 0; i < c.conclusion_premises.size(); ++i) {
      if (i) out += ", ";
      out += c.conclusion_premises[i];
    }
    out += ")";
  }
  out += "\n\n## Steps\n\n";
  for (const CertStep& s : c.steps) {
    out += "### " + s.id + " (" + s.kind + ")\n\n";
    if (s.kind == "computation") {
      out += "- invariant: " + s.invariant + "\n";
      out += "- input: `" + s.input + "`\n";
      out += "- value: `" + s.value + "`\n";
    } else {
      out += "- rule: " + s.rule + "\n";
      out += "- claim: " + s.claim + "\n";
    }
    if (!s.premises.empty()) {
      out += "- premises: ";
      for (std::size_t i = 0; i < s.premises.size(); ++i) {
        if (i) out += ", ";
        out += s.premises[i];
      }
      out += "\n";
    }
    out += "\n";
  }
  return out;
}

std::string family_rows_to_csv(const std::vector<FamilyRow>& rows) {
  std::string out = "n,signature,tau,v0,d\n";
  for (const FamilyRow& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.signature_pair) + "," +
           std::to_string(r.tau_value) + "," + std::to_string(r.v0_pair) + "," +
           std::to_string(r.d_value) + "\n";
  }
  return out;
}

std::string family_rows_to_markdown(const std::vector<FamilyRow>& rows) {
  std::string out = "| n | signature | tau | v0 | d |\n";
  out += "| ---: | ---: | ---: | ---: | ---: |\n";
  for (const FamilyRow& r : rows) {
    out += "| " + std::to_string(r.n) + " | " + std::to_string(r.signature_pair) +
           " | " + std::to_string(r.tau_value) + " | " + std::to_string(r.v0_pair) +
           " | " + std::to_string(r.d_value) + " |\n";
  }
  return out;
}

std::string family_result_to_json(const FamilyResult& r) {
  nlohmann::json j;
  j["certificate"] = certificate_json(r.certificate);
  nlohmann::json rows = nlohmann::json::array();
  for (const FamilyRow& row : r.rows) {
    nlohmann::json jr;
    jr["n"] = row.n;
    jr["signature"] = row.signature_pair;
    jr["tau"] = row.tau_value;
    jr["v0"] = row.v0_pair;
    jr["d"] = row.d_value;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace concord
