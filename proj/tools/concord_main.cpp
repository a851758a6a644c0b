// concord: exact concordance invariants on the command line.
//
// Every number printed is exact (arbitrary-precision integer or rational);
// outputs are JSON unless a subcommand offers csv/markdown. Exit codes:
//   0  definitive answer
//   2  inconclusive / unknown (one-sided invariants proved nothing)
//   1  any error (bad input, shape violations, replay failures)

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "concord/ccomplex.hpp"
#include "concord/certify.hpp"
#include "concord/floer.hpp"
#include "concord/kirby.hpp"
#include "concord/knots.hpp"

namespace {

using nlohmann::json;
using namespace concord;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// --out NAME writes to $CONCORD_OUT_DIR/NAME (plain NAME when the variable is
// unset); without --out everything goes to stdout.
void emit(const std::string& out_name, const std::string& text) {
  if (out_name.empty()) {
    std::cout << text;
    return;
  }
  namespace fs = std::filesystem;
  const char* dir = std::getenv("CONCORD_OUT_DIR");
  fs::path p = dir != nullptr ? fs::path(dir) / out_name : fs::path(out_name);
  std::ofstream f(p, std::ios::binary);
  f << text;
  f.flush();
  if (!f) throw std::runtime_error("cannot write " + p.string());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact knot and link concordance invariants"};
  app.require_subcommand(1);
  int exit_code = 0;

  struct {
    std::string expr, out;
    long long torsion_upto = 2;
  } inv;
  auto* inv_cmd = app.add_subcommand(
      "invariants", "Alexander polynomial, signature, determinant, tau and "
                    "torsion coefficients of a knot expression");
  inv_cmd->add_option("expr", inv.expr, "knot expression")->required();
  inv_cmd->add_option("--torsion-upto", inv.torsion_upto,
                      "largest torsion coefficient index");
  inv_cmd->add_option("--out", inv.out, "output file name");
  inv_cmd->callback([&] {
    KnotPtr k = parse_knot_expression(inv.expr);
    json j;
    j["expr"] = to_string(k);
    j["alexander"] = alexander_polynomial(*k).str();
    j["signature"] = signature(*k);
    j["determinant"] = determinant(*k).str();
    TauResult t = tau(*k);
    if (t.value)
      j["tau"] = *t.value;
    else
      j["tau"] = "unknown";
    json torsion = json::array();
    for (const Int& c :
         torsion_coefficients(*k, static_cast<std::size_t>(inv.torsion_upto)))
      torsion.push_back(c.str());
    j["torsion"] = torsion;
    emit(inv.out, dump(j));
  });

  struct {
    std::string ccomplex_path, lk_expr, out;
  } la;
  auto* la_cmd = app.add_subcommand(
      "link-alexander", "two-variable Alexander polynomial of a 2-component "
                        "link from clasp-complex pushoff data");
  la_cmd->add_option("--ccomplex", la.ccomplex_path, "pushoff data (JSON file)");
  la_cmd->add_option("--LK", la.lk_expr,
                     "use the built-in complex of the link L(K) for this K");
  la_cmd->add_option("--out", la.out, "output file name");
  la_cmd->callback([&] {
    if (la.ccomplex_path.empty() == la.lk_expr.empty())
      throw std::invalid_argument("pass exactly one of --ccomplex and --LK");
    CComplex cc;
    json j;
    if (!la.ccomplex_path.empty()) {
      cc = ccomplex_from_json(read_file(la.ccomplex_path));
    } else {
      KnotPtr k = parse_knot_expression(la.lk_expr);
      cc = build_LK_ccomplex(k);
      j["expr"] = to_string(k);
    }
    LaurentPoly2 delta = two_variable_alexander(cc);
    j["alexander"] = delta.str();
    j["lk"] = cc.lk;
    j["torres_ok"] = torres_check(delta, cc.lk, cc.component_poly1);
    emit(la.out, dump(j));
  });

  struct {
    std::string expr, out;
  } ta;
  auto* tau_cmd =
      app.add_subcommand("tau", "tau by the closed rule catalogue, with its "
                                "derivation (exit 2 when no rule applies)");
  tau_cmd->add_option("expr", ta.expr, "knot expression")->required();
  tau_cmd->add_option("--out", ta.out, "output file name");
  tau_cmd->callback([&] {
    KnotPtr k = parse_knot_expression(ta.expr);
    TauResult t = tau(*k);
    json j;
    j["expr"] = to_string(k);
    if (t.value)
      j["tau"] = *t.value;
    else
      j["tau"] = "unknown";
    json steps = json::array();
    for (const TauStep& s : t.derivation) {
      json js;
      js["rule"] = s.rule;
      js["node"] = s.node;
      steps.push_back(std::move(js));
    }
    j["derivation"] = steps;
    emit(ta.out, dump(j));
    if (!t.value) exit_code = 2;
  });

  struct {
    std::string expr, surgery, out;
  } di;
  auto* di_cmd = app.add_subcommand(
      "dinv", "correction term of 1/n surgery on an alternating knot");
  di_cmd->add_option("expr", di.expr, "knot expression")->required();
  di_cmd->add_option("--surgery", di.surgery, "coefficient, must be 1/n")
      ->required();
  di_cmd->add_option("--out", di.out, "output file name");
  di_cmd->callback([&] {
    KnotPtr k = parse_knot_expression(di.expr);
    Rat coeff = parse_rational(di.surgery);
    if (numerator(coeff) != 1)
      throw std::invalid_argument("surgery coefficient must be 1/n with n >= 1");
    DValue d = d_one_over_n_surgery(*k, denominator(coeff).convert_to<long long>());
    json j;
    j["expr"] = to_string(k);
    j["surgery"] = rational_to_string(coeff);
    j["d"] = rational_to_string(d.value);
    emit(di.out, dump(j));
  });

  struct {
    long long p = 0, q = 0;
    std::string out;
  } dl;
  auto* dl_cmd =
      app.add_subcommand("dlens", "correction terms of the lens space L(p,q)");
  dl_cmd->add_option("p", dl.p, "order of H_1")->required();
  dl_cmd->add_option("q", dl.q, "surgery parameter, 0 <= q < p")->required();
  dl_cmd->add_option("--out", dl.out, "output file name");
  dl_cmd->callback([&] {
    json values = json::array();
    for (long long i = 0; i < dl.p; ++i)
      values.push_back(rational_to_string(d_lens(dl.p, dl.q, i).value));
    json j;
    j["p"] = dl.p;
    j["q"] = dl.q;
    j["d"] = values;
    emit(dl.out, dump(j));
  });

  struct {
    std::string path, out;
  } sd;
  auto* sd_cmd = app.add_subcommand(
      "slamdunk", "fold a surgery chain into one rational surgery");
  sd_cmd->add_option("chain", sd.path, "chain description (JSON file)")->required();
  sd_cmd->add_option("--out", sd.out, "output file name");
  sd_cmd->callback([&] {
    FramedChain fc = framed_chain_from_json(read_file(sd.path));
    const auto* chain = std::get_if<ChainSurgery>(&fc);
    if (chain == nullptr)
      throw std::invalid_argument(
          "slamdunk operates on chains (no linking matrix)");
    emit(sd.out, rational_surgery_to_json(slam_dunk_reduce(*chain)));
  });

  struct {
    std::string path, out;
    std::size_t component = 0;
  } bd;
  auto* bd_cmd = app.add_subcommand(
      "blowdown", "blow down a +-1-framed unknotted component");
  bd_cmd->add_option("chain", bd.path, "surgery description (JSON file)")->required();
  bd_cmd->add_option("--component", bd.component, "index of the component")
      ->required();
  bd_cmd->add_option("--out", bd.out, "output file name");
  bd_cmd->callback([&] {
    FramedChain fc = framed_chain_from_json(read_file(bd.path));
    LinkedSurgery linked = std::holds_alternative<ChainSurgery>(fc)
                               ? chain_to_linked(std::get<ChainSurgery>(fc))
                               : std::get<LinkedSurgery>(fc);
    emit(bd.out, framed_chain_to_json(FramedChain(blow_down(linked, bd.component))));
  });

  struct {
    std::string expr, out;
  } cv;
  auto* cv_cmd = app.add_subcommand(
      "cover2", "surgery chain for the double branched cover of a genus-1 knot");
  cv_cmd->add_option("expr", cv.expr, "knot expression")->required();
  cv_cmd->add_option("--out", cv.out, "output file name");
  cv_cmd->callback([&] {
    KnotPtr k = parse_knot_expression(cv.expr);
    Genus1Pattern pat = genus1_pattern(*k);
    ChainSurgery chain =
        double_branched_cover_genus1(pat.pairing, pat.core_band, pat.clasp_band);
    emit(cv.out, framed_chain_to_json(FramedChain(chain)));
  });

  struct {
    std::string expr, out, format = "json";
  } ce;
  auto* ce_cmd = app.add_subcommand(
      "certify", "machine-checkable certificate that L(K) is not concordant "
                 "to any locally knotted Hopf link (exit 2 if inconclusive)");
  ce_cmd->add_option("expr", ce.expr, "companion knot K")->required();
  ce_cmd->add_option("--format", ce.format, "json or md")
      ->check(CLI::IsMember({"json", "md"}));
  ce_cmd->add_option("--out", ce.out, "output file name");
  ce_cmd->callback([&] {
    Certificate cert = certify_not_hopf(parse_knot_expression(ce.expr));
    replay_validate(cert);  // never emit an unchecked certificate
    emit(ce.out, ce.format == "md" ? certificate_to_markdown(cert)
                                   : certificate_to_json(cert));
    if (cert.conclusion == Conclusion::Inconclusive) exit_code = 2;
  });

  struct {
    std::string expr, out, format = "json";
  } sq;
  auto* sq_cmd = app.add_subcommand(
      "sqp", "tau-free certificate from strong quasipositivity of K "
             "(exit 2 if inconclusive)");
  sq_cmd->add_option("expr", sq.expr, "companion knot K")->required();
  sq_cmd->add_option("--format", sq.format, "json or md")
      ->check(CLI::IsMember({"json", "md"}));
  sq_cmd->add_option("--out", sq.out, "output file name");
  sq_cmd->callback([&] {
    Certificate cert = sqp_certificate(parse_knot_expression(sq.expr));
    replay_validate(cert);
    emit(sq.out, sq.format == "md" ? certificate_to_markdown(cert)
                                   : certificate_to_json(cert));
    if (cert.conclusion == Conclusion::Inconclusive) exit_code = 2;
  });

  struct {
    long long n_max = 0;
    std::string out, format = "md";
  } tb;
  auto* tb_cmd = app.add_subcommand(
      "table", "invariant table and pairwise-distinctness certificate for the "
               "family L(T(2,2n+1))");
  tb_cmd->add_option("--n-max", tb.n_max, "largest n")->required();
  tb_cmd->add_option("--format", tb.format, "csv, md or json")
      ->check(CLI::IsMember({"csv", "md", "json"}));
  tb_cmd->add_option("--out", tb.out, "output file name");
  tb_cmd->callback([&] {
    FamilyResult fam = certify_family(tb.n_max);
    replay_validate(fam.certificate);
    std::string text;
    if (tb.format == "csv")
      text = family_rows_to_csv(fam.rows);
    else if (tb.format == "md")
      text = family_rows_to_markdown(fam.rows);
    else
      text = family_result_to_json(fam);
    emit(tb.out, text);
  });

  struct {
    std::string expr, out;
  } ca;
  auto* ca_cmd = app.add_subcommand(
      "check-alexander",
      "check that the link L(K) has two-variable Alexander polynomial 1");
  ca_cmd->add_option("expr", ca.expr, "companion knot K")->required();
  ca_cmd->add_option("--out", ca.out, "output file name");
  ca_cmd->callback([&] {
    KnotPtr k = parse_knot_expression(ca.expr);
    json j;
    j["expr"] = to_string(k);
    j["alexander_trivial"] = check_LK_alexander(k);
    emit(ca.out, dump(j));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
