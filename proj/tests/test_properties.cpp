// Randomized invariant checks. Each property fixes its own seed so failures
// reproduce; CAPTURE carries the trial index and a rendering of the input.

#include <doctest.h>

#include <numeric>
#include <random>

#include "concord/ccomplex.hpp"
#include "concord/floer.hpp"
#include "concord/kirby.hpp"
#include "concord/knots.hpp"
#include "concord/laurent.hpp"
#include "oracle/oracles.hpp"

using namespace concord;

TEST_CASE("Alexander polynomials are symmetric with value +-1 at 1") {
  std::mt19937_64 rng(0xa1e7a2d001);
  for (int trial = 0; trial < 200; ++trial) {
    auto k = oracle::random_knot(rng, 3);
    CAPTURE(trial);
    CAPTURE(to_string(k));
    auto d = alexander_polynomial(*k);
    CHECK(normalize_units_1(d.inverted_variable()) == d);
    auto v = d.eval_at_one();
    CHECK((v == 1 || v == -1));
  }
}

TEST_CASE("signatures are even, additive, and odd under mirroring") {
  std::mt19937_64 rng(0xa1e7a2d002);
  for (int trial = 0; trial < 200; ++trial) {
    auto k = oracle::random_knot(rng, 3);
    CAPTURE(trial);
    CAPTURE(to_string(k));
    int s = signature(*k);
    CHECK(s % 2 == 0);
    CHECK(signature(*mirror(k)) == -s);
    CHECK(signature(*reverse(k)) == s);
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_knot(rng, 2);
    auto b = oracle::random_knot(rng, 2);
    CAPTURE(trial);
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    CHECK(signature(*connected_sum(a, b)) == signature(*a) + signature(*b));
  }
}

TEST_CASE("every Seifert matrix the catalogue produces is a Seifert pairing") {
  std::mt19937_64 rng(0xa1e7a2d003);
  for (int trial = 0; trial < 200; ++trial) {
    auto k = oracle::random_knot(rng, 3);
    CAPTURE(trial);
    CAPTURE(to_string(k));
    CHECK(is_unimodular_seifert_pairing(seifert_matrix(*k)));
  }
}

TEST_CASE("determinant is the Alexander value at -1 and is odd") {
  std::mt19937_64 rng(0xa1e7a2d004);
  for (int trial = 0; trial < 150; ++trial) {
    auto k = oracle::random_knot(rng, 3);
    CAPTURE(trial);
    CAPTURE(to_string(k));
    Int det = determinant(*k);
    CHECK(det > 0);
    CHECK(det % 2 == 1);
    Int v = alexander_polynomial(*k).eval_at_minus_one();
    CHECK((det == v || det == -v));
  }
}

TEST_CASE("unit normalization is idempotent and compatible with units") {
  std::mt19937_64 rng(0xa1e7a2d005);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = oracle::random_laurent1(rng, 6);
    CAPTURE(trial);
    CAPTURE(p.str());
    auto n = normalize_units_1(p);
    CHECK(normalize_units_1(n) == n);
    CHECK(unit_equal(p, n));
    CHECK(normalize_units_1(-p.shifted(3)) == n);
  }
  for (int trial = 0; trial < 200; ++trial) {
    auto p = oracle::random_laurent2(rng, 6);
    CAPTURE(trial);
    CAPTURE(p.str());
    auto n = normalize_units_2(p);
    CHECK(normalize_units_2(n) == n);
    CHECK(unit_equal(p, n));
    CHECK(normalize_units_2(-p.shifted(2, -1)) == n);
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937_64 rng(0xa1e7a2d006);
  int done1 = 0;
  while (done1 < 200) {
    auto p = oracle::random_laurent1(rng, 5);
    auto q = oracle::random_laurent1(rng, 5);
    if (q.is_zero()) continue;
    ++done1;
    CAPTURE(p.str());
    CAPTURE(q.str());
    CHECK(exact_divide(p * q, q) == p);
  }
  int done2 = 0;
  while (done2 < 100) {
    auto p = oracle::random_laurent2(rng, 4);
    auto q = oracle::random_laurent2(rng, 4);
    if (q.is_zero()) continue;
    ++done2;
    CAPTURE(p.str());
    CAPTURE(q.str());
    CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("parsing inverts rendering") {
  std::mt19937_64 rng(0xa1e7a2d007);
  for (int trial = 0; trial < 150; ++trial) {
    auto p = oracle::random_laurent1(rng, 7);
    CAPTURE(trial);
    CHECK(parse_laurent1(p.str()) == p);
    auto q = oracle::random_laurent2(rng, 7);
    CHECK(parse_laurent2(q.str()) == q);
    // the parser reassociates sums to the left, so round-trip on the
    // rendering (a fixed point) and on the invariants, not on the tree
    auto k = oracle::random_knot(rng, 3);
    auto back = parse_knot_expression(to_string(k));
    CHECK(to_string(back) == to_string(k));
    CHECK(alexander_polynomial(*back) == alexander_polynomial(*k));
    CHECK(signature(*back) == signature(*k));
  }
}

TEST_CASE("evaluation maps are ring homomorphisms") {
  std::mt19937_64 rng(0xa1e7a2d008);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = oracle::random_laurent2(rng, 5);
    auto q = oracle::random_laurent2(rng, 5);
    CAPTURE(trial);
    CHECK((p * q).eval_at_y_one() == p.eval_at_y_one() * q.eval_at_y_one());
    CHECK((p + q).eval_at_x_one() == p.eval_at_x_one() + q.eval_at_x_one());
  }
}

TEST_CASE("torus polynomials agree with the cyclotomic quotient") {
  for (int p = 2; p <= 7; ++p)
    for (int q = p + 1; q <= 8; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      CHECK(alexander_polynomial(*torus_knot(p, q)) ==
            oracle::cyclotomic_torus_alexander(p, q));
      CHECK(determinant(*torus_knot(p, q)) ==
            abs(oracle::cyclotomic_torus_alexander(p, q).eval_at_minus_one()));
    }
}

TEST_CASE("random pushoff complexes have symmetric stripped determinants") {
  std::mt19937_64 rng(0xa1e7a2d009);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<long long> lkd(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    CComplex c;
    c.basis_size = n;
    c.A_pp = IntMatrix(n, n);
    c.A_pm = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        c.A_pp.at(i, j) = entry(rng);
        c.A_pm.at(i, j) = entry(rng);
      }
    c.A_mm = c.A_pp.transpose();
    c.A_mp = c.A_pm.transpose();
    c.lk = lkd(rng);
    CAPTURE(trial);
    auto d = two_variable_alexander(c);
    // (xy)^deg * d(1/x, 1/y) == d up to units, zero included
    CHECK(unit_equal(d.inverted_variables(), d));
  }
}

TEST_CASE("slam dunk agrees with the continued fraction fold") {
  std::mt19937_64 rng(0xa1e7a2d00a);
  for (int trial = 0; trial < 200; ++trial) {
    auto framings = oracle::random_chain_framings(rng);
    CAPTURE(trial);
    ChainSurgery chain;
    chain.components.push_back({Rat(framings[0]), unknot()});
    for (std::size_t i = 1; i < framings.size(); ++i)
      chain.components.push_back({Rat(framings[i]), unknot()});
    auto folded = oracle::continued_fraction_fold(framings);
    if (!folded) {
      CHECK_THROWS_AS(slam_dunk_reduce(chain), slam_dunk_error);
    } else {
      auto r = slam_dunk_reduce(chain);
      CHECK(r.coefficient == Rat(Int(folded->first)) / Rat(Int(folded->second)));
    }
  }
}

TEST_CASE("blowing down preserves the determinant up to the framing sign") {
  std::mt19937_64 rng(0xa1e7a2d00b);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> dim(2, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    LinkedSurgery s;
    s.matrix = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        int e = entry(rng);
        s.matrix.at(i, j) = e;
        s.matrix.at(j, i) = e;
      }
    const std::size_t u =
        std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const int eps = sign(rng) ? 1 : -1;
    s.matrix.at(u, u) = eps;
    s.labels.assign(n, unknot());
    CAPTURE(trial);
    auto t = blow_down(s, u);
    CHECK(determinant_int(s.matrix) == Int(eps) * determinant_int(t.matrix));
  }
}

TEST_CASE("random Seifert pairings feed the whole invariant stack") {
  std::mt19937_64 rng(0xa1e7a2d00c);
  for (int trial = 0; trial < 100; ++trial) {
    auto v = oracle::random_unimodular_pairing(rng, 1 + trial % 2);
    auto k = raw_seifert(v, false);
    CAPTURE(trial);
    auto d = alexander_polynomial(*k);
    CHECK(normalize_units_1(d.inverted_variable()) == d);
    auto val = d.eval_at_one();
    CHECK((val == 1 || val == -1));
    CHECK(signature(*k) % 2 == 0);
    CHECK(determinant(*k) % 2 == 1);
    // torsion is defined exactly because the value at 1 is +-1
    auto tors = torsion_coefficients(*k, 3);
    CHECK(tors.size() == 4);
  }
}
