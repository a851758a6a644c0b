#include "concord/ccomplex.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace concord {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

LaurentPoly2 two_variable_alexander(const CComplex& c) {
  const std::size_t n = c.basis_size;
  for (const IntMatrix* m : {&c.A_pp, &c.A_pm, &c.A_mp, &c.A_mm}) {
    require(m->rows() == n && m->cols() == n,
            "c-complex: pushoff matrix shape does not match basis size");
  }
  require(c.A_mm == c.A_pp.transpose(),
          "c-complex: duality A_mm = A_pp^T violated");
  require(c.A_mp == c.A_pm.transpose(),
          "c-complex: duality A_mp = A_pm^T violated");

  const LaurentPoly2 one = LaurentPoly2::one();
  const LaurentPoly2 x = LaurentPoly2::x();
  const LaurentPoly2 y = LaurentPoly2::y();

  std::vector<std::vector<LaurentPoly2>> m(n, std::vector<LaurentPoly2>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = LaurentPoly2::constant(c.A_pp.at(i, j)) -
                x * LaurentPoly2::constant(c.A_mp.at(i, j)) -
                y * LaurentPoly2::constant(c.A_pm.at(i, j)) +
                x * y * LaurentPoly2::constant(c.A_mm.at(i, j));
    }
  }
  LaurentPoly2 det = detail::bareiss_poly2(std::move(m));
  if (det.is_zero()) return det;

  const LaurentPoly2 x_minus_1 = x - one;
  const LaurentPoly2 y_minus_1 = y - one;
  while (det.eval_at_x_one().is_zero()) det = exact_divide(det, x_minus_1);
  while (det.eval_at_y_one().is_zero()) det = exact_divide(det, y_minus_1);
  return normalize_units_2(det);
}

CComplex build_LK_ccomplex(const KnotPtr& k) {
  if (!k) throw std::invalid_argument("build_LK_ccomplex: null knot");
  CComplex c;
  c.basis_size = 2;
  c.A_pp = IntMatrix::from_rows({{0, 1}, {0, 1}});
  c.A_pm = IntMatrix::from_rows({{0, 1}, {0, 0}});
  c.A_mp = IntMatrix::from_rows({{0, 0}, {1, 0}});
  c.A_mm = IntMatrix::from_rows({{0, 0}, {1, 1}});
  c.lk = 1;
  c.component_poly1 = LaurentPoly1::one();
  c.component_poly2 = LaurentPoly1::one();
  return c;
}

bool torres_check(const LaurentPoly2& p, long long lk,
                  const LaurentPoly1& delta1) {
  LaurentPoly1 lhs = p.eval_at_y_one();
  LaurentPoly1 rhs;  // zero
  long long l = lk < 0 ? -lk : lk;
  if (l != 0) {
    LaurentPoly1 geom;
    for (long long i = 0; i < l; ++i) geom += LaurentPoly1::term(i, 1);
    rhs = delta1 * geom;
  }
  return unit_equal(lhs, rhs);
}

namespace {

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(static_cast<long long>(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("c-complex json: matrix must be an array of rows");
  std::vector<std::vector<long long>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("c-complex json: matrix row must be an array");
    std::vector<long long> r;
    for (const auto& entry : row) {
      if (!entry.is_number_integer())
        throw std::invalid_argument("c-complex json: matrix entries must be integers");
      r.push_back(entry.get<long long>());
    }
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace

std::string ccomplex_to_json(const CComplex& c) {
  nlohmann::json j;
  j["basis_size"] = c.basis_size;
  j["A_pp"] = matrix_to_json(c.A_pp);
  j["A_pm"] = matrix_to_json(c.A_pm);
  j["A_mp"] = matrix_to_json(c.A_mp);
  j["A_mm"] = matrix_to_json(c.A_mm);
  j["lk"] = c.lk;
  j["component_polys"] =
      nlohmann::json::array({c.component_poly1.str(), c.component_poly2.str()});
  return j.dump(2) + "\n";
}

CComplex ccomplex_from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("c-complex json: expected an object");
    CComplex c;
    c.basis_size = j.at("basis_size").get<std::size_t>();
    c.A_pp = matrix_from_json(j.at("A_pp"));
    c.A_pm = matrix_from_json(j.at("A_pm"));
    c.A_mp = matrix_from_json(j.at("A_mp"));
    c.A_mm = matrix_from_json(j.at("A_mm"));
    c.lk = j.at("lk").get<long long>();
    if (j.contains("component_polys")) {
      const auto& polys = j.at("component_polys");
      if (!polys.is_array() || polys.size() != 2)
        throw std::invalid_argument("c-complex json: component_polys must be two strings");
      c.component_poly1 = parse_laurent1(polys.at(0).get<std::string>());
      c.component_poly2 = parse_laurent1(polys.at(1).get<std::string>());
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("c-complex json: ") + e.what());
  }
}

}  // namespace concord
