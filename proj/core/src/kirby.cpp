#include "concord/kirby.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <utility>

namespace concord {

slam_dunk_error::slam_dunk_error(std::size_t idx, const std::string& what)
    : std::runtime_error(what), index(idx) {}

namespace {

bool is_integer(const Rat& r) { return denominator(r) == 1; }

void require_arg(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

RationalSurgery slam_dunk_reduce(const ChainSurgery& chain) {
  const auto& cs = chain.components;
  require_arg(!cs.empty(), "slam dunk: empty chain");
  require_arg(cs[0].knot != nullptr, "slam dunk: head component has no knot");
  for (std::size_t i = 1; i < cs.size(); ++i) {
    require_arg(cs[i].knot != nullptr && is_structural_unknot(*cs[i].knot),
                "slam dunk: tail components must be unknots");
    require_arg(is_integer(cs[i].framing),
                "slam dunk: tail components must be integer framed");
  }
  Rat r = cs.back().framing;
  for (std::size_t i = cs.size() - 1; i-- > 0;) {
    if (r == 0)
      throw slam_dunk_error(
          i + 1, "slam dunk: component " + std::to_string(i + 1) +
                     " folds to 0, its meridian surgery is undefined");
    r = cs[i].framing - 1 / r;
  }
  return RationalSurgery{cs[0].knot, r};
}

LinkedSurgery blow_down(const LinkedSurgery& s, std::size_t u) {
  const IntMatrix& m = s.matrix;
  const std::size_t n = m.rows();
  require_arg(m.is_square() && s.labels.size() == n,
              "blow down: labels do not match the linking matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      require_arg(m.at(i, j) == m.at(j, i), "blow down: linking matrix not symmetric");
  require_arg(u < n, "blow down: component index out of range");
  require_arg(m.at(u, u) == 1 || m.at(u, u) == -1,
              "blow down: framing must be +-1");
  require_arg(s.labels[u].has_value() && is_structural_unknot(**s.labels[u]),
              "blow down: only an unknotted component can be blown down");
  const Int eps = m.at(u, u);

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (i != u) keep.push_back(i);

  LinkedSurgery out;
  out.matrix = IntMatrix(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      out.matrix.at(a, b) =
          m.at(keep[a], keep[b]) - eps * m.at(keep[a], u) * m.at(keep[b], u);

  std::size_t meeting = 0;
  for (std::size_t i : keep)
    if (m.at(i, u) != 0) ++meeting;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    const std::size_t i = keep[a];
    if (m.at(i, u) == 0) {
      out.labels.push_back(s.labels[i]);
    } else if (meeting == 1 && (m.at(i, u) == 1 || m.at(i, u) == -1) &&
               s.labels[i].has_value() && is_structural_unknot(**s.labels[i])) {
      // Unknot sliding once over a +-1-framed unknot stays an unknot.
      out.labels.push_back(s.labels[i]);
    } else {
      out.labels.push_back(std::nullopt);  // the move no longer tracks the type
    }
  }
  return out;
}

KnotPtr blow_down_LK(const KnotPtr& k) {
  require_arg(k != nullptr, "blow down: null knot");
  // Blowing down the +1-framed unknotted component of L(K) drags the genus-1
  // surface of the 0-framed component through the twist: the image is the
  // clasp-(-2) untwisted double with core band tied in K.
  return gen_double(unknot(), -2, k, 0);
}

ChainSurgery double_branched_cover_genus1(const IntMatrix& v, const KnotPtr& core_band,
                                          const KnotPtr& clasp_band) {
  if (!(v.rows() == 2 && v.cols() == 2))
    throw std::domain_error("double branched cover: pairing must be 2x2");
  if (!is_unimodular_seifert_pairing(v))
    throw std::domain_error("double branched cover: det(V - V^T) must be +-1");
  require_arg(core_band != nullptr && clasp_band != nullptr,
              "double branched cover: null band knot");
  IntMatrix g = symmetrized(v);
  if (g.at(0, 1) != 1)
    throw std::domain_error(
        "double branched cover: chain encoding needs (V + V^T)_12 = 1");
  auto lift = [](const KnotPtr& b) {
    // The band's lift traverses the knotted part once in each orientation.
    return is_structural_unknot(*b) ? unknot() : connected_sum(b, reverse(b));
  };
  ChainSurgery chain;
  chain.components.push_back({Rat(g.at(0, 0)), lift(core_band)});
  chain.components.push_back({Rat(g.at(1, 1)), lift(clasp_band)});
  return chain;
}

Genus1Pattern genus1_pattern(const KnotExpr& e) {
  if (const auto* d = std::get_if<GenDoubleNode>(&e.node())) {
    return Genus1Pattern{
        IntMatrix::from_rows({{d->core_twists, 1}, {0, d->clasp_twists}}),
        d->core_tie, d->clasp_tie};
  }
  if (const auto* w = std::get_if<WhiteheadPosNode>(&e.node())) {
    return Genus1Pattern{IntMatrix::from_rows({{w->twists, 1}, {0, -1}}),
                         w->companion, unknot()};
  }
  if (const auto* r = std::get_if<RawSeifertNode>(&e.node())) {
    if (r->pairing.rows() == 2 && r->pairing.cols() == 2)
      return Genus1Pattern{r->pairing, unknot(), unknot()};
  }
  throw std::domain_error("genus1_pattern: no catalogued genus-1 presentation for " +
                          to_string(e));
}

LinkedSurgery chain_to_linked(const ChainSurgery& chain) {
  const auto& cs = chain.components;
  LinkedSurgery out;
  out.matrix = IntMatrix(cs.size(), cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    require_arg(is_integer(cs[i].framing),
                "chain to linked: framings must be integers");
    out.matrix.at(i, i) = numerator(cs[i].framing);
    if (i + 1 < cs.size()) {
      out.matrix.at(i, i + 1) = 1;
      out.matrix.at(i + 1, i) = 1;
    }
    if (cs[i].knot)
      out.labels.emplace_back(cs[i].knot);
    else
      out.labels.emplace_back(std::nullopt);
  }
  return out;
}

namespace {

nlohmann::json component_json(const Rat& framing, const KnotPtr& knot) {
  nlohmann::json c;
  c["framing"] = rational_to_string(framing);
  if (knot)
    c["knot"] = to_string(knot);
  else
    c["knot"] = nullptr;
  return c;
}

}  // namespace

std::string framed_chain_to_json(const FramedChain& c) {
  nlohmann::json j;
  if (const auto* chain = std::get_if<ChainSurgery>(&c)) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& comp : chain->components)
      comps.push_back(component_json(comp.framing, comp.knot));
    j["components"] = std::move(comps);
  } else {
    const auto& linked = std::get<LinkedSurgery>(c);
    nlohmann::json comps = nlohmann::json::array();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < linked.matrix.rows(); ++i) {
      comps.push_back(component_json(
          Rat(linked.matrix.at(i, i)),
          linked.labels[i].has_value() ? *linked.labels[i] : nullptr));
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < linked.matrix.cols(); ++k)
        row.push_back(linked.matrix.at(i, k).convert_to<long long>());
      rows.push_back(std::move(row));
    }
    j["components"] = std::move(comps);
    j["linking"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

FramedChain framed_chain_from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    const auto& comps = j.at("components");
    if (!comps.is_array() || comps.empty())
      throw std::invalid_argument("framed chain json: components must be a nonempty array");
    std::vector<Rat> framings;
    std::vector<KnotPtr> knots;
    for (const auto& c : comps) {
      framings.push_back(parse_rational(c.at("framing").get<std::string>()));
      const auto& k = c.at("knot");
      knots.push_back(k.is_null() ? nullptr
                                  : parse_knot_expression(k.get<std::string>()));
    }
    if (!j.contains("linking")) {
      ChainSurgery chain;
      for (std::size_t i = 0; i < framings.size(); ++i)
        chain.components.push_back({framings[i], knots[i]});
      return chain;
    }
    const auto& rows = j.at("linking");
    const std::size_t n = framings.size();
    if (!rows.is_array() || rows.size() != n)
      throw std::invalid_argument("framed chain json: linking must be an n x n array");
    LinkedSurgery linked;
    linked.matrix = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = rows.at(i);
      if (!row.is_array() || row.size() != n)
        throw std::invalid_argument("framed chain json: linking must be an n x n array");
      for (std::size_t k = 0; k < n; ++k) {
        if (!row.at(k).is_number_integer())
          throw std::invalid_argument("framed chain json: linking entries must be integers");
        linked.matrix.at(i, k) = Int(row.at(k).get<long long>());
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k)
        if (linked.matrix.at(i, k) != linked.matrix.at(k, i))
          throw std::invalid_argument("framed chain json: linking matrix must be symmetric");
      if (!(Rat(linked.matrix.at(i, i)) == framings[i]))
        throw std::invalid_argument(
            "framed chain json: framing fields must match the linking diagonal");
      if (knots[i])
        linked.labels.emplace_back(knots[i]);
      else
        linked.labels.emplace_back(std::nullopt);
    }
    return linked;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("framed chain json: ") + e.what());
  }
}

std::string rational_surgery_to_json(const RationalSurgery& s) {
  nlohmann::json j;
  j["coefficient"] = rational_to_string(s.coefficient);
  j["knot"] = to_string(s.knot);
  return j.dump(2) + "\n";
}

}  // namespace concord
