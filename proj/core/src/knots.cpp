#include "concord/knots.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <utility>

namespace concord {

namespace {

KnotPtr make(KnotExpr::Node n) { return std::make_shared<const KnotExpr>(std::move(n)); }

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Factories

KnotPtr unknot() { return make(UnknotNode{}); }

KnotPtr torus_knot(int p, int q) {
  require(p >= 2 && p < q, "torus_knot: need 2 <= p < q");
  require(std::gcd(p, q) == 1, "torus_knot: p and q must be coprime");
  return make(TorusNode{p, q});
}

KnotPtr raw_seifert(IntMatrix pairing, bool alternating) {
  require(pairing.is_square(), "raw_seifert: matrix not square");
  require(is_unimodular_seifert_pairing(pairing),
          "raw_seifert: V - V^T is not unimodular (not a knot Seifert pairing)");
  return make(RawSeifertNode{std::move(pairing), alternating});
}

KnotPtr connected_sum(KnotPtr left, KnotPtr right) {
  require(left && right, "connected_sum: null operand");
  return make(SumNode{std::move(left), std::move(right)});
}

KnotPtr mirror(KnotPtr inner) {
  require(inner != nullptr, "mirror: null operand");
  return make(MirrorNode{std::move(inner)});
}

KnotPtr reverse(KnotPtr inner) {
  require(inner != nullptr, "reverse: null operand");
  return make(ReverseNode{std::move(inner)});
}

KnotPtr whitehead_pos(KnotPtr companion, long long twists) {
  require(companion != nullptr, "whitehead_pos: null companion");
  return make(WhiteheadPosNode{std::move(companion), twists});
}

KnotPtr gen_double(KnotPtr clasp_tie, long long clasp_twists, KnotPtr core_tie,
                   long long core_twists) {
  require(clasp_tie != nullptr && core_tie != nullptr, "gen_double: null operand");
  return make(GenDoubleNode{std::move(clasp_tie), clasp_twists, std::move(core_tie), core_twists});
}

// ---------------------------------------------------------------------------
// Parser

parse_error::parse_error(std::size_t pos, const std::string& what)
    : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
      position(pos) {}

namespace {

struct KnotParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit KnotParser(const std::string& text) : s(text) {}

  [[noreturn]] static void fail(std::size_t at, const std::string& msg) {
    throw parse_error(at, msg);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_digit() const {
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) fail(pos, std::string("expected '") + c + "'");
    ++pos;
  }

  long long parse_int() {
    skip_ws();
    const std::size_t start = pos;
    const bool neg = pos < s.size() && s[pos] == '-';
    if (neg) ++pos;
    if (!at_digit()) fail(start, "expected an integer");
    long long v = 0;
    while (at_digit()) {
      if (v > (std::numeric_limits<long long>::max() - 9) / 10) fail(start, "integer too large");
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  int parse_small_int(const char* what) {
    const std::size_t start = pos;
    const long long v = parse_int();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
      fail(start, std::string(what) + " out of range");
    return static_cast<int>(v);
  }

  std::string parse_name() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '+') ++pos;  // "Wh+"
    if (pos == start) fail(start, "expected a knot expression");
    return s.substr(start, pos - start);
  }

  KnotPtr parse_expr() {
    KnotPtr left = parse_primary();
    while (true) {
      skip_ws();
      if (pos < s.size() && s[pos] == '#') {
        ++pos;
        left = connected_sum(std::move(left), parse_primary());
      } else {
        return left;
      }
    }
  }

  KnotPtr parse_primary() {
    skip_ws();
    const std::size_t start = pos;
    const std::string name = parse_name();
    try {
      if (name == "U") return unknot();
      if (name == "T") {
        expect('(');
        const int p = parse_small_int("torus parameter");
        expect(',');
        const int q = parse_small_int("torus parameter");
        expect(')');
        return torus_knot(p, q);
      }
      if (name == "m") {
        expect('(');
        KnotPtr e = parse_expr();
        expect(')');
        return mirror(std::move(e));
      }
      if (name == "r") {
        expect('(');
        KnotPtr e = parse_expr();
        expect(')');
        return reverse(std::move(e));
      }
      if (name == "Wh+") {
        expect('(');
        KnotPtr e = parse_expr();
        expect(',');
        const long long t = parse_int();
        expect(')');
        return whitehead_pos(std::move(e), t);
      }
      if (name == "D") {
        expect('(');
        KnotPtr j = parse_expr();
        expect(',');
        const long long sv = parse_int();
        expect(',');
        KnotPtr k = parse_expr();
        expect(',');
        const long long tv = parse_int();
        expect(')');
        return gen_double(std::move(j), sv, std::move(k), tv);
      }
      if (name == "seifert") {
        expect('(');
        IntMatrix m = parse_matrix();
        expect(')');
        return raw_seifert(std::move(m), false);
      }
    } catch (const std::invalid_argument& e) {
      fail(start, e.what());
    }
    fail(start, "unknown constructor '" + name + "'");
  }

  IntMatrix parse_matrix() {
    expect('[');
    std::vector<std::vector<long long>> rows;
    if (!eat(']')) {
      do {
        rows.push_back(parse_row());
      } while (eat(','));
      expect(']');
    }
    return IntMatrix::from_rows(rows);
  }

  std::vector<long long> parse_row() {
    expect('[');
    std::vector<long long> row;
    if (!eat(']')) {
      do {
        row.push_back(parse_int());
      } while (eat(','));
      expect(']');
    }
    return row;
  }
};

}  // namespace

KnotPtr parse_knot_expression(const std::string& text) {
  KnotParser p(text);
  KnotPtr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) KnotParser::fail(p.pos, "unexpected trailing input");
  return e;
}

// ---------------------------------------------------------------------------
// Rendering and structural equality

namespace {

void render(const KnotExpr& e, std::string& out) {
  const auto& n = e.node();
  if (std::holds_alternative<UnknotNode>(n)) {
    out += "U";
  } else if (const auto* t = std::get_if<TorusNode>(&n)) {
    out += "T(" + std::to_string(t->p) + "," + std::to_string(t->q) + ")";
  } else if (const auto* rs = std::get_if<RawSeifertNode>(&n)) {
    out += "seifert([";
    for (std::size_t i = 0; i < rs->pairing.rows(); ++i) {
      if (i > 0) out += ',';
      out += '[';
      for (std::size_t j = 0; j < rs->pairing.cols(); ++j) {
        if (j > 0) out += ',';
        out += rs->pairing.at(i, j).str();
      }
      out += ']';
    }
    out += "])";
  } else if (const auto* s = std::get_if<SumNode>(&n)) {
    render(*s->left, out);
    out += " # ";
    render(*s->right, out);
  } else if (const auto* m = std::get_if<MirrorNode>(&n)) {
    out += "m(";
    render(*m->inner, out);
    out += ")";
  } else if (const auto* r = std::get_if<ReverseNode>(&n)) {
    out += "r(";
    render(*r->inner, out);
    out += ")";
  } else if (const auto* w = std::get_if<WhiteheadPosNode>(&n)) {
    out += "Wh+(";
    render(*w->companion, out);
    out += "," + std::to_string(w->twists) + ")";
  } else if (const auto* d = std::get_if<GenDoubleNode>(&n)) {
    out += "D(";
    render(*d->clasp_tie, out);
    out += "," + std::to_string(d->clasp_twists) + ",";
    render(*d->core_tie, out);
    out += "," + std::to_string(d->core_twists) + ")";
  }
}

}  // namespace

std::string to_string(const KnotExpr& e) {
  std::string out;
  render(e, out);
  return out;
}

std::string to_string(const KnotPtr& e) {
  if (!e) throw std::invalid_argument("to_string: null expression");
  return to_string(*e);
}

bool structurally_equal(const KnotExpr& a, const KnotExpr& b) {
  const auto& na = a.node();
  const auto& nb = b.node();
  if (na.index() != nb.index()) return false;
  if (std::holds_alternative<UnknotNode>(na)) return true;
  if (const auto* ta = std::get_if<TorusNode>(&na)) {
    const auto* tb = std::get_if<TorusNode>(&nb);
    return ta->p == tb->p && ta->q == tb->q;
  }
  if (const auto* ra = std::get_if<RawSeifertNode>(&na)) {
    const auto* rb = std::get_if<RawSeifertNode>(&nb);
    return ra->alternating == rb->alternating && ra->pairing == rb->pairing;
  }
  if (const auto* sa = std::get_if<SumNode>(&na)) {
    const auto* sb = std::get_if<SumNode>(&nb);
    return structurally_equal(*sa->left, *sb->left) && structurally_equal(*sa->right, *sb->right);
  }
  if (const auto* ma = std::get_if<MirrorNode>(&na)) {
    return structurally_equal(*ma->inner, *std::get_if<MirrorNode>(&nb)->inner);
  }
  if (const auto* va = std::get_if<ReverseNode>(&na)) {
    return structurally_equal(*va->inner, *std::get_if<ReverseNode>(&nb)->inner);
  }
  if (const auto* wa = std::get_if<WhiteheadPosNode>(&na)) {
    const auto* wb = std::get_if<WhiteheadPosNode>(&nb);
    return wa->twists == wb->twists && structurally_equal(*wa->companion, *wb->companion);
  }
  const auto* da = std::get_if<GenDoubleNode>(&na);
  const auto* db = std::get_if<GenDoubleNode>(&nb);
  return da->clasp_twists == db->clasp_twists && da->core_twists == db->core_twists &&
         structurally_equal(*da->clasp_tie, *db->clasp_tie) &&
         structurally_equal(*da->core_tie, *db->core_tie);
}

// ---------------------------------------------------------------------------
// Seifert matrices

namespace {

// Seifert matrix of T(p,q) from the fiber surface of the closed positive
// braid (s_1 s_2 ... s_{p-1})^q. Basis loop (i,s) joins the s-th and
// (s+1)-st occurrences of letter i (i = 1..p-1, s = 1..q-1); occurrence r of
// letter i sits at word position (i-1) + (p-1) r. Self-pairing is -1; loops
// on the same letter pair +1 with their immediate successor; loops on
// adjacent letters i, i+1 pair exactly when their position spans interleave,
// with the entry placed in the row of the column-i loop: +1 when the
// column-i span starts first, -1 when the column-(i+1) span does (the two
// arcs cross the shared disk with opposite orientations in the two cases).
// Anchored by Delta(T(p,q)) = (t^{pq}-1)(t-1)/((t^p-1)(t^q-1)) on the
// coprime grid p < q <= 7 and by signature(T(3,4)) = -6,
// signature(T(3,5)) = -8, with det(V - V^T) = +-1 throughout.
IntMatrix torus_seifert_matrix(int p, int q) {
  const std::size_t n = static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(q - 1);
  IntMatrix v(n, n);
  const auto word_pos = [p](int i, int r) {
    return static_cast<long long>(i - 1) + static_cast<long long>(p - 1) * r;
  };
  const auto idx = [q](int i, int s) {
    return static_cast<std::size_t>((i - 1) * (q - 1) + (s - 1));
  };
  for (int i = 1; i <= p - 1; ++i)
    for (int s = 1; s <= q - 1; ++s) {
      v.at(idx(i, s), idx(i, s)) = -1;
      if (s + 1 <= q - 1) v.at(idx(i, s), idx(i, s + 1)) = 1;
      if (i + 1 <= p - 1)
        for (int u = 1; u <= q - 1; ++u) {
          const long long a1 = word_pos(i, s - 1), a2 = word_pos(i, s);
          const long long b1 = word_pos(i + 1, u - 1), b2 = word_pos(i + 1, u);
          if (a1 < b1 && b1 < a2 && a2 < b2)
            v.at(idx(i, s), idx(i + 1, u)) = 1;
          else if (b1 < a1 && a1 < b2 && b2 < a2)
            v.at(idx(i, s), idx(i + 1, u)) = -1;
        }
    }
  return v;
}

}  // namespace

IntMatrix seifert_matrix(const KnotExpr& e) {
  const auto& n = e.node();
  if (std::holds_alternative<UnknotNode>(n)) return IntMatrix();
  if (const auto* t = std::get_if<TorusNode>(&n)) return torus_seifert_matrix(t->p, t->q);
  if (const auto* rs = std::get_if<RawSeifertNode>(&n)) return rs->pairing;
  if (const auto* s = std::get_if<SumNode>(&n))
    return IntMatrix::block_diag(seifert_matrix(*s->left), seifert_matrix(*s->right));
  if (const auto* m = std::get_if<MirrorNode>(&n))
    return seifert_matrix(*m->inner).transpose().negated();
  if (const auto* r = std::get_if<ReverseNode>(&n)) return seifert_matrix(*r->inner).transpose();
  if (const auto* w = std::get_if<WhiteheadPosNode>(&n))
    return IntMatrix::from_rows({{-1, 1}, {0, w->twists}});
  const auto* d = std::get_if<GenDoubleNode>(&n);
  return IntMatrix::from_rows({{d->core_twists, 1}, {0, d->clasp_twists}});
}

// ---------------------------------------------------------------------------
// Classical invariants

LaurentPoly1 alexander_polynomial(const KnotExpr& e) {
  return alexander_from_seifert(seifert_matrix(e));
}

int signature(const KnotExpr& e) { return signature_symmetric(symmetrized(seifert_matrix(e))); }

Int determinant(const KnotExpr& e) {
  Int v = alexander_polynomial(e).eval_at_minus_one();
  return v < 0 ? Int(-v) : v;
}

std::vector<Int> torsion_coefficients_from_alexander(const LaurentPoly1& delta, std::size_t upto) {
  const LaurentPoly1 q = normalize_units_1(delta);
  if (q.is_zero()) throw std::domain_error("torsion_coefficients: zero polynomial");
  const long long deg = q.max_exp();
  if (deg % 2 != 0) throw std::domain_error("torsion_coefficients: polynomial breadth is odd");
  if (q.inverted_variable().shifted(deg) != q)
    throw std::domain_error("torsion_coefficients: polynomial is not symmetric");
  const Int at_one = q.eval_at_one();
  if (at_one != 1 && at_one != -1)
    throw std::domain_error("torsion_coefficients: value at 1 is not a unit");
  // Center to a_0 + sum_j a_j (t^j + t^-j) with value +1 at t = 1.
  LaurentPoly1 c = q.shifted(-deg / 2);
  if (at_one < 0) c = -c;
  std::vector<Int> out(upto + 1, Int(0));
  for (std::size_t i = 0; i <= upto; ++i) {
    Int acc = 0;
    for (long long j = 1; static_cast<long long>(i) + j <= deg / 2; ++j)
      acc += Int(j) * c.coeff(static_cast<long long>(i) + j);
    out[i] = acc;
  }
  return out;
}

std::vector<Int> torsion_coefficients(const KnotExpr& e, std::size_t upto) {
  return torsion_coefficients_from_alexander(alexander_polynomial(e), upto);
}

// ---------------------------------------------------------------------------
// Structural predicates

bool is_alternating(const KnotExpr& e) {
  const auto& n = e.node();
  if (std::holds_alternative<UnknotNode>(n)) return true;
  if (const auto* t = std::get_if<TorusNode>(&n)) return t->p == 2;
  if (const auto* rs = std::get_if<RawSeifertNode>(&n)) return rs->alternating;
  if (const auto* s = std::get_if<SumNode>(&n))
    return is_alternating(*s->left) && is_alternating(*s->right);
  if (const auto* m = std::get_if<MirrorNode>(&n)) return is_alternating(*m->inner);
  if (const auto* r = std::get_if<ReverseNode>(&n)) return is_alternating(*r->inner);
  return false;
}

bool is_catalogued_sqp(const KnotExpr& e) {
  const auto& n = e.node();
  if (std::holds_alternative<TorusNode>(n)) return true;
  if (const auto* s = std::get_if<SumNode>(&n))
    return is_catalogued_sqp(*s->left) && is_catalogued_sqp(*s->right);
  return false;
}

bool is_structural_unknot(const KnotExpr& e) {
  const auto& n = e.node();
  if (std::holds_alternative<UnknotNode>(n)) return true;
  if (const auto* s = std::get_if<SumNode>(&n))
    return is_structural_unknot(*s->left) && is_structural_unknot(*s->right);
  if (const auto* m = std::get_if<MirrorNode>(&n)) return is_structural_unknot(*m->inner);
  if (const auto* r = std::get_if<ReverseNode>(&n)) return is_structural_unknot(*r->inner);
  return false;
}

}  // namespace concord
