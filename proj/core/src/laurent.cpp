#include "concord/laurent.hpp"

#include <array>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace concord {

namespace {

// Shared scanner for the textual polynomial format. Whitespace is permitted
// only around the '+'/'-' joining monomials; monomials themselves are
// compact ("2*t^-1", "x^2*y").
struct PolyScanner {
  const std::string& s;
  const char* vars;  // allowed one-letter variable names
  std::size_t pos = 0;

  PolyScanner(const std::string& text, const char* allowed) : s(text), vars(allowed) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " +
                                msg);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() const { return pos == s.size(); }
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool at_digit() const {
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  bool at_var() const {
    if (pos == s.size()) return false;
    for (const char* v = vars; *v; ++v)
      if (s[pos] == *v) return true;
    return false;
  }

  Int scan_nat() {
    if (!at_digit()) fail("expected digits");
    Int v = 0;
    while (at_digit()) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return v;
  }

  long long scan_exponent() {
    const bool neg = eat('-');
    if (!at_digit()) fail("expected integer exponent");
    long long v = 0;
    while (at_digit()) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  // One monomial: [nat]['*' factors] | factors. Exponents accumulate per
  // variable into exps, indexed by the variable's position in vars.
  Int scan_monomial(std::vector<long long>& exps) {
    Int coeff = 1;
    bool need_factor = true;
    if (at_digit()) {
      coeff = scan_nat();
      need_factor = eat('*');
      if (!need_factor) return coeff;  // pure constant
    }
    while (true) {
      if (!at_var()) fail("expected a variable");
      const char v = s[pos++];
      const long long e = eat('^') ? scan_exponent() : 1;
      for (std::size_t k = 0; vars[k]; ++k)
        if (vars[k] == v) exps[k] += e;
      if (!eat('*')) break;
    }
    return coeff;
  }
};

template <class Emit>
void scan_poly(const std::string& text, const char* vars, std::size_t nvars, Emit emit) {
  PolyScanner sc(text, vars);
  sc.skip_ws();
  if (sc.at_end()) sc.fail("empty polynomial");
  bool first = true;
  while (true) {
    int sign = 1;
    if (first) {
      if (sc.eat('-')) sign = -1;
      first = false;
    } else {
      sc.skip_ws();
      if (sc.at_end()) break;
      if (sc.eat('+'))
        sign = 1;
      else if (sc.eat('-'))
        sign = -1;
      else
        sc.fail("expected '+' or '-'");
    }
    sc.skip_ws();
    std::vector<long long> exps(nvars, 0);
    Int c = sc.scan_monomial(exps);
    if (sign < 0) c = -c;
    emit(std::move(c), exps);
  }
}

// Renders one monomial (positive coefficient a, variable part) into out.
void render_monomial(std::string& out, const Int& a, const std::string& var_part) {
  if (var_part.empty())
    out += a.str();
  else if (a == 1)
    out += var_part;
  else {
    out += a.str();
    out += '*';
    out += var_part;
  }
}

std::string var_power(char v, long long e) {
  if (e == 0) return "";
  std::string out(1, v);
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly1

LaurentPoly1 LaurentPoly1::constant(Int c) {
  LaurentPoly1 p;
  p.set(0, std::move(c));
  return p;
}

LaurentPoly1 LaurentPoly1::term(long long exp, Int coeff) {
  LaurentPoly1 p;
  p.set(exp, std::move(coeff));
  return p;
}

Int LaurentPoly1::coeff(long long exp) const {
  const auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

long long LaurentPoly1::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of the zero polynomial");
  return terms_.begin()->first;
}

long long LaurentPoly1::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of the zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly1::set(long long exp, Int c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = std::move(c);
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) {
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) {
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
  LaurentPoly1 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.terms_[ea + eb] += ca * cb;
  for (auto it = out.terms_.begin(); it != out.terms_.end();)
    it = (it->second == 0) ? out.terms_.erase(it) : std::next(it);
  return out;
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly1 LaurentPoly1::shifted(long long k) const {
  LaurentPoly1 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly1 LaurentPoly1::inverted_variable() const {
  LaurentPoly1 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

Int LaurentPoly1::eval_at_one() const {
  Int v = 0;
  for (const auto& [e, c] : terms_) v += c;
  return v;
}

Int LaurentPoly1::eval_at_minus_one() const {
  Int v = 0;
  for (const auto& [e, c] : terms_) v += (e % 2 != 0) ? Int(-c) : c;
  return v;
}

std::string LaurentPoly1::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out += '-';
        a = -a;
      }
      first = false;
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    render_monomial(out, a, var_power('t', e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaurentPoly2

LaurentPoly2 LaurentPoly2::constant(Int c) {
  LaurentPoly2 p;
  p.set({0, 0}, std::move(c));
  return p;
}

LaurentPoly2 LaurentPoly2::term(long long xexp, long long yexp, Int coeff) {
  LaurentPoly2 p;
  p.set({xexp, yexp}, std::move(coeff));
  return p;
}

Int LaurentPoly2::coeff(long long xexp, long long yexp) const {
  const auto it = terms_.find({xexp, yexp});
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly2::set(Exp e, Int c) {
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = std::move(c);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) {
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) {
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.terms_[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  for (auto it = out.terms_.begin(); it != out.terms_.end();)
    it = (it->second == 0) ? out.terms_.erase(it) : std::next(it);
  return out;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly2 LaurentPoly2::shifted(long long xk, long long yk) const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exp{e.first + xk, e.second + yk}, c);
  return out;
}

LaurentPoly2 LaurentPoly2::inverted_variables() const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exp{-e.first, -e.second}, c);
  return out;
}

LaurentPoly1 LaurentPoly2::eval_at_y_one() const {
  LaurentPoly1 out;
  for (const auto& [e, c] : terms_) out += LaurentPoly1::term(e.first, c);
  return out;
}

LaurentPoly1 LaurentPoly2::eval_at_x_one() const {
  LaurentPoly1 out;
  for (const auto& [e, c] : terms_) out += LaurentPoly1::term(e.second, c);
  return out;
}

std::string LaurentPoly2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out += '-';
        a = -a;
      }
      first = false;
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string var = var_power('x', e.first);
    const std::string yv = var_power('y', e.second);
    if (!var.empty() && !yv.empty()) var += '*';
    var += yv;
    render_monomial(out, a, var);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalization and unit equality

LaurentPoly1 normalize_units_1(const LaurentPoly1& p) {
  if (p.is_zero()) return p;
  LaurentPoly1 q = p.shifted(-p.min_exp());
  if (q.coeff(0) < 0) return -q;
  return q;
}

LaurentPoly2 normalize_units_2(const LaurentPoly2& p) {
  if (p.is_zero()) return p;
  long long xmin = 0, ymin = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      xmin = e.first;
      ymin = e.second;
      first = false;
    } else {
      xmin = std::min(xmin, e.first);
      ymin = std::min(ymin, e.second);
    }
  }
  LaurentPoly2 q = p.shifted(-xmin, -ymin);
  if (q.terms().begin()->second < 0) return -q;
  return q;
}

bool unit_equal(const LaurentPoly1& a, const LaurentPoly1& b) {
  return normalize_units_1(a) == normalize_units_1(b);
}

bool unit_equal(const LaurentPoly2& a, const LaurentPoly2& b) {
  return normalize_units_2(a) == normalize_units_2(b);
}

// ---------------------------------------------------------------------------
// Exact division

LaurentPoly1 exact_divide(const LaurentPoly1& num, const LaurentPoly1& den) {
  if (den.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
  if (num.is_zero()) return num;
  const long long shift = num.min_exp() - den.min_exp();
  LaurentPoly1 r = num.shifted(-num.min_exp());
  const LaurentPoly1 d = den.shifted(-den.min_exp());
  const Int lead = d.coeff(d.max_exp());
  LaurentPoly1 q;
  while (!r.is_zero()) {
    const long long de = r.max_exp() - d.max_exp();
    if (de < 0) throw std::domain_error("exact_divide: not divisible");
    const Int rc = r.coeff(r.max_exp());
    if (rc % lead != 0) throw std::domain_error("exact_divide: not divisible");
    const LaurentPoly1 t = LaurentPoly1::term(de, rc / lead);
    q += t;
    r -= t * d;
  }
  return q.shifted(shift);
}

LaurentPoly2 exact_divide(const LaurentPoly2& num, const LaurentPoly2& den) {
  if (den.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
  if (num.is_zero()) return num;
  // Exponent window for any exact quotient: per variable, the minimum
  // (maximum) exponent of a product is the sum of the factors' minima
  // (maxima) -- the extreme slices multiply without cancellation -- so the
  // quotient's exponents are pinned to [min(num)-min(den), max(num)-max(den)].
  const auto bounds = [](const LaurentPoly2& p) {
    std::array<long long, 4> b{};  // xmin, xmax, ymin, ymax
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      if (first) {
        b = {e.first, e.first, e.second, e.second};
        first = false;
      } else {
        b[0] = std::min(b[0], e.first);
        b[1] = std::max(b[1], e.first);
        b[2] = std::min(b[2], e.second);
        b[3] = std::max(b[3], e.second);
      }
    }
    return b;
  };
  const auto nb = bounds(num), db = bounds(den);
  const long long qxmin = nb[0] - db[0], qxmax = nb[1] - db[1];
  const long long qymin = nb[2] - db[2], qymax = nb[3] - db[3];
  if (qxmin > qxmax || qymin > qymax) throw std::domain_error("exact_divide: not divisible");
  const auto dlead = den.terms().rbegin();  // lexicographically greatest term
  LaurentPoly2 r = num, q;
  while (!r.is_zero()) {
    const auto rlead = r.terms().rbegin();
    const long long dx = rlead->first.first - dlead->first.first;
    const long long dy = rlead->first.second - dlead->first.second;
    if (dx < qxmin || dx > qxmax || dy < qymin || dy > qymax)
      throw std::domain_error("exact_divide: not divisible");
    if (rlead->second % dlead->second != 0)
      throw std::domain_error("exact_divide: not divisible");
    const LaurentPoly2 t = LaurentPoly2::term(dx, dy, rlead->second / dlead->second);
    q += t;
    r -= t * den;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Parsing

LaurentPoly1 parse_laurent1(const std::string& text) {
  LaurentPoly1 out;
  scan_poly(text, "t", 1,
            [&](Int c, const std::vector<long long>& exps) {
              out += LaurentPoly1::term(exps[0], std::move(c));
            });
  return out;
}

LaurentPoly2 parse_laurent2(const std::string& text) {
  LaurentPoly2 out;
  scan_poly(text, "xy", 2,
            [&](Int c, const std::vector<long long>& exps) {
              out += LaurentPoly2::term(exps[0], exps[1], std::move(c));
            });
  return out;
}

}  // namespace concord
