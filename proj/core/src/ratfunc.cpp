#include "twoorbit/ratfunc.hpp"

#include <cctype>
#include <stdexcept>

namespace twoorbit {

Poly::Poly(std::vector<rational> coeffs) : c(std::move(coeffs)) { trim(); }

Poly Poly::constant(rational v) {
  Poly p;
  if (v != 0) p.c.push_back(std::move(v));
  return p;
}

Poly Poly::variable() {
  Poly p;
  p.c = {rational(0), rational(1)};
  return p;
}

const rational& Poly::leading() const {
  if (c.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c.back();
}

rational Poly::eval(const rational& x) const {
  rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, rational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

Poly operator*(const rational& s, const Poly& a) {
  if (s == 0) return {};
  Poly r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

Poly pow(const Poly& a, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial exponent");
  Poly r = Poly::constant(1);
  Poly base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    base = base * base;
  }
  return r;
}

Poly derivative(const Poly& a) {
  Poly r;
  for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(rational(i) * a.c[i]);
  r.trim();
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly rem = a;
  Poly quot;
  if (a.degree() >= b.degree()) quot.c.assign(a.degree() - b.degree() + 1, rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    rational f = rem.leading() / b.leading();
    quot.c[shift] = f;
    for (size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= f * b.c[i];
    rem.trim();
  }
  quot.trim();
  return {std::move(quot), std::move(rem)};
}

Poly gcd_poly(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = (rational(1) / a.leading()) * a;
  return a;
}

rational resultant(const Poly& a, const Poly& b) {
  const int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const int N = m + n;
  // Sylvester matrix: n shifted rows of a's coefficients, then m of b's;
  // its determinant is res(a, b).
  std::vector<std::vector<rational>> M(N, std::vector<rational>(N, rational(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) M[r][r + j] = a.c[m - j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) M[n + r][r + j] = b.c[n - j];
  // determinant by exact rational elimination; sign flips on row swaps
  rational det = 1;
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    rational inv = rational(1) / M[col][col];
    for (int r = col + 1; r < N; ++r) {
      if (M[r][col] == 0) continue;
      rational f = M[r][col] * inv;
      for (int j = col; j < N; ++j) M[r][j] -= f * M[col][j];
    }
  }
  return det;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  // Yun's algorithm over Q
  Poly d = derivative(p);
  Poly a = gcd_poly(p, d);
  Poly b = divmod(p, a).first;
  Poly c = divmod(d, a).first;
  int mult = 1;
  while (b.degree() > 0) {
    Poly diff = c - derivative(b);
    Poly g = gcd_poly(b, diff);
    if (g.degree() > 0) out.emplace_back(g, mult);
    b = divmod(b, g).first;
    c = divmod(diff, g).first;
    ++mult;
  }
  return out;
}

RationalFunction::RationalFunction(Poly n, Poly d) {
  if (d.is_zero()) throw std::invalid_argument("zero denominator");
  Poly g = gcd_poly(n, d);
  if (g.degree() > 0) {
    n = divmod(n, g).first;
    d = divmod(d, g).first;
  }
  rational lead = d.leading();
  num = (rational(1) / lead) * n;
  den = (rational(1) / lead) * d;
}

RationalFunction RationalFunction::derived() const {
  Poly n = derivative(num) * den - num * derivative(den);
  Poly d = den * den;
  return RationalFunction(std::move(n), std::move(d));
}

rational RationalFunction::value_at_infinity() const {
  if (num.degree() > den.degree())
    throw std::logic_error("map has a pole at infinity");
  if (num.degree() < den.degree()) return 0;
  return num.leading() / den.leading();
}

namespace {

// recursive-descent parser over the token stream
struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " + std::to_string(i) +
                                ": " + msg);
  }

  // fraction of polynomials kept unreduced during parsing
  struct Frac {
    Poly n, d;
  };

  Frac parse_expr() {
    Frac left = parse_term();
    for (;;) {
      skip();
      if (eat('+')) {
        Frac r = parse_term();
        left = {left.n * r.d + r.n * left.d, left.d * r.d};
      } else if (peek_minus_binary()) {
        ++i;
        Frac r = parse_term();
        left = {left.n * r.d - r.n * left.d, left.d * r.d};
      } else {
        return left;
      }
    }
  }

  bool peek_minus_binary() {
    skip();
    return i < s.size() && s[i] == '-';
  }

  Frac parse_term() {
    Frac left = parse_factor();
    for (;;) {
      skip();
      if (eat('*')) {
        Frac r = parse_factor();
        left = {left.n * r.n, left.d * r.d};
      } else if (eat('/')) {
        Frac r = parse_factor();
        if (r.n.is_zero()) fail("division by zero");
        left = {left.n * r.d, left.d * r.n};
      } else {
        return left;
      }
    }
  }

  Frac parse_factor() {
    skip();
    if (eat('-')) {
      Frac f = parse_factor();
      return {-f.n, f.d};
    }
    Frac base = parse_atom();
    skip();
    if (eat('^')) {
      skip();
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) fail("expected integer exponent after '^'");
      int e = std::stoi(s.substr(start, i - start));
      return {pow(base.n, e), pow(base.d, e)};
    }
    return base;
  }

  Frac parse_atom() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == '(') {
      ++i;
      Frac f = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == 'Z' || c == 'z') {
      ++i;
      return {Poly::variable(), Poly::constant(1)};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return {Poly::constant(rational(bigint(s.substr(start, i - start)))),
              Poly::constant(1)};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  using bigint = boost::multiprecision::cpp_int;
};

}  // namespace

RationalFunction parse_ratfunc(const std::string& text) {
  Parser p(text);
  Parser::Frac f = p.parse_expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  if (f.d.is_zero()) p.fail("zero denominator");
  return RationalFunction(std::move(f.n), std::move(f.d));
}

Poly critical_t_polynomial(const RationalFunction& f) {
  // F_t(Z) = num - t*den; disc-style polynomial D(t) = res_Z(F_t, F_t').
  // deg_t D <= deg_Z F + deg_Z F', so 2*map_degree nodes are ample.
  const int n = f.map_degree();
  const int nodes = 2 * n + 1;
  const Poly dnum = derivative(f.num);
  const Poly dden = derivative(f.den);
  std::vector<rational> xs, ys;
  int t = 0;
  while (static_cast<int>(xs.size()) < nodes) {
    rational tv(t);
    Poly F = f.num - tv * f.den;
    Poly dF = dnum - tv * dden;
    // skip nodes where the Z-degree drops: they would interpolate the
    // wrong (lower-degree) resultant form
    if (F.degree() == std::max(f.num.degree(), f.den.degree()) &&
        dF.degree() == std::max(dnum.degree(), dden.degree())) {
      xs.push_back(tv);
      ys.push_back(resultant(F, dF));
    }
    ++t;
  }
  // Lagrange interpolation
  Poly result;
  for (int k = 0; k < nodes; ++k) {
    Poly basis = Poly::constant(1);
    rational denom = 1;
    for (int j = 0; j < nodes; ++j) {
      if (j == k) continue;
      basis = basis * Poly(std::vector<rational>{-xs[j], rational(1)});
      denom *= xs[k] - xs[j];
    }
    result = result + (ys[k] / denom) * basis;
  }
  return result;
}

}  // namespace twoorbit
