#include "twoorbit/field.hpp"

#include <stdexcept>

namespace twoorbit {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over Z/p as coefficient vectors, constant term first.
std::vector<int> poly_mod(std::vector<int> num, const std::vector<int>& den, int p) {
  // den is monic
  while (!num.empty() && num.back() == 0) num.pop_back();
  const int dd = static_cast<int>(den.size()) - 1;
  while (static_cast<int>(num.size()) - 1 >= dd) {
    int c = num.back();
    if (c != 0) {
      int shift = static_cast<int>(num.size()) - 1 - dd;
      for (int i = 0; i <= dd; ++i)
        num[shift + i] = ((num[shift + i] - c * den[i]) % p + p) % p;
    }
    num.pop_back();
    while (!num.empty() && num.back() == 0) num.pop_back();
  }
  return num;
}

bool divides(const std::vector<int>& den, const std::vector<int>& num, int p) {
  return poly_mod(num, den, p).empty();
}

}  // namespace

FiniteField::FiniteField(int p, int e) : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e < 1) throw std::invalid_argument("field extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    // the dense multiplication table needs q^2 entries
    if (q > 1024) throw std::invalid_argument("field too large (q > 1024)");
  }
  q_ = static_cast<int>(q);

  // Lex-least monic irreducible modulus of degree e, verified by trial
  // division against every monic polynomial of degree <= e/2.
  modulus_.assign(e, 0);
  if (e == 1) {
    // x itself would make 0 a zero divisor; use x - 0 ... irrelevant: for
    // e = 1 arithmetic is plain mod-p, modulus stored as x + 0 is unused.
    modulus_[0] = 0;
  } else {
    bool found = false;
    std::vector<int> cand(e + 1);
    cand[e] = 1;
    for (int code = 0; code < q_ && !found; ++code) {
      int v = code;
      for (int i = 0; i < e; ++i) {
        cand[i] = v % p;
        v /= p;
      }
      bool irreducible = true;
      std::vector<int> div;
      for (int d = 1; d <= e / 2 && irreducible; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long dc = 0; dc < count && irreducible; ++dc) {
          div.assign(d + 1, 0);
          div[d] = 1;
          long long w = dc;
          for (int i = 0; i < d; ++i) {
            div[i] = static_cast<int>(w % p);
            w /= p;
          }
          if (divides(div, cand, p)) irreducible = false;
        }
      }
      if (irreducible) {
        for (int i = 0; i < e; ++i) modulus_[i] = cand[i];
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
  }

  // Multiplication table.
  mul_.assign(static_cast<size_t>(q_) * q_, 0);
  auto decode = [&](int code) {
    std::vector<int> c(e_);
    for (int i = 0; i < e_; ++i) {
      c[i] = code % p_;
      code /= p_;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int code = 0;
    for (int i = e_ - 1; i >= 0; --i) code = code * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return code;
  };
  std::vector<int> full_mod(e_ + 1);
  for (int i = 0; i < e_; ++i) full_mod[i] = modulus_[i];
  full_mod[e_] = 1;
  for (int a = 0; a < q_; ++a) {
    auto ca = decode(a);
    for (int b = a; b < q_; ++b) {
      auto cb = decode(b);
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        if (ca[i])
          for (int j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      int code = encode(e_ == 1 ? std::vector<int>{prod[0]} : poly_mod(prod, full_mod, p_));
      mul_[static_cast<size_t>(a) * q_ + b] = code;
      mul_[static_cast<size_t>(b) * q_ + a] = code;
    }
  }

  frob_.resize(q_);
  for (int a = 0; a < q_; ++a) frob_[a] = pow(a, p_);

  gen_ = -1;
  for (int a = 2; a < q_; ++a) {
    if (mult_order(a) == q_ - 1) {
      gen_ = a;
      break;
    }
  }
  if (gen_ < 0 && q_ == 2) gen_ = 1;
  if (gen_ < 0) throw std::logic_error("no multiplicative generator found");
}

int FiniteField::add(int a, int b) const {
  int code = 0, pw = 1;
  for (int i = 0; i < e_; ++i) {
    code += ((a % p_ + b % p_) % p_) * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return code;
}

int FiniteField::neg(int a) const {
  int code = 0, pw = 1;
  for (int i = 0; i < e_; ++i) {
    code += ((p_ - a % p_) % p_) * pw;
    a /= p_;
    pw *= p_;
  }
  return code;
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::pow(int a, long long k) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  int r = 1;
  int base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::domain_error("division by zero in finite field");
  return pow(a, static_cast<long long>(q_) - 2);
}

long long FiniteField::mult_order(int a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  long long o = 1;
  int x = a;
  while (x != 1) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

}  // namespace twoorbit
