#include "twoorbit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twoorbit {

int CycleType::degree() const {
  return std::accumulate(lengths.begin(), lengths.end(), 0);
}

std::string CycleType::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (i) os << '-';
    os << lengths[i];
  }
  return os.str();
}

CycleType CycleType::parse(const std::string& s) {
  CycleType t;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, '-')) {
    if (part.empty()) throw std::invalid_argument("bad cycle type: " + s);
    t.lengths.push_back(std::stoi(part));
    if (t.lengths.back() <= 0)
      throw std::invalid_argument("bad cycle type: " + s);
  }
  if (t.lengths.empty()) throw std::invalid_argument("empty cycle type");
  std::sort(t.lengths.begin(), t.lengths.end(), std::greater<int>());
  return t;
}

Permutation::Permutation(int degree) : img_(degree) {
  if (degree <= 0) throw std::invalid_argument("degree must be positive");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty()) throw std::invalid_argument("degree must be positive");
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("images are not a bijection");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int Permutation::cycle_count() const {
  std::vector<char> seen(img_.size(), 0);
  int c = 0;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++c;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img_[j];
    }
  }
  return c;
}

CycleType Permutation::cycle_type() const {
  CycleType t;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img_[j];
      ++len;
    }
    t.lengths.push_back(len);
  }
  std::sort(t.lengths.begin(), t.lengths.end(), std::greater<int>());
  return t;
}

bigint Permutation::order() const {
  bigint o = 1;
  for (int len : cycle_type().lengths) o = boost::multiprecision::lcm(o, bigint(len));
  return o;
}

int Permutation::fixed_points() const {
  int c = 0;
  for (int i = 0; i < degree(); ++i)
    if (img_[i] == i) ++c;
  return c;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = b(a(i));
  return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& a, const Permutation& b) {
  // i -> b^{-1}(i) -> a -> b
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[b(i)] = b(a(i));
  return Permutation(std::move(img));
}

int index_of(const Permutation& s) { return s.degree() - s.cycle_count(); }

namespace {

long long euler_phi(long long m) {
  long long result = m;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace

int index_via_fixed_points(const Permutation& s) {
  const int n = s.degree();
  CycleType type = s.cycle_type();
  long long ord = 1;
  for (int len : type.lengths) ord = std::lcm(ord, static_cast<long long>(len));
  // chi(s^k) = sum of cycle lengths c with c | k; sum over divisors k of ord.
  std::vector<long long> divisors;
  for (long long k = 1; k * k <= ord; ++k) {
    if (ord % k != 0) continue;
    divisors.push_back(k);
    if (k != ord / k) divisors.push_back(ord / k);
  }
  long long total = 0;
  for (long long k : divisors) {
    long long chi = 0;
    for (int c : type.lengths)
      if (k % c == 0) chi += c;
    total += chi * euler_phi(ord / k);
  }
  if (total % ord != 0)
    throw std::logic_error("fixed-point index sum not divisible by order");
  return n - static_cast<int>(total / ord);
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() < 2) continue;
    any = true;
    os << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ',';
      os << cyc[i] + 1;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Permutation parse_cycles(const std::string& s, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_ws();
  bool saw_any = false;
  while (pos < s.size()) {
    if (s[pos] != '(') throw std::invalid_argument("expected '(' in cycle string: " + s);
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < s.size() && s[pos] != ')') {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("expected point in cycle string: " + s);
      int pt = std::stoi(s.substr(start, pos - start)) - 1;
      if (pt < 0 || pt >= degree)
        throw std::invalid_argument("point out of range in cycle string: " + s);
      if (used[pt])
        throw std::invalid_argument("repeated point in cycle string: " + s);
      used[pt] = 1;
      cyc.push_back(pt);
      skip_ws();
      if (pos < s.size() && (s[pos] == ',' || std::isspace(static_cast<unsigned char>(s[pos])))) {
        if (s[pos] == ',') ++pos;
        skip_ws();
      }
    }
    if (pos >= s.size()) throw std::invalid_argument("unterminated cycle: " + s);
    ++pos;  // ')'
    skip_ws();
    for (size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    saw_any = true;
  }
  if (!saw_any) throw std::invalid_argument("empty cycle string");
  return Permutation(std::move(img));
}

}  // namespace twoorbit
