#include "twoorbit/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace twoorbit {

namespace {

constexpr int kMaxDegree = 10000;

struct PrimePower {
  int p, e;
};

PrimePower factor_prime_power(int q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      int e = 0, v = q;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      if (v != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
      return {p, e};
    }
  }
  return {q, 1};  // prime
}

using Vec = std::vector<int>;     // coordinates, field codes
using Mat = std::vector<Vec>;     // row-major

Vec apply_matrix(const FiniteField& F, const Mat& M, const Vec& v) {
  const int m = static_cast<int>(v.size());
  Vec w(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (M[i][j] && v[j]) w[i] = F.add(w[i], F.mul(M[i][j], v[j]));
  return w;
}

Mat identity_matrix(int m) {
  Mat M(m, Vec(m, 0));
  for (int i = 0; i < m; ++i) M[i][i] = 1;
  return M;
}

// Transvections E_{i,j}(g^t) generate SL_m(q); diag(gamma,1,...,1) extends
// to GL_m(q). Redundant generating sets are fine here.
std::vector<Mat> sl_generators(const FiniteField& F, int m) {
  std::vector<Mat> gens;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      for (int t = 0; t < F.e(); ++t) {
        Mat M = identity_matrix(m);
        M[i][j] = F.pow(F.generator(), t);
        gens.push_back(std::move(M));
      }
    }
  return gens;
}

Mat gl_extra_generator(const FiniteField& F, int m) {
  Mat M = identity_matrix(m);
  M[0][0] = F.generator();
  return M;
}

Vec frobenius_vec(const FiniteField& F, const Vec& v) {
  Vec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = F.frob(v[i]);
  return w;
}

struct ProjectiveSpace {
  const FiniteField& F;
  int m;
  std::vector<Vec> points;  // normalized, sorted
  std::map<Vec, int> index;

  ProjectiveSpace(const FiniteField& F_, int m_) : F(F_), m(m_) {
    Vec v(m, 0);
    enumerate(v, 0);
    std::sort(points.begin(), points.end());
    for (size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);
  }

  void enumerate(Vec& v, int pos) {
    if (pos == m) {
      Vec n = normalize(v);
      if (!n.empty() && std::find(points.begin(), points.end(), n) == points.end())
        points.push_back(n);
      return;
    }
    for (int c = 0; c < F.q(); ++c) {
      v[pos] = c;
      enumerate(v, pos + 1);
    }
  }

  // scale so the last nonzero coordinate is 1; empty result for the zero vector
  Vec normalize(const Vec& v) const {
    int last = -1;
    for (int i = m - 1; i >= 0; --i)
      if (v[i]) {
        last = i;
        break;
      }
    if (last < 0) return {};
    int s = F.inv(v[last]);
    Vec w(m);
    for (int i = 0; i < m; ++i) w[i] = F.mul(v[i], s);
    return w;
  }

  Permutation perm_of_matrix(const Mat& M) const {
    std::vector<int> img(points.size());
    for (size_t i = 0; i < points.size(); ++i)
      img[i] = index.at(normalize(apply_matrix(F, M, points[i])));
    return Permutation(std::move(img));
  }

  Permutation perm_of_frobenius() const {
    std::vector<int> img(points.size());
    for (size_t i = 0; i < points.size(); ++i)
      img[i] = index.at(normalize(frobenius_vec(F, points[i])));
    return Permutation(std::move(img));
  }
};

}  // namespace

PermGroup projective_linear(int m, int p, int e, ProjFlavor flavor) {
  if (m < 2) throw std::invalid_argument("projective groups need m >= 2");
  FiniteField F(p, e);
  long long degree = 0, pw = 1;
  for (int i = 0; i < m; ++i) {
    degree += pw;
    pw *= F.q();
    if (degree > kMaxDegree) throw std::invalid_argument("projective degree over limit");
  }
  ProjectiveSpace space(F, m);
  std::vector<Permutation> gens;
  for (const auto& M : sl_generators(F, m)) gens.push_back(space.perm_of_matrix(M));
  if (flavor == ProjFlavor::PGL || flavor == ProjFlavor::PGammaL)
    gens.push_back(space.perm_of_matrix(gl_extra_generator(F, m)));
  if (flavor == ProjFlavor::PSigmaL || flavor == ProjFlavor::PGammaL)
    gens.push_back(space.perm_of_frobenius());
  return PermGroup(static_cast<int>(space.points.size()), std::move(gens));
}

PermGroup projective_linear(int m, int q, ProjFlavor flavor) {
  auto [p, e] = factor_prime_power(q);
  return projective_linear(m, p, e, flavor);
}

PermGroup affine(int m, int p, int e, AffFlavor flavor) {
  if (m < 1) throw std::invalid_argument("affine groups need m >= 1");
  FiniteField F(p, e);
  long long degree = 1;
  for (int i = 0; i < m; ++i) {
    degree *= F.q();
    if (degree > kMaxDegree) throw std::invalid_argument("affine degree over limit");
  }
  const int n = static_cast<int>(degree);
  const int q = F.q();
  auto decode = [&](int code) {
    Vec v(m);
    for (int i = 0; i < m; ++i) {
      v[i] = code % q;
      code /= q;
    }
    return v;
  };
  auto encode = [&](const Vec& v) {
    int code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * q + v[i];
    return code;
  };
  std::vector<Permutation> gens;
  // translations by g^t along each coordinate
  for (int i = 0; i < m; ++i) {
    for (int t = 0; t < F.e(); ++t) {
      int shift = F.pow(F.generator(), t);
      std::vector<int> img(n);
      for (int c = 0; c < n; ++c) {
        Vec v = decode(c);
        v[i] = F.add(v[i], shift);
        img[c] = encode(v);
      }
      gens.push_back(Permutation(std::move(img)));
    }
  }
  auto push_matrix = [&](const Mat& M) {
    std::vector<int> img(n);
    for (int c = 0; c < n; ++c) img[c] = encode(apply_matrix(F, M, decode(c)));
    gens.push_back(Permutation(std::move(img)));
  };
  for (const auto& M : sl_generators(F, m)) push_matrix(M);
  if (flavor == AffFlavor::AGL || flavor == AffFlavor::AGammaL)
    push_matrix(gl_extra_generator(F, m));
  if (flavor == AffFlavor::ASigmaL || flavor == AffFlavor::AGammaL) {
    std::vector<int> img(n);
    for (int c = 0; c < n; ++c) img[c] = encode(frobenius_vec(F, decode(c)));
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup affine(int m, int q, AffFlavor flavor) {
  auto [p, e] = factor_prime_power(q);
  return affine(m, p, e, flavor);
}

namespace {

// F_{q^m} with an F_q-structure: the subfield elements (codes in the big
// field) sorted, plus the coordinate expansion of every field element with
// respect to the basis 1, G, G^2, ..., G^{m-1}, G the multiplicative
// generator of the big field.
struct SingerSetup {
  FiniteField big;
  std::vector<int> subfield;          // element codes, sorted
  std::vector<Vec> coords_of;         // element code -> coordinates (subfield indices)
  std::map<Vec, int> element_of;      // coordinates -> element code
  int m, q;

  SingerSetup(int m_, int q_)
      : big(factor_prime_power(q_).p, factor_prime_power(q_).e * m_), m(m_), q(q_) {
    // subfield = fixed points of frob^e
    const int e = factor_prime_power(q_).e;
    for (int z = 0; z < big.q(); ++z) {
      int w = z;
      for (int i = 0; i < e; ++i) w = big.frob(w);
      if (w == z) subfield.push_back(z);
    }
    if (static_cast<int>(subfield.size()) != q)
      throw std::logic_error("subfield extraction failed");
    std::vector<int> basis(m);
    basis[0] = 1;
    for (int i = 1; i < m; ++i) basis[i] = big.mul(basis[i - 1], big.generator());
    coords_of.assign(big.q(), {});
    Vec idx(m, 0);
    // enumerate all q^m combinations of subfield coefficients
    while (true) {
      int z = 0;
      for (int i = 0; i < m; ++i) z = big.add(z, big.mul(subfield[idx[i]], basis[i]));
      if (!coords_of[z].empty() && z != 0)
        throw std::logic_error("basis is not independent");
      coords_of[z] = idx;
      element_of[idx] = z;
      int i = 0;
      while (i < m && ++idx[i] == q) idx[i++] = 0;
      if (i == m) break;
    }
  }
};

}  // namespace

Permutation singer_element(int m, int q) {
  SingerSetup s(m, q);
  long long degree = 1;
  for (int i = 0; i < m; ++i) degree *= q;
  if (degree > kMaxDegree) throw std::invalid_argument("degree over limit");
  auto encode = [&](const Vec& v) {
    int code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * q + v[i];
    return code;
  };
  std::vector<int> img(degree);
  for (int z = 0; z < s.big.q(); ++z)
    img[encode(s.coords_of[z])] = encode(s.coords_of[s.big.mul(s.big.generator(), z)]);
  return Permutation(std::move(img));
}

Permutation singer_projective_square(int m, int q) {
  SingerSetup s(m, q);
  // normalized projective points over the subfield: coordinates are
  // subfield indices; last nonzero coordinate scaled to 1
  auto normalize = [&](const Vec& idx) -> Vec {
    int last = -1;
    for (int i = m - 1; i >= 0; --i)
      if (idx[i]) {
        last = i;
        break;
      }
    if (last < 0) return {};
    int inv = s.big.inv(s.subfield[idx[last]]);
    Vec out(m);
    for (int i = 0; i < m; ++i) {
      int scaled = s.big.mul(s.subfield[idx[i]], inv);
      out[i] = static_cast<int>(std::lower_bound(s.subfield.begin(), s.subfield.end(), scaled) -
                                s.subfield.begin());
    }
    return out;
  };
  std::vector<Vec> points;
  for (const auto& [idx, z] : s.element_of) {
    Vec n = normalize(idx);
    if (!n.empty()) points.push_back(n);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::map<Vec, int> index;
  for (size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);
  int g2 = s.big.mul(s.big.generator(), s.big.generator());
  std::vector<int> img(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    int z = s.element_of.at(points[i]);
    img[i] = index.at(normalize(s.coords_of[s.big.mul(g2, z)]));
  }
  return Permutation(std::move(img));
}

std::string data_dir() {
  if (const char* env = std::getenv("TWO_ORBIT_DATA")) return env;
  return TWOORBIT_DATA_DIR;
}

PermGroup mathieu(int n) {
  switch (n) {
    case 11: return PermGroup::from_file(data_dir() + "/m11.grp");
    case 12: return PermGroup::from_file(data_dir() + "/m12.grp");
    case 22: return PermGroup::from_file(data_dir() + "/m22.grp");
    case 23: return PermGroup::from_file(data_dir() + "/m23.grp");
    case 24: return PermGroup::from_file(data_dir() + "/m24.grp");
    default: throw std::invalid_argument("no Mathieu group of degree " + std::to_string(n));
  }
}

PermGroup mathieu11_deg12() { return PermGroup::from_file(data_dir() + "/m11d12.grp"); }

PermGroup m10() { return PermGroup::from_file(data_dir() + "/m10.grp"); }

PermGroup product_action_wreath(const PermGroup& U) {
  const int r = U.degree();
  if (r < 2) throw std::invalid_argument("base group must have degree >= 2");
  if (!U.is_transitive()) throw std::invalid_argument("base group must be transitive");
  if (static_cast<long long>(r) * r > kMaxDegree)
    throw std::invalid_argument("wreath degree over limit");
  const int n = r * r;
  std::vector<Permutation> gens;
  for (const auto& u : U.generators()) {
    std::vector<int> a(n), b(n);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        a[i * r + j] = u(i) * r + j;
        b[i * r + j] = i * r + u(j);
      }
    gens.push_back(Permutation(std::move(a)));
    gens.push_back(Permutation(std::move(b)));
  }
  std::vector<int> flip(n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) flip[i * r + j] = j * r + i;
  gens.push_back(Permutation(std::move(flip)));
  return PermGroup(n, std::move(gens));
}

PermGroup symmetric(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    gens.push_back(Permutation(std::move(t)));
  }
  if (n >= 3) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(Permutation(std::move(c)));
  }
  if (gens.empty()) gens.push_back(Permutation(n));
  return PermGroup(n, std::move(gens));
}

PermGroup alternating(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<Permutation> gens;
  if (n >= 3) {
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    t[0] = 1;
    t[1] = 2;
    t[2] = 0;
    gens.push_back(Permutation(std::move(t)));
  }
  if (n >= 4) {
    std::vector<int> c(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    } else {
      c[0] = 0;
      for (int i = 1; i < n; ++i) c[i] = i % (n - 1) + 1;
    }
    gens.push_back(Permutation(std::move(c)));
  }
  if (gens.empty()) gens.push_back(Permutation(n));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return PermGroup(n, {Permutation(std::move(c))});
}

PermGroup dihedral(int n) {
  if (n < 3) throw std::invalid_argument("dihedral groups need n >= 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup(n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

namespace {

std::pair<int, int> parse_two_ints(const std::string& args, const std::string& spec) {
  auto comma = args.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected two arguments in " + spec);
  try {
    return {std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad arguments in " + spec);
  }
}

int parse_one_int(const std::string& args, const std::string& spec) {
  try {
    size_t used = 0;
    int v = std::stoi(args, &used);
    if (used != args.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad argument in " + spec);
  }
}

}  // namespace

NamedGroup parse_group_spec(const std::string& raw) {
  std::string spec;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) spec.push_back(c);
  if (spec.empty()) throw std::invalid_argument("empty group spec");

  if (spec == "M11") return {"M11", mathieu(11)};
  if (spec == "M11deg12") return {"M11deg12", mathieu11_deg12()};
  if (spec == "M12") return {"M12", mathieu(12)};
  if (spec == "M22") return {"M22", mathieu(22)};
  if (spec == "M23") return {"M23", mathieu(23)};
  if (spec == "M24") return {"M24", mathieu(24)};
  if (spec == "M10") return {"M10", m10()};

  auto paren = spec.find('(');
  if (paren == std::string::npos || spec.back() != ')')
    throw std::invalid_argument("cannot parse group spec: " + raw);
  std::string head = spec.substr(0, paren);
  std::string args = spec.substr(paren + 1, spec.size() - paren - 2);

  if (head == "S" || head == "A" || head == "C" || head == "D") {
    int n = parse_one_int(args, raw);
    if (n < 1 || (head == "D" && n < 3))
      throw std::invalid_argument("degree out of range in " + raw);
    if (head == "S") return {"S(" + std::to_string(n) + ")", symmetric(n)};
    if (head == "A") return {"A(" + std::to_string(n) + ")", alternating(n)};
    if (head == "C") return {"C(" + std::to_string(n) + ")", cyclic(n)};
    return {"D(" + std::to_string(n) + ")", dihedral(n)};
  }
  if (head == "AGL" || head == "ASigmaL" || head == "AGammaL") {
    auto [m, q] = parse_two_ints(args, raw);
    AffFlavor f = head == "AGL"      ? AffFlavor::AGL
                  : head == "ASigmaL" ? AffFlavor::ASigmaL
                                      : AffFlavor::AGammaL;
    return {head + "(" + std::to_string(m) + "," + std::to_string(q) + ")", affine(m, q, f)};
  }
  if (head == "PSL" || head == "PGL" || head == "PSigmaL" || head == "PGammaL") {
    auto [m, q] = parse_two_ints(args, raw);
    ProjFlavor f = head == "PSL"      ? ProjFlavor::PSL
                   : head == "PGL"     ? ProjFlavor::PGL
                   : head == "PSigmaL" ? ProjFlavor::PSigmaL
                                       : ProjFlavor::PGammaL;
    return {head + "(" + std::to_string(m) + "," + std::to_string(q) + ")",
            projective_linear(m, q, f)};
  }
  if (head == "Wr2") {
    NamedGroup inner = parse_group_spec(args);
    return {"Wr2(" + inner.name + ")", product_action_wreath(inner.group)};
  }
  if (head == "File") {
    std::string path = args;
    if (!path.empty() && path.front() != '/') path = data_dir() + "/" + path;
    return {"File(" + args + ")", PermGroup::from_file(path)};
  }
  throw std::invalid_argument("unknown group spec: " + raw);
}

}  // namespace twoorbit
