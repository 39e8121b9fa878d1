#include "twoorbit/group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace twoorbit {

namespace {

std::string pack(const Permutation& p) {
  std::string key;
  key.reserve(p.degree() * 2);
  for (int i = 0; i < p.degree(); ++i) {
    key.push_back(static_cast<char>(p(i) & 0xff));
    key.push_back(static_cast<char>((p(i) >> 8) & 0xff));
  }
  return key;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     std::vector<int> base_prefix)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ <= 0) throw std::invalid_argument("degree must be positive");
  if (gens_.empty()) throw std::invalid_argument("generator set must be non-empty");
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
  build_chain(std::move(base_prefix));
  order_ = 1;
  for (const auto& lvl : chain_) order_ *= static_cast<int>(lvl.orbit.size());
}

void PermGroup::build_chain(std::vector<int> base_prefix) {
  // Deterministic Schreier-Sims. The strong generating set grows by sifted
  // Schreier-generator residues; whenever one is added, the chain is rebuilt
  // from scratch and verification restarts. Wasteful in theory, but simple,
  // and cheap at catalog scale (bases and generator counts stay small).
  for (int p : base_prefix)
    if (p < 0 || p >= degree_)
      throw std::invalid_argument("base point out of range");

  std::vector<Permutation> strong;
  for (const auto& g : gens_)
    if (!g.is_identity()) strong.push_back(g);

  base_ = base_prefix;

  auto fixes_prefix = [&](const Permutation& g, size_t upto) {
    for (size_t i = 0; i < upto; ++i)
      if (g(base_[i]) != base_[i]) return false;
    return true;
  };

  auto sift = [&](size_t from, Permutation g) -> std::pair<size_t, Permutation> {
    size_t i = from;
    for (; i < chain_.size(); ++i) {
      if (g.is_identity()) break;
      int q = g(chain_[i].base_point);
      if (!chain_[i].transversal[q]) break;
      g = g * chain_[i].transversal[q]->inverse();
    }
    return {i, std::move(g)};
  };

  while (true) {
    // Make sure every strong generator moves some base point.
    for (const auto& g : strong) {
      if (fixes_prefix(g, base_.size())) {
        for (int p = 0; p < degree_; ++p)
          if (g(p) != p) {
            base_.push_back(p);
            break;
          }
      }
    }
    // Rebuild the chain: level i holds every strong generator fixing the
    // first i base points, and the fundamental orbit of base_[i] under them.
    chain_.clear();
    for (size_t i = 0; i < base_.size(); ++i) {
      Level lvl;
      lvl.base_point = base_[i];
      for (const auto& g : strong)
        if (fixes_prefix(g, i)) lvl.gens.push_back(g);
      lvl.transversal.assign(degree_, std::nullopt);
      lvl.orbit.push_back(lvl.base_point);
      lvl.transversal[lvl.base_point] = Permutation(degree_);
      for (size_t head = 0; head < lvl.orbit.size(); ++head) {
        int p = lvl.orbit[head];
        for (const auto& s : lvl.gens) {
          int q = s(p);
          if (!lvl.transversal[q]) {
            lvl.transversal[q] = *lvl.transversal[p] * s;
            lvl.orbit.push_back(q);
          }
        }
      }
      chain_.push_back(std::move(lvl));
    }
    // Verify all Schreier generators; restart on the first failure.
    bool complete = true;
    for (size_t i = 0; i < chain_.size() && complete; ++i) {
      const Level& lvl = chain_[i];
      for (int p : lvl.orbit) {
        for (const auto& s : lvl.gens) {
          Permutation schreier =
              *lvl.transversal[p] * s * lvl.transversal[s(p)]->inverse();
          auto [j, residue] = sift(i + 1, std::move(schreier));
          (void)j;
          if (!residue.is_identity()) {
            strong.push_back(std::move(residue));
            complete = false;
            break;
          }
        }
        if (!complete) break;
      }
    }
    if (complete) break;
  }
}

bool PermGroup::strip(const Permutation& p, Permutation& residue, size_t& level) const {
  residue = p;
  for (level = 0; level < chain_.size(); ++level) {
    int q = residue(chain_[level].base_point);
    if (!chain_[level].transversal[q]) return false;
    residue = residue * chain_[level].transversal[q]->inverse();
  }
  return residue.is_identity();
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Permutation residue(degree_);
  size_t level;
  return strip(p, residue, level);
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> owner(degree_, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < degree_; ++start) {
    if (owner[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.push_back({start});
    owner[start] = id;
    for (size_t head = 0; head < out[id].size(); ++head) {
      int p = out[id][head];
      for (const auto& g : gens_) {
        int q = g(p);
        if (owner[q] < 0) {
          owner[q] = id;
          out[id].push_back(q);
        }
      }
    }
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

std::vector<Permutation> PermGroup::stabilizer_generators(int k) const {
  // Level k already holds every strong generator fixing the first k base
  // points, which generates the pointwise stabilizer of that prefix.
  std::vector<Permutation> out;
  if (static_cast<size_t>(k) < chain_.size()) out = chain_[k].gens;
  if (out.empty()) out.push_back(Permutation(degree_));
  return out;
}

PermGroup PermGroup::point_stabilizer(int point) const {
  PermGroup anchored(degree_, gens_, {point});
  return PermGroup(degree_, anchored.stabilizer_generators(1));
}

void PermGroup::for_each_element(const std::function<bool(const Permutation&)>& fn) const {
  const size_t k = chain_.size();
  if (k == 0) {
    fn(Permutation(degree_));
    return;
  }
  // Odometer over the transversals; element = t_{k-1} * ... * t_0, with
  // level 0 (the largest orbit) varying fastest, so almost every element
  // costs a single composition with the cached suffix product.
  std::vector<std::vector<const Permutation*>> trans(k);
  for (size_t i = 0; i < k; ++i)
    for (int p : chain_[i].orbit) trans[i].push_back(&*chain_[i].transversal[p]);
  std::vector<size_t> idx(k, 0);
  // partial[i] = t_{k-1} * ... * t_i ; partial[k] = identity
  std::vector<Permutation> partial(k + 1, Permutation(degree_));
  for (size_t i = k; i-- > 0;)
    partial[i] = partial[i + 1] * *trans[i][0];
  while (true) {
    if (!fn(partial[0])) return;
    size_t i = 0;
    while (i < k && ++idx[i] == trans[i].size()) {
      idx[i] = 0;
      ++i;
    }
    if (i == k) return;
    for (size_t j = i + 1; j-- > 0;)
      partial[j] = partial[j + 1] * *trans[j][idx[j]];
  }
}

std::vector<Permutation> PermGroup::elements(const bigint& ceiling) const {
  if (order_ > ceiling) {
    std::ostringstream os;
    os << "group too large for element enumeration: order " << order_
       << " exceeds ceiling " << ceiling;
    throw std::runtime_error(os.str());
  }
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(order_));
  for_each_element([&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<ConjClass> PermGroup::conjugacy_classes(const bigint& ceiling) const {
  if (order_ > ceiling) {
    std::ostringstream os;
    os << "group too large for class enumeration: order " << order_
       << " exceeds ceiling " << ceiling;
    throw std::runtime_error(os.str());
  }
  auto els = elements(ceiling);
  std::unordered_map<std::string, size_t> index;
  index.reserve(els.size() * 2);
  for (size_t i = 0; i < els.size(); ++i) index.emplace(pack(els[i]), i);
  std::vector<char> visited(els.size(), 0);
  std::vector<ConjClass> out;
  for (size_t start = 0; start < els.size(); ++start) {
    if (visited[start]) continue;
    // BFS over conjugation by generators
    std::vector<size_t> members{start};
    visited[start] = 1;
    for (size_t head = 0; head < members.size(); ++head) {
      for (const auto& g : gens_) {
        Permutation c = conjugate(els[members[head]], g);
        size_t j = index.at(pack(c));
        if (!visited[j]) {
          visited[j] = 1;
          members.push_back(j);
        }
      }
    }
    size_t best = members[0];
    for (size_t m : members)
      if (els[m] < els[best]) best = m;
    out.push_back({els[best], bigint(members.size())});
  }
  std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
    auto ta = a.rep.cycle_type(), tb = b.rep.cycle_type();
    if (ta != tb) return ta < tb;
    return a.rep < b.rep;
  });
  return out;
}

std::vector<Permutation> PermGroup::class_elements(const Permutation& rep,
                                                   const bigint& ceiling) const {
  if (order_ > ceiling)
    throw std::runtime_error("group too large for class enumeration");
  std::unordered_set<std::string> seen;
  std::deque<Permutation> queue{rep};
  std::vector<Permutation> out;
  seen.insert(pack(rep));
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    out.push_back(p);
    for (const auto& g : gens_) {
      Permutation c = conjugate(p, g);
      if (seen.insert(pack(c)).second) queue.push_back(c);
    }
  }
  return out;
}

PermGroup PermGroup::centralizer(const Permutation& p, const bigint& ceiling) const {
  if (order_ > ceiling)
    throw std::runtime_error("group too large for centralizer enumeration");
  std::vector<Permutation> gens{Permutation(degree_)};
  auto current = std::make_unique<PermGroup>(degree_, gens);
  for_each_element([&](const Permutation& e) {
    if (e * p == p * e && !current->contains(e)) {
      gens.push_back(e);
      current = std::make_unique<PermGroup>(degree_, gens);
    }
    return true;
  });
  return *current;
}

PermGroup PermGroup::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator file: " + path);
  int degree = -1;
  std::optional<bigint> expected_order;
  std::vector<Permutation> gens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r\n");
    line = line.substr(first, last - first + 1);
    if (line.rfind("degree", 0) == 0) {
      degree = std::stoi(line.substr(6));
      continue;
    }
    if (line.rfind("order", 0) == 0) {
      std::string digits = line.substr(5);
      digits.erase(0, digits.find_first_not_of(" \t"));
      expected_order = bigint(digits);
      continue;
    }
    if (degree <= 0)
      throw std::runtime_error("generator file missing degree line: " + path);
    gens.push_back(parse_cycles(line, degree));
  }
  if (degree <= 0) throw std::runtime_error("generator file missing degree line: " + path);
  if (gens.empty()) gens.push_back(Permutation(degree));
  PermGroup G(degree, std::move(gens));
  if (expected_order && G.order() != *expected_order) {
    std::ostringstream os;
    os << "generator file " << path << " is corrupted: computed order "
       << G.order() << " != recorded order " << *expected_order;
    throw std::runtime_error(os.str());
  }
  return G;
}

std::vector<Permutation> naive_closure(int degree,
                                       const std::vector<Permutation>& gens,
                                       size_t ceiling) {
  std::unordered_map<std::string, size_t> index;
  std::vector<Permutation> out{Permutation(degree)};
  index.emplace(pack(out[0]), 0);
  for (size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      Permutation q = out[head] * g;
      if (index.emplace(pack(q), out.size()).second) {
        out.push_back(std::move(q));
        if (out.size() > ceiling)
          throw std::runtime_error("naive closure exceeded ceiling");
      }
    }
  }
  return out;
}

}  // namespace twoorbit
