#include "twoorbit/genus0.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace twoorbit {

namespace {

std::string pack(const Permutation& p) {
  std::string s;
  s.reserve(2 * p.degree());
  for (int v : p.images()) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return s;
}

bool transitive_on_points(const std::vector<Permutation>& elements, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : elements)
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(g(i));
      if (a != b) parent[a] = b;
    }
  for (int i = 1; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

Permutation perm_pow(const Permutation& p, int k) {
  Permutation r(p.degree());
  Permutation base = p;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    base = base * base;
  }
  return r;
}

// Shared state for the anchored backtracking search over class multisets.
struct ClassInfo {
  Permutation rep;
  int ind = 0;
  int order = 0;
  int rational = -1;  // -1 unknown, else 0/1
  std::vector<Permutation> elements;              // filled lazily
  std::vector<Permutation> centralizer_orbit_reps;  // under the anchor centralizer
  std::unordered_set<std::string> member_set;
  ClassInfo() : rep(1) {}
};

struct SearchContext {
  const PermGroup* G = nullptr;
  Permutation anchor{1};
  Permutation anchor_inv{1};
  std::vector<Permutation> centralizer_gens;
  std::vector<ClassInfo> classes;  // non-identity classes only
  bigint class_ceiling;

  void ensure_elements(ClassInfo& c) {
    if (!c.elements.empty()) return;
    c.elements = G->class_elements(c.rep, class_ceiling);
    c.member_set.reserve(c.elements.size() * 2);
    for (const auto& e : c.elements) c.member_set.insert(pack(e));
  }

  bool is_rational(ClassInfo& c) {
    if (c.rational < 0) {
      ensure_elements(c);
      c.rational = 1;
      for (int k = 2; k < c.order; ++k) {
        if (std::gcd(k, c.order) != 1) continue;
        if (!c.member_set.count(pack(perm_pow(c.rep, k)))) {
          c.rational = 0;
          break;
        }
      }
    }
    return c.rational == 1;
  }

  // Orbit representatives of the class under conjugation by the anchor
  // centralizer (conjugating a whole system by a centralizer element fixes
  // the anchor, so one representative per orbit suffices in position 1).
  void ensure_orbit_reps(ClassInfo& c) {
    if (!c.centralizer_orbit_reps.empty()) return;
    ensure_elements(c);
    std::unordered_set<std::string> seen;
    seen.reserve(c.elements.size() * 2);
    for (const auto& e : c.elements) {
      if (seen.count(pack(e))) continue;
      c.centralizer_orbit_reps.push_back(e);
      std::vector<Permutation> frontier{e};
      seen.insert(pack(e));
      while (!frontier.empty()) {
        Permutation cur = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& z : centralizer_gens) {
          Permutation img = conjugate(cur, z);
          if (seen.insert(pack(img)).second) frontier.push_back(std::move(img));
        }
      }
    }
  }
};

SearchContext make_context(const PermGroup& G, const Permutation& anchor_rep,
                           const bigint& class_ceiling) {
  SearchContext ctx;
  ctx.G = &G;
  ctx.anchor = anchor_rep;
  ctx.anchor_inv = anchor_rep.inverse();
  ctx.class_ceiling = class_ceiling;
  if (!G.contains(anchor_rep))
    throw std::invalid_argument("anchor element is not in the group");
  ctx.centralizer_gens = G.centralizer(anchor_rep, class_ceiling).generators();
  for (const auto& cls : G.conjugacy_classes(class_ceiling)) {
    if (cls.rep.is_identity()) continue;
    ClassInfo info;
    info.rep = cls.rep;
    info.ind = index_of(cls.rep);
    info.order = static_cast<int>(cls.rep.order());
    ctx.classes.push_back(std::move(info));
  }
  return ctx;
}

// Visit every genus-0 system (s_1, ..., s_m, anchor) whose free positions
// realize the class indices in `combo` in order, with position 1 reduced
// modulo the anchor centralizer. Returns false if the visitor stops early.
bool scan_combo(SearchContext& ctx, const std::vector<int>& combo,
                const std::function<bool(const std::vector<Permutation>&)>& visit) {
  const size_t m = combo.size();
  ClassInfo& last = ctx.classes[combo[m - 1]];
  ctx.ensure_elements(last);
  std::vector<Permutation> chosen;
  std::vector<Permutation> prefix;  // prefix[k] = s_1 * ... * s_k
  chosen.reserve(m + 1);

  std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
    if (pos == m - 1) {
      // s_m is forced by the identity-product condition
      const Permutation& pre = prefix.back();
      Permutation forced = pre.inverse() * ctx.anchor_inv;
      if (forced.cycle_type() != last.rep.cycle_type()) return true;
      if (!last.member_set.count(pack(forced))) return true;
      chosen.push_back(std::move(forced));
      chosen.push_back(ctx.anchor);
      bool go = visit(chosen);
      chosen.pop_back();
      chosen.pop_back();
      return go;
    }
    ClassInfo& c = ctx.classes[combo[pos]];
    const std::vector<Permutation>& pool =
        (pos == 0) ? (ctx.ensure_orbit_reps(c), c.centralizer_orbit_reps)
                   : (ctx.ensure_elements(c), c.elements);
    for (const auto& s : pool) {
      chosen.push_back(s);
      prefix.push_back(pos == 0 ? s : prefix.back() * s);
      bool go = rec(pos + 1);
      prefix.pop_back();
      chosen.pop_back();
      if (!go) return false;
    }
    return true;
  };
  return rec(0);
}

// All nondecreasing sequences of class indices whose indices sum to the
// budget, with at least `min_len` entries. Any ordering of a multiset is
// reachable from any other by the braid moves of reorder_classes, so one
// ordering per multiset is exhaustive for type and subgroup detection.
void combos_with_budget(const std::vector<ClassInfo>& classes, int budget, size_t min_len,
                        std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(size_t, int)> rec = [&](size_t start, int left) {
    if (left == 0) {
      if (cur.size() >= min_len) out.push_back(cur);
      return;
    }
    for (size_t i = start; i < classes.size(); ++i) {
      if (classes[i].ind > left) continue;
      cur.push_back(static_cast<int>(i));
      rec(i, left - classes[i].ind);
      cur.pop_back();
    }
  };
  rec(0, budget);
}

}  // namespace

TupleType TupleType::of(const std::vector<Permutation>& elements) {
  TupleType t;
  for (const auto& e : elements) t.orders.push_back(static_cast<int>(e.order()));
  std::sort(t.orders.begin(), t.orders.end());
  return t;
}

std::string TupleType::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i) os << ',';
    os << orders[i];
  }
  os << ')';
  return os.str();
}

int genus_of_tuple(const std::vector<Permutation>& elements) {
  if (elements.empty()) throw std::invalid_argument("empty tuple");
  const int n = elements.front().degree();
  Permutation prod(n);
  int total = 0;
  for (const auto& e : elements) {
    if (e.degree() != n) throw std::invalid_argument("mixed degrees in tuple");
    prod = prod * e;
    total += index_of(e);
  }
  if (!prod.is_identity())
    throw std::invalid_argument("tuple product is not the identity");
  if (!transitive_on_points(elements, n))
    throw std::invalid_argument("tuple does not generate a transitive group");
  // 2(n - 1 + g) = total
  if (total % 2 != 0)
    throw std::logic_error("odd index sum for an identity-product tuple");
  int g = total / 2 - (n - 1);
  if (g < 0) throw std::logic_error("negative genus from index count");
  return g;
}

std::vector<Genus0Type> enumerate_genus0_types(const PermGroup& G,
                                               const Permutation& anchor_rep,
                                               const bigint& class_ceiling) {
  SearchContext ctx = make_context(G, anchor_rep, class_ceiling);
  const int n = G.degree();
  const int budget = 2 * (n - 1) - index_of(anchor_rep);
  if (budget <= 0) return {};

  std::vector<std::vector<int>> combos;
  combos_with_budget(ctx.classes, budget, 2, combos);

  // Rationality of the anchor's own class (found by cycle type + membership).
  bool anchor_rational = false;
  for (auto& c : ctx.classes) {
    if (c.rep.cycle_type() != anchor_rep.cycle_type()) continue;
    ctx.ensure_elements(c);
    if (c.member_set.count(pack(anchor_rep))) {
      anchor_rational = ctx.is_rational(c);
      break;
    }
  }

  std::map<std::pair<std::vector<int>, bigint>, Genus0Type> found;
  for (const auto& combo : combos) {
    TupleType type;
    for (int ci : combo) type.orders.push_back(ctx.classes[ci].order);
    type.orders.push_back(static_cast<int>(anchor_rep.order()));
    std::sort(type.orders.begin(), type.orders.end());

    bool rational = anchor_rational;
    for (int ci : combo) rational = rational && ctx.is_rational(ctx.classes[ci]);

    scan_combo(ctx, combo, [&](const std::vector<Permutation>& sys) {
      if (!transitive_on_points(sys, n)) return true;
      PermGroup H(n, sys);
      auto key = std::make_pair(type.orders, H.order());
      auto it = found.find(key);
      if (it == found.end()) {
        Genus0Type t;
        t.type.orders = type.orders;
        t.subgroup_order = key.second;
        t.witness.elements = sys;
        t.witness.genus = 0;
        t.all_classes_rational = rational;
        found.emplace(std::move(key), std::move(t));
      } else if (rational && !it->second.all_classes_rational) {
        // prefer an all-rational witness for the same (type, order) pair
        it->second.all_classes_rational = true;
        it->second.witness.elements = sys;
      }
      return true;
    });
  }

  std::vector<Genus0Type> out;
  out.reserve(found.size());
  for (auto& [key, t] : found) out.push_back(std::move(t));
  return out;
}

bool class_is_rational(const PermGroup& G, const Permutation& rep) {
  const int ord = static_cast<int>(rep.order());
  if (ord <= 2) return true;
  std::unordered_set<std::string> members;
  for (const auto& e : G.class_elements(rep, bigint(10000000)))
    members.insert(pack(e));
  for (int k = 2; k < ord; ++k) {
    if (std::gcd(k, ord) != 1) continue;
    if (!members.count(pack(perm_pow(rep, k)))) return false;
  }
  return true;
}

std::vector<GenusSystem> search_genus0_systems(const PermGroup& G,
                                               const std::vector<int>& type,
                                               const Permutation& anchor_rep,
                                               size_t limit,
                                               const bigint& class_ceiling) {
  if (type.size() < 2)
    throw std::invalid_argument("need at least two free positions");
  SearchContext ctx = make_context(G, anchor_rep, class_ceiling);
  const int n = G.degree();
  const int budget = 2 * (n - 1) - index_of(anchor_rep);

  // All nondecreasing class-index sequences matching the requested orders
  // (several classes can share an element order) with the exact budget.
  std::vector<int> sorted_type = type;
  std::sort(sorted_type.begin(), sorted_type.end());
  std::vector<std::vector<int>> combos;
  std::vector<int> cur;
  // Walk classes in index order, deciding how many copies of each to use,
  // so every matching multiset is visited exactly once.
  {
    std::function<void(size_t, std::vector<int>, int)> rec2 =
        [&](size_t ci, std::vector<int> remaining, int left) {
          if (remaining.empty()) {
            if (left == 0) combos.push_back(cur);
            return;
          }
          if (ci == ctx.classes.size()) return;
          rec2(ci + 1, remaining, left);  // skip this class entirely
          const ClassInfo& c = ctx.classes[ci];
          auto it = std::find(remaining.begin(), remaining.end(), c.order);
          if (it == remaining.end() || c.ind > left) return;
          std::vector<int> next = remaining;
          next.erase(std::find(next.begin(), next.end(), c.order));
          cur.push_back(static_cast<int>(ci));
          rec2(ci, std::move(next), left - c.ind);  // may reuse same class
          cur.pop_back();
        };
    rec2(0, sorted_type, budget);
  }

  std::vector<GenusSystem> out;
  for (const auto& combo : combos) {
    if (out.size() >= limit) break;
    scan_combo(ctx, combo, [&](const std::vector<Permutation>& sys) {
      if (!transitive_on_points(sys, n)) return true;
      PermGroup H(n, sys);
      if (H.order() != G.order()) return true;  // full group only
      GenusSystem gs;
      gs.elements = sys;
      gs.genus = 0;
      out.push_back(std::move(gs));
      return out.size() < limit;
    });
  }
  return out;
}

BlockSystem gcd_block_check(const GenusSystem& system, int d) {
  if (d <= 1) throw std::invalid_argument("d must exceed 1");
  if (system.elements.size() < 2)
    throw std::invalid_argument("system needs at least two elements");
  for (int idx : {0, 1})
    for (const auto& cyc : system.elements[idx].cycles())
      if (static_cast<int>(cyc.size()) % d != 0)
        throw std::invalid_argument(
            "cycle length not divisible by d in element " + std::to_string(idx + 1));

  const int n = system.elements.front().degree();
  PermGroup H(n, system.elements);
  if (!H.is_transitive())
    throw std::invalid_argument("system does not generate a transitive group");

  // Close the minimal block systems under pairwise joins to sweep the whole
  // block lattice, then look for d blocks with a cyclic induced action.
  auto join = [&](const BlockSystem& a, const BlockSystem& b) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto* sys : {&a, &b})
      for (const auto& blk : sys->blocks)
        for (size_t i = 1; i < blk.size(); ++i) {
          int u = find(blk[0]), v = find(blk[i]);
          if (u != v) parent[u] = v;
        }
    std::map<int, std::vector<int>> cells;
    for (int i = 0; i < n; ++i) cells[find(i)].push_back(i);
    BlockSystem r;
    for (auto& [root, pts] : cells) r.blocks.push_back(std::move(pts));
    std::sort(r.blocks.begin(), r.blocks.end(),
              [](const auto& x, const auto& y) { return x[0] < y[0]; });
    r.block_size = static_cast<int>(r.blocks.front().size());
    return r;
  };

  std::vector<BlockSystem> lattice = block_systems(H);
  for (size_t i = 0; i < lattice.size(); ++i)
    for (size_t j = 0; j < lattice.size(); ++j) {
      if (i == j) continue;
      BlockSystem joined = join(lattice[i], lattice[j]);
      if (joined.blocks.size() <= 1 || static_cast<int>(joined.blocks.size()) == n)
        continue;
      if (std::find(lattice.begin(), lattice.end(), joined) == lattice.end())
        lattice.push_back(joined);  // extends the loops
    }

  for (const auto& bs : lattice) {
    if (static_cast<int>(bs.blocks.size()) != d) continue;
    // induced action of the generators on the blocks
    std::vector<int> block_of(n);
    for (size_t b = 0; b < bs.blocks.size(); ++b)
      for (int p : bs.blocks[b]) block_of[p] = static_cast<int>(b);
    std::vector<Permutation> induced;
    for (const auto& g : H.generators()) {
      std::vector<int> img(d);
      for (int b = 0; b < d; ++b) img[b] = block_of[g(bs.blocks[b][0])];
      induced.emplace_back(std::move(img));
    }
    PermGroup Q(d, induced);
    if (Q.order() != d) continue;
    bool has_d_cycle = false;
    Q.for_each_element([&](const Permutation& g) {
      if (g.order() == d) {
        has_d_cycle = true;
        return false;
      }
      return true;
    });
    if (has_d_cycle) return bs;
  }
  throw std::logic_error("no block system with " + std::to_string(d) +
                         " cyclically permuted blocks");
}

GenusSystem reorder_classes(const GenusSystem& system, int i) {
  if (i < 0 || i + 1 >= static_cast<int>(system.elements.size()))
    throw std::invalid_argument("swap position out of range");
  GenusSystem out = system;
  const Permutation& a = system.elements[i];
  const Permutation& b = system.elements[i + 1];
  out.elements[i] = b;
  out.elements[i + 1] = conjugate(a, b);
  return out;
}

}  // namespace twoorbit
