#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "twoorbit/group.hpp"

namespace twoorbit {

/// Elements with exactly two cycles (fixed points count as cycles).
/// Pairs are stored with k <= n-k; n-cycles are flagged separately, not
/// listed as pairs.
struct TwoCycleReport {
  std::string spec;
  int degree = 0;
  std::set<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, Permutation> witnesses;
  bool has_n_cycle = false;
};

/// Deterministic exhaustive scan of all group elements through the
/// stabilizer chain. Exact; no class machinery needed.
TwoCycleReport two_cycle_pairs(const PermGroup& G, const std::string& spec = "");

struct KlDiff {
  std::set<std::pair<int, int>> missing;     // expected but not found
  std::set<std::pair<int, int>> unexpected;  // found but not expected
  bool ok() const { return missing.empty() && unexpected.empty(); }
};

/// Compare the computed pairs of a group against an expected set.
KlDiff verify_kl_row(const PermGroup& G, const std::set<std::pair<int, int>>& expected);

/// Rank of a transitive group (number of point-stabilizer orbits).
int rank_check(const PermGroup& G);

/// For every witnessed pair with gcd(k, n-k) = 1 and k > 1, the group must
/// contain Alt(n) (checked by membership of the 3-cycles (0,1,i)).
struct MarggrafEntry {
  std::pair<int, int> pair;
  bool exempt = false;       // k == 1 or gcd(k, n-k) > 1
  bool contains_alt = false; // meaningful only when not exempt
};
std::vector<MarggrafEntry> marggraf_coprime_check(const PermGroup& G,
                                                  const TwoCycleReport& report);

/// One expected row of the classification table manifest.
struct KlRow {
  std::string spec;
  int degree = 0;
  std::set<std::pair<int, int>> pairs;
  bool check_rank = true;  // rank <= 3 asserted when the row has pairs
  std::string note;
};

/// Load the bundled expected-pairs manifest (kl_expected.json).
std::vector<KlRow> load_kl_manifest(const std::string& path);

/// Load the skip manifest (spec + reason per line).
std::vector<std::pair<std::string, std::string>> load_skip_manifest(const std::string& path);

}  // namespace twoorbit
