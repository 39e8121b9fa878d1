#include "twoorbit/twocycle.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "twoorbit/blocks.hpp"

namespace twoorbit {

TwoCycleReport two_cycle_pairs(const PermGroup& G, const std::string& spec) {
  TwoCycleReport rep;
  rep.spec = spec;
  rep.degree = G.degree();
  const int n = G.degree();
  std::vector<char> seen(n);
  G.for_each_element([&](const Permutation& g) {
    // count cycles, aborting as soon as a third one starts
    std::fill(seen.begin(), seen.end(), 0);
    int cycles = 0;
    int first_len = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      if (++cycles > 2) break;
      int len = 0, j = i;
      while (!seen[j]) {
        seen[j] = 1;
        j = g(j);
        ++len;
      }
      if (cycles == 1) first_len = len;
    }
    if (cycles == 1) {
      rep.has_n_cycle = true;
    } else if (cycles == 2) {
      int k = std::min(first_len, n - first_len);
      auto key = std::make_pair(k, n - k);
      if (rep.pairs.insert(key).second) rep.witnesses.emplace(key, g);
    }
    return true;
  });
  return rep;
}

KlDiff verify_kl_row(const PermGroup& G, const std::set<std::pair<int, int>>& expected) {
  TwoCycleReport rep = two_cycle_pairs(G);
  KlDiff diff;
  for (const auto& p : expected)
    if (!rep.pairs.count(p)) diff.missing.insert(p);
  for (const auto& p : rep.pairs)
    if (!expected.count(p)) diff.unexpected.insert(p);
  return diff;
}

int rank_check(const PermGroup& G) { return rank_and_subdegrees(G).first; }

std::vector<MarggrafEntry> marggraf_coprime_check(const PermGroup& G,
                                                  const TwoCycleReport& report) {
  std::vector<MarggrafEntry> out;
  const int n = G.degree();
  for (const auto& pr : report.pairs) {
    MarggrafEntry e;
    e.pair = pr;
    if (pr.first == 1 || std::gcd(pr.first, pr.second) > 1) {
      e.exempt = true;
    } else {
      e.contains_alt = true;
      for (int i = 2; i < n && e.contains_alt; ++i) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        img[0] = 1;
        img[1] = i;
        img[i] = 0;
        if (!G.contains(Permutation(std::move(img)))) e.contains_alt = false;
      }
    }
    out.push_back(e);
  }
  return out;
}

std::vector<KlRow> load_kl_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  nlohmann::json j;
  in >> j;
  std::vector<KlRow> rows;
  for (const auto& item : j.at("rows")) {
    KlRow row;
    row.spec = item.at("spec").get<std::string>();
    row.degree = item.at("degree").get<int>();
    for (const auto& pr : item.at("pairs"))
      row.pairs.emplace(pr.at(0).get<int>(), pr.at(1).get<int>());
    if (item.contains("check_rank")) row.check_rank = item.at("check_rank").get<bool>();
    if (item.contains("note")) row.note = item.at("note").get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::pair<std::string, std::string>> load_skip_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open skip manifest: " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto sep = line.find(" -- ");
    if (sep == std::string::npos)
      throw std::runtime_error("bad skip manifest line: " + line);
    out.emplace_back(line.substr(0, sep), line.substr(sep + 4));
  }
  return out;
}

}  // namespace twoorbit
