#pragma once

// Shared helpers for the unit suites: a brute-force configuration oracle
// computed straight from raw data, and readable set conversions.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "esgame/event_structure.hpp"

namespace testutil {

using StringSet = std::set<std::string>;

// The vending machine's behaviour as raw data: serving needs the coin and
// the matching selection, and the two drinks conflict.
inline esgame::EsData vending_inner_data() {
  return esgame::EsData{{"coin", "selC", "selT", "coffee", "tea"},
                        {{"coin", "coffee"},
                         {"coin", "tea"},
                         {"selC", "coffee"},
                         {"selT", "tea"}},
                        {{"coffee", "tea"}}};
}

// All configurations of a raw description, by checking every subset of
// events against the definition: down-closed under the reflexive-transitive
// closure of prec, and containing no conflict set entirely.
inline std::vector<StringSet> brute_configs(const esgame::EsData& d) {
  int n = static_cast<int>(d.events.size());
  auto at = [&](const std::string& id) {
    return static_cast<int>(std::find(d.events.begin(), d.events.end(), id) -
                            d.events.begin());
  };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [u, v] : d.prec) leq[at(u)][at(v)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  std::vector<StringSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool good = true;
    for (int j = 0; good && j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      for (int i = 0; good && i < n; ++i)
        if (leq[i][j] && !(mask >> i & 1)) good = false;
    }
    for (const auto& c : d.conflicts) {
      if (!good) break;
      bool inside = true;
      for (const auto& id : c) inside = inside && (mask >> at(id) & 1);
      if (inside) good = false;
    }
    if (!good) continue;
    StringSet s;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) s.insert(d.events[j]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline StringSet names(const esgame::EventStructure& es,
                       const esgame::Bits& xs) {
  StringSet out;
  for (auto& id : es.names_of(xs)) out.insert(id);
  return out;
}

inline std::vector<StringSet> graph_sets(const esgame::EventStructure& es,
                                         const esgame::ConfigGraph& g) {
  std::vector<StringSet> out;
  for (const auto& c : g.configs) out.push_back(names(es, c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testutil
