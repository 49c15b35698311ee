#include "esgame/iso.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <tuple>

namespace esgame {

namespace {

// Longest chain strictly below e.
std::vector<int> causal_depths(const EventStructure& es) {
  const int n = (int)es.size();
  std::vector<int> depth(n, 0);
  // Events sorted by cone size give a topological order.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return es.strict_causes(a).count() < es.strict_causes(b).count();
  });
  for (int e : order) {
    int d = 0;
    es.strict_causes(e).for_each(
        [&](int c) { d = std::max(d, depth[c] + 1); });
    depth[e] = d;
  }
  return depth;
}

struct Signature {
  int pol;    // -1 unknown, else 0/1
  int label;  // -1 none
  int depth;
  int indeg, outdeg;
  auto key() const { return std::tie(pol, label, depth, indeg, outdeg); }
  bool operator==(const Signature& o) const { return key() == o.key(); }
};

std::vector<Signature> signatures(const EventStructure& es,
                                  const std::vector<Polarity>* pol,
                                  const EsMap* label) {
  const int n = (int)es.size();
  std::vector<Signature> sig(n, Signature{-1, -1, 0, 0, 0});
  auto depth = causal_depths(es);
  for (int e = 0; e < n; ++e) {
    sig[e].depth = depth[e];
    if (pol) sig[e].pol = (*pol)[e] == Polarity::pos ? 1 : 0;
    if (label) sig[e].label = label->to[e];
  }
  for (auto [a, b] : es.immediate()) {
    sig[a].outdeg++;
    sig[b].indeg++;
  }
  return sig;
}

bool generators_match(const EventStructure& s, const EventStructure& t,
                      const std::vector<int>& map) {
  std::vector<Bits> mapped;
  for (const Bits& g : s.generators()) {
    Bits h(t.size());
    g.for_each([&](int e) { h.set(map[e]); });
    mapped.push_back(h);
  }
  std::sort(mapped.begin(), mapped.end(), canonical_less);
  return mapped == t.generators();
}

}  // namespace

bool is_isomorphism(const EsMap& f) {
  const EventStructure& s = *f.src;
  const EventStructure& t = *f.tgt;
  if (s.size() != t.size() || !f.total()) return false;
  std::vector<int> seen(t.size(), 0);
  for (int v : f.to) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  // A bijection matching the transitive reductions exactly is an order iso.
  for (auto [a, b] : s.immediate())
    if (!t.immediate_edge(f.to[a], f.to[b])) return false;
  if (s.immediate().size() != t.immediate().size()) return false;
  return generators_match(s, t, f.to);
}

std::vector<std::vector<int>> find_isomorphisms(
    const EventStructure& source, const EventStructure& target,
    const std::vector<Polarity>* source_pol,
    const std::vector<Polarity>* target_pol, const EsMap* source_label,
    const EsMap* target_label) {
  std::vector<std::vector<int>> found;
  const int n = (int)source.size();
  if (source.size() != target.size()) return found;
  if ((source_label == nullptr) != (target_label == nullptr)) return found;
  if (source_label && !(*source_label->tgt == *target_label->tgt))
    return found;

  auto ssig = signatures(source, source_pol, source_label);
  auto tsig = signatures(target, target_pol, target_label);

  // Explore rare signatures first; candidate targets in id order.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> rarity(n, 0);
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f)
      if (tsig[f] == ssig[e]) rarity[e]++;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (rarity[a] != rarity[b]) return rarity[a] < rarity[b];
    return a < b;
  });

  std::vector<int> map(n, -1), used(n, 0);
  auto consistent_so_far = [&](int s, int t) {
    if (!(tsig[t] == ssig[s])) return false;
    for (int s2 = 0; s2 < n; ++s2) {
      if (map[s2] < 0) continue;
      if (source.immediate_edge(s, s2) != target.immediate_edge(t, map[s2]))
        return false;
      if (source.immediate_edge(s2, s) != target.immediate_edge(map[s2], t))
        return false;
      if (source.leq(s, s2) != target.leq(t, map[s2])) return false;
      if (source.leq(s2, s) != target.leq(map[s2], t)) return false;
    }
    return true;
  };

  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      if (generators_match(source, target, map)) found.push_back(map);
      return;
    }
    int s = order[k];
    for (int t = 0; t < n; ++t) {
      if (used[t] || !consistent_so_far(s, t)) continue;
      map[s] = t;
      used[t] = 1;
      rec(k + 1);
      map[s] = -1;
      used[t] = 0;
    }
  };
  rec(0);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<std::vector<int>> find_isomorphisms(const Esp& source,
                                                const Esp& target) {
  return find_isomorphisms(*source.es, *target.es, &source.pol, &target.pol);
}

std::optional<EsMap> find_isomorphism_over(const Esp& source,
                                           const Esp& target,
                                           const EsMap& source_label,
                                           const EsMap& target_label) {
  auto all = find_isomorphisms(*source.es, *target.es, &source.pol,
                               &target.pol, &source_label, &target_label);
  if (all.empty()) return std::nullopt;
  EsMap f;
  f.src = source.es;
  f.tgt = target.es;
  f.to = all.front();
  return f;
}

EsMap eventize(EsPtr src, EsPtr tgt,
               const std::function<Bits(const Bits&)>& act) {
  EsMap out;
  out.src = src;
  out.tgt = tgt;
  out.to.assign(src->size(), -1);
  for (std::size_t e = 0; e < src->size(); ++e) {
    Bits cone = src->cone((int)e);
    Bits open = cone;
    open.reset((int)e);
    Bits diff = minus(act(cone), act(open));
    if (diff.count() != 1)
      throw InputError("configuration action does not step one event at a time");
    diff.for_each([&](int v) { out.to[e] = v; });
  }
  return out;
}

}  // namespace esgame
