#include "esgame/gen.hpp"

#include <algorithm>
#include <utility>

namespace esgame {

namespace {

std::string letter_id(int k) {
  std::string id(1, static_cast<char>('a' + k % 26));
  if (k >= 26) id += std::to_string(k / 26);
  return id;
}

// A raw conflict must not sit inside a single causal cone.
bool inside_a_cone(const std::vector<Bits>& closure, const Bits& g,
                   std::size_t n) {
  for (std::size_t e = 0; e < n; ++e) {
    bool all = true;
    g.for_each([&](int v) {
      if (static_cast<std::size_t>(v) != e && !closure[e].test(v)) all = false;
    });
    if (all) return true;
  }
  return false;
}

}  // namespace

EspPtr gen_esp(Rng& rng, int n_events, const GenOptions& opt) {
  const std::size_t n = static_cast<std::size_t>(n_events);
  EsData data;
  for (std::size_t k = 0; k < n; ++k)
    data.events.push_back(letter_id(static_cast<int>(k)));

  std::vector<Bits> closure(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(opt.edge_bias, 6)) {
        data.prec.emplace_back(data.events[i], data.events[j]);
        closure[j].set(static_cast<int>(i));
        closure[j] |= closure[i];
      }

  if (opt.conflicts && n >= 2) {
    std::size_t tries = rng.below(n + 1);
    for (std::size_t t = 0; t < tries; ++t) {
      std::size_t size = 2 + (n >= 3 && rng.chance(1, 4) ? 1 : 0);
      Bits g(n);
      while (g.count() < size) g.set(static_cast<int>(rng.below(n)));
      if (inside_a_cone(closure, g, n)) continue;
      data.conflicts.push_back({});
      g.for_each([&](int v) { data.conflicts.back().push_back(data.events[v]); });
    }
  }

  std::vector<Polarity> pol(n);
  for (std::size_t k = 0; k < n; ++k)
    pol[k] = rng.chance(1, 2) ? Polarity::pos : Polarity::neg;

  // Single-letter ids are generated in sorted order, so the polarity vector
  // is aligned with the built structure's index order.
  return make_esp(EventStructure::from_data(data), std::move(pol));
}

EspPtr gen_esp(std::uint64_t seed, int n_events, const GenOptions& opt) {
  Rng rng(seed);
  return gen_esp(rng, n_events, opt);
}

PreStrategy gen_prestrategy(Rng& rng, const EspPtr& game,
                            const Limits& limits) {
  const EventStructure& ges = *game->es;
  const std::size_t n = ges.size();

  Bits keep(n);
  std::size_t density = rng.below(4);
  for (std::size_t e = 0; e < n; ++e)
    if (rng.chance(density, 3)) keep.set(static_cast<int>(e));
  keep = ges.down_closure(keep);

  ProjectionEsp pe = project(game, keep, limits);
  const EventStructure& res = *pe.restricted->es;

  EsData data;
  data.events = res.ids();
  for (const auto& [u, v] : res.immediate())
    data.prec.emplace_back(res.id(u), res.id(v));
  for (const Bits& g : res.generators()) data.conflicts.push_back(res.names_of(g));

  EsPtr cur = res.size() ? EventStructure::from_data(data) : pe.restricted->es;

  // Extra causal links between unrelated events; links that would swallow a
  // conflict into a cone are rejected by validation and dropped.
  std::size_t edge_tries = rng.below(3);
  for (std::size_t t = 0; t < edge_tries && cur->size() >= 2; ++t) {
    int u = static_cast<int>(rng.below(cur->size()));
    int v = static_cast<int>(rng.below(cur->size()));
    if (u == v || cur->leq(u, v) || cur->leq(v, u)) continue;
    data.prec.emplace_back(cur->id(u), cur->id(v));
    try {
      cur = EventStructure::from_data(data);
    } catch (const InputError&) {
      data.prec.pop_back();
    }
  }

  // Extra conflicts between incomparable events.
  std::size_t conflict_tries = rng.below(3);
  for (std::size_t t = 0; t < conflict_tries && cur->size() >= 2; ++t) {
    int u = static_cast<int>(rng.below(cur->size()));
    int v = static_cast<int>(rng.below(cur->size()));
    if (u == v || cur->leq(u, v) || cur->leq(v, u)) continue;
    data.conflicts.push_back({cur->id(u), cur->id(v)});
    try {
      cur = EventStructure::from_data(data);
    } catch (const InputError&) {
      data.conflicts.pop_back();  // the pair shares a later event's cone
    }
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  for (const std::string& id : cur->ids()) pairs.emplace_back(id, id);

  // Occasionally duplicate one event as a conflicting copy with the same
  // label, the shape strategies are not allowed to take.
  if (cur->size() >= 1 && rng.chance(1, 3)) {
    int v = static_cast<int>(rng.below(cur->size()));
    std::string copy = cur->id(v) + "x";
    while (cur->find(copy) >= 0) copy += "x";
    data.events.push_back(copy);
    cur->strict_causes(v).for_each(
        [&](int u) { data.prec.emplace_back(cur->id(u), copy); });
    // The copy inherits every conflict of the original, so images of
    // configurations through the shared label stay consistent.
    std::vector<std::vector<std::string>> mirrored;
    for (const auto& c : data.conflicts)
      if (std::find(c.begin(), c.end(), cur->id(v)) != c.end()) {
        mirrored.push_back(c);
        std::replace(mirrored.back().begin(), mirrored.back().end(),
                     cur->id(v), copy);
      }
    data.conflicts.insert(data.conflicts.end(), mirrored.begin(),
                          mirrored.end());
    data.conflicts.push_back({cur->id(v), copy});
    pairs.emplace_back(copy, cur->id(v));
    cur = EventStructure::from_data(data);
  }

  EsMap label = EsMap::from_pairs(cur, game->es, pairs);
  std::vector<Polarity> pol(cur->size());
  for (std::size_t e = 0; e < cur->size(); ++e)
    pol[e] = game->pol[label.to[e]];
  return make_prestrategy(make_esp(cur, std::move(pol)), game,
                          std::move(label), limits);
}

PreStrategy gen_prestrategy(std::uint64_t seed, const EspPtr& game,
                            const Limits& limits) {
  Rng rng(seed);
  return gen_prestrategy(rng, game, limits);
}

RenamedGame rename_game(const EspPtr& a, const std::string& suffix) {
  const EventStructure& es = *a->es;
  EsData data;
  for (const std::string& id : es.ids()) data.events.push_back(id + suffix);
  for (const auto& [u, v] : es.immediate())
    data.prec.emplace_back(es.id(u) + suffix, es.id(v) + suffix);
  for (const Bits& g : es.generators()) {
    data.conflicts.push_back({});
    g.for_each([&](int v) { data.conflicts.back().push_back(es.id(v) + suffix); });
  }
  EsPtr renamed = EventStructure::from_data(data);
  std::vector<Polarity> pol(renamed->size());
  for (std::size_t e = 0; e < es.size(); ++e)
    pol[renamed->index_of(es.id(static_cast<int>(e)) + suffix)] = a->pol[e];
  RenamedGame out;
  out.game = make_esp(renamed, std::move(pol));
  out.iso = relabel_map(a->es, renamed,
                        [&](const std::string& id) { return id + suffix; });
  return out;
}

std::pair<EspPtr, EspPtr> end_games(const PreStrategy& s) {
  return split_hom_game(*s.game);
}

RenamedStrategy rename_carrier(const PreStrategy& s, const std::string& suffix,
                               const Limits& limits) {
  const EventStructure& es = *s.inner->es;
  EsData data;
  for (const std::string& id : es.ids()) data.events.push_back(id + suffix);
  for (const auto& [u, v] : es.immediate())
    data.prec.emplace_back(es.id(u) + suffix, es.id(v) + suffix);
  for (const Bits& g : es.generators()) {
    data.conflicts.push_back({});
    g.for_each([&](int v) { data.conflicts.back().push_back(es.id(v) + suffix); });
  }
  EsPtr renamed = EventStructure::from_data(data);

  std::vector<Polarity> pol(renamed->size());
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t e = 0; e < es.size(); ++e) {
    const std::string fresh = es.id(static_cast<int>(e)) + suffix;
    pol[renamed->index_of(fresh)] = s.inner->pol[e];
    pairs.emplace_back(fresh, s.game->es->id(s.label.to[e]));
  }
  RenamedStrategy out;
  out.strat = make_prestrategy(
      make_esp(renamed, std::move(pol)), s.game,
      EsMap::from_pairs(renamed, s.game->es, pairs), limits);
  out.cell = relabel_map(s.inner->es, renamed,
                         [&](const std::string& id) { return id + suffix; });
  return out;
}

namespace {

PreStrategy base_family(Rng& rng, const Limits& limits) {
  EspPtr g = gen_esp(rng, 1 + static_cast<int>(rng.below(2)));
  switch (rng.below(4)) {
    case 0: {
      RenamedGame r = rename_game(g, "r");
      return lift_map(r.iso, g, r.game, limits);
    }
    case 1:
      return eta(g, limits);
    case 2:
      return epsilon(g, limits);
    default:
      return copycat(g, limits);
  }
}

PreStrategy base_family_from(Rng& rng, const EspPtr& left,
                             const Limits& limits) {
  if (rng.chance(1, 2)) return copycat(left, limits);
  RenamedGame r = rename_game(left, "r");
  return lift_map(r.iso, left, r.game, limits);
}

}  // namespace

PreStrategy gen_family(Rng& rng, int budget, const Limits& limits) {
  if (budget <= 1) return base_family(rng, limits);
  switch (rng.below(3)) {
    case 0: {
      PreStrategy t1 = gen_family(rng, budget / 2, limits);
      PreStrategy t2 = gen_family(rng, budget / 2, limits);
      auto [a1, b1] = end_games(t1);
      auto [a2, b2] = end_games(t2);
      // Tensor doubles the game; keep members at desk scale.
      if (a1->size() + b1->size() + a2->size() + b2->size() > 10) return t1;
      return tensor(t1, t2, limits);
    }
    case 1: {
      PreStrategy s1 = gen_family(rng, budget / 2, limits);
      PreStrategy s2 =
          gen_family_from(rng, end_games(s1).second, budget / 2, limits);
      return compose(s1, s2, limits).strat;
    }
    default:
      return base_family(rng, limits);
  }
}

PreStrategy gen_family(std::uint64_t seed, int budget, const Limits& limits) {
  Rng rng(seed);
  return gen_family(rng, budget, limits);
}

PreStrategy gen_family_from(Rng& rng, const EspPtr& left, int budget,
                            const Limits& limits) {
  if (budget <= 1) return base_family_from(rng, left, limits);
  if (rng.chance(1, 3)) {
    PreStrategy s1 = gen_family_from(rng, left, budget / 2, limits);
    return compose(s1,
                   gen_family_from(rng, end_games(s1).second, budget / 2,
                                   limits),
                   limits)
        .strat;
  }
  return base_family_from(rng, left, limits);
}

}  // namespace esgame
