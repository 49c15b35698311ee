#include "esgame/constructions.hpp"

#include <algorithm>

namespace esgame {

ParallelEs parallel(EsPtr a, EsPtr b, std::string_view prefix_left,
                    std::string_view prefix_right) {
  const std::size_t na = a->size(), nb = b->size(), n = na + nb;
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t e = 0; e < na; ++e)
    ids.push_back(std::string(prefix_left) + a->id((int)e));
  for (std::size_t e = 0; e < nb; ++e)
    ids.push_back(std::string(prefix_right) + b->id((int)e));

  std::vector<Bits> causes(n, Bits(n));
  for (std::size_t e = 0; e < na; ++e) {
    a->strict_causes((int)e).for_each([&](int c) { causes[e].set(c); });
  }
  for (std::size_t e = 0; e < nb; ++e) {
    b->strict_causes((int)e).for_each(
        [&](int c) { causes[na + e].set((int)na + c); });
  }
  // Conflicts never cross components, so the imports stay canonical.
  std::vector<Bits> gens;
  for (const Bits& g : a->generators()) {
    Bits h(n);
    g.for_each([&](int e) { h.set(e); });
    gens.push_back(h);
  }
  for (const Bits& g : b->generators()) {
    Bits h(n);
    g.for_each([&](int e) { h.set((int)na + e); });
    gens.push_back(h);
  }

  ParallelEs out;
  out.both = EventStructure::from_parts(std::move(ids), std::move(causes),
                                        std::move(gens));
  out.inj_left.src = a;
  out.inj_left.tgt = out.both;
  out.inj_left.to.resize(na);
  for (std::size_t e = 0; e < na; ++e)
    out.inj_left.to[e] =
        out.both->index_of(std::string(prefix_left) + a->id((int)e));
  out.inj_right.src = b;
  out.inj_right.tgt = out.both;
  out.inj_right.to.resize(nb);
  for (std::size_t e = 0; e < nb; ++e)
    out.inj_right.to[e] =
        out.both->index_of(std::string(prefix_right) + b->id((int)e));
  return out;
}

ParallelEsp parallel(const EspPtr& a, const EspPtr& b,
                     std::string_view prefix_left,
                     std::string_view prefix_right) {
  ParallelEs base = parallel(a->es, b->es, prefix_left, prefix_right);
  std::vector<Polarity> pol(base.both->size(), Polarity::pos);
  for (std::size_t e = 0; e < a->size(); ++e)
    pol[base.inj_left.to[e]] = a->pol[e];
  for (std::size_t e = 0; e < b->size(); ++e)
    pol[base.inj_right.to[e]] = b->pol[e];
  ParallelEsp out;
  out.both = make_esp(base.both, std::move(pol));
  out.inj_left = std::move(base.inj_left);
  out.inj_right = std::move(base.inj_right);
  return out;
}

Projection project(EsPtr es, const Bits& keep, const Limits& limits) {
  if (keep.universe() != es->size())
    throw InputError("project: event set does not match the structure");
  std::vector<int> kept = keep.indices();  // id-sorted order is preserved
  const std::size_t n = kept.size();
  std::vector<int> back(es->size(), -1);
  for (std::size_t v = 0; v < n; ++v) back[kept[v]] = (int)v;

  std::vector<std::string> ids;
  ids.reserve(n);
  for (int e : kept) ids.push_back(es->id(e));
  std::vector<Bits> causes(n, Bits(n));
  for (std::size_t v = 0; v < n; ++v) {
    es->strict_causes(kept[v]).for_each([&](int c) {
      if (back[c] >= 0) causes[v].set(back[c]);
    });
  }

  // Consistency is inherited from the host: a set is consistent here iff it
  // is consistent there, with down-closure taken in the host.
  auto consistent = [&](const Bits& d) {
    Bits host(es->size());
    d.for_each([&](int v) { host.set(kept[v]); });
    return es->consistent(host);
  };
  std::vector<Bits> gens = canonical_generators(n, causes, consistent, limits);

  Projection out;
  out.kept = kept;
  out.restricted = EventStructure::from_parts(std::move(ids),
                                              std::move(causes), std::move(gens));
  out.hiding.src = es;
  out.hiding.tgt = out.restricted;
  out.hiding.to.assign(es->size(), -1);
  for (std::size_t v = 0; v < n; ++v)
    out.hiding.to[kept[v]] = out.restricted->index_of(es->id(kept[v]));
  // Kept table must follow the restricted structure's id order.
  std::vector<int> sorted_kept(n);
  for (std::size_t v = 0; v < n; ++v)
    sorted_kept[out.hiding.to[kept[v]]] = kept[v];
  out.kept = std::move(sorted_kept);
  return out;
}

ProjectionEsp project(const EspPtr& e, const Bits& keep,
                      const Limits& limits) {
  Projection base = project(e->es, keep, limits);
  std::vector<Polarity> pol(base.restricted->size(), Polarity::pos);
  for (std::size_t v = 0; v < base.restricted->size(); ++v)
    pol[v] = e->pol[base.kept[v]];
  ProjectionEsp out;
  out.restricted = make_esp(base.restricted, std::move(pol));
  out.hiding = std::move(base.hiding);
  out.kept = std::move(base.kept);
  return out;
}

EspPtr dual(const Esp& a) {
  std::vector<Polarity> pol(a.pol);
  for (auto& p : pol) p = flip(p);
  return make_esp(a.es, std::move(pol));
}

EspPtr hom_game(const EspPtr& a, const EspPtr& b) {
  return parallel(dual(*a), b, "L.", "R.").both;
}

Bits side_events(const EventStructure& es, std::string_view prefix) {
  Bits out(es.size());
  for (std::size_t e = 0; e < es.size(); ++e)
    if (es.id((int)e).rfind(prefix, 0) == 0) out.set(e);
  return out;
}

std::pair<EspPtr, EspPtr> split_hom_game(const Esp& g) {
  Bits left = side_events(*g.es, "L.");
  Bits right = side_events(*g.es, "R.");
  Bits all = left | right;
  if (all.count() != g.size())
    throw InputError("game is not a two-sided game: ids must carry L./R. prefixes");

  // The left side is the dual of the recovered component, so its polarities
  // flip back when stripped.
  auto strip = [&](const Bits& side, const std::string& prefix,
                   bool flip_pol) {
    std::vector<int> kept = side.indices();
    const std::size_t n = kept.size();
    std::vector<int> back(g.size(), -1);
    for (std::size_t v = 0; v < n; ++v) back[kept[v]] = (int)v;
    std::vector<std::string> ids;
    for (int e : kept) ids.push_back(g.es->id(e).substr(prefix.size()));
    std::vector<Bits> causes(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v)
      g.es->strict_causes(kept[v]).for_each([&](int c) {
        if (back[c] >= 0) causes[v].set(back[c]);
      });
    std::vector<Bits> gens;
    for (const Bits& gen : g.es->generators()) {
      if (!gen.subset_of(side)) continue;
      Bits h(n);
      gen.for_each([&](int e) { h.set(back[e]); });
      gens.push_back(h);
    }
    EsPtr es = EventStructure::from_parts(std::move(ids), std::move(causes),
                                          std::move(gens));
    std::vector<Polarity> pol(n);
    for (std::size_t v = 0; v < n; ++v) {
      int host = g.es->index_of(prefix + es->id((int)v));
      pol[v] = flip_pol ? flip(g.pol[host]) : g.pol[host];
    }
    return make_esp(es, std::move(pol));
  };

  EspPtr a = strip(left, "L.", true);
  EspPtr b = strip(right, "R.", false);
  // Rule out cross-side causality or conflicts: the game must literally be
  // the two-sided composition of the recovered components.
  if (!same_esp(*hom_game(a, b), g))
    throw InputError("game is not a two-sided game: sides are not independent");
  return {a, b};
}

EsPtr strip_component(const EventStructure& par, std::string_view prefix) {
  Bits side = side_events(par, prefix);
  std::vector<int> kept = side.indices();
  const std::size_t n = kept.size();
  std::vector<int> back(par.size(), -1);
  for (std::size_t v = 0; v < n; ++v) back[kept[v]] = (int)v;
  std::vector<std::string> ids;
  for (int e : kept) ids.push_back(par.id(e).substr(prefix.size()));
  std::vector<Bits> causes(n, Bits(n));
  for (std::size_t v = 0; v < n; ++v) {
    bool crossing = false;
    par.strict_causes(kept[v]).for_each([&](int c) {
      if (back[c] >= 0)
        causes[v].set(back[c]);
      else
        crossing = true;
    });
    if (crossing)
      throw InputError("not a parallel composition: causality crosses '" +
                       std::string(prefix) + "'");
  }
  std::vector<Bits> gens;
  for (const Bits& gen : par.generators()) {
    if (!gen.intersects(side)) continue;
    if (!gen.subset_of(side))
      throw InputError("not a parallel composition: conflict crosses '" +
                       std::string(prefix) + "'");
    Bits h(n);
    gen.for_each([&](int e) { h.set(back[e]); });
    gens.push_back(h);
  }
  return EventStructure::from_parts(std::move(ids), std::move(causes),
                                    std::move(gens));
}

EsMap relabel_map(EsPtr from, EsPtr to,
                  const std::function<std::string(const std::string&)>& tr) {
  EsMap f;
  f.src = from;
  f.tgt = to;
  f.to.resize(from->size());
  for (std::size_t e = 0; e < from->size(); ++e)
    f.to[e] = to->index_of(tr(from->id((int)e)));
  return f;
}

}  // namespace esgame
