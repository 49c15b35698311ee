#include "esgame/es_map.hpp"

#include <algorithm>
#include <set>

#include "esgame/constructions.hpp"
#include "esgame/iso.hpp"

namespace esgame {

bool EsMap::total() const {
  return std::all_of(to.begin(), to.end(), [](int t) { return t >= 0; });
}

Bits EsMap::domain() const {
  Bits out(src->size());
  for (std::size_t e = 0; e < to.size(); ++e)
    if (to[e] >= 0) out.set(e);
  return out;
}

Bits EsMap::image(const Bits& xs) const {
  Bits out(tgt->size());
  xs.for_each([&](int e) {
    if (to[e] >= 0) out.set(to[e]);
  });
  return out;
}

Bits EsMap::preimage(const Bits& ys) const {
  Bits out(src->size());
  for (std::size_t e = 0; e < to.size(); ++e)
    if (to[e] >= 0 && ys.test(to[e])) out.set(e);
  return out;
}

EsMap EsMap::identity(EsPtr es) {
  EsMap f;
  f.src = es;
  f.tgt = es;
  f.to.resize(es->size());
  for (std::size_t e = 0; e < es->size(); ++e) f.to[e] = (int)e;
  return f;
}

EsMap EsMap::from_pairs(
    EsPtr src, EsPtr tgt,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  EsMap f;
  f.src = std::move(src);
  f.tgt = std::move(tgt);
  f.to.assign(f.src->size(), -1);
  for (const auto& [s, t] : pairs) {
    int is = f.src->index_of(s);
    int it = f.tgt->index_of(t);
    if (f.to[is] >= 0)
      throw InputError("event '" + s + "' listed twice in map pairs");
    f.to[is] = it;
  }
  return f;
}

EsMap compose_maps(const EsMap& f, const EsMap& g) {
  if (!(*f.tgt == *g.src))
    throw InputError("compose_maps: target of first differs from source of second");
  EsMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.to.resize(f.to.size());
  for (std::size_t e = 0; e < f.to.size(); ++e)
    h.to[e] = f.to[e] < 0 ? -1 : g.to[f.to[e]];
  return h;
}

EsMap inverse_iso(const EsMap& f) {
  if (f.src->size() != f.tgt->size() || !f.total())
    throw InputError("inverse_iso: map is not a bijection");
  EsMap g;
  g.src = f.tgt;
  g.tgt = f.src;
  g.to.assign(f.tgt->size(), -1);
  for (std::size_t e = 0; e < f.to.size(); ++e) {
    if (g.to[f.to[e]] >= 0)
      throw InputError("inverse_iso: map is not injective");
    g.to[f.to[e]] = (int)e;
  }
  return g;
}

MapCheck check_map(const EsMap& f, const Esp* src_pol, const Esp* tgt_pol,
                   const Limits& limits) {
  MapCheck out;
  const EventStructure& S = *f.src;
  const EventStructure& T = *f.tgt;
  for (std::size_t e = 0; e < f.to.size(); ++e)
    if (f.to[e] >= (int)T.size()) {
      out.verdict = MapCheck::Verdict::not_a_map;
      out.reason = "stale target index";
      return out;
    }

  ConfigGraph cfgs = enumerate_configurations(S, limits);
  for (const Bits& x : cfgs.configs) {
    Bits img = f.image(x);
    if (!T.is_configuration(img)) {
      std::string members;
      for (const auto& n : S.names_of(x)) members += (members.empty() ? "" : ",") + n;
      out.verdict = MapCheck::Verdict::not_a_map;
      out.reason = "image of configuration {" + members + "} is not a configuration";
      return out;
    }
    // Local injectivity: two defined events of x sharing an image collide.
    std::size_t defined = 0;
    x.for_each([&](int e) {
      if (f.defined(e)) ++defined;
    });
    if (img.count() < defined) {
      out.verdict = MapCheck::Verdict::not_a_map;
      out.reason = "not injective on a configuration";
      return out;
    }
  }

  bool total = f.total();
  bool pol_ok = total && src_pol && tgt_pol;
  if (pol_ok) {
    for (std::size_t e = 0; e < f.to.size(); ++e)
      if (src_pol->pol[e] != tgt_pol->pol[f.to[e]]) {
        pol_ok = false;
        break;
      }
  }
  if (pol_ok)
    out.verdict = MapCheck::Verdict::polarity_preserving_map;
  else if (total)
    out.verdict = MapCheck::Verdict::total_map;
  else
    out.verdict = MapCheck::Verdict::partial_map;
  return out;
}

HidingCheck check_hiding_map(const EsMap& f, const Limits& limits) {
  HidingCheck out;
  MapCheck mc = check_map(f, nullptr, nullptr, limits);
  if (!mc.is_map()) {
    out.reason = "not a map: " + mc.reason;
    return out;
  }

  Bits dom = f.domain();
  Projection pr = project(f.src, dom, limits);
  const EventStructure& R = *pr.restricted;
  const EventStructure& T = *f.tgt;

  // The only candidate isomorphism restricted ≅ target commuting with f is f
  // itself restricted to its domain.
  if (R.size() != T.size()) {
    out.reason = "domain size differs from target size";
    return out;
  }
  EsMap r;
  r.src = pr.restricted;
  r.tgt = f.tgt;
  r.to.resize(R.size());
  for (std::size_t v = 0; v < R.size(); ++v) r.to[v] = f.to[pr.kept[v]];
  if (!is_isomorphism(r)) {
    out.reason = "restriction to the domain is not an isomorphism";
    return out;
  }

  // Witness table: least source configuration over each target one.
  EsMap back = inverse_iso(r);
  ConfigGraph tcfg = enumerate_configurations(T, limits);
  out.witness.reserve(tcfg.configs.size());
  for (const Bits& y : tcfg.configs) {
    Bits up(f.src->size());
    y.for_each([&](int t) { up.set(pr.kept[back.to[t]]); });
    Bits w = f.src->down_closure(up);
    if (f.image(w) != y) {
      out.reason = "witness does not project back";
      out.witness.clear();
      return out;
    }
    out.witness.push_back(w);
  }
  ConfigGraph scfg = enumerate_configurations(*f.src, limits);
  for (const Bits& x : scfg.configs) {
    Bits y = f.image(x);
    int at = tcfg.find(y);
    if (at < 0 || !out.witness[at].subset_of(x)) {
      out.reason = "witness not below a configuration it should underlie";
      out.witness.clear();
      return out;
    }
  }
  out.holds = true;
  return out;
}

}  // namespace esgame
