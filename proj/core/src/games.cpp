#include "esgame/games.hpp"

namespace esgame {

PreStrategy copycat(const EspPtr& a, const Limits& limits) {
  const EventStructure& es = *a->es;
  const std::size_t n = es.size();
  const std::size_t cc = 2 * n;

  // Index layout before canonical sorting: left copy k, right copy n + k.
  std::vector<std::string> ids(cc);
  for (std::size_t k = 0; k < n; ++k) {
    ids[k] = "L." + es.id((int)k);
    ids[n + k] = "R." + es.id((int)k);
  }
  auto pol_cc = [&](int side, int e) {
    return side == 0 ? flip(a->pol[e]) : a->pol[e];
  };

  // (i, e) strictly below (j, f): within a copy the game's own order; across
  // copies there must be a negative intermediary e <= m <= f on side i.
  std::vector<Bits> causes(cc, Bits(cc));
  for (int j = 0; j < 2; ++j)
    for (std::size_t f = 0; f < n; ++f) {
      Bits& below = causes[j * n + f];
      for (int i = 0; i < 2; ++i)
        for (std::size_t e = 0; e < n; ++e) {
          if (i == j) {
            if (e != f && es.leq((int)e, (int)f)) below.set(i * (int)n + (int)e);
            continue;
          }
          for (std::size_t m = 0; m < n; ++m)
            if (pol_cc(i, (int)m) == Polarity::neg && es.leq((int)e, (int)m) &&
                es.leq((int)m, (int)f)) {
              below.set(i * (int)n + (int)e);
              break;
            }
        }
    }

  // Consistency is inherited per copy.
  auto consistent = [&](const Bits& x) {
    Bits lx(n), rx(n);
    x.for_each([&](int v) {
      if (v < (int)n)
        lx.set(v);
      else
        rx.set(v - (int)n);
    });
    return es.consistent(lx) && es.consistent(rx);
  };
  std::vector<Bits> gens = canonical_generators(cc, causes, consistent, limits);

  EsPtr inner_es = EventStructure::from_parts(std::move(ids), std::move(causes),
                                              std::move(gens));
  EspPtr game = hom_game(a, a);
  EsMap label =
      relabel_map(inner_es, game->es, [](const std::string& id) { return id; });
  std::vector<Polarity> pol(inner_es->size());
  for (std::size_t e = 0; e < inner_es->size(); ++e)
    pol[e] = game->pol[label.to[e]];
  return PreStrategy{make_esp(inner_es, std::move(pol)), game,
                     std::move(label)};
}

EsMap copycat_map(const EsMap& f, const EspPtr& a, const EspPtr& b,
                  const Limits& limits) {
  if (!(*f.src == *a->es) || !(*f.tgt == *b->es))
    throw InputError("copycat functor: map endpoints do not match the games");
  if (!check_map(f, a.get(), b.get(), limits).polarity_preserving())
    throw InputError(
        "copycat functor: needs a total polarity-preserving map of games");
  PreStrategy cca = copycat(a, limits);
  PreStrategy ccb = copycat(b, limits);
  return relabel_map(cca.inner->es, ccb.inner->es, [&](const std::string& id) {
    int e = f.to[a->es->index_of(id.substr(2))];
    return id.substr(0, 2) + b->es->id(e);
  });
}

bool scott_leq(const Esp& a, const Bits& x, const Bits& y) {
  if (!a.es->is_configuration(x) || !a.es->is_configuration(y))
    throw InputError("the configuration order compares configurations");
  bool ok = true;
  Bits lost = minus(x, y);
  lost.for_each([&](int e) {
    if (a.pol[e] != Polarity::neg) ok = false;
  });
  Bits gained = minus(y, x);
  gained.for_each([&](int e) {
    if (a.pol[e] != Polarity::pos) ok = false;
  });
  return ok;
}

std::optional<Bits> scott_witness(const Esp& a, const Bits& x, const Bits& y) {
  if (!scott_leq(a, x, y)) return std::nullopt;
  return x & y;
}

bool scott_leq_via_copycat(const Esp& a, const Bits& x, const Bits& y,
                           const Limits& limits) {
  if (!a.es->is_configuration(x) || !a.es->is_configuration(y))
    throw InputError("the configuration order compares configurations");
  PreStrategy cc = copycat(std::make_shared<Esp>(a), limits);
  Bits z(cc.inner->size());
  y.for_each([&](int e) { z.set(cc.inner->es->index_of("L." + a.es->id(e))); });
  x.for_each([&](int e) { z.set(cc.inner->es->index_of("R." + a.es->id(e))); });
  return cc.inner->es->is_configuration(z);
}

}  // namespace esgame
