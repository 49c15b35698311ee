#include "esgame/strategy_laws.hpp"

#include <algorithm>

#include "esgame/iso.hpp"

namespace esgame {

namespace {

std::string set_text(const EventStructure& es, const Bits& xs) {
  std::string out = "{";
  bool first = true;
  for (const std::string& n : es.names_of(xs)) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  return out + "}";
}

bool all_polarity(const Esp& e, const Bits& xs, Polarity want) {
  bool ok = true;
  xs.for_each([&](int v) {
    if (e.pol[v] != want) ok = false;
  });
  return ok;
}

// x' below x for the given variant, polarities read from e.
bool below(const Esp& e, FibrationVariant v, const Bits& lo, const Bits& hi) {
  switch (v) {
    case FibrationVariant::neg:
      return hi.subset_of(lo) && all_polarity(e, minus(lo, hi), Polarity::neg);
    case FibrationVariant::pos:
      return lo.subset_of(hi) && all_polarity(e, minus(hi, lo), Polarity::pos);
    case FibrationVariant::scott:
      return scott_leq(e, lo, hi);
  }
  return false;
}

}  // namespace

CheckResult is_receptive(const PreStrategy& s, const Limits& limits) {
  const EventStructure& inner = *s.inner->es;
  const EventStructure& game = *s.game->es;
  ConfigGraph cg = enumerate_configurations(inner, limits);
  for (const Bits& x : cg.configs) {
    Bits y = s.label.image(x);
    for (std::size_t a = 0; a < game.size(); ++a) {
      if (s.game->pol[a] != Polarity::neg || y.test((int)a)) continue;
      Bits ya = y;
      ya.set((int)a);
      if (!game.is_configuration(ya)) continue;
      int matches = 0;
      for (std::size_t e = 0; e < inner.size(); ++e) {
        if (x.test((int)e) || s.label.to[e] != (int)a) continue;
        Bits xe = x;
        xe.set((int)e);
        if (inner.is_configuration(xe)) ++matches;
      }
      if (matches != 1)
        return {false, "at x = " + set_text(inner, x) + ", event '" +
                           game.id((int)a) + "': " +
                           (matches == 0 ? "no matching extension"
                                         : "more than one matching extension")};
    }
  }
  return {};
}

CheckResult is_courteous(const PreStrategy& s) {
  const EventStructure& inner = *s.inner->es;
  const EventStructure& game = *s.game->es;
  for (auto [u, v] : inner.immediate()) {
    if (s.inner->pol[u] == Polarity::neg && s.inner->pol[v] == Polarity::pos)
      continue;
    if (!game.immediate_edge(s.label.to[u], s.label.to[v]))
      return {false, "edge '" + inner.id(u) + "' -> '" + inner.id(v) +
                         "' is not inherited from the game"};
  }
  return {};
}

CheckResult is_discrete_fibration(const PreStrategy& s, FibrationVariant v,
                                  const Limits& limits) {
  ConfigGraph cs = enumerate_configurations(*s.inner->es, limits);
  ConfigGraph ca = enumerate_configurations(*s.game->es, limits);
  for (const Bits& x : cs.configs) {
    Bits sx = s.label.image(x);
    for (const Bits& y : ca.configs) {
      if (!below(*s.game, v, y, sx)) continue;
      int matches = 0;
      for (const Bits& xp : cs.configs)
        if (below(*s.inner, v, xp, x) && s.label.image(xp) == y) ++matches;
      if (matches != 1)
        return {false,
                "x = " + set_text(*s.inner->es, x) + ", y = " +
                    set_text(*s.game->es, y) + ": " +
                    (matches == 0 ? "no lift" : "more than one lift")};
    }
  }
  return {};
}

StrategyCheck is_strategy(const PreStrategy& s, const Limits& limits) {
  PreStrategy wrapped = from_unit(s);
  PreStrategy cc = copycat(s.game, limits);
  Composition comp = compose(wrapped, cc, limits);
  std::optional<EsMap> iso =
      find_isomorphism_over(*comp.strat.inner, *wrapped.inner,
                            comp.strat.label, wrapped.label);
  if (!iso) return {false, "composition with copycat changes the behaviour",
                    std::nullopt};
  return {true, "", std::move(iso)};
}

Bits strip_negatives(const PreStrategy& s, const Bits& x) {
  if (!s.inner->es->is_configuration(x))
    throw InputError("strip_negatives requires a configuration");
  Bits pos(s.inner->size());
  x.for_each([&](int e) {
    if (s.inner->pol[e] == Polarity::pos) pos.set(e);
  });
  return s.inner->es->down_closure(pos);
}

Bits fibration_lift(const PreStrategy& s, const Bits& x, const Bits& y,
                    const Limits& limits) {
  Bits sx = s.label.image(x);
  if (!scott_leq(*s.game, y, sx))
    throw InputError("fibration_lift requires y below the image of x");
  ConfigGraph cs = enumerate_configurations(*s.inner->es, limits);
  std::optional<Bits> found;
  for (const Bits& xp : cs.configs) {
    if (!scott_leq(*s.inner, xp, x) || !(s.label.image(xp) == y)) continue;
    if (found) throw InputError("fibration_lift: more than one lift");
    found = xp;
  }
  if (!found) throw InputError("fibration_lift: no lift");
  return *found;
}

namespace {

// Shared engine for both unitors. The composite of s with copycat is mapped
// back onto s configuration-wise (witness, then the unique lift), and the
// configuration bijection is turned into an event bijection by following
// covering steps.
Unitor unitor(const PreStrategy& s, bool copycat_on_left, const Limits& limits) {
  CheckResult r = is_receptive(s, limits);
  if (!r.holds)
    throw InputError("unitor requires a receptive pre-strategy: " + r.detail);
  CheckResult c = is_courteous(s);
  if (!c.holds)
    throw InputError("unitor requires a courteous pre-strategy: " + c.detail);

  auto [a, b] = split_hom_game(*s.game);
  Unitor out;
  if (copycat_on_left)
    out.comp = compose(s, copycat(b, limits), limits);
  else
    out.comp = compose(copycat(a, limits), s, limits);

  const EventStructure& comp_es = *out.comp.strat.inner->es;
  const EventStructure& game = *s.game->es;

  // Configuration-level action: take the interaction witness, read off the
  // configuration of s it involves, then lift it to the visible position.
  auto act = [&](const Bits& z) {
    Bits w = minimal_witness(out.comp, z);
    Bits xs(s.inner->size());
    w.for_each([&](int e) {
      const std::string& id =
          copycat_on_left
              ? out.comp.inter.left_pad.src->id(out.comp.inter.pb.to_left.to[e])
              : out.comp.inter.right_pad.src->id(
                    out.comp.inter.pb.to_right.to[e]);
      if (copycat_on_left) {
        if (id.rfind("0.", 0) == 0)
          xs.set(s.inner->es->index_of(id.substr(2)));
      } else {
        if (id.rfind("1.", 0) == 0)
          xs.set(s.inner->es->index_of(id.substr(2)));
      }
    });
    // Target position: the composite configuration itself, read in s's game.
    Bits y(game.size());
    z.for_each([&](int v) {
      y.set(game.index_of(
          out.comp.strat.game->es->id(out.comp.strat.label.to[v])));
    });
    return fibration_lift(s, xs, y, limits);
  };

  EsMap iso = eventize(out.comp.strat.inner->es, s.inner->es, act);
  if (!is_isomorphism(iso))
    throw InputError("unitor: induced event map is not an isomorphism");
  for (std::size_t e = 0; e < comp_es.size(); ++e) {
    const std::string& through_comp =
        out.comp.strat.game->es->id(out.comp.strat.label.to[e]);
    const std::string& through_s = game.id(s.label.to[iso.to[e]]);
    if (through_comp != through_s)
      throw InputError("unitor: does not commute with the labellings");
  }
  out.iso = std::move(iso);
  return out;
}

}  // namespace

Unitor left_unitor(const PreStrategy& s, const Limits& limits) {
  return unitor(s, true, limits);
}

Unitor right_unitor(const PreStrategy& s, const Limits& limits) {
  return unitor(s, false, limits);
}

StrategyVerdict strategy_verdict(const PreStrategy& s, const Limits& limits) {
  StrategyVerdict v;
  v.receptive = is_receptive(s, limits);
  v.courteous = is_courteous(s);
  v.fib_neg = is_discrete_fibration(s, FibrationVariant::neg, limits);
  v.fib_pos = is_discrete_fibration(s, FibrationVariant::pos, limits);
  v.fib_scott = is_discrete_fibration(s, FibrationVariant::scott, limits);
  v.copycat_invariant = is_strategy(s, limits);
  return v;
}

}  // namespace esgame
