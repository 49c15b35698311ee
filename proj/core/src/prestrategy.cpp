#include "esgame/prestrategy.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace esgame {

namespace {

std::string strip_prefix(const std::string& id, std::string_view prefix) {
  return id.substr(prefix.size());
}

bool has_prefix(const std::string& id, std::string_view prefix) {
  return id.rfind(prefix, 0) == 0;
}

}  // namespace

PreStrategy make_prestrategy(EspPtr inner, EspPtr game, EsMap label,
                             const Limits& limits) {
  if (!(*label.src == *inner->es) || !(*label.tgt == *game->es))
    throw InputError("labelling endpoints do not match the pre-strategy");
  MapCheck mc = check_map(label, inner.get(), game.get(), limits);
  if (!mc.polarity_preserving())
    throw InputError("labelling is not a total polarity-preserving map" +
                     (mc.reason.empty() ? "" : ": " + mc.reason));
  return PreStrategy{std::move(inner), std::move(game), std::move(label)};
}

PreStrategy from_unit(const PreStrategy& s) {
  EspPtr wrapped = hom_game(empty_game(), s.game);
  EsMap label;
  label.src = s.inner->es;
  label.tgt = wrapped->es;
  label.to.resize(s.inner->size());
  for (std::size_t e = 0; e < s.inner->size(); ++e)
    label.to[e] =
        wrapped->es->index_of("R." + s.game->es->id(s.label.to[e]));
  return PreStrategy{s.inner, wrapped, std::move(label)};
}

PreStrategy to_unit(const PreStrategy& s) {
  auto [a, b] = split_hom_game(*s.game);
  if (a->size() != 0)
    throw InputError("strategy is not from the empty game");
  EsMap label;
  label.src = s.inner->es;
  label.tgt = b->es;
  label.to.resize(s.inner->size());
  for (std::size_t e = 0; e < s.inner->size(); ++e)
    label.to[e] =
        b->es->index_of(strip_prefix(s.game->es->id(s.label.to[e]), "R."));
  return PreStrategy{s.inner, b, std::move(label)};
}

StrategyInteraction interact(const PreStrategy& lo, const PreStrategy& hi,
                             const Limits& limits) {
  auto [a, b] = split_hom_game(*lo.game);
  auto [b2, c] = split_hom_game(*hi.game);
  if (!same_esp(*b, *b2))
    throw InputError("interact: inner games do not match");

  StrategyInteraction out;
  out.game_a = a;
  out.game_b = b;
  out.game_c = c;
  ParallelEs ab = parallel(a->es, b->es);
  ParallelEs spine = parallel(ab.both, c->es);
  out.spine = spine.both;

  ParallelEs left = parallel(lo.inner->es, c->es);
  ParallelEs right = parallel(a->es, hi.inner->es);

  // lo's side: its own label through hom(A,B) -> spine, C passed through.
  out.left_pad = relabel_map(left.both, out.spine, [&](const std::string& id) {
    if (has_prefix(id, "0.")) {
      int s = lo.inner->es->index_of(strip_prefix(id, "0."));
      const std::string& g = lo.game->es->id(lo.label.to[s]);
      return has_prefix(g, "L.") ? "0.0." + strip_prefix(g, "L.")
                                 : "0.1." + strip_prefix(g, "R.");
    }
    return "1." + strip_prefix(id, "1.");
  });
  // hi's side: A passed through, its own label through hom(B,C) -> spine.
  out.right_pad = relabel_map(right.both, out.spine, [&](const std::string& id) {
    if (has_prefix(id, "0.")) return "0.0." + strip_prefix(id, "0.");
    int t = hi.inner->es->index_of(strip_prefix(id, "1."));
    const std::string& g = hi.game->es->id(hi.label.to[t]);
    return has_prefix(g, "L.") ? "0.1." + strip_prefix(g, "L.")
                               : "1." + strip_prefix(g, "R.");
  });

  out.pb = pullback(out.left_pad, out.right_pad, limits);

  out.visible = Bits(out.pb.apex->size());
  for (std::size_t e = 0; e < out.pb.apex->size(); ++e) {
    const std::string& g = out.spine->id(out.pb.to_game.to[e]);
    if (has_prefix(g, "0.0.") || has_prefix(g, "1.")) out.visible.set(e);
  }
  return out;
}

Composition compose(const PreStrategy& lo, const PreStrategy& hi,
                    const Limits& limits) {
  Composition out;
  out.inter = interact(lo, hi, limits);

  Projection pr = project(out.inter.pb.apex, out.inter.visible, limits);
  EspPtr game = hom_game(out.inter.game_a, out.inter.game_c);

  EsMap label;
  label.src = pr.restricted;
  label.tgt = game->es;
  label.to.resize(pr.restricted->size());
  std::vector<Polarity> pol(pr.restricted->size());
  for (std::size_t v = 0; v < pr.restricted->size(); ++v) {
    int e = pr.kept[v];
    const std::string& g = out.inter.spine->id(out.inter.pb.to_game.to[e]);
    std::string target = has_prefix(g, "0.0.") ? "L." + strip_prefix(g, "0.0.")
                                               : "R." + strip_prefix(g, "1.");
    label.to[v] = game->es->index_of(target);
    pol[v] = game->pol[label.to[v]];
  }

  out.strat.inner = make_esp(pr.restricted, std::move(pol));
  out.strat.game = game;
  out.strat.label = std::move(label);
  out.hiding = pr.hiding;
  out.kept = pr.kept;
  return out;
}

Bits minimal_witness(const Composition& c, const Bits& z) {
  const EventStructure& inner = *c.strat.inner->es;
  if (!inner.is_configuration(z))
    throw InputError("minimal witness requires a configuration");
  Bits apex(c.inter.pb.apex->size());
  z.for_each([&](int v) { apex.set(c.kept[v]); });
  return c.inter.pb.apex->down_closure(apex);
}

ZippedHiding zipped_hiding(const EsMap& hid, const EsMap& sig,
                           const EsMap& sig2, const EsMap& rho,
                           const Limits& limits) {
  if (!sig.total() || !sig2.total() || !rho.total())
    throw InputError("zipped_hiding: labellings must be total");
  if (!(*hid.src == *sig.src) || !(*hid.tgt == *sig2.src))
    throw InputError("zipped_hiding: hiding endpoints do not match");

  EsPtr spine3 = sig.tgt;  // (A || B) || C
  EsPtr ab = strip_component(*spine3, "0.");
  EsPtr a = strip_component(*ab, "0.");
  EsPtr c = strip_component(*spine3, "1.");
  EsPtr ac = sig2.tgt;  // A || C
  if (!(*strip_component(*ac, "0.") == *a) ||
      !(*strip_component(*ac, "1.") == *c))
    throw InputError("zipped_hiding: erased game does not match");
  EsPtr c2 = strip_component(*rho.tgt, "0.");
  EsPtr d = strip_component(*rho.tgt, "1.");
  if (!(*c2 == *c))
    throw InputError("zipped_hiding: shared component does not match");

  // The hiding must commute with erasing the middle component.
  for (std::size_t s = 0; s < sig.src->size(); ++s) {
    const std::string& g = spine3->id(sig.to[s]);
    bool middle = has_prefix(g, "0.1.");
    if (middle != !hid.defined((int)s))
      throw InputError("zipped_hiding: domain does not match the erasure");
    if (!middle) {
      std::string want = has_prefix(g, "0.0.")
                             ? "0." + strip_prefix(g, "0.0.")
                             : "1." + strip_prefix(g, "1.");
      if (ac->id(sig2.to[hid.to[s]]) != want)
        throw InputError("zipped_hiding: square does not commute");
    }
  }

  ZippedHiding out;

  // Interaction along C before hiding.
  ParallelEs big_game = parallel(spine3, d);  // ((A||B)||C) || D
  ParallelEs big_left = parallel(sig.src, d);
  ParallelEs big_right = parallel(ab, rho.src);
  EsMap bl = relabel_map(big_left.both, big_game.both, [&](const std::string& id) {
    if (has_prefix(id, "0."))
      return "0." + spine3->id(sig.to[sig.src->index_of(strip_prefix(id, "0."))]);
    return id;  // "1.d" stays
  });
  EsMap br = relabel_map(big_right.both, big_game.both, [&](const std::string& id) {
    if (has_prefix(id, "0.")) return "0.0." + strip_prefix(id, "0.");
    const std::string& g =
        rho.tgt->id(rho.to[rho.src->index_of(strip_prefix(id, "1."))]);
    return has_prefix(g, "0.") ? "0.1." + strip_prefix(g, "0.")
                               : "1." + strip_prefix(g, "1.");
  });
  out.big = pullback(bl, br, limits);

  // Interaction along C after hiding.
  ParallelEs small_game = parallel(ac, d);  // (A||C) || D
  ParallelEs small_left = parallel(sig2.src, d);
  ParallelEs small_right = parallel(a, rho.src);
  EsMap sl =
      relabel_map(small_left.both, small_game.both, [&](const std::string& id) {
        if (has_prefix(id, "0."))
          return "0." +
                 ac->id(sig2.to[sig2.src->index_of(strip_prefix(id, "0."))]);
        return id;
      });
  EsMap sr =
      relabel_map(small_right.both, small_game.both, [&](const std::string& id) {
        if (has_prefix(id, "0.")) return "0.0." + strip_prefix(id, "0.");
        const std::string& g =
            rho.tgt->id(rho.to[rho.src->index_of(strip_prefix(id, "1."))]);
        return has_prefix(g, "0.") ? "0.1." + strip_prefix(g, "0.")
                                   : "1." + strip_prefix(g, "1.");
      });
  out.small = pullback(sl, sr, limits);

  // Partial cone from the big apex into the small span.
  EsMap alpha, beta;
  alpha.src = out.big.apex;
  alpha.tgt = small_left.both;
  alpha.to.assign(out.big.apex->size(), -1);
  beta.src = out.big.apex;
  beta.tgt = small_right.both;
  beta.to.assign(out.big.apex->size(), -1);
  for (std::size_t e = 0; e < out.big.apex->size(); ++e) {
    const std::string& l = big_left.both->id(out.big.to_left.to[e]);
    const std::string& r = big_right.both->id(out.big.to_right.to[e]);
    if (has_prefix(l, "0.")) {
      int s = sig.src->index_of(strip_prefix(l, "0."));
      if (hid.defined(s))
        alpha.to[e] =
            small_left.both->index_of("0." + sig2.src->id(hid.to[s]));
    } else {
      alpha.to[e] = small_left.both->index_of(l);
    }
    if (has_prefix(r, "0.")) {
      std::string g = strip_prefix(r, "0.");  // event of A || B
      if (has_prefix(g, "0."))
        beta.to[e] = small_right.both->index_of(g);
    } else {
      beta.to[e] = small_right.both->index_of(r);
    }
  }
  if (alpha.domain() != beta.domain())
    throw InputError("zipped_hiding: cone domains disagree");
  out.map = mediating(alpha, beta, out.small, limits);
  return out;
}

}  // namespace esgame
