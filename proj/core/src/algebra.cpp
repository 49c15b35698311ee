#include "esgame/algebra.hpp"

#include <algorithm>

#include "esgame/iso.hpp"

namespace esgame {

namespace {

bool has_prefix(const std::string& id, std::string_view prefix) {
  return id.rfind(prefix, 0) == 0;
}

// Commutation of a carrier map with the two composite labellings, compared
// through event ids since the games are separate but structurally equal.
void require_over_game(const EsMap& f, const PreStrategy& from,
                       const PreStrategy& to, const std::string& what) {
  for (std::size_t e = 0; e < f.to.size(); ++e) {
    const std::string& a = from.game->es->id(from.label.to[e]);
    const std::string& b = to.game->es->id(to.label.to[f.to[e]]);
    if (a != b)
      throw InputError(what + ": does not commute with the labellings");
  }
}

}  // namespace

PreStrategy tensor(const PreStrategy& s1, const PreStrategy& s2,
                   const Limits& limits) {
  auto [a1, b1] = split_hom_game(*s1.game);
  auto [a2, b2] = split_hom_game(*s2.game);
  ParallelEsp inner = parallel(s1.inner, s2.inner);
  EspPtr game =
      hom_game(parallel(a1, a2).both, parallel(b1, b2).both);
  EsMap label =
      relabel_map(inner.both->es, game->es, [&](const std::string& id) {
        bool first = has_prefix(id, "0.");
        const PreStrategy& s = first ? s1 : s2;
        int e = s.inner->es->index_of(id.substr(2));
        const std::string& g = s.game->es->id(s.label.to[e]);
        return g.substr(0, 2) + (first ? "0." : "1.") + g.substr(2);
      });
  return make_prestrategy(inner.both, game, std::move(label), limits);
}

PreStrategy lift_map(const EsMap& f, const EspPtr& a, const EspPtr& b,
                     const Limits& limits) {
  if (!(*f.src == *a->es) || !(*f.tgt == *b->es))
    throw InputError("lift: map endpoints do not match the games");
  PreStrategy view = make_prestrategy(a, b, f, limits);
  CheckResult r = is_receptive(view, limits);
  if (!r.holds) throw InputError("lift requires a receptive map: " + r.detail);
  CheckResult c = is_courteous(view);
  if (!c.holds) throw InputError("lift requires a courteous map: " + c.detail);

  PreStrategy cc = copycat(a, limits);
  EspPtr game = hom_game(a, b);
  EsMap label =
      relabel_map(cc.inner->es, game->es, [&](const std::string& id) {
        if (has_prefix(id, "L.")) return id;
        return "R." + b->es->id(f.to[a->es->index_of(id.substr(2))]);
      });
  return make_prestrategy(cc.inner, game, std::move(label), limits);
}

PreStrategy colift_map(const EsMap& f, const EspPtr& a, const EspPtr& b,
                       const Limits& limits) {
  if (!(*f.src == *b->es) || !(*f.tgt == *a->es))
    throw InputError("colift: map endpoints do not match the games");
  PreStrategy view = make_prestrategy(dual(*b), dual(*a), f, limits);
  CheckResult r = is_receptive(view, limits);
  if (!r.holds)
    throw InputError("colift requires a receptive map: " + r.detail);
  CheckResult c = is_courteous(view);
  if (!c.holds)
    throw InputError("colift requires a courteous map: " + c.detail);

  PreStrategy cc = copycat(b, limits);
  EspPtr game = hom_game(a, b);
  EsMap label =
      relabel_map(cc.inner->es, game->es, [&](const std::string& id) {
        if (has_prefix(id, "R.")) return id;
        return "L." + a->es->id(f.to[b->es->index_of(id.substr(2))]);
      });
  return make_prestrategy(cc.inner, game, std::move(label), limits);
}

namespace {

Structural make_structural(EspPtr src, EspPtr tgt,
                           const std::function<std::string(const std::string&)>& tr,
                           const Limits& limits) {
  Structural out;
  out.src = std::move(src);
  out.tgt = std::move(tgt);
  out.map = relabel_map(out.src->es, out.tgt->es, tr);
  out.lifted = lift_map(out.map, out.src, out.tgt, limits);
  return out;
}

}  // namespace

Structural structural_rho(const EspPtr& a, const Limits& limits) {
  return make_structural(
      parallel(a, empty_game()).both, a,
      [](const std::string& id) { return id.substr(2); }, limits);
}

Structural structural_lambda(const EspPtr& a, const Limits& limits) {
  return make_structural(
      parallel(empty_game(), a).both, a,
      [](const std::string& id) { return id.substr(2); }, limits);
}

Structural structural_swap(const EspPtr& a, const EspPtr& b,
                           const Limits& limits) {
  return make_structural(parallel(a, b).both, parallel(b, a).both,
                         [](const std::string& id) {
                           return (id[0] == '0' ? "1." : "0.") + id.substr(2);
                         },
                         limits);
}

Structural structural_alpha(const EspPtr& a, const EspPtr& b, const EspPtr& c,
                            const Limits& limits) {
  return make_structural(parallel(parallel(a, b).both, c).both,
                         parallel(a, parallel(b, c).both).both,
                         [](const std::string& id) {
                           if (id.rfind("0.0.", 0) == 0) return "0." + id.substr(4);
                           if (id.rfind("0.1.", 0) == 0) return "1.0." + id.substr(4);
                           return "1.1." + id.substr(2);
                         },
                         limits);
}

PreStrategy eta(const EspPtr& a, const Limits& limits) {
  PreStrategy cc = copycat(a, limits);
  EspPtr game = hom_game(empty_game(), parallel(dual(*a), a).both);
  EsMap label =
      relabel_map(cc.inner->es, game->es, [](const std::string& id) {
        return (id.rfind("L.", 0) == 0 ? "R.0." : "R.1.") + id.substr(2);
      });
  return make_prestrategy(cc.inner, game, std::move(label), limits);
}

PreStrategy epsilon(const EspPtr& a, const Limits& limits) {
  PreStrategy cc = copycat(a, limits);
  EspPtr game = hom_game(parallel(a, dual(*a)).both, empty_game());
  EsMap label =
      relabel_map(cc.inner->es, game->es, [](const std::string& id) {
        return (id.rfind("L.", 0) == 0 ? "L.0." : "L.1.") + id.substr(2);
      });
  return make_prestrategy(cc.inner, game, std::move(label), limits);
}

Bits composite_config(const Composition& c, const PreStrategy& lo,
                      const PreStrategy& hi, const Bits& x_lo,
                      const Bits& x_hi) {
  const EsPtr& left_es = c.inter.left_pad.src;
  const EsPtr& right_es = c.inter.right_pad.src;
  SyncState st{Bits(left_es->size()), Bits(right_es->size())};
  x_lo.for_each([&](int s) {
    st.left.set(left_es->index_of("0." + lo.inner->es->id(s)));
    const std::string& g = lo.game->es->id(lo.label.to[s]);
    if (has_prefix(g, "L."))
      st.right.set(right_es->index_of("0." + g.substr(2)));
  });
  x_hi.for_each([&](int t) {
    st.right.set(right_es->index_of("1." + hi.inner->es->id(t)));
    const std::string& g = hi.game->es->id(hi.label.to[t]);
    if (has_prefix(g, "R."))
      st.left.set(left_es->index_of("1." + g.substr(2)));
  });
  if (!c.inter.pb.states.count(st))
    throw InputError("factor configurations do not form an interaction state");
  Bits events = c.inter.pb.events_of(st);
  Bits z(c.strat.inner->size());
  events.for_each([&](int e) {
    if (c.hiding.defined(e)) z.set(c.hiding.to[e]);
  });
  return z;
}

std::pair<Bits, Bits> factor_configs(const Composition& c,
                                     const PreStrategy& lo,
                                     const PreStrategy& hi, const Bits& z) {
  Bits w = minimal_witness(c, z);
  Bits x_lo(lo.inner->size()), x_hi(hi.inner->size());
  w.for_each([&](int e) {
    const std::string& l =
        c.inter.left_pad.src->id(c.inter.pb.to_left.to[e]);
    if (has_prefix(l, "0.")) x_lo.set(lo.inner->es->index_of(l.substr(2)));
    const std::string& r =
        c.inter.right_pad.src->id(c.inter.pb.to_right.to[e]);
    if (has_prefix(r, "1.")) x_hi.set(hi.inner->es->index_of(r.substr(2)));
  });
  return {x_lo, x_hi};
}

EsMap compose_cell(const Composition& c1, const PreStrategy& lo1,
                   const PreStrategy& hi1, const Composition& c2,
                   const PreStrategy& lo2, const PreStrategy& hi2,
                   const EsMap& f_lo, const EsMap& f_hi,
                   const Limits& limits) {
  (void)limits;
  auto act = [&](const Bits& z) {
    auto [x_lo, x_hi] = factor_configs(c1, lo1, hi1, z);
    return composite_config(c2, lo2, hi2, f_lo.image(x_lo), f_hi.image(x_hi));
  };
  EsMap out = eventize(c1.strat.inner->es, c2.strat.inner->es, act);
  require_over_game(out, c1.strat, c2.strat, "composition of cells");
  return out;
}

Associator associator(const PreStrategy& s1, const PreStrategy& s2,
                      const PreStrategy& s3, const Limits& limits) {
  Associator out;
  out.lo_pair = compose(s1, s2, limits);
  out.hi_pair = compose(s2, s3, limits);
  out.left = compose(s1, out.hi_pair.strat, limits);
  out.right = compose(out.lo_pair.strat, s3, limits);

  auto act = [&](const Bits& z) {
    auto [x1, x23] = factor_configs(out.left, s1, out.hi_pair.strat, z);
    auto [x2, x3] = factor_configs(out.hi_pair, s2, s3, x23);
    Bits z12 = composite_config(out.lo_pair, s1, s2, x1, x2);
    return composite_config(out.right, out.lo_pair.strat, s3, z12, x3);
  };
  out.iso =
      eventize(out.left.strat.inner->es, out.right.strat.inner->es, act);
  if (!is_isomorphism(out.iso))
    throw InputError("associator: induced map is not an isomorphism");
  require_over_game(out.iso, out.left.strat, out.right.strat, "associator");
  return out;
}

LawReport pentagon_check(const PreStrategy& s1, const PreStrategy& s2,
                         const PreStrategy& s3, const PreStrategy& s4,
                         const Limits& limits) {
  Associator a234 = associator(s2, s3, s4, limits);
  Associator a123 = associator(s1, s2, s3, limits);

  // Corners, clockwise from the fully left-bracketed composite.
  Composition corner1 = compose(s1, a234.left.strat, limits);
  Composition corner2 = compose(s1, a234.right.strat, limits);
  Composition corner4 = compose(a123.right.strat, s4, limits);

  // Long side: whisker a234 by s1, re-associate, whisker a123 by s4.
  EsMap m12 =
      compose_cell(corner1, s1, a234.left.strat, corner2, s1,
                   a234.right.strat, EsMap::identity(s1.inner->es), a234.iso,
                   limits);
  Associator mid = associator(s1, a234.lo_pair.strat, s4, limits);
  EsMap m34 = compose_cell(mid.right, mid.lo_pair.strat, s4, corner4,
                           a123.right.strat, s4, a123.iso,
                           EsMap::identity(s4.inner->es), limits);
  EsMap path_long = compose_maps(compose_maps(m12, mid.iso), m34);

  // Short side: two associators through the middle corner.
  Associator first = associator(s1, s2, a234.hi_pair.strat, limits);
  Associator second = associator(a123.lo_pair.strat, s3, s4, limits);
  EsMap path_short = compose_maps(first.iso, second.iso);

  if (path_long == path_short) return {};
  return {false, "pentagon paths differ"};
}

LawReport triangle_check(const PreStrategy& s1, const PreStrategy& s2,
                         const Limits& limits) {
  EspPtr b = split_hom_game(*s1.game).second;
  PreStrategy ccb = copycat(b, limits);
  Unitor rho = right_unitor(s2, limits);
  Unitor lam = left_unitor(s1, limits);
  Associator assoc = associator(s1, ccb, s2, limits);
  Composition target = compose(s1, s2, limits);

  EsMap left_leg =
      compose_cell(assoc.left, s1, assoc.hi_pair.strat, target, s1, s2,
                   EsMap::identity(s1.inner->es), rho.iso, limits);
  EsMap right_leg =
      compose_cell(assoc.right, assoc.lo_pair.strat, s2, target, s1, s2,
                   lam.iso, EsMap::identity(s2.inner->es), limits);

  if (left_leg == compose_maps(assoc.iso, right_leg)) return {};
  return {false, "unit triangle paths differ"};
}

LawReport snake_check(const EspPtr& a, const Limits& limits) {
  EspPtr ad = dual(*a);
  PreStrategy cc = copycat(a, limits);
  PreStrategy ccd = copycat(ad, limits);

  // First equation: the counit-after-unit loop on a equals copycat.
  {
    Structural rho = structural_rho(a, limits);
    PreStrategy st1 = lift_map(inverse_iso(rho.map), a, rho.src, limits);
    PreStrategy st2 = tensor(cc, eta(a, limits), limits);
    Structural al = structural_alpha(a, ad, a, limits);
    PreStrategy st3 = lift_map(inverse_iso(al.map), al.tgt, al.src, limits);
    PreStrategy st4 = tensor(epsilon(a, limits), cc, limits);
    Structural lam = structural_lambda(a, limits);

    PreStrategy chain = compose(st1, st2, limits).strat;
    chain = compose(chain, st3, limits).strat;
    chain = compose(chain, st4, limits).strat;
    chain = compose(chain, lam.lifted, limits).strat;
    if (!find_isomorphism_over(*chain.inner, *cc.inner, chain.label, cc.label))
      return {false, "first duality equation fails"};
  }

  // Second equation: the dual loop on dual(a) equals its copycat.
  {
    Structural lam = structural_lambda(ad, limits);
    PreStrategy st1 = lift_map(inverse_iso(lam.map), ad, lam.src, limits);
    PreStrategy st2 = tensor(eta(a, limits), ccd, limits);
    Structural al = structural_alpha(ad, a, ad, limits);
    PreStrategy st4 = tensor(ccd, epsilon(a, limits), limits);
    Structural rho = structural_rho(ad, limits);

    PreStrategy chain = compose(st1, st2, limits).strat;
    chain = compose(chain, al.lifted, limits).strat;
    chain = compose(chain, st4, limits).strat;
    chain = compose(chain, rho.lifted, limits).strat;
    if (!find_isomorphism_over(*chain.inner, *ccd.inner, chain.label,
                               ccd.label))
      return {false, "second duality equation fails"};
  }
  return {};
}

}  // namespace esgame
