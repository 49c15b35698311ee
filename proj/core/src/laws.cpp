#include "esgame/laws.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "esgame/samples.hpp"

namespace esgame {
namespace {

using Clock = std::chrono::steady_clock;

// Runs one seeded trial per index, translating thrown errors into failures.
template <class Body>
LawRun run_law(const std::string& name, const LawOptions& opt, Body body) {
  LawRun run;
  run.name = name;
  auto start = Clock::now();
  for (int t = 0; t < opt.trials; ++t) {
    ++run.trials;
    std::string detail;
    bool ok = false;
    try {
      ok = body(t, detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (!ok) {
      ++run.failures;
      if (run.detail.empty())
        run.detail = "trial " + std::to_string(t) + ": " + detail;
    }
  }
  run.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return run;
}

Rng trial_rng(const LawOptions& opt, int t) {
  return Rng(opt.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(t));
}

int side_cap(const LawOptions& opt) {
  return std::max(1, std::min(opt.max_events, 6) / 2);
}

std::string describe_verdict(const StrategyVerdict& v) {
  std::ostringstream out;
  auto flag = [&](const char* name, bool holds, const std::string& detail) {
    out << name << "=" << (holds ? "yes" : "no");
    if (!holds && !detail.empty()) out << " (" << detail << ")";
    out << " ";
  };
  flag("receptive", v.receptive.holds, v.receptive.detail);
  flag("courteous", v.courteous.holds, v.courteous.detail);
  flag("fib_neg", v.fib_neg.holds, v.fib_neg.detail);
  flag("fib_pos", v.fib_pos.holds, v.fib_pos.detail);
  flag("fib_scott", v.fib_scott.holds, v.fib_scott.detail);
  flag("copycat_invariant", v.copycat_invariant.holds,
       v.copycat_invariant.detail);
  return out.str();
}

// Renamed copy of a configuration of es, as a standalone structure plus the
// event function back into es. extra_edges may add order between events that
// the configuration leaves incomparable.
struct ConePiece {
  EsPtr x;
  std::vector<int> into;  // x index -> es index
};

ConePiece cone_piece(const EventStructure& es, const Bits& config,
                     Rng& rng, bool extra_edge) {
  std::vector<int> events = config.indices();
  EsData data;
  for (std::size_t i = 0; i < events.size(); ++i)
    data.events.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < events.size(); ++i)
    for (std::size_t j = 0; j < events.size(); ++j)
      if (es.immediate_edge(events[i], events[j]))
        data.prec.emplace_back(data.events[i], data.events[j]);
  if (extra_edge && events.size() >= 2) {
    std::vector<std::pair<int, int>> loose;
    for (std::size_t i = 0; i < events.size(); ++i)
      for (std::size_t j = 0; j < events.size(); ++j)
        if (i != j && !es.leq(events[i], events[j]) &&
            !es.leq(events[j], events[i]))
          loose.emplace_back(static_cast<int>(i), static_cast<int>(j));
    if (!loose.empty()) {
      auto [i, j] = loose[rng.below(loose.size())];
      data.prec.emplace_back(data.events[i], data.events[j]);
    }
  }
  ConePiece piece;
  piece.x = EventStructure::from_data(data);
  piece.into = std::move(events);
  return piece;
}

// All event functions x -> apex with the given candidate lists that are maps
// of event structures; used to confirm mediating maps are unique.
int count_mediating_maps(const EsPtr& x, const Pullback& pb,
                         const std::vector<std::vector<int>>& cand,
                         const EsMap& expected, const Limits& limits) {
  long long total = 1;
  for (const auto& c : cand) {
    total *= static_cast<long long>(c.size());
    if (total == 0 || total > 200000)
      throw GuardError("mediating enumeration too large");
  }
  int found = 0;
  std::vector<std::size_t> pick(cand.size(), 0);
  while (true) {
    EsMap g;
    g.src = x;
    g.tgt = pb.apex;
    g.to.resize(x->size());
    for (std::size_t i = 0; i < cand.size(); ++i) g.to[i] = cand[i][pick[i]];
    if (check_map(g, nullptr, nullptr, limits).is_map()) {
      ++found;
      if (!(g == expected)) return -1;  // a second distinct mediating map
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == cand[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return found;
}

bool explicit_scott(const Esp& a, const ConfigGraph& cg, const Bits& x,
                    const Bits& y) {
  for (const Bits& z : cg.configs) {
    if (!z.subset_of(x) || !z.subset_of(y)) continue;
    if (uniform_polarity(a, minus(x, z), Polarity::neg) &&
        uniform_polarity(a, minus(y, z), Polarity::pos))
      return true;
  }
  return false;
}

EsMap erase_sides(const PreStrategy& s, const EsPtr& plain_pair) {
  return relabel_map(s.inner->es, plain_pair, [&](const std::string& id) {
    const std::string& g = s.game->es->id(s.label(s.inner->es->index_of(id)));
    return (g.rfind("L.", 0) == 0 ? "0." : "1.") + g.substr(2);
  });
}

}  // namespace

LawRun law_main_theorem(const LawOptions& opt) {
  return run_law("main_theorem", opt, [&](int t, std::string& detail) {
    Rng rng = trial_rng(opt, t);
    PreStrategy s = [&] {
      switch (t % 3) {
        case 0: {
          int n = 1 + static_cast<int>(rng.below(
                          static_cast<std::size_t>(opt.max_events)));
          return gen_prestrategy(rng, gen_esp(rng, n), opt.limits);
        }
        case 1: {
          int cap = side_cap(opt);
          EspPtr a = gen_esp(rng, 1 + static_cast<int>(rng.below(cap)));
          EspPtr b = gen_esp(rng, 1 + static_cast<int>(rng.below(cap)));
          return gen_prestrategy(rng, hom_game(a, b), opt.limits);
        }
        default:
          return gen_family(rng, 2 + static_cast<int>(rng.below(2)),
                            opt.limits);
      }
    }();
    StrategyVerdict v = strategy_verdict(s, opt.limits);
    if (!v.agree()) {
      detail = "formulations disagree: " + describe_verdict(v);
      return false;
    }
    if (t % 3 == 2 && !v.is_strategy()) {
      detail = "family member rejected: " + describe_verdict(v);
      return false;
    }
    return true;
  });
}

LawRun law_pullback_universal(const LawOptions& opt) {
  return run_law("pullback_universal", opt, [&](int t, std::string& detail) {
    Rng rng = trial_rng(opt, t);
    EspPtr a = gen_esp(rng, 1 + static_cast<int>(rng.below(2)));
    EspPtr b = gen_esp(rng, 1 + static_cast<int>(rng.below(2)));
    EspPtr c = gen_esp(rng, 1 + static_cast<int>(rng.below(2)));
    PreStrategy lo = gen_prestrategy(rng, hom_game(a, b), opt.limits);
    PreStrategy hi = gen_prestrategy(rng, hom_game(b, c), opt.limits);
    const Pullback pb = interact(lo, hi, opt.limits).pb;

    ConfigGraph cg = enumerate_configurations(*pb.apex, opt.limits);
    std::vector<int> small;
    for (std::size_t i = 0; i < cg.configs.size(); ++i)
      if (cg.configs[i].count() <= 4) small.push_back(static_cast<int>(i));
    const Bits& config = cg.configs[small[rng.below(small.size())]];
    ConePiece piece = cone_piece(*pb.apex, config, rng, rng.chance(1, 2));

    EsMap alpha, beta;
    alpha.src = piece.x;
    alpha.tgt = pb.to_left.tgt;
    beta.src = piece.x;
    beta.tgt = pb.to_right.tgt;
    alpha.to.resize(piece.x->size());
    beta.to.resize(piece.x->size());
    for (std::size_t i = 0; i < piece.into.size(); ++i) {
      alpha.to[i] = pb.to_left.to[piece.into[i]];
      beta.to[i] = pb.to_right.to[piece.into[i]];
    }
    if (rng.chance(1, 3) && piece.x->size() > 0) {
      // Partial cone: keep a proper down-closed piece of the domain.
      Bits dom = piece.x->empty_set();
      for (std::size_t i = 0; i < piece.x->size(); ++i)
        if (rng.chance(1, 2)) dom.set(i);
      dom = piece.x->down_closure(dom);
      for (std::size_t i = 0; i < piece.x->size(); ++i)
        if (!dom.test(i)) alpha.to[i] = beta.to[i] = -1;
    }

    EsMap m = mediating(alpha, beta, pb, opt.limits);
    if (!(compose_maps(m, pb.to_left) == alpha) ||
        !(compose_maps(m, pb.to_right) == beta)) {
      detail = "mediating map does not close the triangles";
      return false;
    }

    std::vector<std::vector<int>> cand(piece.x->size());
    for (std::size_t i = 0; i < piece.x->size(); ++i) {
      if (!alpha.defined(static_cast<int>(i))) {
        cand[i] = {-1};
        continue;
      }
      for (std::size_t p = 0; p < pb.apex->size(); ++p)
        if (pb.to_left.to[p] == alpha.to[i] &&
            pb.to_right.to[p] == beta.to[i])
          cand[i].push_back(static_cast<int>(p));
      if (cand[i].empty()) {
        detail = "mediating map exists but no event candidates";
        return false;
      }
    }
    int found = count_mediating_maps(piece.x, pb, cand, m, opt.limits);
    if (found != 1) {
      detail = found < 0 ? "mediating map is not unique"
                         : "mediating map not among the candidate maps";
      return false;
    }
    return true;
  });
}

LawRun law_scott_order(const LawOptions& opt) {
  return run_law("scott_order", opt, [&](int t, std::string& detail) {
    Rng rng = trial_rng(opt, t);
    int cap = std::min(opt.max_events, 5);
    EspPtr a = gen_esp(rng, 1 + static_cast<int>(rng.below(cap)));
    ConfigGraph cg = enumerate_configurations(*a->es, opt.limits);
    PreStrategy cc = copycat(a, opt.limits);
    const EventStructure& ces = *cc.inner->es;

    auto both_sides = [&](const Bits& y, const Bits& x) {
      Bits zs(ces.size());
      y.for_each([&](int e) { zs.set(ces.index_of("L." + a->es->id(e))); });
      x.for_each([&](int e) { zs.set(ces.index_of("R." + a->es->id(e))); });
      return zs;
    };

    std::size_t n = cg.configs.size();
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Bits& x = cg.configs[i];
        const Bits& y = cg.configs[j];
        bool signed_diffs = scott_leq(*a, x, y);
        bool via_copycat = ces.is_configuration(both_sides(y, x));
        bool via_witness = explicit_scott(*a, cg, x, y);
        if (signed_diffs != via_copycat || signed_diffs != via_witness) {
          detail = "order readings disagree on (" + std::to_string(i) + "," +
                   std::to_string(j) + ")";
          return false;
        }
        auto w = scott_witness(*a, x, y);
        if (w.has_value() != signed_diffs ||
            (w.has_value() && !(*w == (x & y)))) {
          detail = "witness disagrees with the order";
          return false;
        }
        leq[i][j] = signed_diffs;
      }
    }
    for (int k = 0; k < 10; ++k) {
      std::size_t i = rng.below(n), j = rng.below(n);
      if (scott_leq_via_copycat(*a, cg.configs[i], cg.configs[j],
                                opt.limits) != static_cast<bool>(leq[i][j])) {
        detail = "copycat reading differs from the direct one";
        return false;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][i]) {
        detail = "order is not reflexive";
        return false;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) {
          detail = "order is not antisymmetric";
          return false;
        }
        if (!leq[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k]) {
            detail = "order is not transitive";
            return false;
          }
      }
    }
    return true;
  });
}

LawRun law_parallel_product(const LawOptions& opt) {
  return run_law("parallel_product", opt, [&](int t, std::string& detail) {
    Rng rng = trial_rng(opt, t);
    EspPtr e = gen_esp(rng, 1 + static_cast<int>(rng.below(3)));
    EspPtr f = gen_esp(rng, 1 + static_cast<int>(rng.below(3)));
    ParallelEs p = parallel(e->es, f->es);
    ConfigGraph ce = enumerate_configurations(*e->es, opt.limits);
    ConfigGraph cf = enumerate_configurations(*f->es, opt.limits);
    ConfigGraph cp = enumerate_configurations(*p.both, opt.limits);
    if (cp.configs.size() != ce.configs.size() * cf.configs.size()) {
      detail = "configuration counts do not multiply: " +
               std::to_string(cp.configs.size()) + " vs " +
               std::to_string(ce.configs.size()) + "*" +
               std::to_string(cf.configs.size());
      return false;
    }
    std::vector<std::pair<int, int>> split(cp.configs.size());
    std::vector<std::vector<char>> hit(
        ce.configs.size(), std::vector<char>(cf.configs.size(), 0));
    for (std::size_t i = 0; i < cp.configs.size(); ++i) {
      int le = ce.find(p.inj_left.preimage(cp.configs[i]));
      int ri = cf.find(p.inj_right.preimage(cp.configs[i]));
      if (le < 0 || ri < 0) {
        detail = "projection of a configuration is not a configuration";
        return false;
      }
      if (hit[le][ri]) {
        detail = "two configurations project to the same pair";
        return false;
      }
      hit[le][ri] = 1;
      split[i] = {le, ri};
    }
    for (std::size_t i = 0; i < cp.configs.size(); ++i)
      for (std::size_t j = 0; j < cp.configs.size(); ++j) {
        bool whole = cp.configs[i].subset_of(cp.configs[j]);
        bool parts =
            ce.configs[split[i].first].subset_of(ce.configs[split[j].first]) &&
            cf.configs[split[i].second].subset_of(cf.configs[split[j].second]);
        if (whole != parts) {
          detail = "pairing does not preserve the inclusion order";
          return false;
        }
      }
    return true;
  });
}

LawRun law_strategy_closure(const LawOptions& opt) {
  return run_law("strategy_closure", opt, [&](int t, std::string& detail) {
    Rng rng = trial_rng(opt, t);
    PreStrategy s1 = gen_family(rng, 2, opt.limits);
    PreStrategy s2 =
        gen_family_from(rng, end_games(s1).second, 2, opt.limits);
    StrategyVerdict comp =
        strategy_verdict(compose(s1, s2, opt.limits).strat, opt.limits);
    if (!comp.is_strategy() || !comp.agree()) {
      detail = "composite fails: " + describe_verdict(comp);
      return false;
    }
    auto [a1, b1] = end_games(s1);
    auto [a2, b2] = end_games(s2);
    int tensor_game = a1->size() + b1->size() + a2->size() + b2->size();
    // Copycat invariance over the tensor game is exponential in its size.
    if (t % 2 == 0 && tensor_game <= 10) {
      StrategyVerdict ten =
          strategy_verdict(tensor(s1, s2, opt.limits), opt.limits);
      if (!ten.is_strategy() || !ten.agree()) {
        detail = "tensor fails: " + describe_verdict(ten);
        return false;
      }
    }
    return true;
  });
}

LawRun law_pentagon(const LawOptions& opt) {
  return run_law("pentagon", opt, [&](int t, std::string& detail) {
    Rng rng = trial_rng(opt, t);
    PreStrategy s1 = gen_family(rng, 2, opt.limits);
    PreStrategy s2 =
        gen_family_from(rng, end_games(s1).second, 2, opt.limits);
    PreStrategy s3 =
        gen_family_from(rng, end_games(s2).second, 2, opt.limits);
    PreStrategy s4 =
        gen_family_from(rng, end_games(s3).second, 2, opt.limits);
    LawReport r = pentagon_check(s1, s2, s3, s4, opt.limits);
    detail = r.detail;
    return r.holds;
  });
}

LawRun law_triangle(const LawOptions& opt) {
  return run_law("triangle", opt, [&](int t, std::string& detail) {
    Rng rng = trial_rng(opt, t);
    PreStrategy s1 = gen_family(rng, 2, opt.limits);
    PreStrategy s2 =
        gen_family_from(rng, end_games(s1).second, 2, opt.limits);
    LawReport r = triangle_check(s1, s2, opt.limits);
    detail = r.detail;
    return r.holds;
  });
}

LawRun law_unitor_naturality(const LawOptions& opt) {
  return run_law("unitor_naturality", opt, [&](int t, std::string& detail) {
    Rng rng = trial_rng(opt, t);
    PreStrategy s = gen_family(rng, 2 + static_cast<int>(rng.below(2)),
                               opt.limits);
    RenamedStrategy renamed = rename_carrier(s, "z", opt.limits);
    auto [a, b] = end_games(s);
    PreStrategy cca = copycat(a, opt.limits);
    PreStrategy ccb = copycat(b, opt.limits);

    Unitor l1 = left_unitor(s, opt.limits);
    Unitor l2 = left_unitor(renamed.strat, opt.limits);
    EsMap lcell =
        compose_cell(l1.comp, s, ccb, l2.comp, renamed.strat, ccb,
                     renamed.cell, EsMap::identity(ccb.inner->es), opt.limits);
    if (!(compose_maps(lcell, l2.iso) == compose_maps(l1.iso, renamed.cell))) {
      detail = "left unitor square does not commute";
      return false;
    }

    Unitor r1 = right_unitor(s, opt.limits);
    Unitor r2 = right_unitor(renamed.strat, opt.limits);
    EsMap rcell =
        compose_cell(r1.comp, cca, s, r2.comp, cca, renamed.strat,
                     EsMap::identity(cca.inner->es), renamed.cell, opt.limits);
    if (!(compose_maps(rcell, r2.iso) == compose_maps(r1.iso, renamed.cell))) {
      detail = "right unitor square does not commute";
      return false;
    }
    return true;
  });
}

LawRun law_snake(const LawOptions& opt) {
  return run_law("snake", opt, [&](int t, std::string& detail) {
    EspPtr a;
    switch (t) {
      case 0: a = samples::y_game(); break;
      case 1: a = samples::w_game(); break;
      case 2: a = samples::bool_game(); break;
      default: {
        Rng rng = trial_rng(opt, t);
        a = gen_esp(rng, 1 + static_cast<int>(rng.below(3)));
      }
    }
    LawReport r = snake_check(a, opt.limits);
    detail = r.detail;
    return r.holds;
  });
}

LawRun law_hiding_algebra(const LawOptions& opt) {
  return run_law("hiding_algebra", opt, [&](int t, std::string& detail) {
    Rng rng = trial_rng(opt, t);
    if (t % 2 == 0) {
      // Canonical projections and their composites.
      EspPtr e = gen_esp(rng, 2 + static_cast<int>(rng.below(3)));
      Bits keep1 = e->es->empty_set();
      for (std::size_t i = 0; i < e->size(); ++i)
        if (rng.chance(2, 3)) keep1.set(i);
      Projection p1 = project(e->es, keep1, opt.limits);
      HidingCheck h1 = check_hiding_map(p1.hiding, opt.limits);
      if (!h1.holds) {
        detail = "canonical projection rejected: " + h1.reason;
        return false;
      }
      Bits keep2 = p1.restricted->empty_set();
      for (std::size_t i = 0; i < p1.restricted->size(); ++i)
        if (rng.chance(1, 2)) keep2.set(i);
      Projection p2 = project(p1.restricted, keep2, opt.limits);
      HidingCheck h2 =
          check_hiding_map(compose_maps(p1.hiding, p2.hiding), opt.limits);
      if (!h2.holds) {
        detail = "composite of projections rejected: " + h2.reason;
        return false;
      }
      return true;
    }

    // Zipping a third participant onto a composition.
    PreStrategy lo = gen_family(rng, 2, opt.limits);
    PreStrategy hi = gen_family_from(rng, end_games(lo).second, 2, opt.limits);
    Composition comp = compose(lo, hi, opt.limits);
    PreStrategy third =
        gen_family_from(rng, end_games(hi).second, 2, opt.limits);

    EsPtr ab = strip_component(*comp.inter.spine, "0.");
    EsPtr a_es = strip_component(*ab, "0.");
    EsPtr c_es = strip_component(*comp.inter.spine, "1.");
    ParallelEs ac = parallel(a_es, c_es);
    EsMap sig2 = erase_sides(comp.strat, ac.both);

    EsPtr c2 = strip_component(*third.game->es, "L.");
    EsPtr d_es = strip_component(*third.game->es, "R.");
    ParallelEs cd = parallel(c2, d_es);
    EsMap rho = erase_sides(third, cd.both);

    ZippedHiding z = zipped_hiding(comp.hiding, comp.inter.pb.to_game, sig2,
                                   rho, opt.limits);
    HidingCheck hz = check_hiding_map(z.map, opt.limits);
    if (!hz.holds) {
      detail = "zipped hiding rejected: " + hz.reason;
      return false;
    }
    return true;
  });
}

LawRun law_copycat_clauses(const LawOptions& opt) {
  return run_law("copycat_clauses", opt, [&](int t, std::string& detail) {
    Rng rng = trial_rng(opt, t);
    int cap = std::min(opt.max_events, 5);
    EspPtr a = gen_esp(rng, 1 + static_cast<int>(rng.below(cap)));
    PreStrategy cc = copycat(a, opt.limits);
    const EventStructure& ces = *cc.inner->es;
    auto side = [&](int e) { return ces.id(e)[0]; };
    auto base = [&](int e) { return a->es->index_of(ces.id(e).substr(2)); };
    for (int e = 0; e < static_cast<int>(ces.size()); ++e)
      for (int f = 0; f < static_cast<int>(ces.size()); ++f) {
        if (e == f) continue;
        bool same_copy = side(e) == side(f);
        bool lemma =
            same_copy
                ? a->es->immediate_edge(base(e), base(f)) &&
                      (cc.inner->polarity(e) == Polarity::pos ||
                       cc.inner->polarity(f) == Polarity::neg)
                : base(e) == base(f) &&
                      cc.inner->polarity(e) == Polarity::neg;
        if (ces.immediate_edge(e, f) != lemma) {
          detail = "edge " + ces.id(e) + " -> " + ces.id(f) +
                   (lemma ? " missing" : " unexpected");
          return false;
        }
      }
    return true;
  });
}

std::vector<LawRun> run_all_laws(const LawOptions& opt) {
  return {law_main_theorem(opt),        law_pullback_universal(opt),
          law_scott_order(opt),         law_parallel_product(opt),
          law_strategy_closure(opt),    law_pentagon(opt),
          law_triangle(opt),            law_unitor_naturality(opt),
          law_snake(opt),               law_hiding_algebra(opt),
          law_copycat_clauses(opt)};
}

}  // namespace esgame
