#include "doctest.h"
#include "esgame/algebra.hpp"
#include "esgame/gen.hpp"
#include "esgame/iso.hpp"
#include "esgame/samples.hpp"
#include "support.hpp"

using namespace esgame;

TEST_CASE("tensor runs both strategies side by side") {
  PreStrategy nb = samples::nondet_bool();
  PreStrategy t = tensor(nb, nb);
  CHECK(t.inner->size() == 4);
  CHECK(enumerate_configurations(*t.inner->es).configs.size() == 9);
  StrategyVerdict v = strategy_verdict(t);
  CHECK(v.is_strategy());
  CHECK(v.agree());
}

TEST_CASE("tensor of strategies with two-sided games") {
  PreStrategy neg = samples::negation();
  PreStrategy t = tensor(neg, neg);
  auto [a, b] = split_hom_game(*t.game);
  CHECK(a->size() == 4);
  CHECK(b->size() == 4);
  CHECK(strategy_verdict(t).is_strategy());
}

TEST_CASE("lifting an iso gives copycat read through it") {
  EspPtr w = samples::w_game();
  RenamedGame renamed = rename_game(w, "z");
  PreStrategy lifted = lift_map(renamed.iso, w, renamed.game);
  CHECK(strategy_verdict(lifted).is_strategy());
  PreStrategy back = colift_map(
      relabel_map(renamed.game->es, w->es,
                  [](const std::string& id) {
                    return id.substr(0, id.size() - 1);
                  }),
      w, renamed.game);
  CHECK(strategy_verdict(back).is_strategy());
}

TEST_CASE("structural strategies are strategies on the right games") {
  EspPtr a = samples::w_game();
  EspPtr b = samples::bool_game();
  EspPtr c = samples::y_game();

  Structural rho = structural_rho(a);
  CHECK(is_isomorphism(rho.map));
  CHECK(same_esp(*rho.tgt, *a));
  CHECK(strategy_verdict(rho.lifted).is_strategy());

  Structural lambda = structural_lambda(a);
  CHECK(is_isomorphism(lambda.map));
  CHECK(same_esp(*lambda.tgt, *a));

  Structural swap = structural_swap(a, b);
  CHECK(is_isomorphism(swap.map));
  CHECK(strategy_verdict(swap.lifted).is_strategy());

  Structural alpha = structural_alpha(a, b, c);
  CHECK(is_isomorphism(alpha.map));
  CHECK(strategy_verdict(alpha.lifted).is_strategy());
}

TEST_CASE("unit and counit are strategies on the bent games") {
  EspPtr b = samples::bool_game();
  PreStrategy unit = eta(b);
  auto [unit_l, unit_r] = split_hom_game(*unit.game);
  CHECK(unit_l->size() == 0);
  CHECK(unit_r->size() == 4);
  CHECK(strategy_verdict(unit).is_strategy());

  PreStrategy counit = epsilon(b);
  auto [counit_l, counit_r] = split_hom_game(*counit.game);
  CHECK(counit_l->size() == 4);
  CHECK(counit_r->size() == 0);
  CHECK(strategy_verdict(counit).is_strategy());
}

TEST_CASE("snake equations hold on the named games") {
  CHECK(snake_check(samples::y_game()).holds);
  CHECK(snake_check(samples::w_game()).holds);
  CHECK(snake_check(samples::bool_game()).holds);
}

TEST_CASE("associator rebrackets triple composites") {
  Rng rng(11);
  PreStrategy s1 = gen_family(rng, 2);
  PreStrategy s2 = gen_family_from(rng, end_games(s1).second, 2);
  PreStrategy s3 = gen_family_from(rng, end_games(s2).second, 2);
  Associator as = associator(s1, s2, s3);
  CHECK(is_isomorphism(as.iso));
  CHECK(compose_maps(as.iso, as.right.strat.label) == as.left.strat.label);
}

TEST_CASE("pentagon and triangle coherence on seeded quadruples") {
  Rng rng(5);
  PreStrategy s1 = gen_family(rng, 2);
  PreStrategy s2 = gen_family_from(rng, end_games(s1).second, 2);
  PreStrategy s3 = gen_family_from(rng, end_games(s2).second, 2);
  PreStrategy s4 = gen_family_from(rng, end_games(s3).second, 2);
  CHECK(pentagon_check(s1, s2, s3, s4).holds);
  CHECK(triangle_check(s1, s2).holds);
}

TEST_CASE("composition acts on 2-cells") {
  PreStrategy lo = samples::nondet_bool();
  PreStrategy hi = samples::negation();
  Composition c = compose(lo, hi);
  RenamedStrategy moved = rename_carrier(lo, "q");
  Composition c2 = compose(moved.strat, hi);
  EsMap cell = compose_cell(c, lo, hi, c2, moved.strat, hi, moved.cell,
                            EsMap::identity(hi.inner->es));
  CHECK(cell.total());
  CHECK(is_isomorphism(cell));
  CHECK(compose_maps(cell, c2.strat.label) == c.strat.label);
}
