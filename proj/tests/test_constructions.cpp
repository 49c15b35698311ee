#include <algorithm>

#include "doctest.h"
#include "esgame/constructions.hpp"
#include "esgame/samples.hpp"
#include "support.hpp"

using namespace esgame;
using testutil::StringSet;

TEST_CASE("parallel composition multiplies configuration counts") {
  ParallelEsp p = parallel(samples::coffee(), samples::tea());
  ConfigGraph left = enumerate_configurations(*samples::coffee()->es);
  ConfigGraph right = enumerate_configurations(*samples::tea()->es);
  ConfigGraph both = enumerate_configurations(*p.both->es);
  CHECK(left.configs.size() == 3);
  CHECK(right.configs.size() == 3);
  CHECK(both.configs.size() == 9);
  CHECK(p.both->es->ids()[0].starts_with("0."));
  CHECK(check_map(p.inj_left).is_map());
  CHECK(check_map(p.inj_right).is_map());
}

TEST_CASE("parallel components stay independent") {
  ParallelEsp p = parallel(samples::nondet_coin(), samples::nondet_coin());
  const EventStructure& es = *p.both->es;
  for (const auto& [a, b] : es.immediate())
    CHECK(es.id(a).substr(0, 2) == es.id(b).substr(0, 2));
  for (const auto& g : es.generators()) {
    auto ids = es.names_of(g);
    for (const auto& id : ids) CHECK(id.substr(0, 2) == ids[0].substr(0, 2));
  }
}

TEST_CASE("dual flips polarities and nothing else") {
  EspPtr g = samples::vending_game();
  EspPtr d = dual(*g);
  CHECK(*d->es == *g->es);
  for (std::size_t e = 0; e < g->size(); ++e)
    CHECK(d->pol[e] == flip(g->pol[e]));
  CHECK(same_esp(*dual(*d), *g));
}

TEST_CASE("hom game splits back into its ends") {
  EspPtr a = samples::w_game();
  EspPtr b = samples::bool_game();
  EspPtr h = hom_game(a, b);
  auto [left, right] = split_hom_game(*h);
  CHECK(same_esp(*left, *a));
  CHECK(same_esp(*right, *b));
  CHECK(h->polarity(h->es->index_of("L.click")) == Polarity::pos);
  CHECK(h->polarity(h->es->index_of("R.tt")) == Polarity::pos);
  CHECK_THROWS_AS(split_hom_game(*a), InputError);
}

TEST_CASE("projection inherits causality through hidden events") {
  EsPtr chain = EventStructure::from_data(
      {{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {}});
  Projection p = project(chain, chain->set_of({"a", "c"}));
  REQUIRE(p.restricted->size() == 2);
  int a = p.restricted->index_of("a"), c = p.restricted->index_of("c");
  CHECK(p.restricted->immediate_edge(a, c));
  CHECK(p.hiding.defined(chain->index_of("a")));
  CHECK(!p.hiding.defined(chain->index_of("b")));
}

TEST_CASE("projection inherits conflict") {
  EspPtr m = samples::nondet_coin();
  Projection p = project(m->es, m->es->set_of({"coffee", "tea"}));
  REQUIRE(p.restricted->generators().size() == 1);
  CHECK(testutil::names(*p.restricted, p.restricted->generators()[0]) ==
        StringSet{"coffee", "tea"});
}

TEST_CASE("projections are hiding maps and compose") {
  EsPtr es = EventStructure::from_data(
      {{"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}}, {}});
  Projection p1 = project(es, es->set_of({"a", "b", "c"}));
  CHECK(check_hiding_map(p1.hiding).holds);
  Projection p2 = project(p1.restricted, p1.restricted->set_of({"a", "c"}));
  EsMap direct = project(es, es->set_of({"a", "c"})).hiding;
  CHECK(compose_maps(p1.hiding, p2.hiding) == direct);
  CHECK(check_hiding_map(direct).holds);
}

TEST_CASE("a partial map onto a larger target is not a hiding map") {
  EsPtr chain =
      EventStructure::from_data({{"a", "b"}, {{"a", "b"}}, {}});
  EsPtr pair = EventStructure::from_data({{"x", "y"}, {}, {}});
  EsMap f = EsMap::from_pairs(chain, pair, {{"b", "y"}});
  CHECK(check_map(f).is_map());
  CHECK(!check_hiding_map(f).holds);
}

TEST_CASE("dropping a cause while keeping its effect is not even a map") {
  EsPtr chain =
      EventStructure::from_data({{"a", "b"}, {{"a", "b"}}, {}});
  EsPtr pair =
      EventStructure::from_data({{"x", "y"}, {{"x", "y"}}, {}});
  EsMap f = EsMap::from_pairs(chain, pair, {{"b", "y"}});
  CHECK(!check_map(f).is_map());
}

TEST_CASE("hiding witnesses are minimal and monotone") {
  EsPtr es = EventStructure::from_data(testutil::vending_inner_data());
  Projection p = project(es, es->set_of({"coffee", "tea"}));
  HidingCheck h = check_hiding_map(p.hiding);
  REQUIRE(h.holds);
  ConfigGraph g = enumerate_configurations(*p.restricted);
  for (std::size_t i = 0; i < g.configs.size(); ++i) {
    CHECK(es->is_configuration(h.witness[i]));
    CHECK(p.hiding.image(h.witness[i]) == g.configs[i]);
    for (std::size_t j = 0; j < g.configs.size(); ++j)
      if (g.configs[i].subset_of(g.configs[j]))
        CHECK(h.witness[i].subset_of(h.witness[j]));
  }
}

TEST_CASE("component stripping undoes parallel and rejects cross talk") {
  ParallelEs p = parallel(samples::coffee()->es, samples::tea()->es);
  EsPtr left = strip_component(*p.both, "0.");
  CHECK(*left == *samples::coffee()->es);
  EsPtr bridge = EventStructure::from_data(
      {{"0.a", "1.b"}, {{"0.a", "1.b"}}, {}});
  CHECK_THROWS_AS(strip_component(*bridge, "1."), InputError);
}

TEST_CASE("relabelling matches events through an id transformation") {
  EsPtr base = samples::y_game()->es;
  EsPtr tagged = EventStructure::from_data({{"R.o"}, {}, {}});
  EsMap f = relabel_map(base, tagged,
                        [](const std::string& id) { return "R." + id; });
  CHECK(f.total());
  CHECK(f(0) == 0);
  CHECK_THROWS_AS(relabel_map(tagged, base,
                              [](const std::string& id) { return id; }),
                  InputError);
}
