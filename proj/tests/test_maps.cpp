#include "doctest.h"
#include "esgame/iso.hpp"
#include "esgame/samples.hpp"
#include "support.hpp"

using namespace esgame;

TEST_CASE("map building and composition") {
  EsPtr chain =
      EventStructure::from_data({{"a", "b"}, {{"a", "b"}}, {}});
  EsMap id = EsMap::identity(chain);
  CHECK(id.total());
  CHECK(compose_maps(id, id) == id);

  EsMap partial = EsMap::from_pairs(chain, chain, {{"a", "a"}});
  CHECK(!partial.total());
  CHECK(compose_maps(partial, id) == partial);
  CHECK(testutil::names(*chain, partial.domain()) ==
        testutil::StringSet{"a"});

  CHECK_THROWS_AS(EsMap::from_pairs(chain, chain, {{"a", "zz"}}),
                  InputError);
  CHECK_THROWS_AS(EsMap::from_pairs(chain, chain, {{"a", "a"}, {"a", "b"}}),
                  InputError);
}

TEST_CASE("undefinedness propagates through composition") {
  EsPtr one = EventStructure::from_data({{"x"}, {}, {}});
  EsPtr two = EventStructure::from_data({{"x", "y"}, {}, {}});
  EsMap f = EsMap::from_pairs(two, one, {{"x", "x"}});
  EsMap g = EsMap::from_pairs(one, two, {{"x", "y"}});
  EsMap h = compose_maps(f, g);
  CHECK(h.defined(two->index_of("x")));
  CHECK(!h.defined(two->index_of("y")));
  CHECK(h(two->index_of("x")) == two->index_of("y"));
}

TEST_CASE("inverse of a bijection, and its absence") {
  EspPtr y = samples::y_game();
  EsPtr tagged = EventStructure::from_data({{"R.o"}, {}, {}});
  EsMap f = EsMap::from_pairs(y->es, tagged, {{"o", "R.o"}});
  EsMap back = inverse_iso(f);
  CHECK(compose_maps(f, back) == EsMap::identity(y->es));
  EsMap partial = EsMap::from_pairs(y->es, tagged, {});
  CHECK_THROWS_AS(inverse_iso(partial), InputError);
}

TEST_CASE("map checking grades the labelling") {
  PreStrategy vend = samples::vending_strategy();
  MapCheck mc = check_map(vend.label, vend.inner.get(), vend.game.get());
  CHECK(mc.polarity_preserving());

  MapCheck plain = check_map(vend.label);
  CHECK(plain.verdict == MapCheck::Verdict::total_map);

  EsMap partial =
      EsMap::from_pairs(vend.inner->es, vend.game->es, {{"coin", "coin"}});
  CHECK(check_map(partial).verdict == MapCheck::Verdict::partial_map);
}

TEST_CASE("collapsing consistent events is not a map") {
  EsPtr two = EventStructure::from_data({{"a", "b"}, {}, {}});
  EsPtr one = EventStructure::from_data({{"x"}, {}, {}});
  EsMap f = EsMap::from_pairs(two, one, {{"a", "x"}, {"b", "x"}});
  MapCheck mc = check_map(f);
  CHECK(!mc.is_map());
  CHECK(!mc.reason.empty());
}

TEST_CASE("collapsing conflicting events is fine") {
  PreStrategy dup = samples::ab_duplicated();
  CHECK(check_map(dup.label, dup.inner.get(), dup.game.get())
            .polarity_preserving());
}

TEST_CASE("polarity mismatches are rejected") {
  EspPtr y = samples::y_game();
  EspPtr bar = dual(*y);
  EsMap f = EsMap::identity(y->es);
  MapCheck mc = check_map(f, y.get(), bar.get());
  CHECK(!mc.polarity_preserving());
}

TEST_CASE("isomorphism search on small structures") {
  EspPtr coffee = samples::coffee();
  EspPtr tea = samples::tea();
  auto isos = find_isomorphisms(*coffee->es, *tea->es);
  REQUIRE(isos.size() == 1);
  CHECK(isos[0][coffee->es->index_of("coin")] == tea->es->index_of("coin"));
  CHECK(isos[0][coffee->es->index_of("coffee")] == tea->es->index_of("tea"));

  CHECK(find_isomorphisms(*coffee->es, *samples::nondet_coin()->es).empty());
  CHECK(find_isomorphisms(*coffee, *dual(*coffee)).empty());
}

TEST_CASE("isomorphism over a common game respects the labelling") {
  PreStrategy after_a = samples::abc_after_a();
  PreStrategy after_b = samples::abc_after_b();
  auto over = find_isomorphism_over(*after_a.inner, *after_b.inner,
                                    after_a.label, after_b.label);
  CHECK(!over.has_value());
  auto self = find_isomorphism_over(*after_a.inner, *after_a.inner,
                                    after_a.label, after_a.label);
  REQUIRE(self.has_value());
  CHECK(is_isomorphism(*self));
}

TEST_CASE("a configuration action determines its event map") {
  PreStrategy vend = samples::vending_strategy();
  EsMap rebuilt = eventize(vend.inner->es, vend.game->es,
                           [&](const Bits& x) { return vend.label.image(x); });
  CHECK(rebuilt == vend.label);
}
