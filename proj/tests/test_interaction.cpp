#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "esgame/algebra.hpp"
#include "esgame/iso.hpp"
#include "esgame/samples.hpp"
#include "support.hpp"

using namespace esgame;
using testutil::StringSet;

namespace {

StringSet apex_labels(const Pullback& pb, const Bits& xs) {
  StringSet out;
  xs.for_each([&](int e) { out.insert(pb.to_game.tgt->id(pb.to_game(e))); });
  return out;
}

}  // namespace

TEST_CASE("pullback legs commute with the labellings") {
  PreStrategy vend = samples::vending_strategy();
  PreStrategy dup = samples::vending_duplicate();
  Pullback pb = pullback(vend.label, dup.label);
  CHECK(check_map(pb.to_left).is_map());
  CHECK(check_map(pb.to_right).is_map());
  CHECK(compose_maps(pb.to_left, pb.left_label).to == pb.to_game.to);
  CHECK(compose_maps(pb.to_right, pb.right_label).to == pb.to_game.to);
}

TEST_CASE("synchronizing the two orderings chains them") {
  Pullback pb = pullback(samples::abc_after_a().label,
                         samples::abc_after_b().label);
  REQUIRE(pb.apex->size() == 3);
  int a = -1, b = -1, c = -1;
  for (std::size_t e = 0; e < pb.apex->size(); ++e) {
    const std::string& id = pb.to_game.tgt->id(pb.to_game(static_cast<int>(e)));
    (id == "a" ? a : id == "b" ? b : c) = static_cast<int>(e);
  }
  CHECK(pb.apex->immediate() ==
        std::vector<std::pair<int, int>>{{std::min(a, b), c},
                                         {std::max(a, b), c}});
  CHECK(pb.apex->generators().empty());
}

TEST_CASE("duplicated copies synchronize separately") {
  Pullback pb = pullback(samples::ab_duplicated().label,
                         samples::ab_chained().label);
  CHECK(pb.apex->size() == 4);
  std::set<SyncPair> tops(pb.top.begin(), pb.top.end());
  CHECK(tops.size() == 3);
}

TEST_CASE("the deadlocking trade has an empty interaction") {
  Pullback pb =
      pullback(samples::drug_seller().label, samples::drug_buyer().label);
  CHECK(pb.apex->size() == 0);
  CHECK(pb.states.size() == 1);
}

TEST_CASE("secured states are bijections with acyclic dependency") {
  PreStrategy chained = samples::ab_chained();
  PreStrategy dup = samples::ab_duplicated();
  const EventStructure& s = *dup.inner->es;
  const EventStructure& t = *chained.inner->es;
  int sa = s.index_of("a"), sax = s.index_of("ax"), sb = s.index_of("b");
  int ta = t.index_of("a"), tb = t.index_of("b");
  CHECK(is_secured(s, t, {}));
  CHECK(is_secured(s, t, {{sa, ta}}));
  CHECK(is_secured(s, t, {{sa, ta}, {sb, tb}}));
  // Two synchronizations of the same right event are not a bijection.
  CHECK(!is_secured(s, t, {{sa, ta}, {sax, ta}}));
  // b on the right needs a; pairing it alone is not down-closed.
  CHECK(!is_secured(s, t, {{sb, tb}}));
}

TEST_CASE("mediating maps exist uniquely for total cones") {
  PreStrategy vend = samples::vending_strategy();
  Pullback pb = pullback(vend.label, vend.label);
  // The identity cone: both legs the identity on the carrier.
  EsMap id = EsMap::identity(vend.inner->es);
  EsMap m = mediating(id, id, pb);
  CHECK(m.total());
  CHECK(compose_maps(m, pb.to_left) == id);
  CHECK(compose_maps(m, pb.to_right) == id);
}

TEST_CASE("partial cones with a common domain factor through the apex") {
  PreStrategy vend = samples::vending_strategy();
  Pullback pb = pullback(vend.label, vend.label);
  EsMap alpha = EsMap::from_pairs(vend.inner->es, vend.inner->es,
                                  {{"coin", "coin"}, {"selC", "selC"}});
  EsMap m = mediating(alpha, alpha, pb);
  CHECK(!m.total());
  CHECK(m.domain() == alpha.domain());
  CHECK(compose_maps(m, pb.to_left) == alpha);
}

TEST_CASE("non-commuting cones are rejected") {
  PreStrategy after_a = samples::abc_after_a();
  PreStrategy after_b = samples::abc_after_b();
  Pullback pb = pullback(after_a.label, after_b.label);
  EsPtr x = EventStructure::from_data({{"e"}, {}, {}});
  EsMap alpha = EsMap::from_pairs(x, after_a.inner->es, {{"e", "a"}});
  EsMap beta = EsMap::from_pairs(x, after_b.inner->es, {{"e", "b"}});
  CHECK_THROWS_AS(mediating(alpha, beta, pb), InputError);
}

TEST_CASE("interaction spine and visibility") {
  StrategyInteraction si =
      interact(samples::nondet_bool(), samples::negation());
  for (const auto& id : si.spine->ids())
    CHECK((id.starts_with("0.0.") || id.starts_with("0.1.") ||
           id.starts_with("1.")));
  CHECK(si.pb.apex->size() == 4);
  CHECK(si.visible.count() == 2);
  CHECK(check_map(si.left_pad).is_map());
  CHECK(check_map(si.right_pad).is_map());
}

TEST_CASE("negation composed onto the nondeterministic boolean is itself") {
  Composition c = compose(samples::nondet_bool(), samples::negation());
  PreStrategy nb = samples::nondet_bool();
  REQUIRE(same_esp(*c.strat.game, *nb.game));
  auto iso = find_isomorphism_over(*c.strat.inner, *nb.inner, c.strat.label,
                                   nb.label);
  CHECK(iso.has_value());
}

TEST_CASE("composite configurations factor and recombine") {
  PreStrategy lo = samples::nondet_bool();
  PreStrategy hi = samples::negation();
  Composition c = compose(lo, hi);
  ConfigGraph g = enumerate_configurations(*c.strat.inner->es);
  for (const Bits& z : g.configs) {
    auto [x_lo, x_hi] = factor_configs(c, lo, hi, z);
    CHECK(lo.inner->es->is_configuration(x_lo));
    CHECK(hi.inner->es->is_configuration(x_hi));
    CHECK(composite_config(c, lo, hi, x_lo, x_hi) == z);
  }
}

TEST_CASE("minimal witnesses are least interaction states") {
  PreStrategy lo = samples::nondet_bool();
  PreStrategy hi = samples::negation();
  Composition c = compose(lo, hi);
  ConfigGraph g = enumerate_configurations(*c.strat.inner->es);
  for (const Bits& z : g.configs) {
    Bits w = minimal_witness(c, z);
    CHECK(c.inter.pb.apex->is_configuration(w));
    CHECK(c.hiding.image(w) == z);
    // Nothing smaller projects onto z.
    w.for_each([&](int e) {
      Bits less = w;
      less.reset(e);
      if (c.inter.pb.apex->is_configuration(less))
        CHECK(c.hiding.image(less) != z);
    });
  }
}

TEST_CASE("the hidden events of a composition really are hidden") {
  Composition c = compose(samples::nondet_bool(), samples::negation());
  CHECK(check_hiding_map(c.hiding).holds);
  StringSet visible = apex_labels(c.inter.pb, c.inter.visible);
  for (const auto& id : visible)
    CHECK((id.starts_with("0.0.") || id.starts_with("1.")));
}
