#include <algorithm>

#include "doctest.h"
#include "esgame/event_structure.hpp"
#include "esgame/samples.hpp"
#include "support.hpp"

using namespace esgame;
using testutil::StringSet;
using testutil::vending_inner_data;

TEST_CASE("configuration enumeration matches the brute-force oracle") {
  EsData data = vending_inner_data();
  EsPtr es = EventStructure::from_data(data);
  ConfigGraph g = enumerate_configurations(*es);
  auto got = testutil::graph_sets(*es, g);
  auto want = testutil::brute_configs(data);
  CHECK(got == want);
  CHECK(got.size() == 12);
}

TEST_CASE("vending machine configurations, listed") {
  EsPtr es = EventStructure::from_data(vending_inner_data());
  ConfigGraph g = enumerate_configurations(*es);
  std::vector<StringSet> want = {{},
                                 {"coin"},
                                 {"selC"},
                                 {"selT"},
                                 {"coin", "selC"},
                                 {"coin", "selT"},
                                 {"selC", "selT"},
                                 {"coin", "selC", "selT"},
                                 {"coin", "selC", "coffee"},
                                 {"coin", "selT", "tea"},
                                 {"coin", "selC", "selT", "coffee"},
                                 {"coin", "selC", "selT", "tea"}};
  std::sort(want.begin(), want.end());
  CHECK(testutil::graph_sets(*es, g) == want);
}

TEST_CASE("nondeterministic coin machine has exactly four configurations") {
  EspPtr m = samples::nondet_coin();
  ConfigGraph g = enumerate_configurations(*m->es);
  std::vector<StringSet> want = {
      {}, {"coin"}, {"coffee", "coin"}, {"coin", "tea"}};
  std::sort(want.begin(), want.end());
  CHECK(testutil::graph_sets(*m->es, g) == want);
}

TEST_CASE("causality is stored transitively reduced and queried closed") {
  EsPtr es = EventStructure::from_data(
      {{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, {}});
  int a = es->index_of("a"), b = es->index_of("b"), c = es->index_of("c");
  CHECK(es->immediate() ==
        std::vector<std::pair<int, int>>{{a, b}, {b, c}});
  CHECK(es->strict_causes(c).test(a));
  CHECK(es->strict_causes(c).test(b));
  CHECK(es->leq(a, c));
  CHECK(!es->leq(c, a));
  CHECK(es->cone(c).count() == 3);
}

TEST_CASE("conflict is inherited through causal cones") {
  EsPtr es = EventStructure::from_data(
      {{"a", "b", "c"}, {{"a", "b"}}, {{"a", "c"}}});
  Bits bc = es->set_of({"b", "c"});
  CHECK(!es->consistent(bc));
  CHECK(es->consistent(es->set_of({"b"})));
  CHECK(es->generators().size() == 1);
  CHECK(testutil::names(*es, es->generators()[0]) == StringSet{"a", "c"});
}

TEST_CASE("generators are canonical antichains") {
  EsPtr es = EventStructure::from_data(
      {{"a", "b", "c"}, {{"a", "b"}}, {{"b", "c"}}});
  REQUIRE(es->generators().size() == 1);
  CHECK(testutil::names(*es, es->generators()[0]) == StringSet{"b", "c"});
}

TEST_CASE("validation rejects broken data") {
  CHECK(!EventStructure::validate({{"a", "a"}, {}, {}}).ok());
  CHECK(!EventStructure::validate({{"a"}, {{"a", "z"}}, {}}).ok());
  CHECK(!EventStructure::validate({{"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}})
             .ok());
  CHECK(!EventStructure::validate({{"a", "b"}, {{"a", "b"}}, {{"a", "b"}}})
             .ok());
  CHECK(!EventStructure::validate({{"a", "b"}, {}, {{"a"}}}).ok());
  CHECK_THROWS_AS(
      EventStructure::from_data({{"a", "b"}, {{"a", "b"}}, {{"a", "b"}}}),
      InputError);
}

TEST_CASE("ids are kept in lexicographic index order") {
  EsPtr es = EventStructure::from_data({{"p2", "p10", "x1"}, {}, {}});
  CHECK(es->ids() == std::vector<std::string>{"p10", "p2", "x1"});
  CHECK(es->index_of("p10") == 0);
  CHECK(es->find("nope") == -1);
  CHECK_THROWS_AS(es->index_of("nope"), InputError);
}

TEST_CASE("covering edges extend by exactly one enabled event") {
  EsPtr es = EventStructure::from_data(vending_inner_data());
  ConfigGraph g = enumerate_configurations(*es);
  CHECK(g.configs[0].empty());
  int expected = 0;
  for (const auto& c : g.configs)
    for (std::size_t e = 0; e < es->size(); ++e)
      if (es->enabled(c, static_cast<int>(e))) ++expected;
  CHECK(static_cast<int>(g.covers.size()) == expected);
  for (const auto& [from, to, e] : g.covers) {
    CHECK(es->enabled(g.configs[from], e));
    Bits next = g.configs[from];
    next.set(e);
    CHECK(next == g.configs[to]);
    CHECK(g.find(next) == to);
  }
}

TEST_CASE("enumeration guards refuse oversized inputs") {
  EsPtr es = EventStructure::from_data(vending_inner_data());
  Limits tight;
  tight.max_enum_events = 4;
  CHECK_THROWS_AS(enumerate_configurations(*es, tight), GuardError);
  Limits few;
  few.max_states = 8;
  CHECK_THROWS_AS(enumerate_configurations(*es, few), GuardError);
  CHECK_NOTHROW(enumerate_configurations(*es));
}

TEST_CASE("down-closure and configuration predicates") {
  EsPtr es = EventStructure::from_data(vending_inner_data());
  Bits coffee = es->set_of({"coffee"});
  Bits closed = es->down_closure(coffee);
  CHECK(testutil::names(*es, closed) == StringSet{"coffee", "coin", "selC"});
  CHECK(!es->down_closed(coffee));
  CHECK(es->down_closed(closed));
  CHECK(es->is_configuration(closed));
  CHECK(!es->is_configuration(es->set_of({"coffee", "tea", "coin", "selC",
                                          "selT"})));
}
