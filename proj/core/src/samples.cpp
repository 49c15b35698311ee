#include "esgame/samples.hpp"

namespace esgame {
namespace samples {

namespace {

using Pol = std::pair<std::string, Polarity>;

EspPtr game(std::vector<std::string> events,
            std::vector<std::pair<std::string, std::string>> prec,
            std::vector<std::vector<std::string>> conflicts,
            std::vector<Pol> overrides) {
  EsData data{std::move(events), std::move(prec), std::move(conflicts)};
  EsPtr es = EventStructure::from_data(data);
  std::vector<Polarity> pol(es->size(), Polarity::pos);
  for (const auto& [id, p] : overrides) pol[es->index_of(id)] = p;
  return make_esp(es, std::move(pol));
}

constexpr Polarity kNeg = Polarity::neg;

// Pre-strategy with the inner structure given as raw data and the labelling
// given per inner id; polarities are pulled back from the game.
PreStrategy strategy(EspPtr g, EsData inner,
                     std::vector<std::pair<std::string, std::string>> pairs) {
  EsPtr es = EventStructure::from_data(inner);
  EsMap label = EsMap::from_pairs(es, g->es, std::move(pairs));
  std::vector<Polarity> pol(es->size());
  for (std::size_t e = 0; e < es->size(); ++e) pol[e] = g->pol[label.to[e]];
  return make_prestrategy(make_esp(es, std::move(pol)), g, std::move(label));
}

std::vector<std::pair<std::string, std::string>> identity_pairs(
    const std::vector<std::string>& ids) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& id : ids) pairs.emplace_back(id, id);
  return pairs;
}

}  // namespace

EspPtr coffee() {
  return game({"coin", "coffee"}, {{"coin", "coffee"}}, {},
              {{"coin", kNeg}});
}

EspPtr tea() {
  return game({"coin", "tea"}, {{"coin", "tea"}}, {}, {{"coin", kNeg}});
}

EspPtr nondet_coin() {
  return game({"coin", "coffee", "tea"},
              {{"coin", "coffee"}, {"coin", "tea"}}, {{"coffee", "tea"}},
              {{"coin", kNeg}});
}

EspPtr vending_game() {
  return game({"coin", "selC", "selT", "coffee", "tea"}, {}, {},
              {{"coin", kNeg}, {"selC", kNeg}, {"selT", kNeg}});
}

PreStrategy vending_strategy() {
  EsData inner{{"coin", "selC", "selT", "coffee", "tea"},
               {{"coin", "coffee"},
                {"coin", "tea"},
                {"selC", "coffee"},
                {"selT", "tea"}},
               {{"coffee", "tea"}}};
  return strategy(vending_game(), inner, identity_pairs(inner.events));
}

PreStrategy vending_duplicate() {
  EsData inner{{"coin", "selC", "coffee", "coffeex"},
               {{"coin", "coffee"},
                {"coin", "coffeex"},
                {"selC", "coffee"},
                {"selC", "coffeex"}},
               {{"coffee", "coffeex"}}};
  return strategy(vending_game(), inner,
                  {{"coin", "coin"},
                   {"selC", "selC"},
                   {"coffee", "coffee"},
                   {"coffeex", "coffee"}});
}

EspPtr bool_game() { return game({"tt", "ff"}, {}, {{"tt", "ff"}}, {}); }

PreStrategy nondet_bool() {
  EspPtr g = hom_game(empty_game(), bool_game());
  EsData inner{{"tt", "ff"}, {}, {{"tt", "ff"}}};
  return strategy(g, inner, {{"tt", "R.tt"}, {"ff", "R.ff"}});
}

PreStrategy negation() {
  EspPtr b = bool_game();
  EspPtr g = hom_game(b, b);
  EsData inner{{"tt1", "ff1", "tt2", "ff2"},
               {{"tt1", "ff2"}, {"ff1", "tt2"}},
               {{"tt1", "ff1"}}};
  return strategy(g, inner,
                  {{"tt1", "L.tt"},
                   {"ff1", "L.ff"},
                   {"tt2", "R.tt"},
                   {"ff2", "R.ff"}});
}

EspPtr w_game() {
  return game({"click", "done"}, {}, {}, {{"click", kNeg}});
}

PreStrategy done_then_click() {
  EsData inner{{"click", "done"}, {{"done", "click"}}, {}};
  return strategy(w_game(), inner, identity_pairs(inner.events));
}

EspPtr y_game() { return game({"o"}, {}, {}, {{"o", kNeg}}); }

PreStrategy y_empty() {
  return strategy(y_game(), EsData{}, {});
}

PreStrategy y_duplicate() {
  EsData inner{{"o", "ox"}, {}, {{"o", "ox"}}};
  return strategy(y_game(), inner, {{"o", "o"}, {"ox", "o"}});
}

EspPtr drug_game() {
  return game({"money", "drug"}, {}, {}, {{"money", kNeg}});
}

PreStrategy drug_seller() {
  EsData inner{{"money", "drug"}, {{"money", "drug"}}, {}};
  return strategy(drug_game(), inner, identity_pairs(inner.events));
}

PreStrategy drug_buyer() {
  EsData inner{{"money", "drug"}, {{"drug", "money"}}, {}};
  return strategy(dual(*drug_game()), inner, identity_pairs(inner.events));
}

EspPtr abc_game() { return game({"a", "b", "c"}, {}, {}, {}); }

PreStrategy abc_after_a() {
  EsData inner{{"a", "b", "c"}, {{"a", "c"}}, {}};
  return strategy(abc_game(), inner, identity_pairs(inner.events));
}

PreStrategy abc_after_b() {
  EsData inner{{"a", "b", "c"}, {{"b", "c"}}, {}};
  return strategy(abc_game(), inner, identity_pairs(inner.events));
}

EspPtr ab_game() { return game({"a", "b"}, {}, {}, {}); }

PreStrategy ab_duplicated() {
  EsData inner{{"a", "ax", "b"}, {}, {{"a", "ax"}}};
  return strategy(ab_game(), inner,
                  {{"a", "a"}, {"ax", "a"}, {"b", "b"}});
}

PreStrategy ab_chained() {
  EsData inner{{"a", "b"}, {{"a", "b"}}, {}};
  return strategy(ab_game(), inner, identity_pairs(inner.events));
}

EspPtr two_neg_game() {
  return game({"o1", "o2"}, {}, {}, {{"o1", kNeg}, {"o2", kNeg}});
}

PreStrategy two_neg_strategy() {
  EsData inner{{"a1", "a2", "b1", "b2"},
               {{"a1", "b2"}, {"a2", "b1"}},
               {{"a1", "a2"}}};
  return strategy(two_neg_game(), inner,
                  {{"a1", "o1"}, {"a2", "o2"}, {"b1", "o1"}, {"b2", "o2"}});
}

}  // namespace samples
}  // namespace esgame
