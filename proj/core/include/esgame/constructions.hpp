#pragma once

// Structural constructions: simple parallel composition, projection to a
// subset of events, duality, and the two-sided game presentation used by
// strategies.

#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "esgame/es_map.hpp"
#include "esgame/esp.hpp"

namespace esgame {

struct ParallelEs {
  EsPtr both;
  EsMap inj_left, inj_right;  // component -> both
};

// Tagged disjoint union. Component event ids gain the given prefixes; there
// is no interaction between the components.
ParallelEs parallel(EsPtr a, EsPtr b, std::string_view prefix_left = "0.",
                    std::string_view prefix_right = "1.");

struct ParallelEsp {
  EspPtr both;
  EsMap inj_left, inj_right;
};

ParallelEsp parallel(const EspPtr& a, const EspPtr& b,
                     std::string_view prefix_left = "0.",
                     std::string_view prefix_right = "1.");

struct Projection {
  EsPtr restricted;
  EsMap hiding;         // source ⇀ restricted, identity on kept events
  std::vector<int> kept;  // restricted index -> source index
};

// Restriction to the events in keep: inherited causality and consistency.
Projection project(EsPtr es, const Bits& keep, const Limits& limits = {});

struct ProjectionEsp {
  EspPtr restricted;
  EsMap hiding;
  std::vector<int> kept;
};

ProjectionEsp project(const EspPtr& e, const Bits& keep,
                      const Limits& limits = {});

// Same events and causality, reversed polarities.
EspPtr dual(const Esp& a);

// The game on which strategies from a to b live: dual(a) parallel b, with
// id prefixes "L." and "R.".
EspPtr hom_game(const EspPtr& a, const EspPtr& b);

// Recovers (a, b) from hom_game(a, b). Requires every id to carry an "L." or
// "R." prefix; throws InputError otherwise.
std::pair<EspPtr, EspPtr> split_hom_game(const Esp& g);

// Splits the events of a two-sided game by prefix.
Bits side_events(const EventStructure& es, std::string_view prefix);

// Recovers one side of a parallel composition, stripping the prefix from the
// ids. Throws InputError when causality or conflict crosses the boundary.
EsPtr strip_component(const EventStructure& par, std::string_view prefix);

// Total map matching events through an id transformation; throws InputError
// when a transformed id is missing from the target.
EsMap relabel_map(EsPtr from, EsPtr to,
                  const std::function<std::string(const std::string&)>& tr);

}  // namespace esgame
