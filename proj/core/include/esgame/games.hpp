#pragma once

// Copycat strategies and the induced order on configurations.

#include <optional>

#include "esgame/prestrategy.hpp"

namespace esgame {

// The copycat strategy on a game: both copies of the game side by side, where
// each positive event additionally waits for its counterpart in the other
// copy. Carrier ids coincide with those of hom_game(a, a) and the labelling
// is the identity on ids.
PreStrategy copycat(const EspPtr& a, const Limits& limits = {});

// Functorial action on a polarity-preserving map f : a -> b, as the map
// between the copycat carriers acting like f on both copies. Throws when f
// is not a polarity-preserving map of the games.
EsMap copycat_map(const EsMap& f, const EspPtr& a, const EspPtr& b,
                  const Limits& limits = {});

// x is below y when x loses only negative events and y adds only positive
// ones: x ⊇ (x ∩ y) with x \ y negative, and (x ∩ y) ⊆ y with y \ x positive.
// Both sets must be configurations.
bool scott_leq(const Esp& a, const Bits& x, const Bits& y);

// The witness of the order: x ∩ y when x is below y, nothing otherwise.
std::optional<Bits> scott_witness(const Esp& a, const Bits& x, const Bits& y);

// Same order, read off copycat: x is below y exactly when placing y on the
// left copy and x on the right yields a configuration of copycat's carrier.
bool scott_leq_via_copycat(const Esp& a, const Bits& x, const Bits& y,
                           const Limits& limits = {});

}  // namespace esgame
