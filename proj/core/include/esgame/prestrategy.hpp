#pragma once

// Pre-strategies: polarity-preserving labellings of an event structure with
// polarity into a game. Strategies between games live on two-sided games
// (hom_game) and compose by synchronizing on the shared side and hiding it.

#include <optional>

#include "esgame/interaction.hpp"

namespace esgame {

struct PreStrategy {
  EspPtr inner;  // the strategy's own behaviour
  EspPtr game;
  EsMap label;  // total polarity-preserving map inner -> game

  Bits image_config(const Bits& x) const { return label.image(x); }
};

// Validates the labelling (total + polarity-preserving); throws InputError.
PreStrategy make_prestrategy(EspPtr inner, EspPtr game, EsMap label,
                             const Limits& limits = {});

// Views a pre-strategy on a plain game as one from the empty game, on
// hom_game(1, game); event ids on the target gain the "R." prefix.
PreStrategy from_unit(const PreStrategy& s);

// Identity-shaped view dropping the hom_game(1, -) wrapper.
PreStrategy to_unit(const PreStrategy& s);

// Interaction of strategies lo : A -> B and hi : B -> C over the spine
// (A || B) || C; polarities are dropped on the spine.
struct StrategyInteraction {
  Pullback pb;          // apex labelled into the spine
  EsPtr spine;          // (A || B) || C with prefixes 0.0., 0.1., 1.
  EspPtr game_a, game_b, game_c;
  Bits visible;         // apex events labelled in A or C
  EsMap left_pad;       // S || C -> spine
  EsMap right_pad;      // A || T -> spine
};
StrategyInteraction interact(const PreStrategy& lo, const PreStrategy& hi,
                             const Limits& limits = {});

// Composition with hiding: the interaction restricted to its visible events,
// relabelled onto hom_game(A, C).
struct Composition {
  PreStrategy strat;
  EsMap hiding;  // apex ⇀ strat.inner (partial)
  StrategyInteraction inter;
  std::vector<int> kept;  // strat.inner index -> apex index
};
Composition compose(const PreStrategy& lo, const PreStrategy& hi,
                    const Limits& limits = {});

// Least interaction configuration over a configuration of the composite.
Bits minimal_witness(const Composition& c, const Bits& z);

// Zipping: given the hiding map hid : S ⇀ S2 commuting with erasing the
// middle component (sig : S -> (A||B)||C, sig2 : S2 -> A||C), and a further
// participant rho : U -> C||D, produces the induced hiding map between the
// two interactions along C. Returns the partial map together with both
// pullbacks.
struct ZippedHiding {
  EsMap map;  // big apex ⇀ small apex
  Pullback big, small;
};
ZippedHiding zipped_hiding(const EsMap& hid, const EsMap& sig,
                           const EsMap& sig2, const EsMap& rho,
                           const Limits& limits = {});

}  // namespace esgame
