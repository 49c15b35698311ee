#pragma once

// The monoidal and compact-closed layer: tensor, lifting of maps, structural
// isomorphisms, the associator with its coherence checks, and the unit and
// counit with the snake equations.

#include "esgame/strategy_laws.hpp"

namespace esgame {

// Side-by-side product of two strategies, relabelled onto
// hom(A1 || A2, B1 || B2).
PreStrategy tensor(const PreStrategy& s1, const PreStrategy& s2,
                   const Limits& limits = {});

// Lifting of a receptive courteous map f : a -> b: copycat on a with the
// right-hand copy read through f. Throws when f is not receptive courteous.
PreStrategy lift_map(const EsMap& f, const EspPtr& a, const EspPtr& b,
                     const Limits& limits = {});

// Co-lifting of f : dual(b) -> dual(a): copycat on b with the left-hand copy
// read through f.
PreStrategy colift_map(const EsMap& f, const EspPtr& a, const EspPtr& b,
                       const Limits& limits = {});

// A structural isomorphism of games together with its lifted strategy.
struct Structural {
  EspPtr src, tgt;
  EsMap map;  // iso src -> tgt
  PreStrategy lifted;
};

Structural structural_rho(const EspPtr& a, const Limits& limits = {});
Structural structural_lambda(const EspPtr& a, const Limits& limits = {});
Structural structural_swap(const EspPtr& a, const EspPtr& b,
                           const Limits& limits = {});
Structural structural_alpha(const EspPtr& a, const EspPtr& b, const EspPtr& c,
                            const Limits& limits = {});

// Unit and counit of the duality: copycat carriers re-bracketed onto
// hom(1, dual(a) || a) and hom(a || dual(a), 1).
PreStrategy eta(const EspPtr& a, const Limits& limits = {});
PreStrategy epsilon(const EspPtr& a, const Limits& limits = {});

// Configurations of a composite determined by configurations of its factors,
// and back. Throws when the pair does not describe a reachable state.
Bits composite_config(const Composition& c, const PreStrategy& lo,
                      const PreStrategy& hi, const Bits& x_lo,
                      const Bits& x_hi);
std::pair<Bits, Bits> factor_configs(const Composition& c,
                                     const PreStrategy& lo,
                                     const PreStrategy& hi, const Bits& z);

// Functorial action of composition on maps between the factors: f_lo from
// lo1 to lo2 and f_hi from hi1 to hi2, both over their games, induce a map
// between the composite carriers. c1 and c2 must be the compositions of the
// respective factor pairs.
EsMap compose_cell(const Composition& c1, const PreStrategy& lo1,
                   const PreStrategy& hi1, const Composition& c2,
                   const PreStrategy& lo2, const PreStrategy& hi2,
                   const EsMap& f_lo, const EsMap& f_hi,
                   const Limits& limits = {});

// The canonical re-bracketing iso between (s3 . s2) . s1 and s3 . (s2 . s1),
// commuting with both labellings.
struct Associator {
  Composition lo_pair;  // s2 after s1
  Composition hi_pair;  // s3 after s2
  Composition left;     // (s3 after s2) after s1
  Composition right;    // s3 after (s2 after s1)
  EsMap iso;            // left carrier -> right carrier
};
Associator associator(const PreStrategy& s1, const PreStrategy& s2,
                      const PreStrategy& s3, const Limits& limits = {});

struct LawReport {
  bool holds = true;
  std::string detail;
};

// Mac Lane's pentagon for four composable strategies, as map equality.
LawReport pentagon_check(const PreStrategy& s1, const PreStrategy& s2,
                         const PreStrategy& s3, const PreStrategy& s4,
                         const Limits& limits = {});

// The unit triangle through copycat on the shared game, as map equality.
LawReport triangle_check(const PreStrategy& s1, const PreStrategy& s2,
                         const Limits& limits = {});

// Both duality equations for a game: the five-fold composites around eta and
// epsilon are isomorphic to the copycats on a and dual(a).
LawReport snake_check(const EspPtr& a, const Limits& limits = {});

}  // namespace esgame
