#pragma once

// Seeded generation of small games, of arbitrary pre-strategies over a game,
// and of members of the constructive family closed under strategy-hood.

#include <cstdint>
#include <random>
#include <string>

#include "esgame/algebra.hpp"

namespace esgame {

// Deterministic across platforms: the engine is the standardized mt19937_64
// and sampling multiplies into the range instead of using the distribution
// classes, whose algorithms are implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t word() { return eng_(); }

  // Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(eng_()) * n) >> 64);
  }

  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

private:
  std::mt19937_64 eng_;
};

struct GenOptions {
  bool conflicts = true;
  // Numerator over 6 for including each forward edge.
  std::size_t edge_bias = 2;
};

// Random game: single-letter event ids, random forward edges, random small
// raw conflicts that survive the cone check, random polarities.
EspPtr gen_esp(Rng& rng, int n_events, const GenOptions& opt = {});
EspPtr gen_esp(std::uint64_t seed, int n_events, const GenOptions& opt = {});

// Random pre-strategy on the game: a down-closed piece of the game with
// extra causality, extra conflicts, and occasional conflicting duplicates of
// an event. Includes the empty pre-strategy. Always a valid pre-strategy,
// usually not a strategy.
PreStrategy gen_prestrategy(Rng& rng, const EspPtr& game,
                            const Limits& limits = {});
PreStrategy gen_prestrategy(std::uint64_t seed, const EspPtr& game,
                            const Limits& limits = {});

// The game with every id suffixed, together with the renaming iso.
struct RenamedGame {
  EspPtr game;
  EsMap iso;  // original -> renamed
};
RenamedGame rename_game(const EspPtr& a, const std::string& suffix);

// A member of the family closed under strategy-hood: copycats, liftings of
// isos, units and counits of the duality, tensors, and compositions. The
// budget caps the recursion; outputs always pass the strategy checks.
PreStrategy gen_family(Rng& rng, int budget, const Limits& limits = {});
PreStrategy gen_family(std::uint64_t seed, int budget,
                       const Limits& limits = {});

// Family member whose source game is the given one, for building composable
// chains.
PreStrategy gen_family_from(Rng& rng, const EspPtr& left, int budget,
                            const Limits& limits = {});

// The source and target games of a strategy between games.
std::pair<EspPtr, EspPtr> end_games(const PreStrategy& s);

// Random renaming of a strategy's carrier, with the 2-cell from the
// original: the identity relabelling through fresh inner ids.
struct RenamedStrategy {
  PreStrategy strat;
  EsMap cell;  // original inner -> renamed inner, over the same game
};
RenamedStrategy rename_carrier(const PreStrategy& s,
                               const std::string& suffix,
                               const Limits& limits = {});

}  // namespace esgame
