#pragma once

// Exhaustive isomorphism search between small structures, optionally
// constrained to commute with labellings into a common game.

#include <functional>
#include <optional>
#include <vector>

#include "esgame/es_map.hpp"
#include "esgame/esp.hpp"

namespace esgame {

// True iff the total bijection f preserves and reflects causality and
// consistency (polarity is not consulted here).
bool is_isomorphism(const EsMap& f);

// All isomorphisms source -> target, each as a target-index vector indexed
// by source event. Optional polarity tables must be preserved; optional
// labellings (into structurally equal targets) must commute. Results are in
// a deterministic order.
std::vector<std::vector<int>> find_isomorphisms(
    const EventStructure& source, const EventStructure& target,
    const std::vector<Polarity>* source_pol = nullptr,
    const std::vector<Polarity>* target_pol = nullptr,
    const EsMap* source_label = nullptr, const EsMap* target_label = nullptr);

std::vector<std::vector<int>> find_isomorphisms(const Esp& source,
                                                const Esp& target);

// First isomorphism commuting with the given labellings, if any.
std::optional<EsMap> find_isomorphism_over(const Esp& source,
                                           const Esp& target,
                                           const EsMap& source_label,
                                           const EsMap& target_label);

// Turns an inclusion-preserving configuration action into the event map it
// determines: e goes to the single event separating the images of [e) and
// [e]. Throws InputError when some difference is not a single event.
EsMap eventize(EsPtr src, EsPtr tgt,
               const std::function<Bits(const Bits&)>& act);

}  // namespace esgame
