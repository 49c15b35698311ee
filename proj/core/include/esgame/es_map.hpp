#pragma once

// Maps of event structures: functions on events that send configurations to
// configurations and are injective on each configuration. Partial maps leave
// some events undefined.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esgame/esp.hpp"
#include "esgame/event_structure.hpp"

namespace esgame {

struct EsMap {
  EsPtr src, tgt;
  std::vector<int> to;  // src index -> tgt index, -1 undefined

  bool defined(int e) const { return to[e] >= 0; }
  int operator()(int e) const { return to[e]; }
  bool total() const;
  Bits domain() const;
  // Image of the defined part of xs.
  Bits image(const Bits& xs) const;
  // Preimage of ys within the defined part.
  Bits preimage(const Bits& ys) const;

  static EsMap identity(EsPtr es);
  // Builds from (source id, target id) pairs; unlisted events are undefined.
  // Throws InputError on unknown ids or twice-listed sources.
  static EsMap from_pairs(
      EsPtr src, EsPtr tgt,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  bool operator==(const EsMap& o) const {
    return to == o.to && *src == *o.src && *tgt == *o.tgt;
  }
};

// compose_maps(f, g) applies f first: pre target(f) = source(g).
EsMap compose_maps(const EsMap& f, const EsMap& g);

// Inverse of a bijective total map; throws InputError otherwise.
EsMap inverse_iso(const EsMap& f);

struct MapCheck {
  enum class Verdict {
    total_map,
    partial_map,
    polarity_preserving_map,
    not_a_map
  };
  Verdict verdict = Verdict::not_a_map;
  std::string reason;

  bool is_map() const { return verdict != Verdict::not_a_map; }
  bool polarity_preserving() const {
    return verdict == Verdict::polarity_preserving_map;
  }
};

// Checks the map laws by enumerating source configurations. When polarity
// data is supplied the verdict can be upgraded to polarity-preserving (total
// maps only).
MapCheck check_map(const EsMap& f, const Esp* src_pol = nullptr,
                   const Esp* tgt_pol = nullptr, const Limits& limits = {});

// True iff f is (isomorphic to) the canonical projection of its source to
// the domain of f. Returns the monotone witness table on target
// configurations when it is.
struct HidingCheck {
  bool holds = false;
  std::string reason;
  // witness[i] = least source configuration mapping onto target config i,
  // indexed like enumerate_configurations(target).
  std::vector<Bits> witness;
};
HidingCheck check_hiding_map(const EsMap& f, const Limits& limits = {});

}  // namespace esgame
