#pragma once

// Synchronized interaction of two labelled event structures over a common
// target: states are bijections between configurations whose induced
// dependency relation is acyclic, events of the interaction are the states
// with a single top pair, and the two projections read off the halves.

#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "esgame/constructions.hpp"
#include "esgame/es_map.hpp"

namespace esgame {

using SyncPair = std::pair<int, int>;  // (left event, right event)

// True iff the pair set is a bijection between down-closed consistent sets
// whose induced dependency digraph (left order union right order) is
// acyclic.
bool is_secured(const EventStructure& left, const EventStructure& right,
                const std::vector<SyncPair>& pairs);

struct SyncState {
  Bits left, right;  // the pairing is recoverable from the halves
  bool operator==(const SyncState& o) const {
    return left == o.left && right == o.right;
  }
  struct Hash {
    std::size_t operator()(const SyncState& s) const {
      return Bits::Hash{}(s.left) * 1000003u ^ Bits::Hash{}(s.right);
    }
  };
};

struct Pullback {
  EsPtr apex;  // event ids "p0", "p1", ... in serialization order
  // Per apex event (apex index order): the synchronized pairs of its state,
  // sorted, and the top pair.
  std::vector<std::vector<SyncPair>> pairs;
  std::vector<SyncPair> top;
  EsMap to_left, to_right;  // total projections
  EsMap to_game;            // common labelling (left leg followed by f)
  EsMap left_label, right_label;  // the span the pullback was taken over
  // All secured states, for consistency queries and witnesses.
  std::unordered_set<SyncState, SyncState::Hash> states;
  std::unordered_map<std::string, int> by_key;  // serialized pairs -> event

  // Serialization of a pair list (sorted by ids); the canonical event key.
  std::string key(const std::vector<SyncPair>& ps) const;
  // The apex events contained in a secured state.
  Bits events_of(const SyncState& s) const;
  // Pairing of a secured state, sorted by left index.
  std::vector<SyncPair> pairing(const SyncState& s) const;
};

// Pullback of total maps f and g with a structurally equal target.
Pullback pullback(const EsMap& f, const EsMap& g, const Limits& limits = {});

// Mediating map for a commuting cone (alpha: X -> left, beta: X -> right).
// Total cones give the unique total map into the apex; partial cones with a
// common domain factor through the projection to that domain and give a
// partial map. Throws InputError when the cone does not commute or fails to
// factor.
EsMap mediating(const EsMap& alpha, const EsMap& beta, const Pullback& pb,
                const Limits& limits = {});

}  // namespace esgame
