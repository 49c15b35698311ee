#pragma once

// Finite event structures: a carrier of named events, a causality partial
// order, and a consistency predicate presented by minimal inconsistent
// generator sets. Stored form is canonical: causality is kept as its
// transitive reduction, and each generator is the antichain of maximal
// events of a minimal inconsistent down-closed set.

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "esgame/bits.hpp"
#include "esgame/errors.hpp"

namespace esgame {

// Raw, unvalidated description as it appears in documents.
struct EsData {
  std::vector<std::string> events;
  std::vector<std::pair<std::string, std::string>> prec;
  std::vector<std::vector<std::string>> conflicts;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

class EventStructure;
using EsPtr = std::shared_ptr<const EventStructure>;

class EventStructure {
public:
  // Checks the axioms on raw data without building anything.
  static ValidationReport validate(const EsData& data);

  // Builds the canonical structure; throws InputError when validation fails.
  static EsPtr from_data(const EsData& data);

  // Internal constructor for derived structures. ids may arrive unsorted;
  // they are sorted and all index-based arguments remapped. strict_causes
  // must already be transitively closed. generators must be canonical
  // antichains (use canonical_generators to recompute them).
  static EsPtr from_parts(std::vector<std::string> ids,
                          std::vector<Bits> strict_causes,
                          std::vector<Bits> generators);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int e) const { return ids_[e]; }

  // -1 when the id is unknown.
  int find(std::string_view id) const;
  // Throws InputError on unknown ids.
  int index_of(std::string_view id) const;

  // Strict causal predecessors of e, i.e. [e] without e.
  const Bits& strict_causes(int e) const { return causes_[e]; }
  Bits cone(int e) const;  // [e]
  bool leq(int a, int b) const { return a == b || causes_[b].test(a); }

  // Transitive reduction of causality, lexicographically sorted pairs.
  const std::vector<std::pair<int, int>>& immediate() const {
    return reduction_;
  }
  bool immediate_edge(int a, int b) const;

  const std::vector<Bits>& generators() const { return generators_; }

  Bits down_closure(const Bits& xs) const;
  bool down_closed(const Bits& xs) const;
  // Consistency of an arbitrary finite set: no generator inside [xs].
  bool consistent(const Bits& xs) const;
  // Fast path when xs is already down-closed.
  bool consistent_closed(const Bits& closed) const;
  bool is_configuration(const Bits& xs) const;
  // Event e extends configuration cfg to a configuration.
  bool enabled(const Bits& cfg, int e) const;

  Bits empty_set() const { return Bits(size()); }
  Bits set_of(const std::vector<std::string>& ids) const;
  std::vector<std::string> names_of(const Bits& xs) const;

  bool operator==(const EventStructure& o) const;

private:
  std::vector<std::string> ids_;  // sorted, index order = id order
  std::unordered_map<std::string, int> index_;
  std::vector<Bits> causes_;  // transitively closed strict predecessors
  std::vector<std::pair<int, int>> reduction_;
  std::vector<Bits> generators_;  // canonical minimal antichains

  void finish();  // builds index_ and reduction_ from ids_/causes_
};

inline bool same_structure(const EventStructure& a, const EventStructure& b) {
  return a == b;
}

// All configurations plus the covering relation. configs[0] is empty and the
// order is canonical (size, then lexicographic on sorted index lists).
struct ConfigGraph {
  std::vector<Bits> configs;
  // (from, to, event): configs[to] = configs[from] + event.
  std::vector<std::array<int, 3>> covers;
  std::unordered_map<Bits, int, Bits::Hash> index;

  int find(const Bits& xs) const {
    auto it = index.find(xs);
    return it == index.end() ? -1 : it->second;
  }
};

// Breadth-first enumeration by atomic extensions. Refuses structures with
// more than limits.max_enum_events events.
ConfigGraph enumerate_configurations(const EventStructure& es,
                                     const Limits& limits = {});

// Canonical generator recomputation for derived structures. causes describes
// the (transitively closed) order of the new carrier; consistent is queried
// on down-closed sets only. Returns the max-antichains of all minimal
// inconsistent down-closed sets.
std::vector<Bits> canonical_generators(
    std::size_t n, const std::vector<Bits>& causes,
    const std::function<bool(const Bits&)>& consistent,
    const Limits& limits = {});

}  // namespace esgame
