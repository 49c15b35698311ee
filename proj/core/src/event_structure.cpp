#include "esgame/event_structure.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace esgame {

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  out += "}";
  return out;
}

bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id)
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << issues[i];
  }
  return os.str();
}

ValidationReport EventStructure::validate(const EsData& data) {
  ValidationReport report;
  std::unordered_map<std::string, int> index;
  std::vector<std::string> names;
  for (const auto& id : data.events) {
    if (!valid_id(id)) {
      report.issues.push_back("bad event id '" + id + "'");
      continue;
    }
    if (index.count(id)) {
      report.issues.push_back("duplicate event id '" + id + "'");
      continue;
    }
    index.emplace(id, static_cast<int>(names.size()));
    names.push_back(id);
  }
  const std::size_t n = names.size();

  std::vector<std::vector<int>> succ(n);
  for (const auto& [a, b] : data.prec) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      report.issues.push_back("unknown event id in prec [" + a + "," + b +
                              "]");
      continue;
    }
    if (ia->second == ib->second) {
      report.issues.push_back("causal cycle through '" + a + "'");
      continue;
    }
    succ[ia->second].push_back(ib->second);
  }

  // Cycle check via iterative DFS colouring.
  bool acyclic = true;
  {
    std::vector<int> colour(n, 0);
    for (std::size_t root = 0; root < n && acyclic; ++root) {
      if (colour[root]) continue;
      std::vector<std::pair<int, std::size_t>> stack{{(int)root, 0}};
      colour[root] = 1;
      while (!stack.empty() && acyclic) {
        auto& [v, k] = stack.back();
        if (k < succ[v].size()) {
          int w = succ[v][k++];
          if (colour[w] == 1) {
            report.issues.push_back("causal cycle through '" + names[w] + "'");
            acyclic = false;
          } else if (colour[w] == 0) {
            colour[w] = 1;
            stack.push_back({w, 0});
          }
        } else {
          colour[v] = 2;
          stack.pop_back();
        }
      }
    }
  }

  if (!acyclic) {
    // Causal cones below would not terminate meaningfully, so stop here.
    return report;
  }

  // Causal cones for the remaining checks (only well-formed edges).
  std::vector<Bits> causes(n, Bits(n));
  {
    // Repeated relaxation; n is small and the graph is acyclic.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a)
        for (int b : succ[a]) {
          Bits want = causes[a];
          want.set(static_cast<int>(a));
          want |= causes[b];
          if (want != causes[b]) {
            causes[b] = want;
            changed = true;
          }
        }
    }
  }

  for (const auto& conflict : data.conflicts) {
    std::set<int> members;
    bool known = true;
    for (const auto& id : conflict) {
      auto it = index.find(id);
      if (it == index.end()) {
        report.issues.push_back("unknown event id '" + id + "' in conflict");
        known = false;
      } else {
        members.insert(it->second);
      }
    }
    if (!known) continue;
    if (members.size() < 2) {
      report.issues.push_back("conflict " + join_ids(conflict) +
                              " has fewer than 2 distinct events");
      continue;
    }
    // A generator inside a single causal cone would make that singleton
    // inconsistent, breaking the axiom that singletons are consistent.
    for (std::size_t e = 0; e < n; ++e) {
      bool inside = true;
      for (int m : members)
        if (!(m == static_cast<int>(e) || causes[e].test(m))) {
          inside = false;
          break;
        }
      if (inside) {
        report.issues.push_back("conflict " + join_ids(conflict) +
                                " lies inside the cone of a single event");
        break;
      }
    }
  }

  return report;
}

EsPtr EventStructure::from_data(const EsData& data) {
  ValidationReport report = validate(data);
  if (!report.ok()) throw InputError("invalid event structure: " + report.to_string());

  std::vector<std::string> ids = data.events;
  std::sort(ids.begin(), ids.end());
  const std::size_t n = ids.size();
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(ids[i], (int)i);

  std::vector<std::vector<int>> succ(n);
  for (const auto& [a, b] : data.prec)
    succ[index.at(a)].push_back(index.at(b));

  std::vector<Bits> causes(n, Bits(n));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (int b : succ[a]) {
        Bits want = causes[a];
        want.set(static_cast<int>(a));
        want |= causes[b];
        if (want != causes[b]) {
          causes[b] = want;
          changed = true;
        }
      }
  }

  // Canonicalize the generators: take the down-closure of each raw conflict,
  // keep the inclusion-minimal distinct cones, and store the antichain of
  // maximal events of each survivor.
  std::vector<Bits> cones;
  for (const auto& conflict : data.conflicts) {
    Bits g(n);
    for (const auto& id : conflict) g.set(index.at(id));
    Bits cone = g;
    g.for_each([&](int e) { cone |= causes[e]; });
    cones.push_back(cone);
  }
  std::sort(cones.begin(), cones.end(), canonical_less);
  std::vector<Bits> kept;
  for (const auto& c : cones) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.subset_of(c)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(c);
  }
  std::vector<Bits> gens;
  for (const auto& cone : kept) {
    Bits maxes(n);
    cone.for_each([&](int e) {
      bool is_max = true;
      cone.for_each([&](int f) {
        if (f != e && causes[f].test(e)) is_max = false;
      });
      if (is_max) maxes.set(e);
    });
    gens.push_back(maxes);
  }

  return from_parts(std::move(ids), std::move(causes), std::move(gens));
}

EsPtr EventStructure::from_parts(std::vector<std::string> ids,
                                 std::vector<Bits> strict_causes,
                                 std::vector<Bits> generators) {
  const std::size_t n = ids.size();
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return ids[a] < ids[b]; });
  std::vector<int> pos(n);  // old index -> new index
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = (int)i;

  auto remap = [&](const Bits& b) {
    Bits out(n);
    b.for_each([&](int e) { out.set(pos[e]); });
    return out;
  };

  auto es = std::make_shared<EventStructure>();
  es->ids_.resize(n);
  es->causes_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    es->ids_[i] = std::move(ids[order[i]]);
    es->causes_[i] = remap(strict_causes[order[i]]);
  }
  for (auto& g : generators) es->generators_.push_back(remap(g));
  std::sort(es->generators_.begin(), es->generators_.end(), canonical_less);
  es->finish();
  return es;
}

void EventStructure::finish() {
  const std::size_t n = ids_.size();
  index_.clear();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(ids_[i], (int)i);
  reduction_.clear();
  for (std::size_t b = 0; b < n; ++b) {
    causes_[b].for_each([&](int a) {
      bool direct = true;
      causes_[b].for_each([&](int c) {
        if (c != a && causes_[c].test(a)) direct = false;
      });
      if (direct) reduction_.push_back({a, (int)b});
    });
  }
  std::sort(reduction_.begin(), reduction_.end());
}

int EventStructure::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? -1 : it->second;
}

int EventStructure::index_of(std::string_view id) const {
  int e = find(id);
  if (e < 0) throw InputError("unknown event id '" + std::string(id) + "'");
  return e;
}

Bits EventStructure::cone(int e) const {
  Bits out = causes_[e];
  out.set(e);
  return out;
}

bool EventStructure::immediate_edge(int a, int b) const {
  return std::binary_search(reduction_.begin(), reduction_.end(),
                            std::make_pair(a, b));
}

Bits EventStructure::down_closure(const Bits& xs) const {
  Bits out = xs;
  xs.for_each([&](int e) { out |= causes_[e]; });
  return out;
}

bool EventStructure::down_closed(const Bits& xs) const {
  bool ok = true;
  xs.for_each([&](int e) {
    if (!causes_[e].subset_of(xs)) ok = false;
  });
  return ok;
}

bool EventStructure::consistent(const Bits& xs) const {
  return consistent_closed(down_closure(xs));
}

bool EventStructure::consistent_closed(const Bits& closed) const {
  for (const auto& g : generators_)
    if (g.subset_of(closed)) return false;
  return true;
}

bool EventStructure::is_configuration(const Bits& xs) const {
  return down_closed(xs) && consistent_closed(xs);
}

bool EventStructure::enabled(const Bits& cfg, int e) const {
  if (cfg.test(e)) return false;
  if (!causes_[e].subset_of(cfg)) return false;
  Bits next = cfg;
  next.set(e);
  return consistent_closed(next);
}

Bits EventStructure::set_of(const std::vector<std::string>& ids) const {
  Bits out(size());
  for (const auto& id : ids) out.set(index_of(id));
  return out;
}

std::vector<std::string> EventStructure::names_of(const Bits& xs) const {
  std::vector<std::string> out;
  xs.for_each([&](int e) { out.push_back(ids_[e]); });
  return out;
}

bool EventStructure::operator==(const EventStructure& o) const {
  return ids_ == o.ids_ && causes_ == o.causes_ &&
         generators_ == o.generators_;
}

ConfigGraph enumerate_configurations(const EventStructure& es,
                                     const Limits& limits) {
  if (es.size() > static_cast<std::size_t>(limits.max_enum_events))
    throw GuardError("configuration enumeration refused: " +
                     std::to_string(es.size()) + " events exceed the guard of " +
                     std::to_string(limits.max_enum_events));

  const int n = static_cast<int>(es.size());
  std::unordered_map<Bits, int, Bits::Hash> seen;
  std::vector<Bits> configs;
  std::vector<std::array<int, 3>> raw_covers;
  std::deque<int> queue;

  Bits empty(es.size());
  seen.emplace(empty, 0);
  configs.push_back(empty);
  queue.push_back(0);

  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    Bits cfg = configs[at];
    for (int e = 0; e < n; ++e) {
      if (!es.enabled(cfg, e)) continue;
      Bits next = cfg;
      next.set(e);
      auto [it, fresh] = seen.emplace(next, (int)configs.size());
      if (fresh) {
        configs.push_back(next);
        queue.push_back(it->second);
        if (configs.size() > limits.max_states)
          throw GuardError("configuration enumeration exceeded the state cap");
      }
      raw_covers.push_back({at, it->second, e});
    }
  }

  // Canonical output order.
  std::vector<int> order(configs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return canonical_less(configs[a], configs[b]);
  });
  std::vector<int> pos(configs.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = (int)i;

  ConfigGraph out;
  out.configs.reserve(configs.size());
  for (int o : order) out.configs.push_back(configs[o]);
  for (auto& [from, to, ev] : raw_covers)
    out.covers.push_back({pos[from], pos[to], ev});
  std::sort(out.covers.begin(), out.covers.end());
  for (std::size_t i = 0; i < out.configs.size(); ++i)
    out.index.emplace(out.configs[i], (int)i);
  return out;
}

std::vector<Bits> canonical_generators(
    std::size_t n, const std::vector<Bits>& causes,
    const std::function<bool(const Bits&)>& consistent,
    const Limits& limits) {
  // Every minimal inconsistent down-closed set is an atomic extension of a
  // consistent one, so a BFS over consistent down-closed sets finds them all.
  std::unordered_set<Bits, Bits::Hash> visited;
  std::unordered_set<Bits, Bits::Hash> candidates;
  std::deque<Bits> queue;
  Bits empty(n);
  if (!consistent(empty))
    throw InputError("empty set inconsistent under generator recomputation");
  visited.insert(empty);
  queue.push_back(empty);

  auto maximal_events = [&](const Bits& d) {
    Bits maxes(n);
    d.for_each([&](int e) {
      bool is_max = true;
      d.for_each([&](int f) {
        if (f != e && causes[f].test(e)) is_max = false;
      });
      if (is_max) maxes.set(e);
    });
    return maxes;
  };

  while (!queue.empty()) {
    Bits d = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < n; ++e) {
      if (d.test(e) || !causes[e].subset_of(d)) continue;
      Bits next = d;
      next.set(e);
      if (consistent(next)) {
        if (visited.insert(next).second) {
          queue.push_back(next);
          if (visited.size() > limits.max_states)
            throw GuardError("generator recomputation exceeded the state cap");
        }
      } else {
        candidates.insert(next);
        if (candidates.size() > limits.max_states)
          throw GuardError("generator recomputation exceeded the state cap");
      }
    }
  }

  std::vector<Bits> gens;
  for (const Bits& d : candidates) {
    Bits maxes = maximal_events(d);
    bool minimal = true;
    maxes.for_each([&](int e) {
      if (!minimal) return;
      Bits less = d;
      less.reset(e);
      if (!consistent(less)) minimal = false;
    });
    if (minimal) gens.push_back(maxes);
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace esgame
