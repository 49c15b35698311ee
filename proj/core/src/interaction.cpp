#include "esgame/interaction.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace esgame {

namespace {

// Dependency edges inside a pair set: p comes before q when p's half is
// strictly below q's half on either side.
std::vector<std::vector<int>> pair_order_edges(
    const EventStructure& left, const EventStructure& right,
    const std::vector<SyncPair>& pairs) {
  const int m = (int)pairs.size();
  std::vector<std::vector<int>> succ(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if ((left.leq(pairs[i].first, pairs[j].first) &&
           pairs[i].first != pairs[j].first) ||
          (right.leq(pairs[i].second, pairs[j].second) &&
           pairs[i].second != pairs[j].second))
        succ[i].push_back(j);
    }
  return succ;
}

bool acyclic(const std::vector<std::vector<int>>& succ) {
  const int m = (int)succ.size();
  std::vector<int> indeg(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j : succ[i]) indeg[j]++;
  std::deque<int> q;
  for (int i = 0; i < m; ++i)
    if (!indeg[i]) q.push_back(i);
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    ++seen;
    for (int w : succ[v])
      if (--indeg[w] == 0) q.push_back(w);
  }
  return seen == m;
}

// Reachability closure over the dependency edges; row i = pairs reachable
// from i (reflexive).
std::vector<Bits> pair_order_closure(
    const std::vector<std::vector<int>>& succ) {
  const int m = (int)succ.size();
  std::vector<Bits> reach(m, Bits(m));
  for (int i = 0; i < m; ++i) reach[i].set(i);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < m; ++i)
      for (int j : succ[i]) {
        Bits want = reach[i] | reach[j];
        if (want != reach[i]) {
          reach[i] = want;
          changed = true;
        }
      }
  }
  return reach;
}

}  // namespace

bool is_secured(const EventStructure& left, const EventStructure& right,
                const std::vector<SyncPair>& pairs) {
  Bits xs(left.size()), ys(right.size());
  for (auto [s, t] : pairs) {
    if (xs.test(s) || ys.test(t)) return false;  // not a bijection
    xs.set(s);
    ys.set(t);
  }
  if (!left.is_configuration(xs) || !right.is_configuration(ys)) return false;
  return acyclic(pair_order_edges(left, right, pairs));
}

std::string Pullback::key(const std::vector<SyncPair>& ps) const {
  std::vector<std::string> parts;
  parts.reserve(ps.size());
  for (auto [s, t] : ps)
    parts.push_back("(" + to_left.tgt->id(s) + "," + to_right.tgt->id(t) +
                    ")");
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

Bits Pullback::events_of(const SyncState& s) const {
  Bits out(apex->size());
  for (std::size_t e = 0; e < apex->size(); ++e) {
    bool inside = true;
    for (auto [l, r] : pairs[e])
      if (!s.left.test(l) || !s.right.test(r)) inside = false;
    if (inside) out.set(e);
  }
  return out;
}

std::vector<SyncPair> Pullback::pairing(const SyncState& s) const {
  std::vector<SyncPair> ps;
  s.left.for_each([&](int l) {
    int want = left_label.to[l];
    s.right.for_each([&](int r) {
      if (right_label.to[r] == want) ps.push_back({l, r});
    });
  });
  std::sort(ps.begin(), ps.end());
  return ps;
}

Pullback pullback(const EsMap& f, const EsMap& g, const Limits& limits) {
  if (!f.total() || !g.total())
    throw InputError("pullback requires total maps");
  if (!(*f.tgt == *g.tgt))
    throw InputError("pullback requires a common target");

  const EventStructure& L = *f.src;
  const EventStructure& R = *g.src;

  std::vector<SyncPair> sync;
  for (std::size_t s = 0; s < L.size(); ++s)
    for (std::size_t t = 0; t < R.size(); ++t)
      if (f.to[s] == g.to[t]) sync.push_back({(int)s, (int)t});
  if ((int)sync.size() > limits.max_sync_pairs)
    throw GuardError("interaction refused: " + std::to_string(sync.size()) +
                     " synchronized pairs exceed the guard of " +
                     std::to_string(limits.max_sync_pairs));

  // Breadth-first closure of the empty state under synchronized extensions.
  std::unordered_set<SyncState, SyncState::Hash> states;
  std::deque<SyncState> queue;
  SyncState start{Bits(L.size()), Bits(R.size())};
  states.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    SyncState at = queue.front();
    queue.pop_front();
    for (auto [s, t] : sync) {
      if (at.left.test(s) || at.right.test(t)) continue;
      if (!L.enabled(at.left, s) || !R.enabled(at.right, t)) continue;
      SyncState next = at;
      next.left.set(s);
      next.right.set(t);
      if (states.insert(next).second) {
        queue.push_back(next);
        if (states.size() > limits.max_states)
          throw GuardError("interaction exceeded the state cap");
      }
    }
  }

  // Recover each state's pairing from its halves: the partner of a left
  // event is the unique right event of the state with the same label.
  auto pairing_of = [&](const SyncState& st) {
    std::vector<SyncPair> ps;
    st.left.for_each([&](int s) {
      int want = f.to[s];
      st.right.for_each([&](int t) {
        if (g.to[t] == want) ps.push_back({s, t});
      });
    });
    // Bijections between consistent halves pair each left event once.
    std::sort(ps.begin(), ps.end());
    return ps;
  };

  // Events are the states with a greatest pair.
  struct PrimeInfo {
    SyncState state;
    std::vector<SyncPair> pairs;
    SyncPair top;
    std::string key;
  };
  std::vector<PrimeInfo> primes;
  for (const SyncState& st : states) {
    auto ps = pairing_of(st);
    if (ps.empty()) continue;
    if (ps.size() != st.left.count() || ps.size() != st.right.count())
      throw InputError("pullback inputs are not valid maps");
    auto succ = pair_order_edges(L, R, ps);
    auto reach = pair_order_closure(succ);
    int top = -1;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      bool greatest = true;
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (!reach[j].test((int)i)) {
          greatest = false;
          break;
        }
      if (greatest) {
        top = (int)i;
        break;
      }
    }
    if (top < 0) continue;
    PrimeInfo info;
    info.state = st;
    info.pairs = ps;
    info.top = ps[top];
    primes.push_back(std::move(info));
  }

  // Canonical names: serialization order of the sorted pair lists.
  for (auto& p : primes) {
    std::vector<std::string> parts;
    for (auto [s, t] : p.pairs)
      parts.push_back("(" + L.id(s) + "," + R.id(t) + ")");
    std::sort(parts.begin(), parts.end());
    p.key.clear();
    for (const auto& part : parts) p.key += part;
  }
  std::sort(primes.begin(), primes.end(),
            [](const PrimeInfo& a, const PrimeInfo& b) { return a.key < b.key; });

  const std::size_t n = primes.size();
  int width = 1;
  for (std::size_t w = 10; w < n; w *= 10) ++width;
  auto name = [&](std::size_t i) {
    std::string digits = std::to_string(i);
    return "p" + std::string(width - digits.size(), '0') + digits;
  };

  // Causality is inclusion of states (equivalent to inclusion of halves).
  std::vector<Bits> causes(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (primes[i].state.left.subset_of(primes[j].state.left) &&
          primes[i].state.right.subset_of(primes[j].state.right))
        causes[j].set((int)i);
    }

  // Consistency: the union of a down-closed set of events must be a secured
  // state.
  auto consistent = [&](const Bits& d) {
    SyncState u{Bits(L.size()), Bits(R.size())};
    d.for_each([&](int e) {
      u.left |= primes[e].state.left;
      u.right |= primes[e].state.right;
    });
    return states.count(u) > 0;
  };
  std::vector<Bits> gens = canonical_generators(n, causes, consistent, limits);

  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(name(i));

  Pullback out;
  out.apex = EventStructure::from_parts(ids, causes, gens);
  out.pairs.resize(n);
  out.top.resize(n);
  out.to_left.src = out.apex;
  out.to_left.tgt = f.src;
  out.to_left.to.resize(n);
  out.to_right.src = out.apex;
  out.to_right.tgt = g.src;
  out.to_right.to.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int at = out.apex->index_of(name(i));
    out.pairs[at] = primes[i].pairs;
    out.top[at] = primes[i].top;
    out.to_left.to[at] = primes[i].top.first;
    out.to_right.to[at] = primes[i].top.second;
    out.by_key.emplace(primes[i].key, at);
  }
  out.to_game = compose_maps(out.to_left, f);
  out.left_label = f;
  out.right_label = g;
  out.states = std::move(states);
  return out;
}

EsMap mediating(const EsMap& alpha, const EsMap& beta, const Pullback& pb,
                const Limits& limits) {
  if (!(*alpha.src == *beta.src))
    throw InputError("mediating: cone legs have different sources");
  if (!(*alpha.tgt == *pb.to_left.tgt) || !(*beta.tgt == *pb.to_right.tgt))
    throw InputError("mediating: cone legs do not match the span");
  if (alpha.domain() != beta.domain())
    throw InputError("mediating: cone legs have different domains");

  const EventStructure& X = *alpha.src;
  const EventStructure& L = *pb.to_left.tgt;
  const EventStructure& R = *pb.to_right.tgt;

  Bits dom = alpha.domain();
  if (dom.count() != X.size()) {
    // Partial cone: factor through the projection to the common domain.
    Projection pr = project(alpha.src, dom, limits);
    EsMap a2, b2;
    a2.src = pr.restricted;
    a2.tgt = alpha.tgt;
    a2.to.resize(pr.restricted->size());
    b2.src = pr.restricted;
    b2.tgt = beta.tgt;
    b2.to.resize(pr.restricted->size());
    for (std::size_t v = 0; v < pr.restricted->size(); ++v) {
      a2.to[v] = alpha.to[pr.kept[v]];
      b2.to[v] = beta.to[pr.kept[v]];
    }
    EsMap m = mediating(a2, b2, pb, limits);
    return compose_maps(pr.hiding, m);
  }

  // The cone must commute with the span.
  for (std::size_t x = 0; x < X.size(); ++x)
    if (pb.left_label.to[alpha.to[x]] != pb.right_label.to[beta.to[x]])
      throw InputError("mediating: cone does not commute with the span");

  EsMap out;
  out.src = alpha.src;
  out.tgt = pb.apex;
  out.to.assign(X.size(), -1);
  for (std::size_t x = 0; x < X.size(); ++x) {
    // Pairs over the cone of x; the event is the dependency-closure of the
    // pair at x itself.
    Bits conex = X.cone((int)x);
    std::vector<SyncPair> ps;
    int self = -1;
    conex.for_each([&](int y) {
      if (y == (int)x) self = (int)ps.size();
      ps.push_back({alpha.to[y], beta.to[y]});
    });
    auto succ = pair_order_edges(L, R, ps);
    if (!acyclic(succ))
      throw InputError("mediating: cone does not induce secured states");
    auto reach = pair_order_closure(succ);
    std::vector<SyncPair> below;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (reach[i].test(self)) below.push_back(ps[i]);
    std::sort(below.begin(), below.end());
    auto it = pb.by_key.find(pb.key(below));
    if (it == pb.by_key.end())
      throw InputError("mediating: cone does not factor through the apex");
    out.to[x] = it->second;
  }

  // The legs must now commute by construction; verify cheaply.
  for (std::size_t x = 0; x < X.size(); ++x) {
    if (pb.to_left.to[out.to[x]] != alpha.to[x] ||
        pb.to_right.to[out.to[x]] != beta.to[x])
      throw InputError("mediating: triangles do not commute");
  }
  return out;
}

}  // namespace esgame
