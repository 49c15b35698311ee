#pragma once

// Event structures with polarity. Games are exactly these.

#include <memory>
#include <vector>

#include "esgame/event_structure.hpp"

namespace esgame {

enum class Polarity : unsigned char { pos, neg };

inline Polarity flip(Polarity p) {
  return p == Polarity::pos ? Polarity::neg : Polarity::pos;
}
inline char polarity_char(Polarity p) { return p == Polarity::pos ? '+' : '-'; }

struct Esp {
  EsPtr es;
  std::vector<Polarity> pol;  // indexed like es

  Polarity polarity(int e) const { return pol[e]; }
  std::size_t size() const { return es->size(); }
};

using EspPtr = std::shared_ptr<const Esp>;
using Game = Esp;

EspPtr make_esp(EsPtr es, std::vector<Polarity> pol);

inline bool same_esp(const Esp& a, const Esp& b) {
  return a.pol == b.pol && *a.es == *b.es;
}

EspPtr empty_game();

// All events in xs carry the given polarity.
bool uniform_polarity(const Esp& e, const Bits& xs, Polarity p);

}  // namespace esgame
