#include "esgame/esp.hpp"

#include "esgame/errors.hpp"

namespace esgame {

EspPtr make_esp(EsPtr es, std::vector<Polarity> pol) {
  if (!es) throw InputError("null event structure");
  if (pol.size() != es->size())
    throw InputError("polarity table does not match the carrier");
  auto out = std::make_shared<Esp>();
  out->es = std::move(es);
  out->pol = std::move(pol);
  return out;
}

EspPtr empty_game() {
  static EspPtr instance = make_esp(EventStructure::from_data({}), {});
  return instance;
}

bool uniform_polarity(const Esp& e, const Bits& xs, Polarity p) {
  bool ok = true;
  xs.for_each([&](int ev) {
    if (e.pol[ev] != p) ok = false;
  });
  return ok;
}

}  // namespace esgame
