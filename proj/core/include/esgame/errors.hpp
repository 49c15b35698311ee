#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace esgame {

// Invalid or ill-typed input: malformed documents, unknown event ids,
// mismatched endpoints, violated preconditions. CLI exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration guard was exceeded before the search started. CLI exit
// code 3.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ceilings for the enumeration-backed operations. Everything here is a hard
// bound checked up front so oversized inputs fail predictably.
struct Limits {
  // Configuration enumeration refuses structures with more events than this;
  // the state cap below still bounds the search on permissive settings.
  int max_enum_events = 24;
  // Interactions refuse inputs with more synchronized pairs than this.
  int max_sync_pairs = 64;
  // Cap on visited states in reachability searches (secured-bijection BFS,
  // consistency canonicalization); a backstop against antichain blow-up.
  std::size_t max_states = std::size_t{1} << 20;
};

}  // namespace esgame
