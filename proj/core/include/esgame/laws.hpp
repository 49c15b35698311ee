#pragma once

// Seeded property suites over randomly generated instances, shared by the
// acceptance checks and the command line. Each suite runs independent trials
// and reports the first counterexample it finds.

#include <cstdint>
#include <string>
#include <vector>

#include "esgame/gen.hpp"

namespace esgame {

struct LawOptions {
  std::uint64_t seed = 1;
  int trials = 25;
  int max_events = 5;  // cap on generated game sizes
  Limits limits;
};

struct LawRun {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string detail;  // first failure, empty when all trials pass
  double seconds = 0.0;

  bool ok() const { return failures == 0; }
};

// Receptivity + courtesy, the three fibration readings, and invariance under
// copycat composition agree on a mix of arbitrary pre-strategies and members
// of the constructive family.
LawRun law_main_theorem(const LawOptions& opt);

// Interactions are pullbacks: commuting cones admit exactly one mediating
// map, found by mediating() and confirmed by brute-force enumeration.
LawRun law_pullback_universal(const LawOptions& opt);

// The three readings of the configuration order agree (copycat membership,
// signed set differences, explicit witness) and form a partial order.
LawRun law_scott_order(const LawOptions& opt);

// Configurations of a parallel composition are exactly the pairs, as an
// order isomorphism.
LawRun law_parallel_product(const LawOptions& opt);

// Composition and tensor of family strategies are strategies again.
LawRun law_strategy_closure(const LawOptions& opt);

// Mac Lane pentagon for the associator 2-cells.
LawRun law_pentagon(const LawOptions& opt);

// Unit triangle linking the associator with both unitors.
LawRun law_triangle(const LawOptions& opt);

// Unitor squares against renamings of the carrier.
LawRun law_unitor_naturality(const LawOptions& opt);

// Both compact-closure equations on generated and fixed games.
LawRun law_snake(const LawOptions& opt);

// Canonical projections pass check_hiding_map; hidings compose; zipping two
// interactions along a shared game yields a hiding again.
LawRun law_hiding_algebra(const LawOptions& opt);

// Immediate causality of copycat matches its clause-by-clause description.
LawRun law_copycat_clauses(const LawOptions& opt);

std::vector<LawRun> run_all_laws(const LawOptions& opt);

}  // namespace esgame
