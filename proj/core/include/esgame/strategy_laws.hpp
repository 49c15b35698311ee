#pragma once

// The polarity-sensitive conditions singling strategies out of pre-strategies,
// the equivalent fibration formulations, and the copycat cancellation isos.

#include <optional>
#include <string>

#include "esgame/games.hpp"

namespace esgame {

struct CheckResult {
  bool holds = true;
  std::string detail;  // first counterexample, empty when the check passes
};

// Every negative game event enabled at a reached position has exactly one
// matching extension. Reports the least (position, event) violation.
CheckResult is_receptive(const PreStrategy& s, const Limits& limits = {});

// Immediate dependencies other than negative-before-positive must already be
// immediate dependencies between the labels.
CheckResult is_courteous(const PreStrategy& s);

enum class FibrationVariant { neg, pos, scott };

// The labelling, viewed on configurations, lifts bounds uniquely:
//   neg    x' below x when x ⊆ x' and x' \ x is all negative
//   pos    x' below x when x' ⊆ x and x \ x' is all positive
//   scott  x' below x in the sense of scott_leq
// For every x and game configuration y below the image of x there must be
// exactly one x' below x mapping onto y.
CheckResult is_discrete_fibration(const PreStrategy& s, FibrationVariant v,
                                  const Limits& limits = {});

struct StrategyCheck {
  bool holds = false;
  std::string detail;
  std::optional<EsMap> iso;  // composite carrier -> s.inner when holds
};

// Composition with copycat on the game leaves s unchanged up to isomorphism
// over the game.
StrategyCheck is_strategy(const PreStrategy& s, const Limits& limits = {});

// Down-closure of the positive events of x: the largest sub-configuration
// whose maximal events are all positive.
Bits strip_negatives(const PreStrategy& s, const Bits& x);

// The unique configuration below x (scott order) mapping onto y; requires
// y below the image of x and throws when the lift is missing or ambiguous.
Bits fibration_lift(const PreStrategy& s, const Bits& x, const Bits& y,
                    const Limits& limits = {});

struct Unitor {
  Composition comp;  // the composite with copycat
  EsMap iso;         // comp.strat.inner -> s.inner, over the game
};

// Cancellation of copycat composed after s : A -> B (left) or before it
// (right). Requires s receptive and courteous.
Unitor left_unitor(const PreStrategy& s, const Limits& limits = {});
Unitor right_unitor(const PreStrategy& s, const Limits& limits = {});

struct StrategyVerdict {
  CheckResult receptive, courteous;
  CheckResult fib_neg, fib_pos, fib_scott;
  StrategyCheck copycat_invariant;

  // The four formulations must agree on every input.
  bool agree() const {
    bool rc = receptive.holds && courteous.holds;
    bool np = fib_neg.holds && fib_pos.holds;
    return rc == fib_scott.holds && rc == np && rc == copycat_invariant.holds;
  }
  bool is_strategy() const { return receptive.holds && courteous.holds; }
};

StrategyVerdict strategy_verdict(const PreStrategy& s, const Limits& limits = {});

}  // namespace esgame
