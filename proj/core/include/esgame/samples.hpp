#pragma once

// A small catalog of named games and pre-strategies used by the tests, the
// filed fixtures, and the documentation: vending machines, booleans, the
// click/done pair, one-event acknowledgement games, and the deadlocking
// trade.

#include "esgame/games.hpp"

namespace esgame {
namespace samples {

// coin -> coffee, one use. Named coffee() to pair with tea().
EspPtr coffee();
// coin -> tea.
EspPtr tea();
// coin enables coffee or tea, in conflict: never both.
EspPtr nondet_coin();

// Five observable actions, no order, all consistent: coin-, selC-, selT-,
// coffee+, tea+.
EspPtr vending_game();
// Serving needs both the coin and the selection; drinks conflict.
PreStrategy vending_strategy();
// Same but with a hidden duplicated coffee: two conflicting copies of the
// serve event with the same label.
PreStrategy vending_duplicate();

// Two conflicting positive answers tt+ ~ ff+.
EspPtr bool_game();
// Answers either one, from the empty game onto bool_game.
PreStrategy nondet_bool();
// Reads an answer on the left copy and answers the other one on the right.
PreStrategy negation();

// click- and done+, concurrent.
EspPtr w_game();
// Forces done+ before click-; fails courtesy.
PreStrategy done_then_click();

// A single o-.
EspPtr y_game();
// Plays nothing; fails receptivity.
PreStrategy y_empty();
// Acknowledges o- twice, in conflict; fails receptivity (uniqueness).
PreStrategy y_duplicate();

// money- then drug+ for the seller; the buyer waits the other way around.
EspPtr drug_game();
PreStrategy drug_seller();  // on drug_game
PreStrategy drug_buyer();   // on dual(drug_game)

// Three concurrent events; the two labellings order c after a, resp. b.
EspPtr abc_game();
PreStrategy abc_after_a();
PreStrategy abc_after_b();

// Two concurrent events a, b; one side duplicates a into conflicting copies,
// the other plays b after a.
EspPtr ab_game();
PreStrategy ab_duplicated();
PreStrategy ab_chained();

// Two concurrent negative events; the pre-strategy acknowledges them in
// either order but commits to the order by conflict. Receptive, not
// courteous, not a fibration for the negative variant.
EspPtr two_neg_game();
PreStrategy two_neg_strategy();

}  // namespace samples
}  // namespace esgame
