#ifndef TEMPO_TRE_COMPILE_HPP
#define TEMPO_TRE_COMPILE_HPP

#include "tempo/timed_automaton.hpp"
#include "tempo/tre.hpp"

namespace tempo {

/// Compiles an expression into an equivalent timed automaton.
///
/// The construction is a position automaton over the expression's atom
/// occurrences, extended with an implicit terminal marker: location 0 is
/// initial, each atom occurrence becomes one location, and a single
/// accepting location is reached only by terminal edges. Every `%` window
/// owns one clock: the clock is reset on edges that enter the window's
/// sub-expression from outside (except edges from the initial location,
/// where clocks already start at zero), and the window's bounds become
/// guards on edges that leave the sub-expression's last positions —
/// including loop-back edges of an enclosing repetition and terminal edges.
/// On a loop-back edge the guard is evaluated before the reset.
///
/// Throws std::invalid_argument on an invalid window.
TimedAutomaton compile_tre(const Tre& expression);

}  // namespace tempo

#endif  // TEMPO_TRE_COMPILE_HPP
