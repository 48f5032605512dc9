#ifndef TEMPO_TIMED_AUTOMATON_HPP
#define TEMPO_TIMED_AUTOMATON_HPP

#include <optional>
#include <string>
#include <vector>

#include "tempo/timed_word.hpp"

namespace tempo {

enum class GuardOp { Less, LessEq, Greater, GreaterEq };

const char* guard_op_text(GuardOp op);

/// Comparison of one clock against a non-negative integer constant.
struct ClockGuard {
    int clock = 0;
    GuardOp op = GuardOp::Less;
    int bound = 0;

    bool holds(double clock_value) const;

    friend bool operator==(const ClockGuard&, const ClockGuard&) = default;
};

/// An edge of the automaton. A missing label marks a terminal edge: it is
/// taken once, at the interval end, with guards evaluated there; it carries
/// no resets and leads to an accepting location.
struct Transition {
    int from = 0;
    int to = 0;
    std::optional<Label> label;
    std::vector<ClockGuard> guards;
    std::vector<int> resets;

    bool is_terminal() const { return !label.has_value(); }

    friend bool operator==(const Transition&, const Transition&) = default;
};

struct Location {
    int id = 0;
    bool initial = false;
    bool accepting = false;

    friend bool operator==(const Location&, const Location&) = default;
};

/// A nondeterministic finite automaton over event labels, extended with
/// real-valued clocks. A run starts with every clock at zero at the interval
/// start; reading an event takes a matching transition whose guards hold at
/// the event's absolute time, then applies resets. The run accepts when,
/// after the last event, it sits in an accepting location or can take a
/// terminal edge whose guards hold at the interval end.
struct TimedAutomaton {
    std::vector<Label> alphabet;
    int clock_count = 0;
    std::vector<Location> locations;
    std::vector<Transition> transitions;

    bool in_alphabet(Label label) const;

    friend bool operator==(const TimedAutomaton&, const TimedAutomaton&) = default;
};

enum class DiagnosticKind {
    NoInitialLocation,
    DanglingLocation,
    DuplicateLocationId,
    TerminalWithReset,
    TerminalToNonAccepting,
    UnknownClock,
    NegativeGuardBound,
    LabelOutsideAlphabet,
    ResetOutsideClocks,
};

struct Diagnostic {
    DiagnosticKind kind;
    std::string message;
};

/// Structural checks. Empty result iff the automaton is well formed.
std::vector<Diagnostic> validate(const TimedAutomaton& automaton);

}  // namespace tempo

#endif  // TEMPO_TIMED_AUTOMATON_HPP
