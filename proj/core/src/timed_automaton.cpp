#include "tempo/timed_automaton.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tempo {

const char* guard_op_text(GuardOp op) {
    switch (op) {
        case GuardOp::Less: return "<";
        case GuardOp::LessEq: return "<=";
        case GuardOp::Greater: return ">";
        case GuardOp::GreaterEq: return ">=";
    }
    return "?";
}

bool ClockGuard::holds(double clock_value) const {
    switch (op) {
        case GuardOp::Less: return clock_value < bound;
        case GuardOp::LessEq: return clock_value <= bound;
        case GuardOp::Greater: return clock_value > bound;
        case GuardOp::GreaterEq: return clock_value >= bound;
    }
    return false;
}

bool TimedAutomaton::in_alphabet(Label label) const {
    return std::find(alphabet.begin(), alphabet.end(), label) != alphabet.end();
}

std::vector<Diagnostic> validate(const TimedAutomaton& automaton) {
    std::vector<Diagnostic> diagnostics;
    const auto report = [&](DiagnosticKind kind, std::string message) {
        diagnostics.push_back(Diagnostic{kind, std::move(message)});
    };

    std::set<int> ids;
    bool has_initial = false;
    for (const Location& location : automaton.locations) {
        if (!ids.insert(location.id).second) {
            report(DiagnosticKind::DuplicateLocationId,
                   "duplicate location id " + std::to_string(location.id));
        }
        has_initial = has_initial || location.initial;
    }
    if (!has_initial) {
        report(DiagnosticKind::NoInitialLocation, "automaton has no initial location");
    }

    const auto accepting = [&](int id) {
        for (const Location& location : automaton.locations) {
            if (location.id == id) return location.accepting;
        }
        return false;
    };

    for (std::size_t index = 0; index < automaton.transitions.size(); ++index) {
        const Transition& transition = automaton.transitions[index];
        const std::string where = "transition #" + std::to_string(index);

        for (int endpoint : {transition.from, transition.to}) {
            if (!ids.count(endpoint)) {
                report(DiagnosticKind::DanglingLocation,
                       where + " references undeclared location " + std::to_string(endpoint));
            }
        }
        if (transition.label && !automaton.in_alphabet(*transition.label)) {
            report(DiagnosticKind::LabelOutsideAlphabet,
                   where + " label '" + std::string(1, transition.label->symbol()) +
                       "' is not in the alphabet");
        }
        if (transition.is_terminal()) {
            if (!transition.resets.empty()) {
                report(DiagnosticKind::TerminalWithReset,
                       where + " is terminal but carries resets");
            }
            if (ids.count(transition.to) && !accepting(transition.to)) {
                report(DiagnosticKind::TerminalToNonAccepting,
                       where + " is terminal but its target is not accepting");
            }
        }
        for (const ClockGuard& guard : transition.guards) {
            if (guard.clock < 0 || guard.clock >= automaton.clock_count) {
                report(DiagnosticKind::UnknownClock,
                       where + " guards unknown clock " + std::to_string(guard.clock));
            }
            if (guard.bound < 0) {
                report(DiagnosticKind::NegativeGuardBound,
                       where + " has a negative guard constant");
            }
        }
        for (int clock : transition.resets) {
            if (clock < 0 || clock >= automaton.clock_count) {
                report(DiagnosticKind::ResetOutsideClocks,
                       where + " resets unknown clock " + std::to_string(clock));
            }
        }
    }
    return diagnostics;
}

}  // namespace tempo
