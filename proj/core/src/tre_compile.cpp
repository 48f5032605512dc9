#include "tempo/tre_compile.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tempo {

namespace {

// Atom occurrences are numbered 1..k in reading order, so every subtree
// owns a contiguous position range.
struct WindowClock {
    TimeWindow window;
    int range_lo = 0;
    int range_hi = 0;
};

struct Facts {
    bool nullable = false;
    std::vector<int> first;
    std::vector<int> last;
};

struct FollowPair {
    int from = 0;
    int to = 0;
    // Window clocks whose subtree enclosed the node that created the pair;
    // those see the pair as internal and add no guard or reset.
    std::vector<int> internal_clocks;
};

class Builder {
public:
    TimedAutomaton build(const Tre& expression) {
        const Facts root = analyze(expression);

        TimedAutomaton automaton;
        automaton.clock_count = static_cast<int>(windows_.size());

        const int position_count = static_cast<int>(atom_labels_.size());
        const int accept_id = position_count + 1;
        automaton.locations.push_back(Location{0, true, false});
        for (int p = 1; p <= position_count; ++p) {
            automaton.locations.push_back(Location{p, false, false});
        }
        automaton.locations.push_back(Location{accept_id, false, true});

        std::set<Label> alphabet;
        for (const Label& label : atom_labels_) {
            alphabet.insert(label);
        }
        automaton.alphabet.assign(alphabet.begin(), alphabet.end());

        for (int q : root.first) {
            automaton.transitions.push_back(
                Transition{0, q, atom_labels_[q - 1], {}, {}});
        }
        for (const FollowPair& pair : follows_) {
            Transition transition{pair.from, pair.to, atom_labels_[pair.to - 1], {}, {}};
            for (int w = 0; w < static_cast<int>(windows_.size()); ++w) {
                if (is_internal(pair, w)) continue;
                if (contains(w, pair.from)) {
                    append_window_guards(w, transition.guards);
                }
                if (contains(w, pair.to)) {
                    transition.resets.push_back(w);
                }
            }
            automaton.transitions.push_back(std::move(transition));
        }
        for (int p : root.last) {
            Transition terminal{p, accept_id, std::nullopt, {}, {}};
            for (int w = 0; w < static_cast<int>(windows_.size()); ++w) {
                if (contains(w, p)) {
                    append_window_guards(w, terminal.guards);
                }
            }
            automaton.transitions.push_back(std::move(terminal));
        }
        if (root.nullable) {
            automaton.transitions.push_back(
                Transition{0, accept_id, std::nullopt, {}, {}});
        }
        return automaton;
    }

private:
    std::vector<Label> atom_labels_;
    std::vector<WindowClock> windows_;
    std::vector<FollowPair> follows_;
    std::vector<int> enclosing_;

    bool contains(int w, int position) const {
        return windows_[w].range_lo <= position && position <= windows_[w].range_hi;
    }

    static bool is_internal(const FollowPair& pair, int w) {
        return std::find(pair.internal_clocks.begin(), pair.internal_clocks.end(), w) !=
               pair.internal_clocks.end();
    }

    void append_window_guards(int w, std::vector<ClockGuard>& guards) const {
        const TimeWindow& window = windows_[w].window;
        if (!(window.lower == 0 && !window.lower_strict)) {
            guards.push_back(ClockGuard{
                w, window.lower_strict ? GuardOp::Greater : GuardOp::GreaterEq,
                window.lower});
        }
        if (window.upper) {
            guards.push_back(ClockGuard{
                w, window.upper_strict ? GuardOp::Less : GuardOp::LessEq,
                *window.upper});
        }
    }

    void add_pairs(const std::vector<int>& lasts, const std::vector<int>& firsts) {
        for (int p : lasts) {
            for (int q : firsts) {
                follows_.push_back(FollowPair{p, q, enclosing_});
            }
        }
    }

    static void append_unique(std::vector<int>& into, const std::vector<int>& from) {
        for (int p : from) {
            if (std::find(into.begin(), into.end(), p) == into.end()) {
                into.push_back(p);
            }
        }
    }

    Facts analyze(const Tre& expression) {
        if (const auto* atom = std::get_if<Tre::Atom>(&expression.node)) {
            atom_labels_.push_back(atom->label);
            const int p = static_cast<int>(atom_labels_.size());
            return Facts{false, {p}, {p}};
        }
        if (const auto* cat = std::get_if<Tre::Concat>(&expression.node)) {
            Facts acc = analyze(cat->parts.front());
            for (std::size_t i = 1; i < cat->parts.size(); ++i) {
                const Facts next = analyze(cat->parts[i]);
                add_pairs(acc.last, next.first);
                Facts merged;
                merged.nullable = acc.nullable && next.nullable;
                merged.first = acc.first;
                if (acc.nullable) append_unique(merged.first, next.first);
                merged.last = next.last;
                if (next.nullable) append_unique(merged.last, acc.last);
                acc = std::move(merged);
            }
            return acc;
        }
        if (const auto* alt = std::get_if<Tre::Union>(&expression.node)) {
            Facts facts;
            for (const Tre& part : alt->parts) {
                const Facts branch = analyze(part);
                facts.nullable = facts.nullable || branch.nullable;
                append_unique(facts.first, branch.first);
                append_unique(facts.last, branch.last);
            }
            return facts;
        }
        if (const auto* star = std::get_if<Tre::Star>(&expression.node)) {
            Facts child = analyze(*star->child);
            add_pairs(child.last, child.first);
            child.nullable = true;
            return child;
        }
        if (const auto* plus = std::get_if<Tre::Plus>(&expression.node)) {
            Facts child = analyze(*plus->child);
            add_pairs(child.last, child.first);
            return child;
        }
        const auto& within = std::get<Tre::Within>(expression.node);
        if (!within.window.valid()) {
            throw std::invalid_argument("invalid time window " + window_bounds_text(within.window));
        }
        const int w = static_cast<int>(windows_.size());
        windows_.push_back(WindowClock{within.window, 0, 0});
        windows_[w].range_lo = static_cast<int>(atom_labels_.size()) + 1;
        enclosing_.push_back(w);
        const Facts child = analyze(*within.child);
        enclosing_.pop_back();
        windows_[w].range_hi = static_cast<int>(atom_labels_.size());
        return child;
    }

    static std::string window_bounds_text(const TimeWindow& window) {
        std::string text = window.lower_strict ? "(" : "[";
        text += std::to_string(window.lower);
        text += ",";
        text += window.upper ? std::to_string(*window.upper) : std::string("inf");
        text += window.upper_strict ? ")" : "]";
        return text;
    }
};

}  // namespace

TimedAutomaton compile_tre(const Tre& expression) {
    Builder builder;
    TimedAutomaton automaton = builder.build(expression);
    const std::vector<Diagnostic> diagnostics = validate(automaton);
    if (!diagnostics.empty()) {
        throw std::logic_error("compiled automaton failed validation: " +
                               diagnostics.front().message);
    }
    return automaton;
}

}  // namespace tempo
