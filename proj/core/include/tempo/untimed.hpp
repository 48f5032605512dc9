#ifndef TEMPO_UNTIMED_HPP
#define TEMPO_UNTIMED_HPP

#include <optional>
#include <set>
#include <vector>

#include "tempo/timed_automaton.hpp"

namespace tempo {

/// The discrete-state skeleton of a timed automaton: guards and resets
/// dropped, terminal edges replaced by pulling their target's acceptance
/// back to the source. Locations use dense indices; event-labelled edges
/// are in bijection with those of the source automaton.
struct UntimedNfa {
    std::size_t location_count = 0;
    std::vector<char> initial;
    std::vector<char> accepting;
    /// adjacency[from] lists (label, to) pairs in source transition order.
    std::vector<std::vector<std::pair<Label, int>>> adjacency;
    std::vector<Label> alphabet;

    bool accepts_empty() const;
};

UntimedNfa untimed_projection(const TimedAutomaton& automaton);

/// Number of events in the shortest accepted word, by breadth-first search.
/// nullopt when the automaton accepts nothing.
std::optional<std::size_t> min_match_length(const UntimedNfa& nfa);

/// Labels that can occur as the j-th event of some path from an initial
/// location, for j = 1..max_position (index 0 unused).
std::vector<std::set<Label>> feasible_position_labels(const UntimedNfa& nfa,
                                                      std::size_t max_position);

}  // namespace tempo

#endif  // TEMPO_UNTIMED_HPP
