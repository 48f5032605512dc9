#include "tempo/untimed.hpp"

#include <deque>
#include <map>

namespace tempo {

bool UntimedNfa::accepts_empty() const {
    for (std::size_t i = 0; i < location_count; ++i) {
        if (initial[i] && accepting[i]) return true;
    }
    return false;
}

UntimedNfa untimed_projection(const TimedAutomaton& automaton) {
    std::map<int, int> index_of;
    for (const Location& location : automaton.locations) {
        index_of.emplace(location.id, static_cast<int>(index_of.size()));
    }

    UntimedNfa nfa;
    nfa.location_count = automaton.locations.size();
    nfa.initial.assign(nfa.location_count, 0);
    nfa.accepting.assign(nfa.location_count, 0);
    nfa.adjacency.resize(nfa.location_count);
    nfa.alphabet = automaton.alphabet;

    for (const Location& location : automaton.locations) {
        const int index = index_of.at(location.id);
        nfa.initial[index] = location.initial ? 1 : 0;
        nfa.accepting[index] = location.accepting ? 1 : 0;
    }
    for (const Transition& transition : automaton.transitions) {
        const int from = index_of.at(transition.from);
        const int to = index_of.at(transition.to);
        if (transition.is_terminal()) {
            if (nfa.accepting[to]) {
                nfa.accepting[from] = 1;
            }
        } else {
            nfa.adjacency[from].emplace_back(*transition.label, to);
        }
    }
    return nfa;
}

std::optional<std::size_t> min_match_length(const UntimedNfa& nfa) {
    std::vector<char> seen(nfa.location_count, 0);
    std::deque<std::pair<int, std::size_t>> queue;
    for (std::size_t i = 0; i < nfa.location_count; ++i) {
        if (nfa.initial[i]) {
            seen[i] = 1;
            queue.emplace_back(static_cast<int>(i), 0);
        }
    }
    while (!queue.empty()) {
        const auto [location, depth] = queue.front();
        queue.pop_front();
        if (nfa.accepting[location]) {
            return depth;
        }
        for (const auto& [label, to] : nfa.adjacency[location]) {
            if (!seen[to]) {
                seen[to] = 1;
                queue.emplace_back(to, depth + 1);
            }
        }
    }
    return std::nullopt;
}

std::vector<std::set<Label>> feasible_position_labels(const UntimedNfa& nfa,
                                                      std::size_t max_position) {
    std::vector<std::set<Label>> feasible(max_position + 1);
    std::vector<char> layer(nfa.location_count, 0);
    for (std::size_t i = 0; i < nfa.location_count; ++i) {
        layer[i] = nfa.initial[i];
    }
    for (std::size_t j = 1; j <= max_position; ++j) {
        std::vector<char> next(nfa.location_count, 0);
        for (std::size_t from = 0; from < nfa.location_count; ++from) {
            if (!layer[from]) continue;
            for (const auto& [label, to] : nfa.adjacency[from]) {
                feasible[j].insert(label);
                next[to] = 1;
            }
        }
        layer = std::move(next);
    }
    return feasible;
}

}  // namespace tempo
