#ifndef TEMPO_TIMED_WORD_HPP
#define TEMPO_TIMED_WORD_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempo/errors.hpp"

namespace tempo {

/// One symbol of the event alphabet: a single alphanumeric character.
class Label {
public:
    static bool valid_symbol(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
               (c >= '0' && c <= '9');
    }

    /// Throws std::invalid_argument unless `symbol` is alphanumeric ASCII.
    explicit Label(char symbol);

    char symbol() const { return symbol_; }

    friend auto operator<=>(const Label&, const Label&) = default;

private:
    char symbol_;
};

/// A labelled, timestamped occurrence. Timestamps are seconds, >= 0, finite.
struct Event {
    Label label;
    double time;

    friend bool operator==(const Event&, const Event&) = default;
};

/// A finite log: events in non-decreasing timestamp order.
/// Equal timestamps are allowed; file order is preserved among ties.
class TimedWord {
public:
    TimedWord() = default;

    /// Throws std::invalid_argument if any timestamp is negative, non-finite,
    /// or decreasing.
    explicit TimedWord(std::vector<Event> events);

    const std::vector<Event>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }

    friend bool operator==(const TimedWord&, const TimedWord&) = default;

private:
    std::vector<Event> events_;
};

/// The open-interval restriction: events with `from < time < to`, each
/// timestamp shifted down by `from`. Requires 0 <= from < to.
TimedWord restriction(const TimedWord& w, double from, double to);

/// Parses one line of the event format `<label> <timestamp>`.
/// Returns nullopt for blank lines and `#` comments. Throws ParseError
/// (carrying `line_number`) for malformed content.
std::optional<Event> parse_event_line(std::string_view line,
                                      std::size_t line_number = 0);

/// Prints an event in the line format parse_event_line accepts.
/// The timestamp uses the shortest decimal form that round-trips.
std::string format_event_line(const Event& event);

/// Shortest decimal form of a non-negative finite double that parses back
/// to the same value.
std::string format_timestamp(double value);

}  // namespace tempo

#endif  // TEMPO_TIMED_WORD_HPP
