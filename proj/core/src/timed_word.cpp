#include "tempo/timed_word.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace tempo {

Label::Label(char symbol) : symbol_(symbol) {
    if (!valid_symbol(symbol)) {
        throw std::invalid_argument(std::string("label must be a single alphanumeric character, got '") +
                                    symbol + "'");
    }
}

TimedWord::TimedWord(std::vector<Event> events) : events_(std::move(events)) {
    double previous = 0.0;
    for (std::size_t i = 0; i < events_.size(); ++i) {
        const double time = events_[i].time;
        if (!std::isfinite(time) || time < 0.0) {
            throw std::invalid_argument("event timestamp must be finite and non-negative");
        }
        if (i > 0 && time < previous) {
            throw std::invalid_argument("event timestamps must be non-decreasing");
        }
        previous = time;
    }
}

TimedWord restriction(const TimedWord& w, double from, double to) {
    if (!(from >= 0.0) || !(from < to)) {
        throw std::invalid_argument("restriction requires 0 <= from < to");
    }
    std::vector<Event> inside;
    for (const Event& event : w.events()) {
        if (event.time > from && event.time < to) {
            inside.push_back(Event{event.label, event.time - from});
        }
    }
    return TimedWord(std::move(inside));
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view line) {
    std::size_t begin = 0;
    std::size_t end = line.size();
    while (begin < end && is_space(line[begin])) ++begin;
    while (end > begin && is_space(line[end - 1])) --end;
    return line.substr(begin, end - begin);
}

}  // namespace

std::optional<Event> parse_event_line(std::string_view line, std::size_t line_number) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') {
        return std::nullopt;
    }

    if (!Label::valid_symbol(body.front())) {
        throw ParseError("expected a single alphanumeric label", line_number, 1);
    }
    if (body.size() < 2 || !is_space(body[1])) {
        throw ParseError("label must be a single character followed by whitespace",
                         line_number, 2);
    }
    const Label label(body.front());

    std::size_t pos = 1;
    while (pos < body.size() && is_space(body[pos])) ++pos;
    const std::string_view number = body.substr(pos);
    if (number.empty()) {
        throw ParseError("missing timestamp", line_number, pos + 1);
    }

    // Timestamps are plain decimal literals: digits with an optional point.
    bool seen_digit = false;
    bool seen_point = false;
    for (char c : number) {
        if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            throw ParseError("timestamp must be a non-negative decimal number",
                             line_number, pos + 1);
        }
    }
    if (!seen_digit) {
        throw ParseError("timestamp must contain a digit", line_number, pos + 1);
    }

    double value = 0.0;
    const auto result = std::from_chars(number.data(), number.data() + number.size(), value);
    if (result.ec != std::errc() || result.ptr != number.data() + number.size() ||
        !std::isfinite(value) || value < 0.0) {
        throw ParseError("timestamp must be a non-negative decimal number",
                         line_number, pos + 1);
    }
    return Event{label, value};
}

std::string format_timestamp(double value) {
    char buffer[424];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::fixed);
    return std::string(buffer, result.ptr);
}

std::string format_event_line(const Event& event) {
    std::string line(1, event.label.symbol());
    line += ' ';
    line += format_timestamp(event.time);
    return line;
}

}  // namespace tempo
