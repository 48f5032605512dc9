#include "tempo/event_stream.hpp"

#include <istream>
#include <string>

#include "tempo/errors.hpp"

namespace tempo {

std::optional<Event> VectorEventStream::next() {
    if (position_ >= events_.size()) {
        return std::nullopt;
    }
    return events_[position_++];
}

std::optional<Event> LineEventStream::next() {
    std::string line;
    while (std::getline(*input_, line)) {
        ++line_number_;
        const std::optional<Event> event = parse_event_line(line, line_number_);
        if (!event) {
            continue;
        }
        if (seen_event_ && event->time < last_time_) {
            throw StreamError("timestamps must be non-decreasing (line " +
                                  std::to_string(line_number_) + ")",
                              line_number_);
        }
        seen_event_ = true;
        last_time_ = event->time;
        return event;
    }
    return std::nullopt;
}

}  // namespace tempo
