#ifndef TEMPO_EVENT_STREAM_HPP
#define TEMPO_EVENT_STREAM_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "tempo/timed_word.hpp"

namespace tempo {

/// Single-pass source of events in non-decreasing timestamp order.
/// Each event is yielded at most once; buffering for random access is the
/// consumer's job. Implementations detect ordering violations at pull time
/// and throw StreamError.
class EventStream {
public:
    virtual ~EventStream() = default;

    /// Next event, or nullopt at end of stream.
    virtual std::optional<Event> next() = 0;
};

/// Replays an in-memory sequence.
class VectorEventStream final : public EventStream {
public:
    explicit VectorEventStream(std::vector<Event> events)
        : events_(std::move(events)) {}
    explicit VectorEventStream(const TimedWord& word)
        : events_(word.events()) {}

    std::optional<Event> next() override;

private:
    std::vector<Event> events_;
    std::size_t position_ = 0;
};

/// Reads the line format `<label> <timestamp>` lazily from a text stream.
/// Blank lines and `#` comments are skipped. Parse and ordering errors carry
/// the 1-based line number.
class LineEventStream final : public EventStream {
public:
    explicit LineEventStream(std::istream& input) : input_(&input) {}

    std::optional<Event> next() override;

private:
    std::istream* input_;
    std::size_t line_number_ = 0;
    double last_time_ = 0.0;
    bool seen_event_ = false;
};

}  // namespace tempo

#endif  // TEMPO_EVENT_STREAM_HPP
