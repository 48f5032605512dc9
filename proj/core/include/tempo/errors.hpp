#ifndef TEMPO_ERRORS_HPP
#define TEMPO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempo {

/// Malformed textual input (event lines, expressions, automaton files).
/// `line` and `column` are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(std::move(message)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// An event source broke its contract mid-stream (timestamps went backwards).
class StreamError : public std::runtime_error {
public:
    StreamError(std::string message, std::size_t line = 0)
        : std::runtime_error(std::move(message)), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace tempo

#endif  // TEMPO_ERRORS_HPP
