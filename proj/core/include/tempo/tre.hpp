#ifndef TEMPO_TRE_HPP
#define TEMPO_TRE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tempo/errors.hpp"
#include "tempo/timed_word.hpp"

namespace tempo {

/// Integer duration window attached to a sub-expression. `upper` of nullopt
/// means unbounded (always strict). Valid windows have 0 <= lower and either
/// lower < upper or lower == upper with both ends non-strict.
struct TimeWindow {
    int lower = 0;
    bool lower_strict = true;
    std::optional<int> upper;
    bool upper_strict = true;

    bool valid() const;

    friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

/// Abstract syntax of the expression language.
///
///   expr     := alt
///   alt      := cat ( '|' cat )*
///   cat      := rep rep*
///   rep      := base ( '*' | '+' | '%' interval )*
///   base     := ATOM | '(' alt ')'
///   interval := ( '(' | '[' ) INT ',' ( INT | 'inf' ) ( ')' | ']' )
///   ATOM     := [a-zA-Z0-9]        INT := [0-9]+
struct Tre {
    struct Atom {
        Label label;
    };
    struct Concat {
        std::vector<Tre> parts;
    };
    struct Union {
        std::vector<Tre> parts;
    };
    struct Star {
        std::shared_ptr<const Tre> child;
    };
    struct Plus {
        std::shared_ptr<const Tre> child;
    };
    struct Within {
        std::shared_ptr<const Tre> child;
        TimeWindow window;
    };

    using Node = std::variant<Atom, Concat, Union, Star, Plus, Within>;
    Node node;

    static Tre atom(Label label) { return Tre{Atom{label}}; }
    static Tre concat(std::vector<Tre> parts) { return Tre{Concat{std::move(parts)}}; }
    static Tre alternation(std::vector<Tre> parts) { return Tre{Union{std::move(parts)}}; }
    static Tre star(Tre child);
    static Tre plus(Tre child);
    static Tre within(Tre child, TimeWindow window);
};

/// Parses the concrete syntax above. Whitespace between tokens is ignored.
/// Throws ParseError whose column is the 1-based offending position.
Tre parse_tre(std::string_view text);

/// Concrete syntax for an expression (parse_tre round-trips it).
std::string to_string(const Tre& expression);

}  // namespace tempo

#endif  // TEMPO_TRE_HPP
