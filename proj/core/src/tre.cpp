#include "tempo/tre.hpp"

#include <cctype>
#include <utility>

namespace tempo {

bool TimeWindow::valid() const {
    if (lower < 0) return false;
    if (!upper) return upper_strict;
    if (lower < *upper) return true;
    return lower == *upper && !lower_strict && !upper_strict;
}

Tre Tre::star(Tre child) {
    return Tre{Star{std::make_shared<const Tre>(std::move(child))}};
}

Tre Tre::plus(Tre child) {
    return Tre{Plus{std::make_shared<const Tre>(std::move(child))}};
}

Tre Tre::within(Tre child, TimeWindow window) {
    return Tre{Within{std::make_shared<const Tre>(std::move(child)), window}};
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Tre parse() {
        Tre expression = parse_alt();
        skip_spaces();
        if (!at_end()) {
            fail("unexpected character");
        }
        return expression;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message + " at position " + std::to_string(pos_ + 1), 0,
                         pos_ + 1);
    }

    void skip_spaces() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }

    char peek() {
        skip_spaces();
        return at_end() ? '\0' : text_[pos_];
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Tre parse_alt() {
        std::vector<Tre> branches;
        branches.push_back(parse_cat());
        while (eat('|')) {
            branches.push_back(parse_cat());
        }
        if (branches.size() == 1) {
            return std::move(branches.front());
        }
        return Tre::alternation(std::move(branches));
    }

    bool starts_base() {
        const char c = peek();
        return c == '(' || Label::valid_symbol(c);
    }

    Tre parse_cat() {
        std::vector<Tre> parts;
        parts.push_back(parse_rep());
        while (starts_base()) {
            parts.push_back(parse_rep());
        }
        if (parts.size() == 1) {
            return std::move(parts.front());
        }
        return Tre::concat(std::move(parts));
    }

    Tre parse_rep() {
        Tre expression = parse_base();
        for (;;) {
            if (eat('*')) {
                expression = Tre::star(std::move(expression));
            } else if (eat('+')) {
                expression = Tre::plus(std::move(expression));
            } else if (eat('%')) {
                expression = Tre::within(std::move(expression), parse_interval());
            } else {
                return expression;
            }
        }
    }

    Tre parse_base() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Tre inner = parse_alt();
            if (!eat(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (Label::valid_symbol(c)) {
            ++pos_;
            return Tre::atom(Label(c));
        }
        fail("expected an atom or '('");
    }

    int parse_int() {
        skip_spaces();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected an integer");
        }
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000000L) {
                fail("integer constant too large");
            }
            ++pos_;
        }
        return static_cast<int>(value);
    }

    TimeWindow parse_interval() {
        const std::size_t start = pos_;
        TimeWindow window;
        if (eat('(')) {
            window.lower_strict = true;
        } else if (eat('[')) {
            window.lower_strict = false;
        } else {
            fail("expected '(' or '[' after '%'");
        }
        window.lower = parse_int();
        if (!eat(',')) {
            fail("expected ','");
        }
        skip_spaces();
        if (!at_end() && text_.substr(pos_).starts_with("inf")) {
            pos_ += 3;
            window.upper = std::nullopt;
        } else {
            window.upper = parse_int();
        }
        if (eat(')')) {
            window.upper_strict = true;
        } else if (eat(']')) {
            window.upper_strict = false;
        } else {
            fail("expected ')' or ']'");
        }
        if (!window.valid()) {
            pos_ = start;
            fail("invalid interval");
        }
        return window;
    }
};

void append_string(const Tre& expression, std::string& out);

// Levels: 0 union, 1 concat, 2 postfix.
int node_level(const Tre& expression) {
    if (std::holds_alternative<Tre::Union>(expression.node)) return 0;
    if (std::holds_alternative<Tre::Concat>(expression.node)) return 1;
    return 2;
}

void append_child(const Tre& child, std::string& out, int required_level) {
    if (node_level(child) < required_level) {
        out += '(';
        append_string(child, out);
        out += ')';
    } else {
        append_string(child, out);
    }
}

std::string window_text(const TimeWindow& window) {
    std::string out;
    out += '%';
    out += window.lower_strict ? '(' : '[';
    out += std::to_string(window.lower);
    out += ',';
    out += window.upper ? std::to_string(*window.upper) : std::string("inf");
    out += window.upper_strict ? ')' : ']';
    return out;
}

void append_string(const Tre& expression, std::string& out) {
    if (const auto* atom = std::get_if<Tre::Atom>(&expression.node)) {
        out += atom->label.symbol();
    } else if (const auto* cat = std::get_if<Tre::Concat>(&expression.node)) {
        for (const Tre& part : cat->parts) {
            append_child(part, out, 2);
        }
    } else if (const auto* alt = std::get_if<Tre::Union>(&expression.node)) {
        for (std::size_t i = 0; i < alt->parts.size(); ++i) {
            if (i > 0) out += '|';
            append_child(alt->parts[i], out, 1);
        }
    } else if (const auto* star = std::get_if<Tre::Star>(&expression.node)) {
        append_child(*star->child, out, 2);
        out += '*';
    } else if (const auto* plus = std::get_if<Tre::Plus>(&expression.node)) {
        append_child(*plus->child, out, 2);
        out += '+';
    } else if (const auto* within = std::get_if<Tre::Within>(&expression.node)) {
        append_child(*within->child, out, 2);
        out += window_text(within->window);
    }
}

}  // namespace

Tre parse_tre(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Tre& expression) {
    std::string out;
    append_string(expression, out);
    return out;
}

}  // namespace tempo
