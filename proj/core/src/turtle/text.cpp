#include "sketchgen/turtle/text.hpp"

#include <cctype>
#include <limits>

namespace sketchgen::turtle {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    TurtleProgram run() {
        TurtleProgram program;
        skip_separators();
        bool bracketed = false;
        if (peek() == '[') {
            bracketed = true;
            advance();
            skip_separators();
        }
        while (!at_end() && !(bracketed && peek() == ']')) {
            program.commands.push_back(command());
            skip_separators();
        }
        if (bracketed) {
            expect(']');
            skip_separators();
        }
        if (!at_end()) {
            fail("unexpected trailing input");
        }
        if (program.commands.empty()) {
            fail("expected at least one command");
        }
        validate_program(program);
        return program;
    }

private:
    TurtleCommand command() {
        const auto line = line_, column = column_;
        std::string word;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
            word += advance();
        }
        TurtleCommand cmd;
        if (word == "loopstart") {
            cmd.kind = CommandKind::loopstart;
        } else if (word == "line") {
            cmd.kind = CommandKind::line;
        } else if (word == "arc") {
            cmd.kind = CommandKind::arc;
        } else if (word == "circle") {
            cmd.kind = CommandKind::circle;
        } else if (word.empty()) {
            fail("expected a command name");
        } else {
            throw SyntaxError(line, column, "unknown command '" + word + "'");
        }
        skip_space();
        expect('(');
        skip_space();
        cmd.deltas.push_back(delta());
        skip_space();
        while (peek() == ',') {
            advance();
            skip_space();
            cmd.deltas.push_back(delta());
            skip_space();
        }
        expect(')');
        if (cmd.deltas.size() != arity(cmd.kind)) {
            throw ArityError(std::string(to_string(cmd.kind)) + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + " takes " + std::to_string(arity(cmd.kind)) +
                             " displacement(s), got " + std::to_string(cmd.deltas.size()));
        }
        return cmd;
    }

    Delta delta() {
        expect('(');
        skip_space();
        const int dx = integer();
        skip_space();
        expect(',');
        skip_space();
        const int dy = integer();
        skip_space();
        expect(')');
        return {dx, dy};
    }

    int integer() {
        const auto line = line_, column = column_;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = advance() == '-';
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected an integer");
        }
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (advance() - '0');
            if (value > std::numeric_limits<int>::max() / 10) {
                value = std::numeric_limits<int>::max() / 10;
            }
        }
        if (value > kMaxDelta) {
            throw RangeError("displacement component at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + " exceeds 255 in magnitude");
        }
        return static_cast<int>(negative ? -value : value);
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            advance();
        }
    }

    void skip_separators() {
        while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == ',')) {
            advance();
        }
    }

    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        advance();
    }

    [[noreturn]] void fail(const std::string& message) const {
        if (at_end()) {
            throw SyntaxError(line_, column_, message + " at end of input");
        }
        throw SyntaxError(line_, column_, message + ", found '" + std::string(1, peek()) + "'");
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

} // namespace

TurtleProgram parse(std::string_view text) { return Parser(text).run(); }

std::string serialize(const TurtleProgram& program) {
    std::string out;
    for (const auto& cmd : program.commands) {
        out += to_string(cmd.kind);
        out += '(';
        for (std::size_t i = 0; i < cmd.deltas.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += '(';
            out += std::to_string(cmd.deltas[i].dx);
            out += ',';
            out += std::to_string(cmd.deltas[i].dy);
            out += ')';
        }
        out += ")\n";
    }
    return out;
}

} // namespace sketchgen::turtle
