#include "pchi/parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace pchi {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_blanks_and_comments() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
};

[[noreturn]] void fail(const Cursor& cur, std::string detail) {
    throw ParseError(cur.line, cur.column, std::move(detail));
}

std::string describe_here(const Cursor& cur) {
    if (cur.eof()) return "end of input";
    char c = cur.peek();
    if (std::isprint(static_cast<unsigned char>(c))) return std::string("'") + c + "'";
    return "unprintable character";
}

struct PositionedValue {
    Natural value;
    int line;
    int column;
};

Natural read_number(Cursor& cur, PositionedValue* where = nullptr) {
    cur.skip_blanks_and_comments();
    if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
        fail(cur, "expected number, found " + describe_here(cur));
    int line = cur.line, column = cur.column;
    std::string digits;
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        digits.push_back(cur.peek());
        cur.advance();
    }
    Natural value(digits, 10);  // normalizes leading zeros
    if (where) *where = {value, line, column};
    return value;
}

std::string read_word(Cursor& cur) {
    cur.skip_blanks_and_comments();
    std::string word;
    while (!cur.eof() && std::isalpha(static_cast<unsigned char>(cur.peek()))) {
        word.push_back(cur.peek());
        cur.advance();
    }
    return word;
}

void expect_char(Cursor& cur, char c, const char* what) {
    cur.skip_blanks_and_comments();
    if (cur.eof() || cur.peek() != c)
        fail(cur, std::string("expected ") + what + ", found " + describe_here(cur));
    cur.advance();
}

std::vector<PositionedValue> read_bracketed_list(Cursor& cur, const char* section,
                                                 const char* empty_message) {
    expect_char(cur, '[', "'['");
    cur.skip_blanks_and_comments();
    if (!cur.eof() && cur.peek() == ']') fail(cur, empty_message);
    std::vector<PositionedValue> values;
    for (;;) {
        PositionedValue pv;
        read_number(cur, &pv);
        values.push_back(std::move(pv));
        cur.skip_blanks_and_comments();
        if (cur.eof())
            fail(cur, std::string("unterminated ") + section + " list, expected ',' or ']'");
        if (cur.peek() == ',') {
            cur.advance();
            continue;
        }
        if (cur.peek() == ']') {
            cur.advance();
            return values;
        }
        fail(cur, "expected ',' or ']', found " + describe_here(cur));
    }
}

}  // namespace

ChiSpec parse_spec(std::string_view text) {
    Cursor cur{text};

    std::vector<PositionedValue> prefix;
    std::vector<PositionedValue> cycle;
    std::optional<Natural> bound;

    cur.skip_blanks_and_comments();
    Cursor at_word = cur;
    std::string word = read_word(cur);
    if (word == "prefix") {
        prefix = read_bracketed_list(cur, "prefix", "prefix list must be nonempty");
        cur.skip_blanks_and_comments();
        at_word = cur;
        word = read_word(cur);
    }
    if (word != "periodic") {
        if (word.empty()) fail(at_word, "expected 'periodic', found " + describe_here(at_word));
        fail(at_word, "expected 'periodic', found '" + word + "'");
    }
    cycle = read_bracketed_list(cur, "periodic", "cycle must be nonempty");

    cur.skip_blanks_and_comments();
    if (!cur.eof()) {
        at_word = cur;
        word = read_word(cur);
        if (word != "bound") {
            if (word.empty()) fail(at_word, "expected 'bound' or end of input, found " +
                                                describe_here(at_word));
            fail(at_word, "expected 'bound' or end of input, found '" + word + "'");
        }
        expect_char(cur, '=', "'='");
        PositionedValue bv;
        read_number(cur, &bv);
        if (bv.value < 1) throw ParseError(bv.line, bv.column, "bound must be at least 1");
        bound = std::move(bv.value);
        cur.skip_blanks_and_comments();
        if (!cur.eof()) fail(cur, "expected end of input, found " + describe_here(cur));
    }

    if (bound) {
        for (const auto* list : {&prefix, &cycle})
            for (const auto& pv : *list)
                if (pv.value > *bound)
                    throw ParseError(pv.line, pv.column,
                                     "value " + pv.value.get_str() + " exceeds bound " +
                                         bound->get_str());
    }

    std::vector<Natural> prefix_values, cycle_values;
    prefix_values.reserve(prefix.size());
    cycle_values.reserve(cycle.size());
    for (auto& pv : prefix) prefix_values.push_back(std::move(pv.value));
    for (auto& pv : cycle) cycle_values.push_back(std::move(pv.value));
    return ChiSpec::make(std::move(prefix_values), std::move(cycle_values), std::move(bound));
}

std::string render_spec(const ChiSpec& spec) {
    std::string out;
    auto append_list = [&out](const std::vector<Natural>& values) {
        out.push_back('[');
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += values[i].get_str();
        }
        out.push_back(']');
    };
    if (!spec.prefix().empty()) {
        out += "prefix";
        append_list(spec.prefix());
        out.push_back(' ');
    }
    out += "periodic";
    append_list(spec.cycle());
    if (spec.declared_bound()) out += " bound=" + spec.declared_bound()->get_str();
    return out;
}

}  // namespace pchi
