#include "grr/group_spec.hpp"

#include <cctype>

namespace grr {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) { throw spec_parse_error(msg, pos); }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool eof() const { return pos >= text.size(); }

    int parse_int() {
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start) fail("expected a number");
        if (pos - start > 9) fail("number too large");
        return std::stoi(text.substr(start, pos - start));
    }

    FiniteGroup parse_term() {
        if (text.compare(pos, 2, "EA") == 0) {
            pos += 2;
            int k = parse_int();
            if (k < 1) fail("EA<k> requires k >= 1");
            return elementary_abelian(k);
        }
        if (text.compare(pos, 2, "Q8") == 0) {
            pos += 2;
            return quaternion();
        }
        if (text.compare(pos, 4, "Dic(") == 0) {
            pos += 4;
            FiniteGroup base = parse_product(true);
            int y = -1;
            if (peek() == ';') {
                ++pos;
                if (text.compare(pos, 2, "y=") != 0) fail("expected y=<index> after ';'");
                pos += 2;
                y = parse_int();
            }
            if (peek() != ')') fail("expected ')'");
            ++pos;
            auto built = y >= 0 ? dic(base, y) : dic(base);
            return std::move(built.first);
        }
        char c = peek();
        if (c == 'C') {
            ++pos;
            int n = parse_int();
            if (n < 1) fail("C<n> requires n >= 1");
            return cyclic(n);
        }
        if (c == 'D') {
            ++pos;
            int n = parse_int();
            if (n < 3) fail("D<n> requires n >= 3");
            return dihedral(n);
        }
        fail("expected a group term (C<n>, D<n>, EA<k>, Q8 or Dic(...))");
    }

    FiniteGroup parse_product(bool inside_parens) {
        FiniteGroup acc = parse_term();
        while (peek() == 'x') {
            ++pos;
            FiniteGroup rhs = parse_term();
            acc = direct_product(acc, rhs);
        }
        if (!inside_parens && !eof()) fail("unexpected trailing text");
        if (inside_parens && peek() != ')' && peek() != ';') fail("unexpected text inside Dic(...)");
        return acc;
    }
};

}  // namespace

FiniteGroup parse_group_spec(const std::string& text) {
    if (text.empty()) throw spec_parse_error("empty group spec", 0);
    for (size_t i = 0; i < text.size(); ++i)
        if (std::isspace((unsigned char)text[i])) throw spec_parse_error("whitespace not allowed", i);
    Parser p(text);
    FiniteGroup g = p.parse_product(false);
    g.label = text;
    return g;
}

}  // namespace grr
