#include "k3m/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace k3m {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::domain_error("lattice expression: " + what + " at position " +
                                std::to_string(i) + " in \"" + s + "\"");
    }

    Int integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) fail("expected an integer");
        return Int(s.substr(start, i - start));
    }

    std::size_t index() {
        Int n = integer();
        if (n < 1) fail("expected a positive index");
        return static_cast<std::size_t>(to_long(n));
    }
};

struct Parsed {
    Lattice lattice;
    std::string label;
};

Parsed parse_atom(Cursor& c) {
    c.skip_ws();
    if (c.eat('<')) {
        Int k = c.integer();
        c.expect('>');
        return {lat::diag(k), "<" + k.get_str() + ">"};
    }
    std::size_t start = c.i;
    std::string word;
    while (c.i < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
        word += c.s[c.i++];
    if (word.empty()) c.fail("expected a lattice name");

    if (word == "U") return {lat::U(), "U"};
    if (word == "L_K3" || word == "K3") return {lat::k3(), "L_K3"};
    if (word == "diag") {
        c.expect('(');
        Int k = c.integer();
        c.expect(')');
        return {lat::diag(k), "<" + k.get_str() + ">"};
    }
    if (word == "T") {
        c.expect('(');
        std::size_t p = c.index();
        c.expect(',');
        std::size_t q = c.index();
        c.expect(',');
        std::size_t r = c.index();
        c.expect(')');
        std::string label = "T(" + std::to_string(p) + "," + std::to_string(q) + "," +
                            std::to_string(r) + ")";
        return {lat::T(p, q, r), label};
    }

    // Root lattice families, with the index either fused (A5) or separate (A_5).
    char family = word[0];
    if (family == 'A' || family == 'D' || family == 'E') {
        std::string tail = word.substr(1);
        if (!tail.empty() && tail[0] == '_') tail = tail.substr(1);
        std::size_t n;
        if (tail.empty()) {
            n = c.index();
        } else {
            for (char ch : tail)
                if (!std::isdigit(static_cast<unsigned char>(ch))) {
                    c.i = start;
                    c.fail("unknown lattice name \"" + word + "\"");
                }
            n = static_cast<std::size_t>(std::stoul(tail));
        }
        std::string label = std::string(1, family) + std::to_string(n);
        switch (family) {
            case 'A': return {lat::A(n), label};
            case 'D': return {lat::D(n), label};
            default: return {lat::E(n), label};
        }
    }
    c.i = start;
    c.fail("unknown lattice name \"" + word + "\"");
}

Parsed parse_term(Cursor& c) {
    Parsed p = parse_atom(c);
    while (c.peek() == '(') {
        c.expect('(');
        Int m = c.integer();
        c.expect(')');
        if (m == 0) c.fail("rescale by zero");
        p.lattice = rescale(p.lattice, m);
        p.label += "(" + m.get_str() + ")";
    }
    return p;
}

}  // namespace

Lattice parse_lattice(const std::string& expr) {
    Cursor c{expr};
    Parsed p = parse_term(c);
    while (c.peek() == '+') {
        c.expect('+');
        Parsed q = parse_term(c);
        p.lattice = direct_sum(p.lattice, q.lattice);
        p.label += "+" + q.label;
    }
    if (!c.done()) c.fail("trailing input");
    return p.lattice.with_label(p.label);
}

}  // namespace k3m
