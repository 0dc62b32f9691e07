#include "coslice/sphere_literal.hpp"

#include "coslice/json_io.hpp"

#include <cctype>

namespace coslice {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("sphere literal: " + what + " at offset " + std::to_string(pos));
    }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    long integer() {
        skip_space();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        if (pos - start > 9) fail("integer too large");
        return std::stol(text.substr(start, pos - start));
    }

    bool word(const char* w) {
        skip_space();
        size_t len = std::strlen(w);
        if (text.compare(pos, len, w) != 0) return false;
        size_t end = pos + len;
        if (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) return false;
        pos = end;
        return true;
    }
};

// Multiplicities in a signed working vector plus a signed trivial count.
struct Builder {
    CyclicGroupSpec spec;
    std::vector<long> mult;
    long trivial = 0;

    explicit Builder(const CyclicGroupSpec& s)
        : spec(s), mult(static_cast<size_t>(rep_index_count(s)), 0) {}

    void add_index(long j, long count) {
        long order = spec.order();
        long folded = ((j % order) + order) % order;
        if (2 * folded > order) folded = order - folded;
        if (folded == 0)
            trivial += count;
        else
            mult[static_cast<size_t>(folded)] += count;
    }
};

void parse_term(Cursor& cur, Builder& out, long sign) {
    long coefficient = 1;
    bool have_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        coefficient = cur.integer();
        have_coefficient = true;
        if (!cur.eat('*')) {
            out.trivial += sign * coefficient;  // bare integer: trivial summands
            return;
        }
    }

    long count = sign * coefficient;
    if (cur.word("rho")) {
        if (cur.eat('^')) count *= cur.integer();
        out.trivial += count;
        for (size_t j = 1; j < out.mult.size(); ++j) out.mult[j] += count;
    } else if (cur.word("triv")) {
        if (cur.eat('^')) count *= cur.integer();
        out.trivial += count;
    } else if (cur.word("lambda")) {
        if (!cur.eat('(')) cur.fail("expected '(' after lambda");
        long index = cur.integer();
        if (!cur.eat(')')) cur.fail("expected ')'");
        if (cur.eat('^')) count *= cur.integer();
        out.add_index(index, count);
    } else if (cur.word("perm")) {
        if (have_coefficient) cur.fail("perm takes no coefficient");
        if (!cur.eat('[')) cur.fail("expected '[' after perm");
        std::vector<long> listed;
        listed.push_back(cur.integer());
        while (cur.eat(',')) listed.push_back(cur.integer());
        if (!cur.eat(']')) cur.fail("expected ']'");
        if (static_cast<long>(listed.size()) != out.spec.n + 1)
            cur.fail("perm needs exactly n+1 orbit counts");
        // Listed from fixed points down to free orbits.
        GSet x{out.spec, std::vector<long>(listed.rbegin(), listed.rend())};
        check_gset(x);
        Rep v = permutation_rep(x);
        out.trivial += count * v.mult[0];
        for (size_t j = 1; j < out.mult.size(); ++j) out.mult[j] += count * v.mult[j];
    } else {
        cur.fail("expected a term");
    }
}

}  // namespace

SphereSpec parse_sphere_literal(const std::string& text, const CyclicGroupSpec& spec) {
    check_spec(spec);
    Cursor cur{text};
    Builder out(spec);

    long sign = cur.eat('-') ? -1 : 1;
    parse_term(cur, out, sign);
    while (!cur.done()) {
        if (cur.eat('+'))
            sign = 1;
        else if (cur.eat('-'))
            sign = -1;
        else
            cur.fail("expected '+' or '-'");
        parse_term(cur, out, sign);
    }

    for (size_t j = 1; j < out.mult.size(); ++j)
        if (out.mult[j] < 0)
            throw std::domain_error(
                "unsupported virtual sphere: negative multiplicity of a nontrivial irreducible");

    SphereSpec s{Rep{spec, out.mult}, 0};
    if (out.trivial >= 0) {
        s.v.mult[0] = out.trivial;
    } else {
        s.v.mult[0] = 0;
        s.desusp = -out.trivial;
    }
    return s;
}

}  // namespace coslice
