#include "wdcalc/dsl.hpp"

#include <cctype>
#include <optional>

namespace wdcalc {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("parse_rep: expected ") + what, pos);
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("parse_rep: expected integer", start);
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000'000'000LL) throw ParseError("parse_rep: integer too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }

    Rat rational() {
        skip_ws();
        std::size_t start = pos;
        long long num = integer();
        if (eat('/')) {
            long long den = integer();
            if (den == 0) throw ParseError("parse_rep: zero denominator", start);
            return Rat(num, den);
        }
        return Rat(num);
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto body = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos >= text.size() || !head(text[pos]))
            throw ParseError("parse_rep: expected identifier", start);
        while (pos < text.size() && body(text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
    }

    bool keyword(std::string_view kw) {
        skip_ws();
        if (text.substr(pos, kw.size()) != kw) return false;
        std::size_t after = pos + kw.size();
        if (after < text.size() &&
            (std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_'))
            return false;
        pos = after;
        return true;
    }
};

struct Term {
    int mult = 1;
    bool seen_char = false;   // 1, chi, or op
    bool seen_t = false;
    bool seen_sp = false;
    std::optional<SquareClass> chi;  // set by chi(...)
    std::optional<std::string> op;
    Rat x = Rat(0);
    int n = 1;
};

void parse_atom(Cursor& cur, const PAdicField& F, Term& term) {
    std::size_t at = cur.pos;
    cur.skip_ws();
    at = cur.pos;
    if (cur.eat('1')) {
        if (term.seen_char || term.chi || term.op)
            throw ParseError("parse_rep: repeated character atom", at);
        term.seen_char = true;
        return;
    }
    if (cur.keyword("chi")) {
        if (term.chi || term.seen_char) throw ParseError("parse_rep: repeated chi atom", at);
        cur.expect('(', "'('");
        long long d = cur.integer();
        if (d == 0) throw ParseError("parse_rep: chi argument must be nonzero", at);
        cur.expect(')', "')'");
        term.chi = square_class(F, d);
        return;
    }
    if (cur.keyword("t")) {
        if (term.seen_t) throw ParseError("parse_rep: repeated t atom", at);
        cur.expect('(', "'('");
        term.x = cur.rational();
        cur.expect(')', "')'");
        term.seen_t = true;
        return;
    }
    if (cur.keyword("sp")) {
        if (term.seen_sp) throw ParseError("parse_rep: repeated sp atom", at);
        cur.expect('(', "'('");
        long long n = cur.integer();
        if (n < 1) throw ParseError("parse_rep: sp argument must be >= 1", at);
        cur.expect(')', "')'");
        term.n = static_cast<int>(n);
        term.seen_sp = true;
        return;
    }
    if (cur.keyword("op")) {
        if (term.op || term.seen_char) throw ParseError("parse_rep: repeated character atom", at);
        cur.expect('(', "'('");
        term.op = cur.ident();
        cur.expect(')', "')'");
        return;
    }
    throw ParseError("parse_rep: expected atom", at);
}

Term parse_term(Cursor& cur, const PAdicField& F) {
    Term term;
    // a leading digit other than a lone "1" is a multiplicity
    cur.skip_ws();
    std::size_t at = cur.pos;
    if (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        long long v = cur.integer();
        if (cur.peek() == '*') {
            cur.eat('*');
            if (v < 1) throw ParseError("parse_rep: multiplicity must be >= 1", at);
            if (v > 1'000'000) throw ParseError("parse_rep: multiplicity too large", at);
            term.mult = static_cast<int>(v);
        } else if (v == 1) {
            term.seen_char = true;  // the atom "1"
            return term;
        } else {
            throw ParseError("parse_rep: expected atom", at);
        }
    }
    parse_atom(cur, F, term);
    while (cur.eat('*')) parse_atom(cur, F, term);
    return term;
}

WDIrred lower_term(const PAdicField& F, const Term& term) {
    if (term.op) {
        SquareClass twist = term.chi ? *term.chi : square_class_one(F);
        WDIrred c = opaque_irred(F, *term.op, term.x, term.n);
        c.chi = finite_opaque(F, *term.op, twist);
        return c;
    }
    SquareClass d = term.chi ? *term.chi : square_class_one(F);
    return quad_irred(d, term.x, term.n);
}

}  // namespace

WDRep parse_rep(const PAdicField& F, std::string_view text) {
    Cursor cur{text};
    WDRep out = wd_zero(F);
    if (cur.at_end()) throw ParseError("parse_rep: empty input", cur.pos);
    do {
        Term term = parse_term(cur, F);
        out = direct_sum(out, wd_single(F, lower_term(F, term), term.mult));
    } while (cur.eat('+'));
    if (!cur.at_end()) throw ParseError("parse_rep: trailing input", cur.pos);
    return out;
}

std::string print_irred(const WDIrred& c) {
    std::string s;
    auto append = [&s](const std::string& atom) {
        if (!s.empty()) s += "*";
        s += atom;
    };
    if (c.chi.opaque) {
        append("op(" + c.chi.label + ")");
        if (!c.chi.d.is_one()) append("chi(" + std::to_string(class_label(c.chi.d)) + ")");
    } else if (!c.chi.d.is_one()) {
        append("chi(" + std::to_string(class_label(c.chi.d)) + ")");
    }
    if (c.x != Rat(0)) append("t(" + rat_to_string(c.x) + ")");
    if (c.n != 1) append("sp(" + std::to_string(c.n) + ")");
    if (s.empty()) s = "1";
    return s;
}

std::string print_rep(const WDRep& A) {
    if (A.parts.empty()) throw std::domain_error("print_rep: zero representation");
    std::string s;
    for (const auto& [c, mult] : A.parts) {
        if (!s.empty()) s += "+";
        if (mult > 1) s += std::to_string(mult) + "*";
        s += print_irred(c);
    }
    return s;
}

}  // namespace wdcalc
