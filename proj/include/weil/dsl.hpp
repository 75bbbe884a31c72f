#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "weil/errors.hpp"
#include "weil/rational.hpp"
#include "weil/simplicial.hpp"

namespace weil::dsl {

struct SourcePos {
    int line = 1;
    int col = 1;
    bool operator==(const SourcePos&) const = default;
    std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

/// Syntax-level problems: bad tokens, undefined or redefined names, arity
/// mismatches. These carry a position and map to exit code 2.
struct ParseError : error {
    SourcePos pos;
    ParseError(const std::string& msg, SourcePos p)
        : error(p.str() + ": " + msg), pos(p) {}
};

// ---- AST ------------------------------------------------------------------
//
//   script    := { statement }
//   statement := "obj" NAME "=" objexpr
//              | "map" NAME ":" objexpr "->" objexpr "=" "(" poly {"," poly} ")"
//              | "check" ("pullback"|"limit") "{" "apex" "=" objexpr ";"
//                    "legs" "=" "[" NAME {"," NAME} "]" ";"
//                    "arrows" "=" "[" NAME {"," NAME} "]" [";"] "}"
//              | "check" "compose" NAME "." NAME "==" NAME
//              | "check" "zero-sum" "{" "witness" "=" NAME ";"
//                    "parts" "=" "[" NAME "," NAME "," NAME "]" [";"] "}"
//   objexpr   := objatom { "(+)" objatom }
//   objatom   := "D" [ "^" INT [ "{" { "(" INT "," INT {"," INT} ")" } "}" ] ]
//              | "D" "(" INT ")"
//              | NAME
//   poly      := ["-"] term { ("+"|"-") term }
//   term      := coeff ["*" vars] | vars         coeff := INT ["/" INT]
//   vars      := VAR {"*" VAR}                   VAR   := d<k>
//
// "#" starts a line comment. Coordinates are 1-indexed d1..dn.

struct ObjAtom {
    enum class Kind { d_power, d_paren, name } kind = Kind::name;
    int n = 1;                            // d_power / d_paren
    std::vector<std::vector<int>> tuples; // d_power only
    std::string name;                     // name only
    bool operator==(const ObjAtom&) const = default;
};

struct ObjExpr {
    std::vector<ObjAtom> atoms;  // combined left to right with (+)
    bool operator==(const ObjExpr&) const = default;
};

struct PolyTerm {
    Rational coeff;
    std::vector<int> vars;  // strictly increasing d-indices
    bool operator==(const PolyTerm& o) const { return coeff == o.coeff && vars == o.vars; }
};

struct PolyExpr {
    std::vector<PolyTerm> terms;
    bool operator==(const PolyExpr&) const = default;
};

struct ObjDef {
    std::string name;
    ObjExpr expr;
    SourcePos pos;
    // positions are layout, not content
    bool operator==(const ObjDef& o) const { return name == o.name && expr == o.expr; }
};

struct MapDef {
    std::string name;
    ObjExpr source, target;
    std::vector<PolyExpr> components;
    SourcePos pos;
    bool operator==(const MapDef& o) const {
        return name == o.name && source == o.source && target == o.target &&
               components == o.components;
    }
};

struct CheckLimit {
    bool pullback = false;
    ObjExpr apex;
    std::vector<std::string> legs;
    std::vector<std::string> arrows;
    SourcePos pos;
    bool operator==(const CheckLimit& o) const {
        return pullback == o.pullback && apex == o.apex && legs == o.legs && arrows == o.arrows;
    }
};

struct CheckCompose {
    std::string first, second, expected;  // first . second == expected
    SourcePos pos;
    bool operator==(const CheckCompose& o) const {
        return first == o.first && second == o.second && expected == o.expected;
    }
};

struct CheckZeroSum {
    std::string witness;
    std::vector<std::string> parts;
    SourcePos pos;
    bool operator==(const CheckZeroSum& o) const {
        return witness == o.witness && parts == o.parts;
    }
};

using Statement = std::variant<ObjDef, MapDef, CheckLimit, CheckCompose, CheckZeroSum>;

struct Script {
    std::vector<Statement> statements;
    bool operator==(const Script&) const = default;
};

// ---- lexer ------------------------------------------------------------------

namespace lex {

struct Token {
    enum class Kind { ident, integer, sym, end } kind = Kind::end;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_space();
        tok_.pos = pos_;
        if (i_ >= src_.size()) {
            tok_ = {Token::Kind::end, "", pos_};
            return;
        }
        char c = src_[i_];
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < src_.size() &&
                   (isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            tok_ = {Token::Kind::ident, std::string(src_.substr(i_, j - i_)), pos_};
            bump(j - i_);
            return;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < src_.size() && isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {Token::Kind::integer, std::string(src_.substr(i_, j - i_)), pos_};
            bump(j - i_);
            return;
        }
        // multi-character symbols
        if (match("(+)")) return;
        if (match("->")) return;
        if (match("==")) return;
        static const char singles[] = "=:(){}[],;*+-/.^";
        for (char s : singles) {
            if (c == s) {
                tok_ = {Token::Kind::sym, std::string(1, c), pos_};
                bump(1);
                return;
            }
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    bool match(const char* sym) {
        std::string_view s(sym);
        if (src_.substr(i_, s.size()) == s) {
            tok_ = {Token::Kind::sym, std::string(s), pos_};
            bump(s.size());
            return true;
        }
        return false;
    }

    void skip_space() {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == '#') {
                while (i_ < src_.size() && src_[i_] != '\n') bump(1);
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump(1);
            } else {
                break;
            }
        }
    }

    void bump(size_t k) {
        for (size_t j = 0; j < k; ++j) {
            if (src_[i_] == '\n') {
                ++pos_.line;
                pos_.col = 1;
            } else {
                ++pos_.col;
            }
            ++i_;
        }
    }

    std::string_view src_;
    size_t i_ = 0;
    SourcePos pos_;
    Token tok_;
};

}  // namespace lex

// ---- parser -----------------------------------------------------------------

/// Single-pass parser; resolves names as it goes so that undefined names,
/// redefinitions and out-of-range coordinates are caught with positions.
class Parser {
public:
    explicit Parser(std::string_view src) : lx_(src) {}

    Script parse_script() {
        Script s;
        while (lx_.peek().kind != lex::Token::Kind::end) {
            s.statements.push_back(parse_statement());
        }
        return s;
    }

    /// Entry point for object expressions alone (the `dim` command).
    ObjExpr parse_object_expression_all() {
        ObjExpr e = parse_objexpr();
        if (lx_.peek().kind != lex::Token::Kind::end)
            throw ParseError("trailing input after object expression", lx_.peek().pos);
        return e;
    }

private:
    Statement parse_statement() {
        lex::Token t = expect_ident();
        if (t.text == "obj") return parse_objdef(t.pos);
        if (t.text == "map") return parse_mapdef(t.pos);
        if (t.text == "check") return parse_check(t.pos);
        throw ParseError("expected 'obj', 'map' or 'check', got '" + t.text + "'", t.pos);
    }

    ObjDef parse_objdef(SourcePos pos) {
        std::string name = fresh_name();
        expect_sym("=");
        ObjDef def{name, parse_objexpr(), pos};
        objects_.emplace(name, object_arity(def.expr));
        return def;
    }

    MapDef parse_mapdef(SourcePos pos) {
        std::string name = fresh_name();
        expect_sym(":");
        ObjExpr src = parse_objexpr();
        expect_sym("->");
        ObjExpr tgt = parse_objexpr();
        expect_sym("=");
        expect_sym("(");
        int src_arity = object_arity(src);
        std::vector<PolyExpr> comps;
        comps.push_back(parse_poly(src_arity));
        while (accept_sym(",")) comps.push_back(parse_poly(src_arity));
        expect_sym(")");
        int tgt_arity = object_arity(tgt);
        if (int(comps.size()) != tgt_arity)
            throw ParseError("arity mismatch: " + std::to_string(comps.size()) +
                                 " components for target of arity " + std::to_string(tgt_arity),
                             pos);
        maps_.insert(name);
        return MapDef{name, std::move(src), std::move(tgt), std::move(comps), pos};
    }

    Statement parse_check(SourcePos pos) {
        lex::Token kind = expect_ident();
        std::string k = kind.text;
        if (k == "zero" && accept_sym("-")) {
            lex::Token s = expect_ident();
            if (s.text != "sum") throw ParseError("expected 'zero-sum'", s.pos);
            k = "zero-sum";
        }
        if (k == "pullback" || k == "limit") return parse_check_limit(k == "pullback", pos);
        if (k == "compose") return parse_check_compose(pos);
        if (k == "zero-sum") return parse_check_zero_sum(pos);
        throw ParseError("unknown check kind '" + k + "'", kind.pos);
    }

    CheckLimit parse_check_limit(bool pullback, SourcePos pos) {
        CheckLimit c;
        c.pullback = pullback;
        c.pos = pos;
        expect_sym("{");
        expect_keyword("apex");
        expect_sym("=");
        c.apex = parse_objexpr();
        expect_sym(";");
        expect_keyword("legs");
        expect_sym("=");
        c.legs = parse_name_list(&Parser::known_map);
        expect_sym(";");
        expect_keyword("arrows");
        expect_sym("=");
        c.arrows = parse_name_list(&Parser::known_map);
        accept_sym(";");
        expect_sym("}");
        size_t want_arrows = pullback ? 2 : 2 * c.legs.size();
        if (pullback && c.legs.size() != 2)
            throw ParseError("pullback takes exactly 2 legs", pos);
        if (!pullback && c.legs.size() < 2)
            throw ParseError("limit takes at least 2 legs", pos);
        if (c.arrows.size() != want_arrows)
            throw ParseError("expected " + std::to_string(want_arrows) + " arrows, got " +
                                 std::to_string(c.arrows.size()),
                             pos);
        return c;
    }

    CheckCompose parse_check_compose(SourcePos pos) {
        CheckCompose c;
        c.pos = pos;
        c.first = known_map(expect_ident());
        expect_sym(".");
        c.second = known_map(expect_ident());
        expect_sym("==");
        c.expected = known_map(expect_ident());
        return c;
    }

    CheckZeroSum parse_check_zero_sum(SourcePos pos) {
        CheckZeroSum c;
        c.pos = pos;
        expect_sym("{");
        expect_keyword("witness");
        expect_sym("=");
        c.witness = known_map(expect_ident());
        expect_sym(";");
        expect_keyword("parts");
        expect_sym("=");
        c.parts = parse_name_list(&Parser::known_map);
        accept_sym(";");
        expect_sym("}");
        if (c.parts.size() != 3) throw ParseError("zero-sum takes exactly 3 parts", pos);
        return c;
    }

    ObjExpr parse_objexpr() {
        ObjExpr e;
        e.atoms.push_back(parse_objatom());
        while (accept_sym("(+)")) e.atoms.push_back(parse_objatom());
        return e;
    }

    ObjAtom parse_objatom() {
        lex::Token t = expect_ident();
        ObjAtom a;
        if (t.text == "D") {
            if (accept_sym("^")) {
                a.kind = ObjAtom::Kind::d_power;
                a.n = expect_int();
                if (accept_sym("{")) {
                    while (!accept_sym("}")) {
                        expect_sym("(");
                        std::vector<int> tup;
                        tup.push_back(expect_int());
                        while (accept_sym(",")) tup.push_back(expect_int());
                        expect_sym(")");
                        for (int x : tup)
                            if (x < 1 || x > a.n)
                                throw ParseError("index " + std::to_string(x) +
                                                     " outside [1," + std::to_string(a.n) + "]",
                                                 t.pos);
                        for (size_t i = 1; i < tup.size(); ++i)
                            if (tup[i] <= tup[i - 1])
                                throw ParseError("forbidden tuple must be strictly increasing",
                                                 t.pos);
                        if (tup.size() < 2)
                            throw ParseError("forbidden tuple needs at least 2 indices", t.pos);
                        a.tuples.push_back(std::move(tup));
                    }
                }
                return a;
            }
            if (accept_sym("(")) {
                a.kind = ObjAtom::Kind::d_paren;
                a.n = expect_int();
                expect_sym(")");
                return a;
            }
            a.kind = ObjAtom::Kind::d_power;  // bare D
            a.n = 1;
            return a;
        }
        auto it = objects_.find(t.text);
        if (it == objects_.end())
            throw ParseError("unknown object name '" + t.text + "'", t.pos);
        a.kind = ObjAtom::Kind::name;
        a.name = t.text;
        return a;
    }

    PolyExpr parse_poly(int arity) {
        PolyExpr p;
        bool neg = accept_sym("-");
        p.terms.push_back(parse_term(arity, neg));
        for (;;) {
            if (accept_sym("+")) p.terms.push_back(parse_term(arity, false));
            else if (accept_sym("-")) p.terms.push_back(parse_term(arity, true));
            else break;
        }
        return p;
    }

    PolyTerm parse_term(int arity, bool negative) {
        PolyTerm t;
        t.coeff = 1;
        if (lx_.peek().kind == lex::Token::Kind::integer) {
            long num = expect_int();
            long den = 1;
            if (accept_sym("/")) den = expect_int();
            if (den == 0) throw ParseError("zero denominator", lx_.peek().pos);
            t.coeff = rat(num, den);
            if (!accept_sym("*")) {
                if (negative) t.coeff = -t.coeff;
                return t;  // constant term
            }
        }
        t.vars.push_back(parse_var(arity));
        while (accept_sym("*")) {
            if (lx_.peek().kind == lex::Token::Kind::integer)
                throw ParseError("coefficient must come first in a term", lx_.peek().pos);
            t.vars.push_back(parse_var(arity));
        }
        std::sort(t.vars.begin(), t.vars.end());
        for (size_t i = 1; i < t.vars.size(); ++i)
            if (t.vars[i] == t.vars[i - 1])
                throw ParseError("repeated coordinate d" + std::to_string(t.vars[i]) +
                                     " in a term (its square is zero)",
                                 lx_.peek().pos);
        if (negative) t.coeff = -t.coeff;
        return t;
    }

    int parse_var(int arity) {
        lex::Token t = expect_ident();
        if (t.text.size() < 2 || t.text[0] != 'd')
            throw ParseError("expected a coordinate d1..d" + std::to_string(arity) + ", got '" +
                                 t.text + "'",
                             t.pos);
        for (size_t i = 1; i < t.text.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t.text[i])))
                throw ParseError("expected a coordinate, got '" + t.text + "'", t.pos);
        int k = 0;
        try {
            k = std::stoi(t.text.substr(1));
        } catch (const std::out_of_range&) {
            throw ParseError("coordinate '" + t.text + "' out of range", t.pos);
        }
        if (k < 1 || k > arity)
            throw ParseError("arity mismatch: coordinate d" + std::to_string(k) +
                                 " outside source arity " + std::to_string(arity),
                             t.pos);
        return k;
    }

    std::vector<std::string> parse_name_list(std::string (Parser::*check)(const lex::Token&)) {
        expect_sym("[");
        std::vector<std::string> out;
        if (!accept_sym("]")) {
            out.push_back((this->*check)(expect_ident()));
            while (accept_sym(",")) out.push_back((this->*check)(expect_ident()));
            expect_sym("]");
        }
        return out;
    }

    std::string known_map(const lex::Token& t) {
        if (!maps_.count(t.text))
            throw ParseError("unknown map name '" + t.text + "'", t.pos);
        return t.text;
    }

    std::string fresh_name() {
        lex::Token t = expect_ident();
        if (t.text == "D" || t.text == "obj" || t.text == "map" || t.text == "check")
            throw ParseError("'" + t.text + "' is reserved", t.pos);
        if (objects_.count(t.text) || maps_.count(t.text))
            throw ParseError("redefinition of '" + t.text + "'", t.pos);
        return t.text;
    }

    int object_arity(const ObjExpr& e) const {
        int n = 0;
        for (const ObjAtom& a : e.atoms) {
            if (a.kind == ObjAtom::Kind::name) n += objects_.at(a.name);
            else n += a.n;
        }
        return n;
    }

    lex::Token expect_ident() {
        lex::Token t = lx_.next();
        if (t.kind != lex::Token::Kind::ident)
            throw ParseError("expected a name, got '" + t.text + "'", t.pos);
        return t;
    }

    void expect_keyword(const char* kw) {
        lex::Token t = expect_ident();
        if (t.text != kw)
            throw ParseError(std::string("expected '") + kw + "', got '" + t.text + "'", t.pos);
    }

    int expect_int() {
        lex::Token t = lx_.next();
        if (t.kind != lex::Token::Kind::integer)
            throw ParseError("expected an integer, got '" + t.text + "'", t.pos);
        try {
            return std::stoi(t.text);
        } catch (const std::out_of_range&) {
            throw ParseError("integer '" + t.text + "' out of range", t.pos);
        }
    }

    void expect_sym(const char* s) {
        lex::Token t = lx_.next();
        if (t.kind != lex::Token::Kind::sym || t.text != s)
            throw ParseError(std::string("expected '") + s + "', got '" +
                                 (t.kind == lex::Token::Kind::end ? "end of input" : t.text) + "'",
                             t.pos);
    }

    bool accept_sym(const char* s) {
        if (lx_.peek().kind == lex::Token::Kind::sym && lx_.peek().text == s) {
            lx_.next();
            return true;
        }
        return false;
    }

    lex::Lexer lx_;
    std::map<std::string, int> objects_;  // name -> arity
    std::set<std::string> maps_;
};

inline Script parse(std::string_view text) { return Parser(text).parse_script(); }

// ---- pretty printer ---------------------------------------------------------

inline std::string print(const ObjExpr& e);

inline std::string print(const ObjAtom& a) {
    switch (a.kind) {
        case ObjAtom::Kind::d_paren:
            return "D(" + std::to_string(a.n) + ")";
        case ObjAtom::Kind::name:
            return a.name;
        case ObjAtom::Kind::d_power: {
            if (a.n == 1 && a.tuples.empty()) return "D";
            std::string out = "D^" + std::to_string(a.n);
            if (!a.tuples.empty()) {
                out += " {";
                for (const auto& tup : a.tuples) {
                    out += " (";
                    for (size_t i = 0; i < tup.size(); ++i) {
                        if (i) out += ",";
                        out += std::to_string(tup[i]);
                    }
                    out += ")";
                }
                out += " }";
            }
            return out;
        }
    }
    return "";
}

inline std::string print(const ObjExpr& e) {
    std::string out;
    for (size_t i = 0; i < e.atoms.size(); ++i) {
        if (i) out += " (+) ";
        out += print(e.atoms[i]);
    }
    return out;
}

inline std::string print(const PolyExpr& p) {
    if (p.terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < p.terms.size(); ++i) {
        const PolyTerm& t = p.terms[i];
        Rational c = t.coeff;
        bool neg = c < 0;
        if (i == 0) {
            if (neg) { out += "-"; c = -c; }
        } else {
            out += neg ? " - " : " + ";
            if (neg) c = -c;
        }
        std::string vars;
        for (size_t j = 0; j < t.vars.size(); ++j) {
            if (j) vars += "*";
            vars += "d" + std::to_string(t.vars[j]);
        }
        if (t.vars.empty()) out += to_string(c);
        else if (c == 1) out += vars;
        else out += to_string(c) + "*" + vars;
    }
    return out;
}

inline std::string print(const Statement& st);

inline std::string print(const Script& s) {
    std::string out;
    for (const Statement& st : s.statements) out += print(st) + "\n";
    return out;
}

inline std::string print(const Statement& st) {
    struct V {
        std::string operator()(const ObjDef& d) const {
            return "obj " + d.name + " = " + print(d.expr);
        }
        std::string operator()(const MapDef& d) const {
            std::string out = "map " + d.name + " : " + print(d.source) + " -> " +
                              print(d.target) + " = (";
            for (size_t i = 0; i < d.components.size(); ++i) {
                if (i) out += ", ";
                out += print(d.components[i]);
            }
            return out + ")";
        }
        std::string operator()(const CheckLimit& c) const {
            std::string out = std::string("check ") + (c.pullback ? "pullback" : "limit") +
                              " { apex = " + print(c.apex) + "; legs = [";
            for (size_t i = 0; i < c.legs.size(); ++i) out += (i ? ", " : "") + c.legs[i];
            out += "]; arrows = [";
            for (size_t i = 0; i < c.arrows.size(); ++i) out += (i ? ", " : "") + c.arrows[i];
            return out + "] }";
        }
        std::string operator()(const CheckCompose& c) const {
            return "check compose " + c.first + " . " + c.second + " == " + c.expected;
        }
        std::string operator()(const CheckZeroSum& c) const {
            std::string out = "check zero-sum { witness = " + c.witness + "; parts = [";
            for (size_t i = 0; i < c.parts.size(); ++i) out += (i ? ", " : "") + c.parts[i];
            return out + "] }";
        }
    };
    return std::visit(V{}, st);
}

}  // namespace weil::dsl
