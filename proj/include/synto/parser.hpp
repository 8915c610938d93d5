#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "synto/algebra.hpp"
#include "synto/errors.hpp"
#include "synto/formula.hpp"

namespace synto {

namespace detail {

enum class Tok {
    end,
    ident,
    number,
    lbrace,
    rbrace,
    lparen,
    rparen,
    comma,
    dot,
    colon,
    arrow,   // ->
    iff,     // <->
    amp,
    pipe,
    bang,
    eq,
    neq,
    tilde,
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    long number = 0;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string text) : text_(std::move(text)) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        tok_ = Token{};
        tok_.pos = i_;
        if (i_ >= text_.size()) return;
        const char c = text_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            tok_.kind = Tok::ident;
            tok_.text = text_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            long v = 0;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
                v = v * 10 + (text_[j] - '0');
                ++j;
            }
            tok_.kind = Tok::number;
            tok_.number = v;
            tok_.text = text_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        auto two = [&](char a, char b) {
            return c == a && i_ + 1 < text_.size() && text_[i_ + 1] == b;
        };
        if (c == '<') {
            if (i_ + 2 < text_.size() && text_[i_ + 1] == '-' && text_[i_ + 2] == '>') {
                tok_.kind = Tok::iff;
                i_ += 3;
                return;
            }
            throw parse_error("stray '<'", i_);
        }
        if (two('-', '>')) {
            tok_.kind = Tok::arrow;
            i_ += 2;
            return;
        }
        if (two('!', '=')) {
            tok_.kind = Tok::neq;
            i_ += 2;
            return;
        }
        ++i_;
        switch (c) {
            case '{': tok_.kind = Tok::lbrace; return;
            case '}': tok_.kind = Tok::rbrace; return;
            case '(': tok_.kind = Tok::lparen; return;
            case ')': tok_.kind = Tok::rparen; return;
            case ',': tok_.kind = Tok::comma; return;
            case '.': tok_.kind = Tok::dot; return;
            case ':': tok_.kind = Tok::colon; return;
            case '&': tok_.kind = Tok::amp; return;
            case '|': tok_.kind = Tok::pipe; return;
            case '!': tok_.kind = Tok::bang; return;
            case '=': tok_.kind = Tok::eq; return;
            case '~': tok_.kind = Tok::tilde; return;
            default: throw parse_error(std::string("unexpected character '") + c + "'", i_ - 1);
        }
    }

    std::string text_;
    std::size_t i_ = 0;
    Token tok_;
};

inline const std::map<std::string, TermOp>& term_op_names() {
    static const std::map<std::string, TermOp> ops = {
        {"pair", TermOp::pair},       {"pexcl", TermOp::pair_exclusion},
        {"op", TermOp::opair},        {"aop", TermOp::anti_opair},
        {"cup", TermOp::cup},         {"cap", TermOp::cap},
        {"minus", TermOp::minus},     {"Union", TermOp::big_union},
        {"CInter", TermOp::comp_inter}, {"pow", TermOp::power},
        {"rich", TermOp::richard},    {"prod", TermOp::cartesian},
        {"aprod", TermOp::anti_cartesian}, {"diag", TermOp::diag},
        {"choice", TermOp::choose},   {"S", TermOp::supplement},
        {"fund", TermOp::fund},       {"anfd", TermOp::anfd},
        {"citer", TermOp::citer},
    };
    return ops;
}

inline const char* term_op_name(TermOp op) {
    switch (op) {
        case TermOp::pair: return "pair";
        case TermOp::pair_exclusion: return "pexcl";
        case TermOp::opair: return "op";
        case TermOp::anti_opair: return "aop";
        case TermOp::cup: return "cup";
        case TermOp::cap: return "cap";
        case TermOp::minus: return "minus";
        case TermOp::big_union: return "Union";
        case TermOp::comp_inter: return "CInter";
        case TermOp::power: return "pow";
        case TermOp::richard: return "rich";
        case TermOp::cartesian: return "prod";
        case TermOp::anti_cartesian: return "aprod";
        case TermOp::diag: return "diag";
        case TermOp::choose: return "choice";
        case TermOp::complement: return "~";
        case TermOp::supplement: return "S";
        case TermOp::fund: return "fund";
        case TermOp::anfd: return "anfd";
        case TermOp::citer: return "citer";
        case TermOp::eo_supplement: return "eo(S, ";
        case TermOp::eo_complement: return "eo(~, ";
        case TermOp::eo_singleton: return "eo(sing, ";
        case TermOp::eo_identity: return "eo(id, ";
    }
    return "?";
}

inline bool is_keyword(const std::string& s) {
    static const std::set<std::string> kws = {
        "in",   "subset", "ssub",  "equi", "mequi", "forall", "exists", "true",
        "false", "co",    "V",     "eo",   "ord",   "sep",    "conf",   "repl",
        "arepl", "Prod",  "AProd", "eon",  "aeon",  "sing",   "id",
    };
    return kws.count(s) > 0 || term_op_names().count(s) > 0;
}

inline bool is_param_name(const std::string& s) {
    return s.size() == 1 && std::isupper(static_cast<unsigned char>(s[0])) && !is_keyword(s);
}

class Parser {
public:
    explicit Parser(std::string text) : text_(std::move(text)), lex_(text_) {}

    FormulaPtr formula() {
        FormulaPtr f = parse_formula();
        expect_end();
        return f;
    }

    TermPtr term() {
        TermPtr t = parse_term();
        expect_end();
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, lex_.peek().pos); }

    void expect_end() {
        if (lex_.peek().kind != Tok::end) fail("trailing input");
    }

    Token expect(Tok k, const char* what) {
        if (lex_.peek().kind != k) fail(std::string("expected ") + what);
        return lex_.next();
    }

    bool accept(Tok k) {
        if (lex_.peek().kind == k) {
            lex_.next();
            return true;
        }
        return false;
    }

    std::string bind(const std::string& var) {
        if (bound_.count(var)) fail("variable '" + var + "' is already bound");
        bound_.insert(var);
        return var;
    }
    void unbind(const std::string& var) { bound_.erase(var); }

    // formula := iff, right-associative chain down to atoms
    FormulaPtr parse_formula() { return parse_iff(); }

    FormulaPtr parse_iff() {
        FormulaPtr l = parse_implies();
        if (accept(Tok::iff)) return f_iff(std::move(l), parse_iff());
        return l;
    }

    FormulaPtr parse_implies() {
        FormulaPtr l = parse_or();
        if (accept(Tok::arrow)) return f_implies(std::move(l), parse_implies());
        return l;
    }

    FormulaPtr parse_or() {
        FormulaPtr l = parse_and();
        while (accept(Tok::pipe)) l = f_or(std::move(l), parse_and());
        return l;
    }

    FormulaPtr parse_and() {
        FormulaPtr l = parse_unary();
        while (accept(Tok::amp)) l = f_and(std::move(l), parse_unary());
        return l;
    }

    FormulaPtr parse_unary() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::bang) {
            lex_.next();
            return f_not(parse_unary());
        }
        if (t.kind == Tok::ident && (t.text == "forall" || t.text == "exists")) {
            const bool universal = t.text == "forall";
            lex_.next();
            Quantifier q = universal ? Quantifier::forall : Quantifier::exists;
            if (!universal && accept(Tok::bang)) q = Quantifier::exists_unique;
            std::string var = expect(Tok::ident, "a variable").text;
            if (is_keyword(var)) fail("'" + var + "' is reserved");
            std::optional<TermPtr> domain;
            if (lex_.peek().kind == Tok::ident && lex_.peek().text == "in") {
                if (q == Quantifier::exists_unique) fail("exists! does not take a bound");
                lex_.next();
                domain = parse_term();
            }
            expect(Tok::dot, "'.'");
            bind(var);
            FormulaPtr body = parse_iff();
            unbind(var);
            if (domain) return f_bquant(universal, var, *domain, std::move(body));
            return f_quant(q, var, std::move(body));
        }
        return parse_atom();
    }

    FormulaPtr parse_atom() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::ident) {
            if (t.text == "true") {
                lex_.next();
                return f_truth(true);
            }
            if (t.text == "false") {
                lex_.next();
                return f_truth(false);
            }
            if (t.text == "eon" || t.text == "aeon") {
                const bool anti = t.text == "aeon";
                lex_.next();
                expect(Tok::lparen, "'('");
                TermPtr arg = parse_term();
                expect(Tok::rparen, "')'");
                return f_pred(anti ? UnaryPred::anti_finite_ordinal : UnaryPred::finite_ordinal,
                              std::move(arg));
            }
        }
        if (t.kind == Tok::lparen) {
            // Either a parenthesized formula or a parenthesized term followed
            // by a relation; resolve by trying the term reading first.
            Snapshot snap = save();
            try {
                lex_.next();
                TermPtr lhs = parse_term();
                expect(Tok::rparen, "')'");
                if (auto rel = peek_relation()) return parse_relation_rhs(std::move(lhs), *rel);
                throw parse_error("not a relational atom", lex_.peek().pos);
            } catch (const parse_error&) {
                restore(snap);
            }
            expect(Tok::lparen, "'('");
            FormulaPtr f = parse_formula();
            expect(Tok::rparen, "')'");
            return f;
        }
        TermPtr lhs = parse_term();
        if (auto rel = peek_relation()) return parse_relation_rhs(std::move(lhs), *rel);
        if (const auto* ma = std::get_if<TMapApply>(&lhs->node))
            return f_param_pred(ma->fn, ma->arg); // B(y) in predicate position
        fail("expected a relation after the term");
    }

    enum class Relation { member, eq, neq, subset, ssub, equi, mequi };

    std::optional<Relation> peek_relation() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::eq) return Relation::eq;
        if (t.kind == Tok::neq) return Relation::neq;
        if (t.kind == Tok::ident) {
            if (t.text == "in") return Relation::member;
            if (t.text == "subset") return Relation::subset;
            if (t.text == "ssub") return Relation::ssub;
            if (t.text == "equi") return Relation::equi;
            if (t.text == "mequi") return Relation::mequi;
        }
        return std::nullopt;
    }

    FormulaPtr parse_relation_rhs(TermPtr lhs, Relation rel) {
        lex_.next();
        TermPtr rhs = parse_term();
        switch (rel) {
            case Relation::member: return f_member(std::move(lhs), std::move(rhs));
            case Relation::eq: return f_equal(std::move(lhs), std::move(rhs));
            case Relation::neq: return f_not(f_equal(std::move(lhs), std::move(rhs)));
            case Relation::subset: return f_rel(Rel::subset, std::move(lhs), std::move(rhs));
            case Relation::ssub: return f_rel(Rel::strict_subset, std::move(lhs), std::move(rhs));
            case Relation::equi: return f_rel(Rel::equipollent, std::move(lhs), std::move(rhs));
            case Relation::mequi:
                return f_rel(Rel::mirror_equipollent, std::move(lhs), std::move(rhs));
        }
        fail("bad relation");
    }

    TermPtr parse_term() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::tilde) {
            lex_.next();
            return tapply(TermOp::complement, {parse_term()});
        }
        if (t.kind == Tok::lparen) {
            lex_.next();
            TermPtr inner = parse_term();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (t.kind == Tok::number) {
            if (t.number != 0) fail("numerals other than 0 are only valid inside ord(n)");
            lex_.next();
            return tlit(empty_set());
        }
        if (t.kind == Tok::lbrace) return parse_braces(false);
        if (t.kind != Tok::ident) fail("expected a term");

        std::string name = t.text;
        if (name == "V") {
            lex_.next();
            return tlit(universe_set());
        }
        if (name == "co") {
            lex_.next();
            if (lex_.peek().kind != Tok::lbrace) fail("expected '{' after co");
            return parse_braces(true);
        }
        if (name == "ord") {
            lex_.next();
            expect(Tok::lparen, "'('");
            Token n = expect(Tok::number, "a numeral");
            if (n.number > 12) fail("ord(n) supported for n <= 12");
            expect(Tok::rparen, "')'");
            return tlit(ordinal(static_cast<int>(n.number)));
        }
        if (name == "eo") {
            lex_.next();
            expect(Tok::lparen, "'('");
            TermOp op;
            if (accept(Tok::tilde)) {
                op = TermOp::eo_complement;
            } else {
                Token o = expect(Tok::ident, "an operator name (S, ~, sing, id)");
                if (o.text == "S") op = TermOp::eo_supplement;
                else if (o.text == "sing") op = TermOp::eo_singleton;
                else if (o.text == "id") op = TermOp::eo_identity;
                else fail("unknown elements-operator '" + o.text + "'");
            }
            expect(Tok::comma, "','");
            TermPtr arg = parse_term();
            expect(Tok::rparen, "')'");
            return tapply(op, {std::move(arg)});
        }
        if (name == "sep" || name == "conf" || name == "repl" || name == "arepl") {
            lex_.next();
            const BindKind kind = name == "sep" ? BindKind::separation
                                : name == "conf" ? BindKind::confiscation
                                : name == "repl" ? BindKind::replacement
                                                 : BindKind::anti_replacement;
            expect(Tok::lparen, "'('");
            TermPtr source = parse_term();
            expect(Tok::comma, "','");
            std::string var = expect(Tok::ident, "a variable").text;
            if (is_keyword(var)) fail("'" + var + "' is reserved");
            expect(Tok::arrow, "'->'");
            bind(var);
            TBind node{kind, std::move(source), var, nullptr, nullptr};
            if (kind == BindKind::separation || kind == BindKind::confiscation)
                node.pred = parse_formula();
            else
                node.map = parse_term();
            unbind(var);
            expect(Tok::rparen, "')'");
            return mk_term({std::move(node)});
        }
        if (name == "Prod" || name == "AProd") {
            lex_.next();
            const bool anti = name == "AProd";
            std::string var = expect(Tok::ident, "a variable").text;
            if (is_keyword(var)) fail("'" + var + "' is reserved");
            Token kw = expect(Tok::ident, "'in'");
            if (kw.text != "in") fail("expected 'in'");
            TermPtr index = parse_term();
            expect(Tok::dot, "'.'");
            bind(var);
            TermPtr body = parse_term();
            unbind(var);
            return mk_term({TFamilyProd{anti, var, std::move(index), std::move(body)}});
        }
        if (auto it = term_op_names().find(name); it != term_op_names().end()) {
            lex_.next();
            expect(Tok::lparen, "'('");
            std::vector<TermPtr> args;
            args.push_back(parse_term());
            if (arity(it->second) == 2) {
                expect(Tok::comma, "','");
                args.push_back(parse_term());
            }
            expect(Tok::rparen, "')'");
            return tapply(it->second, std::move(args));
        }
        if (is_keyword(name)) fail("'" + name + "' cannot start a term");
        lex_.next();
        if (is_param_name(name) && accept(Tok::lparen)) {
            TermPtr arg = parse_term();
            expect(Tok::rparen, "')'");
            return tmap_apply(name, std::move(arg));
        }
        return tvar(name);
    }

    // '{' already peeked; cofin says whether a 'co' prefix was consumed.
    TermPtr parse_braces(bool cofin) {
        expect(Tok::lbrace, "'{'");
        if (!cofin && lex_.peek().kind == Tok::ident && !is_keyword(lex_.peek().text)) {
            // lookahead for the set-builder form { x : phi }
            Snapshot snap = save();
            std::string var = lex_.next().text;
            if (accept(Tok::colon)) {
                bind(var);
                FormulaPtr body = parse_formula();
                unbind(var);
                expect(Tok::rbrace, "'}'");
                return tbuilder(var, std::move(body));
            }
            restore(snap);
        }
        std::vector<TermPtr> elems;
        if (!accept(Tok::rbrace)) {
            elems.push_back(parse_term());
            while (accept(Tok::comma)) elems.push_back(parse_term());
            expect(Tok::rbrace, "'}'");
        }
        return tfinset(std::move(elems), cofin);
    }

    struct Snapshot {
        std::string text;
        Lexer lex;
        std::set<std::string> bound;
    };
    Snapshot save() { return Snapshot{text_, lex_, bound_}; }
    void restore(Snapshot& s) {
        lex_ = s.lex;
        bound_ = s.bound;
    }

    std::string text_;
    Lexer lex_;
    std::set<std::string> bound_;
};

} // namespace detail

inline FormulaPtr parse_formula(const std::string& text) {
    return detail::Parser(text).formula();
}

inline TermPtr parse_term(const std::string& text) { return detail::Parser(text).term(); }

// -- printing -----------------------------------------------------------------

std::string print(const FormulaPtr& f);

inline std::string print(const TermPtr& t) {
    if (const auto* v = std::get_if<TVar>(&t->node)) return v->name;
    if (const auto* v = std::get_if<TLit>(&t->node)) return to_string(v->value);
    if (const auto* v = std::get_if<TFinSet>(&t->node)) {
        std::string out = "{";
        for (std::size_t i = 0; i < v->elems.size(); ++i) {
            if (i) out += ',';
            out += print(v->elems[i]);
        }
        return out + "}";
    }
    if (const auto* v = std::get_if<TCoFinSet>(&t->node)) {
        std::string out = "co{";
        for (std::size_t i = 0; i < v->exclusions.size(); ++i) {
            if (i) out += ',';
            out += print(v->exclusions[i]);
        }
        return out + "}";
    }
    if (const auto* v = std::get_if<TBuilder>(&t->node))
        return "{ " + v->var + " : " + print(v->body) + " }";
    if (const auto* v = std::get_if<TApply>(&t->node)) {
        if (v->op == TermOp::complement) return "~" + print(v->args[0]);
        switch (v->op) {
            case TermOp::eo_supplement: return "eo(S, " + print(v->args[0]) + ")";
            case TermOp::eo_complement: return "eo(~, " + print(v->args[0]) + ")";
            case TermOp::eo_singleton: return "eo(sing, " + print(v->args[0]) + ")";
            case TermOp::eo_identity: return "eo(id, " + print(v->args[0]) + ")";
            default: break;
        }
        std::string out = detail::term_op_name(v->op);
        out += '(';
        for (std::size_t i = 0; i < v->args.size(); ++i) {
            if (i) out += ", ";
            out += print(v->args[i]);
        }
        return out + ")";
    }
    if (const auto* v = std::get_if<TBind>(&t->node)) {
        const char* name = v->kind == BindKind::separation ? "sep"
                         : v->kind == BindKind::confiscation ? "conf"
                         : v->kind == BindKind::replacement ? "repl"
                                                            : "arepl";
        std::string body = v->pred ? print(v->pred) : print(v->map);
        return std::string(name) + "(" + print(v->source) + ", " + v->var + " -> " + body + ")";
    }
    if (const auto* v = std::get_if<TFamilyProd>(&t->node))
        return std::string("(") + (v->anti ? "AProd " : "Prod ") + v->var + " in " +
               print(v->index) + ". " + print(v->body) + ")";
    const auto& v = std::get<TMapApply>(t->node);
    return v.fn + "(" + print(v.arg) + ")";
}

namespace detail {

// Precedence: iff 1, implies 2, or 3, and 4, not 5, atoms 6; quantifiers
// bind weakest and extend to the right, so they print bare only where the
// context precedence is 0.
inline int formula_prec(const FormulaPtr& f) {
    if (std::holds_alternative<FQuant>(f->node) || std::holds_alternative<FBQuant>(f->node))
        return 0;
    if (const auto* b = std::get_if<FBin>(&f->node)) {
        switch (b->kind) {
            case Junctor::iff: return 1;
            case Junctor::implies: return 2;
            case Junctor::disj: return 3;
            case Junctor::conj: return 4;
        }
    }
    if (std::holds_alternative<FNot>(f->node)) return 5;
    return 6;
}

inline std::string print_formula(const FormulaPtr& f, int min_prec) {
    const int prec = formula_prec(f);
    std::string out;
    if (const auto* v = std::get_if<FTruth>(&f->node)) {
        out = v->value ? "true" : "false";
    } else if (const auto* v = std::get_if<FMember>(&f->node)) {
        out = print(v->lhs) + " in " + print(v->rhs);
    } else if (const auto* v = std::get_if<FEqual>(&f->node)) {
        out = print(v->lhs) + " = " + print(v->rhs);
    } else if (const auto* v = std::get_if<FRel>(&f->node)) {
        const char* rel = v->rel == Rel::subset ? "subset"
                        : v->rel == Rel::strict_subset ? "ssub"
                        : v->rel == Rel::equipollent ? "equi"
                                                     : "mequi";
        out = print(v->lhs) + " " + rel + " " + print(v->rhs);
    } else if (const auto* v = std::get_if<FPred>(&f->node)) {
        out = std::string(v->pred == UnaryPred::finite_ordinal ? "eon" : "aeon") + "(" +
              print(v->arg) + ")";
    } else if (const auto* v = std::get_if<FParamPred>(&f->node)) {
        out = v->name + "(" + print(v->arg) + ")";
    } else if (const auto* v = std::get_if<FNot>(&f->node)) {
        if (const auto* eq = std::get_if<FEqual>(&v->sub->node)) {
            out = print(eq->lhs) + " != " + print(eq->rhs);
        } else if (std::holds_alternative<FMember>(v->sub->node) ||
                   std::holds_alternative<FRel>(v->sub->node)) {
            out = "!(" + print_formula(v->sub, 0) + ")";
        } else {
            out = "!" + print_formula(v->sub, 5);
        }
    } else if (const auto* v = std::get_if<FBin>(&f->node)) {
        switch (v->kind) {
            case Junctor::iff:
                out = print_formula(v->lhs, 2) + " <-> " + print_formula(v->rhs, 1);
                break;
            case Junctor::implies:
                out = print_formula(v->lhs, 3) + " -> " + print_formula(v->rhs, 2);
                break;
            case Junctor::disj:
                out = print_formula(v->lhs, 3) + " | " + print_formula(v->rhs, 4);
                break;
            case Junctor::conj:
                out = print_formula(v->lhs, 4) + " & " + print_formula(v->rhs, 5);
                break;
        }
    } else if (const auto* v = std::get_if<FQuant>(&f->node)) {
        const char* q = v->kind == Quantifier::forall ? "forall"
                      : v->kind == Quantifier::exists ? "exists"
                                                      : "exists!";
        out = std::string(q) + " " + v->var + ". " + print_formula(v->body, 0);
    } else {
        const auto& bq = std::get<FBQuant>(f->node);
        out = std::string(bq.universal ? "forall " : "exists ") + bq.var + " in " +
              print(bq.domain) + ". " + print_formula(bq.body, 0);
    }
    if (prec < min_prec) return "(" + out + ")";
    return out;
}

} // namespace detail

inline std::string print(const FormulaPtr& f) { return detail::print_formula(f, 0); }

} // namespace synto
