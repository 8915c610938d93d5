#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "synto/coset.hpp"

namespace synto {

struct Formula;
struct TermExpr;
using FormulaPtr = std::shared_ptr<const Formula>;
using TermPtr = std::shared_ptr<const TermExpr>;

// Named operators of fixed arity in term position.
enum class TermOp {
    pair,           // pair(a,b)
    pair_exclusion, // pexcl(a,b)
    opair,          // op(a,b)
    anti_opair,     // aop(a,b)
    cup,            // cup(a,b)
    cap,            // cap(a,b)
    minus,          // minus(a,b)
    big_union,      // Union(a)
    comp_inter,     // CInter(a)
    power,          // pow(a)
    richard,        // rich(a)
    cartesian,      // prod(a,b)
    anti_cartesian, // aprod(a,b)
    diag,           // diag(f)
    choose,         // choice(a)
    complement,     // ~a
    supplement,     // S(a)
    fund,           // fund(a)
    anfd,           // anfd(a)
    citer,          // citer(a)
    eo_supplement,  // eo(S, a)
    eo_complement,  // eo(~, a)
    eo_singleton,   // eo(sing, a)
    eo_identity,    // eo(id, a)
};

inline int arity(TermOp op) {
    switch (op) {
        case TermOp::pair:
        case TermOp::pair_exclusion:
        case TermOp::opair:
        case TermOp::anti_opair:
        case TermOp::cup:
        case TermOp::cap:
        case TermOp::minus:
        case TermOp::cartesian:
        case TermOp::anti_cartesian:
            return 2;
        default:
            return 1;
    }
}

struct TVar {
    std::string name;
};
struct TLit {
    CoSet value;
};
struct TFinSet {
    std::vector<TermPtr> elems;
};
struct TCoFinSet {
    std::vector<TermPtr> exclusions;
};
struct TBuilder { // { x : phi }
    std::string var;
    FormulaPtr body;
};
struct TApply {
    TermOp op;
    std::vector<TermPtr> args;
};
enum class BindKind { separation, confiscation, replacement, anti_replacement };
struct TBind { // sep(a, x -> phi), repl(a, x -> t), ...
    BindKind kind;
    TermPtr source;
    std::string var;
    FormulaPtr pred; // separation / confiscation
    TermPtr map;     // replacement / anti_replacement
};
struct TFamilyProd { // Prod i in b. t   |   AProd i in b. t
    bool anti = false;
    std::string var;
    TermPtr index;
    TermPtr body;
};
struct TMapApply { // F(t) for a map parameter F
    std::string fn;
    TermPtr arg;
};

struct TermExpr {
    std::variant<TVar, TLit, TFinSet, TCoFinSet, TBuilder, TApply, TBind, TFamilyProd, TMapApply>
        node;
};

enum class Rel { subset, strict_subset, equipollent, mirror_equipollent };
enum class UnaryPred { finite_ordinal, anti_finite_ordinal };
enum class Junctor { conj, disj, implies, iff };
enum class Quantifier { forall, exists, exists_unique };

struct FTruth {
    bool value;
};
struct FMember {
    TermPtr lhs, rhs;
};
struct FEqual {
    TermPtr lhs, rhs;
};
struct FRel { // t subset t, t ssub t, t equi t, t mequi t
    Rel rel;
    TermPtr lhs, rhs;
};
struct FPred { // eon(t), aeon(t)
    UnaryPred pred;
    TermPtr arg;
};
struct FParamPred { // B(t) for a predicate parameter B
    std::string name;
    TermPtr arg;
};
struct FNot {
    FormulaPtr sub;
};
struct FBin {
    Junctor kind;
    FormulaPtr lhs, rhs;
};
struct FQuant {
    Quantifier kind;
    std::string var;
    FormulaPtr body;
};
struct FBQuant { // forall x in t. phi / exists x in t. phi
    bool universal;
    std::string var;
    TermPtr domain;
    FormulaPtr body;
};

struct Formula {
    std::variant<FTruth, FMember, FEqual, FRel, FPred, FParamPred, FNot, FBin, FQuant, FBQuant>
        node;
};

// -- construction helpers ---------------------------------------------------

inline TermPtr mk_term(TermExpr t) { return std::make_shared<const TermExpr>(std::move(t)); }
inline FormulaPtr mk_formula(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

inline TermPtr tvar(std::string name) { return mk_term({TVar{std::move(name)}}); }
inline TermPtr tlit(CoSet value) { return mk_term({TLit{std::move(value)}}); }
inline TermPtr tapply(TermOp op, std::vector<TermPtr> args) {
    return mk_term({TApply{op, std::move(args)}});
}
inline TermPtr tbuilder(std::string var, FormulaPtr body) {
    return mk_term({TBuilder{std::move(var), std::move(body)}});
}
inline TermPtr tmap_apply(std::string fn, TermPtr arg) {
    return mk_term({TMapApply{std::move(fn), std::move(arg)}});
}

// {t,...} and co{t,...} constructors; all-literal contents fold into a
// literal code so that a set has one syntax tree.
inline TermPtr tfinset(std::vector<TermPtr> elems, bool cofin = false) {
    std::vector<CoSet> values;
    values.reserve(elems.size());
    for (const TermPtr& e : elems) {
        if (const auto* lit = std::get_if<TLit>(&e->node)) values.push_back(lit->value);
        else {
            if (cofin) return mk_term({TCoFinSet{std::move(elems)}});
            return mk_term({TFinSet{std::move(elems)}});
        }
    }
    return tlit(cofin ? CoSet::cofin(std::move(values)) : CoSet::fin(std::move(values)));
}

inline FormulaPtr f_truth(bool v) { return mk_formula({FTruth{v}}); }
inline FormulaPtr f_member(TermPtr l, TermPtr r) {
    return mk_formula({FMember{std::move(l), std::move(r)}});
}
inline FormulaPtr f_equal(TermPtr l, TermPtr r) {
    return mk_formula({FEqual{std::move(l), std::move(r)}});
}
inline FormulaPtr f_rel(Rel rel, TermPtr l, TermPtr r) {
    return mk_formula({FRel{rel, std::move(l), std::move(r)}});
}
inline FormulaPtr f_pred(UnaryPred p, TermPtr arg) {
    return mk_formula({FPred{p, std::move(arg)}});
}
inline FormulaPtr f_param_pred(std::string name, TermPtr arg) {
    return mk_formula({FParamPred{std::move(name), std::move(arg)}});
}
inline FormulaPtr f_not(FormulaPtr sub) { return mk_formula({FNot{std::move(sub)}}); }
inline FormulaPtr f_bin(Junctor k, FormulaPtr l, FormulaPtr r) {
    return mk_formula({FBin{k, std::move(l), std::move(r)}});
}
inline FormulaPtr f_and(FormulaPtr l, FormulaPtr r) {
    return f_bin(Junctor::conj, std::move(l), std::move(r));
}
inline FormulaPtr f_or(FormulaPtr l, FormulaPtr r) {
    return f_bin(Junctor::disj, std::move(l), std::move(r));
}
inline FormulaPtr f_implies(FormulaPtr l, FormulaPtr r) {
    return f_bin(Junctor::implies, std::move(l), std::move(r));
}
inline FormulaPtr f_iff(FormulaPtr l, FormulaPtr r) {
    return f_bin(Junctor::iff, std::move(l), std::move(r));
}
inline FormulaPtr f_quant(Quantifier q, std::string var, FormulaPtr body) {
    return mk_formula({FQuant{q, std::move(var), std::move(body)}});
}
inline FormulaPtr f_forall(std::string var, FormulaPtr body) {
    return f_quant(Quantifier::forall, std::move(var), std::move(body));
}
inline FormulaPtr f_exists(std::string var, FormulaPtr body) {
    return f_quant(Quantifier::exists, std::move(var), std::move(body));
}
inline FormulaPtr f_bquant(bool universal, std::string var, TermPtr domain, FormulaPtr body) {
    return mk_formula({FBQuant{universal, std::move(var), std::move(domain), std::move(body)}});
}

// -- structural equality -----------------------------------------------------

bool same_formula(const FormulaPtr& a, const FormulaPtr& b);

inline bool same_term(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (a->node.index() != b->node.index()) return false;
    if (const auto* v = std::get_if<TVar>(&a->node))
        return v->name == std::get<TVar>(b->node).name;
    if (const auto* v = std::get_if<TLit>(&a->node))
        return v->value == std::get<TLit>(b->node).value;
    if (const auto* v = std::get_if<TFinSet>(&a->node)) {
        const auto& w = std::get<TFinSet>(b->node);
        if (v->elems.size() != w.elems.size()) return false;
        for (std::size_t i = 0; i < v->elems.size(); ++i)
            if (!same_term(v->elems[i], w.elems[i])) return false;
        return true;
    }
    if (const auto* v = std::get_if<TCoFinSet>(&a->node)) {
        const auto& w = std::get<TCoFinSet>(b->node);
        if (v->exclusions.size() != w.exclusions.size()) return false;
        for (std::size_t i = 0; i < v->exclusions.size(); ++i)
            if (!same_term(v->exclusions[i], w.exclusions[i])) return false;
        return true;
    }
    if (const auto* v = std::get_if<TBuilder>(&a->node)) {
        const auto& w = std::get<TBuilder>(b->node);
        return v->var == w.var && same_formula(v->body, w.body);
    }
    if (const auto* v = std::get_if<TApply>(&a->node)) {
        const auto& w = std::get<TApply>(b->node);
        if (v->op != w.op || v->args.size() != w.args.size()) return false;
        for (std::size_t i = 0; i < v->args.size(); ++i)
            if (!same_term(v->args[i], w.args[i])) return false;
        return true;
    }
    if (const auto* v = std::get_if<TBind>(&a->node)) {
        const auto& w = std::get<TBind>(b->node);
        if (v->kind != w.kind || v->var != w.var || !same_term(v->source, w.source)) return false;
        if (v->pred || w.pred) return v->pred && w.pred && same_formula(v->pred, w.pred);
        return same_term(v->map, w.map);
    }
    if (const auto* v = std::get_if<TFamilyProd>(&a->node)) {
        const auto& w = std::get<TFamilyProd>(b->node);
        return v->anti == w.anti && v->var == w.var && same_term(v->index, w.index) &&
               same_term(v->body, w.body);
    }
    const auto& v = std::get<TMapApply>(a->node);
    const auto& w = std::get<TMapApply>(b->node);
    return v.fn == w.fn && same_term(v.arg, w.arg);
}

inline bool same_formula(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (a->node.index() != b->node.index()) return false;
    if (const auto* v = std::get_if<FTruth>(&a->node))
        return v->value == std::get<FTruth>(b->node).value;
    if (const auto* v = std::get_if<FMember>(&a->node)) {
        const auto& w = std::get<FMember>(b->node);
        return same_term(v->lhs, w.lhs) && same_term(v->rhs, w.rhs);
    }
    if (const auto* v = std::get_if<FEqual>(&a->node)) {
        const auto& w = std::get<FEqual>(b->node);
        return same_term(v->lhs, w.lhs) && same_term(v->rhs, w.rhs);
    }
    if (const auto* v = std::get_if<FRel>(&a->node)) {
        const auto& w = std::get<FRel>(b->node);
        return v->rel == w.rel && same_term(v->lhs, w.lhs) && same_term(v->rhs, w.rhs);
    }
    if (const auto* v = std::get_if<FPred>(&a->node)) {
        const auto& w = std::get<FPred>(b->node);
        return v->pred == w.pred && same_term(v->arg, w.arg);
    }
    if (const auto* v = std::get_if<FParamPred>(&a->node)) {
        const auto& w = std::get<FParamPred>(b->node);
        return v->name == w.name && same_term(v->arg, w.arg);
    }
    if (const auto* v = std::get_if<FNot>(&a->node))
        return same_formula(v->sub, std::get<FNot>(b->node).sub);
    if (const auto* v = std::get_if<FBin>(&a->node)) {
        const auto& w = std::get<FBin>(b->node);
        return v->kind == w.kind && same_formula(v->lhs, w.lhs) && same_formula(v->rhs, w.rhs);
    }
    if (const auto* v = std::get_if<FQuant>(&a->node)) {
        const auto& w = std::get<FQuant>(b->node);
        return v->kind == w.kind && v->var == w.var && same_formula(v->body, w.body);
    }
    const auto& v = std::get<FBQuant>(a->node);
    const auto& w = std::get<FBQuant>(b->node);
    return v.universal == w.universal && v.var == w.var && same_term(v.domain, w.domain) &&
           same_formula(v.body, w.body);
}

} // namespace synto
