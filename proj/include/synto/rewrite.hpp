#pragma once

#include <set>
#include <string>
#include <vector>

#include "synto/duality.hpp"
#include "synto/formula.hpp"

namespace synto {

// -- variable utilities -------------------------------------------------------

namespace detail {

inline void collect_vars(const TermPtr& t, std::set<std::string>& out);

inline void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
    if (const auto* v = std::get_if<FMember>(&f->node)) {
        collect_vars(v->lhs, out);
        collect_vars(v->rhs, out);
    } else if (const auto* v = std::get_if<FEqual>(&f->node)) {
        collect_vars(v->lhs, out);
        collect_vars(v->rhs, out);
    } else if (const auto* v = std::get_if<FRel>(&f->node)) {
        collect_vars(v->lhs, out);
        collect_vars(v->rhs, out);
    } else if (const auto* v = std::get_if<FPred>(&f->node)) {
        collect_vars(v->arg, out);
    } else if (const auto* v = std::get_if<FParamPred>(&f->node)) {
        collect_vars(v->arg, out);
    } else if (const auto* v = std::get_if<FNot>(&f->node)) {
        collect_vars(v->sub, out);
    } else if (const auto* v = std::get_if<FBin>(&f->node)) {
        collect_vars(v->lhs, out);
        collect_vars(v->rhs, out);
    } else if (const auto* v = std::get_if<FQuant>(&f->node)) {
        out.insert(v->var);
        collect_vars(v->body, out);
    } else if (const auto* v = std::get_if<FBQuant>(&f->node)) {
        out.insert(v->var);
        collect_vars(v->domain, out);
        collect_vars(v->body, out);
    }
}

inline void collect_vars(const TermPtr& t, std::set<std::string>& out) {
    if (const auto* v = std::get_if<TVar>(&t->node)) {
        out.insert(v->name);
    } else if (const auto* v = std::get_if<TFinSet>(&t->node)) {
        for (const auto& e : v->elems) collect_vars(e, out);
    } else if (const auto* v = std::get_if<TCoFinSet>(&t->node)) {
        for (const auto& e : v->exclusions) collect_vars(e, out);
    } else if (const auto* v = std::get_if<TBuilder>(&t->node)) {
        out.insert(v->var);
        collect_vars(v->body, out);
    } else if (const auto* v = std::get_if<TApply>(&t->node)) {
        for (const auto& a : v->args) collect_vars(a, out);
    } else if (const auto* v = std::get_if<TBind>(&t->node)) {
        out.insert(v->var);
        collect_vars(v->source, out);
        if (v->pred) collect_vars(v->pred, out);
        if (v->map) collect_vars(v->map, out);
    } else if (const auto* v = std::get_if<TFamilyProd>(&t->node)) {
        out.insert(v->var);
        collect_vars(v->index, out);
        collect_vars(v->body, out);
    } else if (const auto* v = std::get_if<TMapApply>(&t->node)) {
        collect_vars(v->arg, out);
    }
}

inline std::string fresh_var(const std::string& base, const std::set<std::string>& used) {
    if (!used.count(base)) return base;
    for (int i = 1;; ++i) {
        std::string candidate = base + "_" + std::to_string(i);
        if (!used.count(candidate)) return candidate;
    }
}

inline void free_vars(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out);

inline void free_vars(const FormulaPtr& f, std::set<std::string>& bound,
                      std::set<std::string>& out) {
    if (const auto* v = std::get_if<FMember>(&f->node)) {
        free_vars(v->lhs, bound, out);
        free_vars(v->rhs, bound, out);
    } else if (const auto* v = std::get_if<FEqual>(&f->node)) {
        free_vars(v->lhs, bound, out);
        free_vars(v->rhs, bound, out);
    } else if (const auto* v = std::get_if<FRel>(&f->node)) {
        free_vars(v->lhs, bound, out);
        free_vars(v->rhs, bound, out);
    } else if (const auto* v = std::get_if<FPred>(&f->node)) {
        free_vars(v->arg, bound, out);
    } else if (const auto* v = std::get_if<FParamPred>(&f->node)) {
        free_vars(v->arg, bound, out);
    } else if (const auto* v = std::get_if<FNot>(&f->node)) {
        free_vars(v->sub, bound, out);
    } else if (const auto* v = std::get_if<FBin>(&f->node)) {
        free_vars(v->lhs, bound, out);
        free_vars(v->rhs, bound, out);
    } else if (const auto* v = std::get_if<FQuant>(&f->node)) {
        const bool added = bound.insert(v->var).second;
        free_vars(v->body, bound, out);
        if (added) bound.erase(v->var);
    } else if (const auto* v = std::get_if<FBQuant>(&f->node)) {
        free_vars(v->domain, bound, out);
        const bool added = bound.insert(v->var).second;
        free_vars(v->body, bound, out);
        if (added) bound.erase(v->var);
    }
}

inline void free_vars(const TermPtr& t, std::set<std::string>& bound,
                      std::set<std::string>& out) {
    if (const auto* v = std::get_if<TVar>(&t->node)) {
        if (!bound.count(v->name)) out.insert(v->name);
    } else if (const auto* v = std::get_if<TFinSet>(&t->node)) {
        for (const auto& e : v->elems) free_vars(e, bound, out);
    } else if (const auto* v = std::get_if<TCoFinSet>(&t->node)) {
        for (const auto& e : v->exclusions) free_vars(e, bound, out);
    } else if (const auto* v = std::get_if<TBuilder>(&t->node)) {
        const bool added = bound.insert(v->var).second;
        free_vars(v->body, bound, out);
        if (added) bound.erase(v->var);
    } else if (const auto* v = std::get_if<TApply>(&t->node)) {
        for (const auto& a : v->args) free_vars(a, bound, out);
    } else if (const auto* v = std::get_if<TBind>(&t->node)) {
        free_vars(v->source, bound, out);
        const bool added = bound.insert(v->var).second;
        if (v->pred) free_vars(v->pred, bound, out);
        if (v->map) free_vars(v->map, bound, out);
        if (added) bound.erase(v->var);
    } else if (const auto* v = std::get_if<TFamilyProd>(&t->node)) {
        free_vars(v->index, bound, out);
        const bool added = bound.insert(v->var).second;
        free_vars(v->body, bound, out);
        if (added) bound.erase(v->var);
    } else if (const auto* v = std::get_if<TMapApply>(&t->node)) {
        free_vars(v->arg, bound, out);
    }
}

} // namespace detail

inline std::set<std::string> free_variables(const FormulaPtr& f) {
    std::set<std::string> bound, out;
    detail::free_vars(f, bound, out);
    return out;
}

inline std::set<std::string> free_variables(const TermPtr& t) {
    std::set<std::string> bound, out;
    detail::free_vars(t, bound, out);
    return out;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& replacement);

inline TermPtr substitute(const TermPtr& t, const std::string& var, const TermPtr& replacement) {
    if (const auto* v = std::get_if<TVar>(&t->node))
        return v->name == var ? replacement : t;
    if (std::holds_alternative<TLit>(t->node)) return t;
    if (const auto* v = std::get_if<TFinSet>(&t->node)) {
        std::vector<TermPtr> elems;
        for (const auto& e : v->elems) elems.push_back(substitute(e, var, replacement));
        return tfinset(std::move(elems));
    }
    if (const auto* v = std::get_if<TCoFinSet>(&t->node)) {
        std::vector<TermPtr> elems;
        for (const auto& e : v->exclusions) elems.push_back(substitute(e, var, replacement));
        return tfinset(std::move(elems), true);
    }
    if (const auto* v = std::get_if<TBuilder>(&t->node)) {
        if (v->var == var) return t;
        return tbuilder(v->var, substitute(v->body, var, replacement));
    }
    if (const auto* v = std::get_if<TApply>(&t->node)) {
        std::vector<TermPtr> args;
        for (const auto& a : v->args) args.push_back(substitute(a, var, replacement));
        return tapply(v->op, std::move(args));
    }
    if (const auto* v = std::get_if<TBind>(&t->node)) {
        TBind node = *v;
        node.source = substitute(v->source, var, replacement);
        if (v->var != var) {
            if (node.pred) node.pred = substitute(v->pred, var, replacement);
            if (node.map) node.map = substitute(v->map, var, replacement);
        }
        return mk_term({std::move(node)});
    }
    if (const auto* v = std::get_if<TFamilyProd>(&t->node)) {
        TFamilyProd node = *v;
        node.index = substitute(v->index, var, replacement);
        if (v->var != var) node.body = substitute(v->body, var, replacement);
        return mk_term({std::move(node)});
    }
    const auto& v = std::get<TMapApply>(t->node);
    return tmap_apply(v.fn, substitute(v.arg, var, replacement));
}

inline FormulaPtr substitute(const FormulaPtr& f, const std::string& var,
                             const TermPtr& replacement) {
    if (std::holds_alternative<FTruth>(f->node)) return f;
    if (const auto* v = std::get_if<FMember>(&f->node))
        return f_member(substitute(v->lhs, var, replacement), substitute(v->rhs, var, replacement));
    if (const auto* v = std::get_if<FEqual>(&f->node))
        return f_equal(substitute(v->lhs, var, replacement), substitute(v->rhs, var, replacement));
    if (const auto* v = std::get_if<FRel>(&f->node))
        return f_rel(v->rel, substitute(v->lhs, var, replacement),
                     substitute(v->rhs, var, replacement));
    if (const auto* v = std::get_if<FPred>(&f->node))
        return f_pred(v->pred, substitute(v->arg, var, replacement));
    if (const auto* v = std::get_if<FParamPred>(&f->node))
        return f_param_pred(v->name, substitute(v->arg, var, replacement));
    if (const auto* v = std::get_if<FNot>(&f->node))
        return f_not(substitute(v->sub, var, replacement));
    if (const auto* v = std::get_if<FBin>(&f->node))
        return f_bin(v->kind, substitute(v->lhs, var, replacement),
                     substitute(v->rhs, var, replacement));
    if (const auto* v = std::get_if<FQuant>(&f->node)) {
        if (v->var == var) return f;
        std::set<std::string> in_replacement;
        detail::collect_vars(replacement, in_replacement);
        if (in_replacement.count(v->var)) {
            std::set<std::string> used = in_replacement;
            detail::collect_vars(v->body, used);
            used.insert(var);
            const std::string renamed = detail::fresh_var(v->var, used);
            FormulaPtr body = substitute(v->body, v->var, tvar(renamed));
            return f_quant(v->kind, renamed, substitute(body, var, replacement));
        }
        return f_quant(v->kind, v->var, substitute(v->body, var, replacement));
    }
    const auto& v = std::get<FBQuant>(f->node);
    TermPtr domain = substitute(v.domain, var, replacement);
    if (v.var == var) return f_bquant(v.universal, v.var, std::move(domain), v.body);
    std::set<std::string> in_replacement;
    detail::collect_vars(replacement, in_replacement);
    if (in_replacement.count(v.var)) {
        std::set<std::string> used = in_replacement;
        detail::collect_vars(v.body, used);
        used.insert(var);
        const std::string renamed = detail::fresh_var(v.var, used);
        FormulaPtr body = substitute(v.body, v.var, tvar(renamed));
        return f_bquant(v.universal, renamed, std::move(domain),
                        substitute(body, var, replacement));
    }
    return f_bquant(v.universal, v.var, std::move(domain), substitute(v.body, var, replacement));
}

// -- sugar expansion ----------------------------------------------------------

// forall x in t. A  becomes  forall x. x in t -> A, and dually for exists.
inline FormulaPtr expand_bounded(const FormulaPtr& f) {
    if (const auto* v = std::get_if<FNot>(&f->node)) return f_not(expand_bounded(v->sub));
    if (const auto* v = std::get_if<FBin>(&f->node))
        return f_bin(v->kind, expand_bounded(v->lhs), expand_bounded(v->rhs));
    if (const auto* v = std::get_if<FQuant>(&f->node))
        return f_quant(v->kind, v->var, expand_bounded(v->body));
    if (const auto* v = std::get_if<FBQuant>(&f->node)) {
        FormulaPtr guard = f_member(tvar(v->var), v->domain);
        FormulaPtr body = expand_bounded(v->body);
        if (v->universal)
            return f_forall(v->var, f_implies(std::move(guard), std::move(body)));
        return f_exists(v->var, f_and(std::move(guard), std::move(body)));
    }
    return f;
}

// exists! z. A  becomes  exists z. A & forall w. A[z := w] -> w = z.
inline FormulaPtr expand_exists_unique(const std::string& var, const FormulaPtr& body) {
    std::set<std::string> used;
    detail::collect_vars(body, used);
    used.insert(var);
    const std::string w = detail::fresh_var("w", used);
    FormulaPtr copy = substitute(body, var, tvar(w));
    return f_exists(var,
                    f_and(body, f_forall(w, f_implies(std::move(copy),
                                                      f_equal(tvar(w), tvar(var))))));
}

// -- contra-valuation ---------------------------------------------------------

// CV(A): every membership atom is toggled through a negation; nothing else
// changes. An involution up to double negation.
inline TermPtr contravaluate_term(const TermPtr& t);

inline FormulaPtr contravaluate(const FormulaPtr& f) {
    if (std::holds_alternative<FTruth>(f->node)) return f;
    if (const auto* v = std::get_if<FMember>(&f->node))
        return f_not(f_member(contravaluate_term(v->lhs), contravaluate_term(v->rhs)));
    if (const auto* v = std::get_if<FEqual>(&f->node))
        return f_equal(contravaluate_term(v->lhs), contravaluate_term(v->rhs));
    if (const auto* v = std::get_if<FRel>(&f->node))
        return f_rel(v->rel, contravaluate_term(v->lhs), contravaluate_term(v->rhs));
    if (const auto* v = std::get_if<FPred>(&f->node))
        return f_pred(v->pred, contravaluate_term(v->arg));
    if (const auto* v = std::get_if<FParamPred>(&f->node))
        return f_param_pred(v->name, contravaluate_term(v->arg));
    if (const auto* v = std::get_if<FNot>(&f->node)) return f_not(contravaluate(v->sub));
    if (const auto* v = std::get_if<FBin>(&f->node))
        return f_bin(v->kind, contravaluate(v->lhs), contravaluate(v->rhs));
    if (const auto* v = std::get_if<FQuant>(&f->node))
        return f_quant(v->kind, v->var, contravaluate(v->body));
    const auto& v = std::get<FBQuant>(f->node);
    // the guard membership toggles, so the bounded form does not survive CV
    return contravaluate(expand_bounded(f));
}

inline TermPtr contravaluate_term(const TermPtr& t) {
    if (const auto* v = std::get_if<TBuilder>(&t->node))
        return tbuilder(v->var, contravaluate(v->body));
    if (const auto* v = std::get_if<TFinSet>(&t->node)) {
        std::vector<TermPtr> elems;
        for (const auto& e : v->elems) elems.push_back(contravaluate_term(e));
        return tfinset(std::move(elems));
    }
    if (const auto* v = std::get_if<TCoFinSet>(&t->node)) {
        std::vector<TermPtr> elems;
        for (const auto& e : v->exclusions) elems.push_back(contravaluate_term(e));
        return tfinset(std::move(elems), true);
    }
    if (const auto* v = std::get_if<TApply>(&t->node)) {
        std::vector<TermPtr> args;
        for (const auto& a : v->args) args.push_back(contravaluate_term(a));
        return tapply(v->op, std::move(args));
    }
    if (const auto* v = std::get_if<TBind>(&t->node)) {
        TBind node = *v;
        node.source = contravaluate_term(v->source);
        if (node.pred) node.pred = contravaluate(v->pred);
        if (node.map) node.map = contravaluate_term(v->map);
        return mk_term({std::move(node)});
    }
    if (const auto* v = std::get_if<TFamilyProd>(&t->node)) {
        TFamilyProd node = *v;
        node.index = contravaluate_term(v->index);
        node.body = contravaluate_term(v->body);
        return mk_term({std::move(node)});
    }
    if (const auto* v = std::get_if<TMapApply>(&t->node))
        return tmap_apply(v->fn, contravaluate_term(v->arg));
    return t; // variables and literals
}

// -- dualisation ---------------------------------------------------------------

// D(A): swap conjunction with disjunction and the quantifiers, keep membership
// atoms, negate the remaining atoms. Defined so that CV(A) and !D(A) agree;
// implications, biconditionals, bounded quantifiers and unique existence are
// expanded first.
inline FormulaPtr dualize(const FormulaPtr& f) {
    if (const auto* v = std::get_if<FTruth>(&f->node)) return f_truth(!v->value);
    if (std::holds_alternative<FMember>(f->node)) return f;
    if (std::holds_alternative<FEqual>(f->node) || std::holds_alternative<FRel>(f->node) ||
        std::holds_alternative<FPred>(f->node) || std::holds_alternative<FParamPred>(f->node))
        return f_not(f);
    if (const auto* v = std::get_if<FNot>(&f->node)) return f_not(dualize(v->sub));
    if (const auto* v = std::get_if<FBin>(&f->node)) {
        switch (v->kind) {
            case Junctor::conj: return f_or(dualize(v->lhs), dualize(v->rhs));
            case Junctor::disj: return f_and(dualize(v->lhs), dualize(v->rhs));
            case Junctor::implies:
                return dualize(f_or(f_not(v->lhs), v->rhs));
            case Junctor::iff:
                return dualize(f_and(f_or(f_not(v->lhs), v->rhs), f_or(f_not(v->rhs), v->lhs)));
        }
    }
    if (const auto* v = std::get_if<FQuant>(&f->node)) {
        if (v->kind == Quantifier::exists_unique)
            return dualize(expand_exists_unique(v->var, v->body));
        const Quantifier swapped =
            v->kind == Quantifier::forall ? Quantifier::exists : Quantifier::forall;
        return f_quant(swapped, v->var, dualize(v->body));
    }
    return dualize(expand_bounded(f));
}

// -- negation normal form -------------------------------------------------------

inline FormulaPtr nnf(const FormulaPtr& f);

namespace detail {

inline FormulaPtr nnf_negated(const FormulaPtr& f) {
    if (const auto* v = std::get_if<FTruth>(&f->node)) return f_truth(!v->value);
    if (const auto* v = std::get_if<FNot>(&f->node)) return nnf(v->sub);
    if (const auto* v = std::get_if<FBin>(&f->node)) {
        switch (v->kind) {
            case Junctor::conj: return f_or(nnf_negated(v->lhs), nnf_negated(v->rhs));
            case Junctor::disj: return f_and(nnf_negated(v->lhs), nnf_negated(v->rhs));
            case Junctor::implies: return f_and(nnf(v->lhs), nnf_negated(v->rhs));
            case Junctor::iff: return f_iff(nnf(v->lhs), nnf_negated(v->rhs));
        }
    }
    if (const auto* v = std::get_if<FQuant>(&f->node)) {
        switch (v->kind) {
            case Quantifier::forall:
                return f_quant(Quantifier::exists, v->var, nnf_negated(v->body));
            case Quantifier::exists:
                return f_quant(Quantifier::forall, v->var, nnf_negated(v->body));
            case Quantifier::exists_unique:
                return nnf_negated(expand_exists_unique(v->var, v->body));
        }
    }
    if (const auto* v = std::get_if<FBQuant>(&f->node))
        return f_bquant(!v->universal, v->var, v->domain, nnf_negated(v->body));
    return f_not(f); // atom
}

} // namespace detail

// Pushes negations down to the atoms; junctor and quantifier shapes otherwise
// survive.
inline FormulaPtr nnf(const FormulaPtr& f) {
    if (const auto* v = std::get_if<FNot>(&f->node)) return detail::nnf_negated(v->sub);
    if (const auto* v = std::get_if<FBin>(&f->node))
        return f_bin(v->kind, nnf(v->lhs), nnf(v->rhs));
    if (const auto* v = std::get_if<FQuant>(&f->node))
        return f_quant(v->kind, v->var, nnf(v->body));
    if (const auto* v = std::get_if<FBQuant>(&f->node))
        return f_bquant(v->universal, v->var, v->domain, nnf(v->body));
    return f;
}

// -- term complement -------------------------------------------------------------

// The complement as a rewrite on terms: negation moves into set-builder bodies,
// literals complement directly, and dual operator pairs swap.
inline TermPtr term_complement(const TermPtr& t) {
    if (const auto* v = std::get_if<TLit>(&t->node)) return tlit(complement(v->value));
    if (const auto* v = std::get_if<TBuilder>(&t->node))
        return tbuilder(v->var, nnf(f_not(v->body)));
    if (const auto* v = std::get_if<TFinSet>(&t->node)) return tfinset(v->elems, true);
    if (const auto* v = std::get_if<TCoFinSet>(&t->node)) return tfinset(v->exclusions);
    if (const auto* v = std::get_if<TApply>(&t->node)) {
        auto wrap_compl = [](const TermPtr& x) { return tapply(TermOp::complement, {x}); };
        switch (v->op) {
            case TermOp::complement: return v->args[0];
            case TermOp::power: return tapply(TermOp::richard, v->args);
            case TermOp::richard: return tapply(TermOp::power, v->args);
            case TermOp::pair: return tapply(TermOp::pair_exclusion, v->args);
            case TermOp::pair_exclusion: return tapply(TermOp::pair, v->args);
            case TermOp::cup:
                return tapply(TermOp::cap, {wrap_compl(v->args[0]), wrap_compl(v->args[1])});
            case TermOp::cap:
                return tapply(TermOp::cup, {wrap_compl(v->args[0]), wrap_compl(v->args[1])});
            case TermOp::minus:
                return tapply(TermOp::cup, {wrap_compl(v->args[0]), v->args[1]});
            case TermOp::cartesian:
                return tapply(TermOp::anti_cartesian,
                              {wrap_compl(v->args[0]), wrap_compl(v->args[1])});
            case TermOp::anti_cartesian:
                return tapply(TermOp::cartesian,
                              {wrap_compl(v->args[0]), wrap_compl(v->args[1])});
            case TermOp::big_union:
                return tapply(TermOp::comp_inter,
                              {wrap_compl(tapply(TermOp::eo_complement, v->args))});
            case TermOp::comp_inter:
                return tapply(TermOp::big_union,
                              {tapply(TermOp::eo_complement, {wrap_compl(v->args[0])})});
            default: break;
        }
    }
    return tapply(TermOp::complement, {t});
}

// -- construction of Anti from Proto ------------------------------------------------

namespace detail {

inline TermPtr anti_term(const TermPtr& t);

// The contra-valuation extended with the per-symbol Anti correspondences used
// by the axiom tables: membership and predicate parameters toggle, equality
// and the subset relations carry over, equipollence and the ordinal predicate
// switch to their supplement-mirrored forms, and Fund/Anfd, cap/cup,
// Union/CInter, Prod/AProd and literals swap with their duals.
inline FormulaPtr anti_formula(const FormulaPtr& f) {
    if (std::holds_alternative<FTruth>(f->node)) return f;
    if (const auto* v = std::get_if<FMember>(&f->node))
        return f_not(f_member(anti_term(v->lhs), anti_term(v->rhs)));
    if (const auto* v = std::get_if<FParamPred>(&f->node))
        return f_not(f_param_pred(v->name, anti_term(v->arg)));
    if (const auto* v = std::get_if<FEqual>(&f->node))
        return f_equal(anti_term(v->lhs), anti_term(v->rhs));
    if (const auto* v = std::get_if<FRel>(&f->node)) {
        Rel rel = v->rel;
        if (rel == Rel::equipollent) rel = Rel::mirror_equipollent;
        else if (rel == Rel::mirror_equipollent) rel = Rel::equipollent;
        return f_rel(rel, anti_term(v->lhs), anti_term(v->rhs));
    }
    if (const auto* v = std::get_if<FPred>(&f->node)) {
        const UnaryPred swapped = v->pred == UnaryPred::finite_ordinal
                                      ? UnaryPred::anti_finite_ordinal
                                      : UnaryPred::finite_ordinal;
        return f_pred(swapped, anti_term(v->arg));
    }
    if (const auto* v = std::get_if<FNot>(&f->node)) return f_not(anti_formula(v->sub));
    if (const auto* v = std::get_if<FBin>(&f->node))
        return f_bin(v->kind, anti_formula(v->lhs), anti_formula(v->rhs));
    if (const auto* v = std::get_if<FQuant>(&f->node))
        return f_quant(v->kind, v->var, anti_formula(v->body));
    return anti_formula(expand_bounded(f));
}

inline TermPtr anti_term(const TermPtr& t) {
    if (const auto* v = std::get_if<TLit>(&t->node)) return tlit(supplement(v->value));
    if (const auto* v = std::get_if<TFinSet>(&t->node)) {
        std::vector<TermPtr> elems;
        for (const auto& e : v->elems) elems.push_back(anti_term(e));
        return tfinset(std::move(elems), true);
    }
    if (const auto* v = std::get_if<TCoFinSet>(&t->node)) {
        std::vector<TermPtr> elems;
        for (const auto& e : v->exclusions) elems.push_back(anti_term(e));
        return tfinset(std::move(elems));
    }
    if (const auto* v = std::get_if<TBuilder>(&t->node))
        return tbuilder(v->var, anti_formula(v->body));
    if (const auto* v = std::get_if<TApply>(&t->node)) {
        TermOp op = v->op;
        switch (v->op) {
            case TermOp::fund: op = TermOp::anfd; break;
            case TermOp::anfd: op = TermOp::fund; break;
            case TermOp::cap: op = TermOp::cup; break;
            case TermOp::cup: op = TermOp::cap; break;
            case TermOp::big_union: op = TermOp::comp_inter; break;
            case TermOp::comp_inter: op = TermOp::big_union; break;
            default: break;
        }
        std::vector<TermPtr> args;
        for (const auto& a : v->args) args.push_back(anti_term(a));
        return tapply(op, std::move(args));
    }
    if (const auto* v = std::get_if<TBind>(&t->node)) {
        TBind node = *v;
        switch (v->kind) {
            case BindKind::separation: node.kind = BindKind::confiscation; break;
            case BindKind::confiscation: node.kind = BindKind::separation; break;
            case BindKind::replacement: node.kind = BindKind::anti_replacement; break;
            case BindKind::anti_replacement: node.kind = BindKind::replacement; break;
        }
        node.source = anti_term(v->source);
        if (node.pred) node.pred = anti_formula(v->pred);
        if (node.map) node.map = anti_term(v->map);
        return mk_term({std::move(node)});
    }
    if (const auto* v = std::get_if<TFamilyProd>(&t->node)) {
        TFamilyProd node = *v;
        node.anti = !v->anti;
        node.index = anti_term(v->index);
        node.body = anti_term(v->body);
        return mk_term({std::move(node)});
    }
    if (const auto* v = std::get_if<TMapApply>(&t->node))
        return tmap_apply(v->fn, anti_term(v->arg));
    return t; // variables
}

// Innermost-first cleanup after the contra-valuation: double negations vanish
// and a defining biconditional whose left side came out negated transfers the
// negation to its right side.
inline FormulaPtr normalize_anti(const FormulaPtr& f) {
    if (const auto* v = std::get_if<FNot>(&f->node)) {
        FormulaPtr sub = normalize_anti(v->sub);
        if (const auto* inner = std::get_if<FNot>(&sub->node)) return inner->sub;
        return f_not(std::move(sub));
    }
    if (const auto* v = std::get_if<FBin>(&f->node)) {
        FormulaPtr lhs = normalize_anti(v->lhs);
        FormulaPtr rhs = normalize_anti(v->rhs);
        if (v->kind == Junctor::iff) {
            if (const auto* nl = std::get_if<FNot>(&lhs->node)) {
                if (const auto* nr = std::get_if<FNot>(&rhs->node))
                    return f_iff(nl->sub, nr->sub);
                return f_iff(nl->sub, nnf(f_not(std::move(rhs))));
            }
        }
        return f_bin(v->kind, std::move(lhs), std::move(rhs));
    }
    if (const auto* v = std::get_if<FQuant>(&f->node))
        return f_quant(v->kind, v->var, normalize_anti(v->body));
    if (const auto* v = std::get_if<FBQuant>(&f->node))
        return f_bquant(v->universal, v->var, v->domain, normalize_anti(v->body));
    return f;
}

} // namespace detail

// Proto axiom in, Anti axiom out: bounded quantifiers are expanded (their
// guards toggle), the extended contra-valuation runs, and the result is
// normalized back to a positive defining shape.
inline FormulaPtr derive_anti(const FormulaPtr& proto) {
    return detail::normalize_anti(detail::anti_formula(expand_bounded(proto)));
}

} // namespace synto
