#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "synto/algebra.hpp"
#include "synto/duality.hpp"
#include "synto/errors.hpp"
#include "synto/formula.hpp"
#include "synto/universe.hpp"

namespace synto {

// A one-variable predicate in the decidable fragment (quantifier-free, or
// bounded quantifiers over finite-coded terms).
struct PredSpec {
    std::string var;
    FormulaPtr body;
};

struct EvalEnv {
    std::map<std::string, CoSet> vars;
    std::map<std::string, MapSpec> maps;                              // F, G, ...
    std::map<std::string, std::function<bool(const CoSet&)>> preds;   // B, ...
};

// Evaluates formulas and terms. With a universe attached, unbounded
// quantifiers range over it and the evaluation is flagged approximate;
// without one, they are outside the decidable fragment and throw.
class Evaluator {
public:
    explicit Evaluator(const TestUniverse* domain = nullptr) : domain_(domain) {}

    // hook for materializing set-builder terms; installed by the class layer
    std::function<CoSet(const TBuilder&, Evaluator&, EvalEnv&)> builder_hook;

    bool approximate() const { return approx_; }
    void reset_approximation() { approx_ = false; }
    const TestUniverse* domain() const { return domain_; }

    bool eval(const FormulaPtr& f, EvalEnv& env) {
        if (const auto* v = std::get_if<FTruth>(&f->node)) return v->value;
        if (const auto* v = std::get_if<FMember>(&f->node)) {
            // membership in a set-builder is just the body at the candidate
            if (const auto* b = std::get_if<TBuilder>(&v->rhs->node)) {
                CoSet c = eval(v->lhs, env);
                return eval_with(b->var, std::move(c), b->body, env);
            }
            CoSet l = eval(v->lhs, env);
            return member(l, eval(v->rhs, env));
        }
        if (const auto* v = std::get_if<FEqual>(&f->node)) {
            CoSet l = eval(v->lhs, env);
            return equal(l, eval(v->rhs, env));
        }
        if (const auto* v = std::get_if<FRel>(&f->node)) {
            CoSet l = eval(v->lhs, env);
            CoSet r = eval(v->rhs, env);
            switch (v->rel) {
                case Rel::subset: return subset(l, r);
                case Rel::strict_subset: return subset(l, r) && !equal(l, r);
                case Rel::equipollent: return equipollent(l, r);
                case Rel::mirror_equipollent: return equipollent(supplement(l), supplement(r));
            }
        }
        if (const auto* v = std::get_if<FPred>(&f->node)) {
            CoSet a = eval(v->arg, env);
            if (v->pred == UnaryPred::finite_ordinal) return is_finite_ordinal(a);
            return is_finite_ordinal(supplement(a));
        }
        if (const auto* v = std::get_if<FParamPred>(&f->node)) {
            auto it = env.preds.find(v->name);
            if (it == env.preds.end())
                throw eval_error("unbound predicate parameter " + v->name);
            return it->second(eval(v->arg, env));
        }
        if (const auto* v = std::get_if<FNot>(&f->node)) return !eval(v->sub, env);
        if (const auto* v = std::get_if<FBin>(&f->node)) {
            switch (v->kind) {
                case Junctor::conj: return eval(v->lhs, env) && eval(v->rhs, env);
                case Junctor::disj: return eval(v->lhs, env) || eval(v->rhs, env);
                case Junctor::implies: return !eval(v->lhs, env) || eval(v->rhs, env);
                case Junctor::iff: return eval(v->lhs, env) == eval(v->rhs, env);
            }
        }
        if (const auto* v = std::get_if<FQuant>(&f->node)) {
            require_domain();
            approx_ = true;
            int hits = 0;
            for (const CoSet& c : domain_->elements) {
                const bool b = eval_with(v->var, c, v->body, env);
                if (v->kind == Quantifier::forall && !b) return false;
                if (v->kind == Quantifier::exists && b) return true;
                if (b) ++hits;
            }
            if (v->kind == Quantifier::forall) return true;
            if (v->kind == Quantifier::exists) return false;
            return hits == 1;
        }
        const auto& v = std::get<FBQuant>(f->node);
        const CoSet dom = eval(v.domain, env);
        if (dom.is_fin()) {
            for (const CoSet& c : dom.support()) {
                const bool b = eval_with(v.var, c, v.body, env);
                if (v.universal && !b) return false;
                if (!v.universal && b) return true;
            }
            return v.universal;
        }
        require_domain();
        approx_ = true;
        for (const CoSet& c : domain_->elements) {
            if (!member(c, dom)) continue;
            const bool b = eval_with(v.var, c, v.body, env);
            if (v.universal && !b) return false;
            if (!v.universal && b) return true;
        }
        return v.universal;
    }

    CoSet eval(const TermPtr& t, EvalEnv& env) {
        if (const auto* v = std::get_if<TVar>(&t->node)) {
            auto it = env.vars.find(v->name);
            if (it == env.vars.end()) throw eval_error("unbound variable " + v->name);
            return it->second;
        }
        if (const auto* v = std::get_if<TLit>(&t->node)) return v->value;
        if (const auto* v = std::get_if<TFinSet>(&t->node)) {
            std::vector<CoSet> elems;
            elems.reserve(v->elems.size());
            for (const auto& e : v->elems) elems.push_back(eval(e, env));
            return CoSet::fin(std::move(elems));
        }
        if (const auto* v = std::get_if<TCoFinSet>(&t->node)) {
            std::vector<CoSet> elems;
            elems.reserve(v->exclusions.size());
            for (const auto& e : v->exclusions) elems.push_back(eval(e, env));
            return CoSet::cofin(std::move(elems));
        }
        if (const auto* v = std::get_if<TBuilder>(&t->node)) {
            if (builder_hook) return builder_hook(*v, *this, env);
            throw not_representable(
                "a set-builder term only denotes a set through the class layer");
        }
        if (const auto* v = std::get_if<TApply>(&t->node)) return eval_apply(*v, env);
        if (const auto* v = std::get_if<TBind>(&t->node)) return eval_bind(*v, env);
        if (const auto* v = std::get_if<TFamilyProd>(&t->node)) return eval_family(*v, env);
        const auto& v = std::get<TMapApply>(t->node);
        auto it = env.maps.find(v.fn);
        if (it == env.maps.end()) throw eval_error("unbound map parameter " + v.fn);
        return it->second.apply_total(eval(v.arg, env));
    }

    bool eval_with(const std::string& var, CoSet value, const FormulaPtr& body, EvalEnv& env) {
        auto saved = bind(env, var, std::move(value));
        const bool out = eval(body, env);
        unbind(env, var, std::move(saved));
        return out;
    }

private:
    void require_domain() const {
        if (!domain_)
            throw undecidable_fragment("an unbounded quantifier needs an explicit universe");
    }

    std::optional<CoSet> bind(EvalEnv& env, const std::string& var, CoSet value) {
        std::optional<CoSet> saved;
        if (auto it = env.vars.find(var); it != env.vars.end()) saved = it->second;
        env.vars[var] = std::move(value);
        return saved;
    }
    void unbind(EvalEnv& env, const std::string& var, std::optional<CoSet> saved) {
        if (saved) env.vars[var] = std::move(*saved);
        else env.vars.erase(var);
    }

    CoSet eval_apply(const TApply& v, EvalEnv& env) {
        auto arg = [&](std::size_t i) { return eval(v.args[i], env); };
        switch (v.op) {
            case TermOp::pair: return pair(arg(0), arg(1));
            case TermOp::pair_exclusion: return pair_exclusion(arg(0), arg(1));
            case TermOp::opair: return opair(arg(0), arg(1));
            case TermOp::anti_opair: return anti_opair(arg(0), arg(1));
            case TermOp::cup: return set_union(arg(0), arg(1));
            case TermOp::cap: return set_intersection(arg(0), arg(1));
            case TermOp::minus: return set_difference(arg(0), arg(1));
            case TermOp::big_union: return big_union(arg(0));
            case TermOp::comp_inter: return comp_intersection(arg(0));
            case TermOp::power: return powerset(arg(0));
            case TermOp::richard: return richard(arg(0));
            case TermOp::cartesian: return cartesian(arg(0), arg(1));
            case TermOp::anti_cartesian: return anti_cartesian(arg(0), arg(1));
            case TermOp::diag: return diagonal(MapSpec::from_graph(arg(0)));
            case TermOp::choose: return choice(arg(0));
            case TermOp::complement: return complement(arg(0));
            case TermOp::supplement: return supplement(arg(0));
            case TermOp::fund: return fund(arg(0));
            case TermOp::anfd: return anfd(arg(0));
            case TermOp::citer: return complements_iteration(arg(0));
            case TermOp::eo_supplement: return elements_op(UnaryOpName::supplement, arg(0));
            case TermOp::eo_complement: return elements_op(UnaryOpName::complement, arg(0));
            case TermOp::eo_singleton: return elements_op(UnaryOpName::singleton, arg(0));
            case TermOp::eo_identity: return elements_op(UnaryOpName::identity, arg(0));
        }
        throw eval_error("unknown operator");
    }

    CoSet eval_bind(const TBind& v, EvalEnv& env) {
        CoSet source = eval(v.source, env);
        if (v.kind == BindKind::separation || v.kind == BindKind::confiscation) {
            auto pred = [&](const CoSet& c) { return eval_with(v.var, c, v.pred, env); };
            return v.kind == BindKind::separation ? separation(source, pred)
                                                  : confiscation(source, pred);
        }
        auto map = [&](const CoSet& c) -> CoSet {
            auto saved = bind(env, v.var, c);
            CoSet out = eval(v.map, env);
            unbind(env, v.var, std::move(saved));
            return out;
        };
        return v.kind == BindKind::replacement ? replacement(source, map)
                                               : anti_replacement(source, map);
    }

    // Prod i in b. t enumerates the family directly; AProd is its supplement
    // conjugate, so a cofinite index with anti-founded members mirrors down to
    // an ordinary finite product.
    CoSet eval_family(const TFamilyProd& v, EvalEnv& env) {
        if (!v.anti) {
            const CoSet index = eval(v.index, env);
            if (index.is_cofin())
                throw not_representable("a direct product over a cofinite index");
            if (!is_founded(index))
                throw not_representable("a direct product needs a founded index set");
            std::vector<std::pair<CoSet, CoSet>> fam;
            for (const CoSet& i : index.support()) {
                auto saved = bind(env, v.var, i);
                CoSet m = eval(v.body, env);
                unbind(env, v.var, std::move(saved));
                fam.emplace_back(i, std::move(m));
            }
            return direct_product_members(fam);
        }
        const CoSet mirrored_index = supplement(eval(v.index, env));
        if (mirrored_index.is_cofin())
            throw not_representable("an anti-product over a non-cofinite index");
        if (!is_founded(mirrored_index))
            throw not_representable("an anti-product needs an anti-founded index set");
        std::vector<std::pair<CoSet, CoSet>> fam;
        for (const CoSet& j : mirrored_index.support()) {
            auto saved = bind(env, v.var, supplement(j));
            CoSet m = eval(v.body, env);
            unbind(env, v.var, std::move(saved));
            fam.emplace_back(j, supplement(std::move(m)));
        }
        return supplement(direct_product_members(fam));
    }

    const TestUniverse* domain_ = nullptr;
    bool approx_ = false;
};

inline bool eval_formula(const FormulaPtr& f, EvalEnv env = {},
                         const TestUniverse* domain = nullptr, bool* approximate = nullptr) {
    Evaluator ev(domain);
    const bool out = ev.eval(f, env);
    if (approximate) *approximate = ev.approximate();
    return out;
}

inline CoSet eval_term(const TermPtr& t, EvalEnv env = {},
                       const TestUniverse* domain = nullptr) {
    Evaluator ev(domain);
    return ev.eval(t, env);
}

// The PredSpec forms of separation and confiscation: the body is evaluated in
// the decidable fragment (no universe), so anything needing one throws.
inline CoSet separation(const CoSet& a, const PredSpec& p) {
    Evaluator ev;
    EvalEnv env;
    return separation(a, [&](const CoSet& c) { return ev.eval_with(p.var, c, p.body, env); });
}

inline CoSet confiscation(const CoSet& a, const PredSpec& p) {
    Evaluator ev;
    EvalEnv env;
    return confiscation(a, [&](const CoSet& c) { return ev.eval_with(p.var, c, p.body, env); });
}

inline CoSet replacement(const CoSet& a, const std::string& var, const TermPtr& body) {
    Evaluator ev;
    EvalEnv env;
    return replacement(a, [&](const CoSet& c) {
        env.vars[var] = c;
        CoSet out = ev.eval(body, env);
        env.vars.erase(var);
        return out;
    });
}

} // namespace synto
