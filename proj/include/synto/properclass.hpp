#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "synto/algebra.hpp"
#include "synto/eval.hpp"
#include "synto/formula.hpp"
#include "synto/rewrite.hpp"
#include "synto/universe.hpp"

namespace synto {

// A class is a total decidable membership oracle; it may or may not have a
// finite-or-cofinite code. Extensional comparison of classes is deliberately
// absent; only pointwise probing against a universe is offered.
struct ClassView {
    std::string label;
    std::function<bool(const CoSet&)> oracle;

    bool accepts(const CoSet& x) const { return oracle(x); }
};

inline ClassView class_of(const CoSet& a) {
    return ClassView{to_string(a), [a](const CoSet& y) { return member(y, a); }};
}

// Fails fast on anything outside the decidable fragment: the body may use
// only the comprehension variable and no unbounded quantifiers.
inline ClassView comprehend(const std::string& var, const FormulaPtr& body) {
    for (const std::string& v : free_variables(body))
        if (v != var)
            throw undecidable_fragment("comprehension body has the free variable " + v);
    struct Check {
        static void no_unbounded(const FormulaPtr& f) {
            if (std::holds_alternative<FQuant>(f->node))
                throw undecidable_fragment("comprehension body quantifies over the universe");
            if (const auto* v = std::get_if<FNot>(&f->node)) no_unbounded(v->sub);
            if (const auto* v = std::get_if<FBin>(&f->node)) {
                no_unbounded(v->lhs);
                no_unbounded(v->rhs);
            }
            if (const auto* v = std::get_if<FBQuant>(&f->node)) no_unbounded(v->body);
        }
    };
    Check::no_unbounded(body);
    return ClassView{"{ " + var + " : ... }", [var, body](const CoSet& c) {
                         Evaluator ev;
                         EvalEnv env;
                         return ev.eval_with(var, c, body, env);
                     }};
}

inline ClassView russell_class() {
    return ClassView{"russell", [](const CoSet& y) { return !member(y, y); }};
}

inline ClassView omega_class() {
    return ClassView{"omega", [](const CoSet& y) { return is_finite_ordinal(y); }};
}

// The w-set of the anti theory read through the supplement mirror: everything
// that is not an anti-ordinal.
inline ClassView wset_class() {
    return ClassView{"wset", [](const CoSet& y) { return !is_finite_ordinal(supplement(y)); }};
}

inline ClassView pairs_class() {
    return ClassView{"pairs", [](const CoSet& y) { return opair_decompose(y).has_value(); }};
}

inline ClassView diag_class(const MapSpec& f) {
    return ClassView{"diag", [f](const CoSet& x) { return !member(x, f.apply_total(x)); }};
}

struct ProbeResult {
    std::optional<CoSet> code;                       // engaged: representable
    std::optional<std::pair<CoSet, CoSet>> unknown;  // member and non-member witnesses

    bool representable() const { return code.has_value(); }
};

namespace detail {

// Probe points just beyond the universe: singletons, small joins with 0 and
// V, and ordered pairs. These are what unmask classes that merely look
// cofinite on the slice (non-pairs, subsets-of-a-cofinite) without touching
// genuine codes, which agree with their oracle everywhere.
inline std::vector<CoSet> probe_ring(const TestUniverse& u) {
    std::vector<CoSet> ring;
    ring.reserve(u.elements.size() * 7);
    for (const CoSet& y : u.elements) {
        ring.push_back(CoSet::fin({y}));
        ring.push_back(CoSet::cofin({y}));
        ring.push_back(CoSet::fin({empty_set(), y}));
        ring.push_back(CoSet::cofin({empty_set(), y}));
        ring.push_back(CoSet::fin({universe_set(), y}));
        ring.push_back(CoSet::cofin({universe_set(), y}));
        ring.push_back(opair(empty_set(), y));
    }
    return ring;
}

inline bool candidate_matches(const ClassView& c, const CoSet& candidate,
                              const TestUniverse& u, const std::vector<CoSet>& ring) {
    if (c.accepts(candidate) != member(candidate, candidate)) return false;
    for (const CoSet& y : u.elements)
        if (c.accepts(y) != member(y, candidate)) return false;
    for (const CoSet& y : ring)
        if (c.accepts(y) != member(y, candidate)) return false;
    return true;
}

} // namespace detail

// Looks for a code with support inside U that matches the oracle on U, on a
// ring of probe points beyond it, and on itself. Any match fixes the support
// polarity, so only two candidates exist. The verdict is still relative to
// the probed slice.
inline ProbeResult probe_representation(const ClassView& c, const TestUniverse& u) {
    std::vector<CoSet> accepted, rejected;
    for (const CoSet& y : u.elements)
        (c.accepts(y) ? accepted : rejected).push_back(y);

    const std::vector<CoSet> ring = detail::probe_ring(u);
    const CoSet fin_candidate = CoSet::fin(accepted);
    const CoSet cofin_candidate = CoSet::cofin(rejected);

    std::optional<CoSet> best;
    if (detail::candidate_matches(c, fin_candidate, u, ring)) best = fin_candidate;
    if (detail::candidate_matches(c, cofin_candidate, u, ring))
        if (!best || code_less(cofin_candidate, *best)) best = cofin_candidate;
    if (best) return ProbeResult{std::move(best), std::nullopt};

    if (accepted.empty() || rejected.empty())
        // an empty polarity class failing the probe can only be diagnosed
        // with witnesses beyond the slice; report what the slice shows
        return ProbeResult{std::nullopt,
                           std::make_pair(accepted.empty() ? universe_set() : accepted.front(),
                                          rejected.empty() ? empty_set() : rejected.front())};
    return ProbeResult{std::nullopt, std::make_pair(accepted.front(), rejected.front())};
}

// Default materialization of { x : phi } relative to the evaluator's
// universe: representable comprehensions become their code, the rest raise.
inline void install_builder_materializer(Evaluator& ev) {
    ev.builder_hook = [](const TBuilder& b, Evaluator& self, EvalEnv& env) -> CoSet {
        if (!self.domain())
            throw not_representable("a set-builder term needs a universe to materialize");
        // close over the current environment for parameters other than the
        // comprehension variable
        ClassView c{"{ " + b.var + " : ... }", [&b, &self, &env](const CoSet& cand) {
                        return self.eval_with(b.var, cand, b.body, env);
                    }};
        ProbeResult r = probe_representation(c, *self.domain());
        if (r.representable()) return *r.code;
        throw not_representable("{ " + b.var + " : ... } is a properclass on this universe (in: " +
                                to_string(r.unknown->first) +
                                ", out: " + to_string(r.unknown->second) + ")");
    };
}

} // namespace synto
