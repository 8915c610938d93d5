#pragma once

#include <concepts>
#include <optional>
#include <utility>
#include <vector>

#include "synto/coset.hpp"
#include "synto/duality.hpp"
#include "synto/errors.hpp"

namespace synto {

inline CoSet empty() { return empty_set(); }
inline CoSet universe() { return universe_set(); }

inline CoSet pair(const CoSet& a, const CoSet& b) { return CoSet::fin({a, b}); }

// Everything that is neither a nor b.
inline CoSet pair_exclusion(const CoSet& a, const CoSet& b) {
    return CoSet::cofin({a, b});
}

// Kuratowski pair {{a},{a,b}}.
inline CoSet opair(const CoSet& a, const CoSet& b) {
    return CoSet::fin({CoSet::fin({a}), CoSet::fin({a, b})});
}

// The pair construction with every brace replaced by pair exclusion; the
// supplement image of opair on supplemented arguments. Injective.
inline CoSet anti_opair(const CoSet& a, const CoSet& b) {
    return pair_exclusion(pair_exclusion(a, a), pair_exclusion(a, b));
}

// Exact inverse of opair where one exists.
inline std::optional<std::pair<CoSet, CoSet>> opair_decompose(const CoSet& y) {
    if (y.is_cofin()) return std::nullopt;
    const auto& s = y.support();
    if (s.size() == 1) {
        const CoSet& p = s[0];
        if (p.is_fin() && p.support().size() == 1)
            return std::make_pair(p.support()[0], p.support()[0]);
        return std::nullopt;
    }
    if (s.size() != 2) return std::nullopt;
    for (int side = 0; side < 2; ++side) {
        const CoSet& single = s[side];
        const CoSet& both = s[1 - side];
        if (single.is_cofin() || both.is_cofin()) continue;
        if (single.support().size() != 1 || both.support().size() != 2) continue;
        const CoSet& u = single.support()[0];
        const CoSet& x0 = both.support()[0];
        const CoSet& x1 = both.support()[1];
        if (x0 == u) return std::make_pair(u, x1);
        if (x1 == u) return std::make_pair(u, x0);
    }
    return std::nullopt;
}

enum class BoolOp { set_union, set_intersection, set_difference };

namespace detail {

inline std::vector<CoSet> merge_union(const std::vector<CoSet>& a, const std::vector<CoSet>& b) {
    std::vector<CoSet> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), code_less);
    return out;
}

inline std::vector<CoSet> merge_intersection(const std::vector<CoSet>& a,
                                             const std::vector<CoSet>& b) {
    std::vector<CoSet> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                          code_less);
    return out;
}

inline std::vector<CoSet> merge_difference(const std::vector<CoSet>& a,
                                           const std::vector<CoSet>& b) {
    std::vector<CoSet> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        code_less);
    return out;
}

} // namespace detail

// Total: each of the four constructor cases lands back in the carrier,
// e.g. CoFin(X) union Fin(E) = CoFin(X minus E).
inline CoSet set_union(const CoSet& a, const CoSet& b) {
    if (a.is_fin() && b.is_fin())
        return CoSet::fin(detail::merge_union(a.support(), b.support()));
    if (a.is_cofin() && b.is_cofin())
        return CoSet::cofin(detail::merge_intersection(a.support(), b.support()));
    const CoSet& co = a.is_cofin() ? a : b;
    const CoSet& fi = a.is_cofin() ? b : a;
    return CoSet::cofin(detail::merge_difference(co.support(), fi.support()));
}

inline CoSet set_intersection(const CoSet& a, const CoSet& b) {
    if (a.is_fin() && b.is_fin())
        return CoSet::fin(detail::merge_intersection(a.support(), b.support()));
    if (a.is_cofin() && b.is_cofin())
        return CoSet::cofin(detail::merge_union(a.support(), b.support()));
    const CoSet& co = a.is_cofin() ? a : b;
    const CoSet& fi = a.is_cofin() ? b : a;
    return CoSet::fin(detail::merge_difference(fi.support(), co.support()));
}

inline CoSet set_difference(const CoSet& a, const CoSet& b) {
    return set_intersection(a, complement(b));
}

inline CoSet boolean(const CoSet& a, BoolOp op, const CoSet& b) {
    switch (op) {
        case BoolOp::set_union: return set_union(a, b);
        case BoolOp::set_intersection: return set_intersection(a, b);
        case BoolOp::set_difference: return set_difference(a, b);
    }
    return a;
}

// Large union. For a CoFin argument the result is V: every y lies in
// infinitely many sets and a excludes only finitely many of them.
inline CoSet big_union(const CoSet& a) {
    if (a.is_cofin()) return universe_set();
    CoSet acc = empty_set();
    for (const CoSet& z : a.support()) acc = set_union(acc, z);
    return acc;
}

// Intersection of all members of the complement of a. Empty family gives V;
// for a Fin argument the family is cofinite and every y misses some member.
inline CoSet comp_intersection(const CoSet& a) {
    if (a.is_fin()) return empty_set();
    CoSet acc = universe_set();
    for (const CoSet& z : a.support()) acc = set_intersection(acc, z);
    return acc;
}

inline CoSet powerset(const CoSet& a) {
    if (a.is_cofin()) {
        if (a.support().empty()) return universe_set(); // every set is a subset of V
        throw not_representable("the subset class of " + to_string(a) +
                                " is neither finite nor cofinite");
    }
    const auto& s = a.support();
    if (s.size() > 20) throw size_limit("power set of " + std::to_string(s.size()) + " elements");
    std::vector<CoSet> subsets;
    subsets.reserve(std::size_t{1} << s.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << s.size()); ++mask) {
        std::vector<CoSet> elems;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (mask & (std::size_t{1} << i)) elems.push_back(s[i]);
        subsets.push_back(CoSet::fin(std::move(elems)));
    }
    return CoSet::fin(std::move(subsets));
}

// Richard set: the non-subsets of a, i.e. the complement of the power set.
inline CoSet richard(const CoSet& a) {
    if (a.is_cofin()) {
        if (a.support().empty()) return empty_set(); // every set is a subset of V
        throw not_representable("the non-subset class of " + to_string(a) +
                                " is neither finite nor cofinite");
    }
    return complement(powerset(a));
}

// Founded separation: the Fund coercion defuses unfounded arguments, then the
// predicate filters the finite support.
template <std::predicate<const CoSet&> P>
CoSet separation(const CoSet& a, P&& pred) {
    const CoSet base = fund(a);
    std::vector<CoSet> keep;
    for (const CoSet& x : base.support())
        if (pred(x)) keep.push_back(x);
    return CoSet::fin(std::move(keep));
}

// Anti-founded confiscation: a union {y : pred(y)} exactly, computed on the
// exclusion list after the Anfd coercion.
template <std::predicate<const CoSet&> P>
CoSet confiscation(const CoSet& a, P&& pred) {
    const CoSet base = anfd(a);
    std::vector<CoSet> still_out;
    for (const CoSet& x : base.support())
        if (!pred(x)) still_out.push_back(x);
    return CoSet::cofin(std::move(still_out));
}

// A map: either a finite functional graph of Kuratowski pairs or a builtin
// unary operator. Graphs carry the off-domain convention F(x) = 0 so that
// formula-level application is total.
class MapSpec {
public:
    static MapSpec from_builtin(UnaryOpName o) {
        MapSpec m;
        m.builtin_ = o;
        return m;
    }

    static MapSpec from_graph(const CoSet& g) {
        if (g.is_cofin()) throw not_a_function("a function graph must be a finite set of pairs");
        MapSpec m;
        m.graph_ = g;
        for (const CoSet& p : g.support()) {
            auto uv = opair_decompose(p);
            if (!uv) throw not_a_function(to_string(p) + " is not an ordered pair");
            m.entries_.push_back(*uv);
        }
        for (std::size_t i = 0; i < m.entries_.size(); ++i)
            for (std::size_t j = i + 1; j < m.entries_.size(); ++j)
                if (m.entries_[i].first == m.entries_[j].first &&
                    m.entries_[i].second != m.entries_[j].second)
                    throw not_a_function("graph maps " + to_string(m.entries_[i].first) +
                                         " to two different values");
        return m;
    }

    bool is_builtin() const { return builtin_.has_value(); }
    UnaryOpName builtin_name() const { return *builtin_; }
    const CoSet& graph() const { return graph_; }
    const std::vector<std::pair<CoSet, CoSet>>& entries() const { return entries_; }

    std::optional<CoSet> apply(const CoSet& x) const {
        if (builtin_) return apply_unary(*builtin_, x);
        for (const auto& [u, v] : entries_)
            if (u == x) return v;
        return std::nullopt;
    }

    CoSet apply_total(const CoSet& x) const {
        auto v = apply(x);
        return v ? *v : empty_set();
    }

private:
    std::optional<UnaryOpName> builtin_;
    CoSet graph_ = empty_set();
    std::vector<std::pair<CoSet, CoSet>> entries_;
};

template <typename F>
    requires std::is_invocable_r_v<CoSet, F&, const CoSet&>
CoSet replacement(const CoSet& a, F&& f) {
    const CoSet base = fund(a);
    std::vector<CoSet> image;
    image.reserve(base.support().size());
    for (const CoSet& x : base.support()) image.push_back(f(x));
    return CoSet::fin(std::move(image));
}

template <typename F>
    requires std::is_invocable_r_v<CoSet, F&, const CoSet&>
CoSet anti_replacement(const CoSet& a, F&& f) {
    const CoSet excluded = complement(anfd(a));
    std::vector<CoSet> image;
    image.reserve(excluded.support().size());
    for (const CoSet& x : excluded.support()) image.push_back(f(x));
    return CoSet::cofin(std::move(image));
}

// Fund coercion, then the image over the (domain-restricted) finite support.
inline CoSet replacement(const CoSet& a, const MapSpec& f) {
    const CoSet base = fund(a);
    std::vector<CoSet> image;
    for (const CoSet& x : base.support())
        if (auto v = f.apply(x)) image.push_back(*v);
    return CoSet::fin(std::move(image));
}

// Anfd coercion, then the complement of the image over the complement: for a
// CoFin argument this is CoFin of the image of the exclusion list.
inline CoSet anti_replacement(const CoSet& a, const MapSpec& f) {
    const CoSet excluded = complement(anfd(a));
    std::vector<CoSet> image;
    for (const CoSet& x : excluded.support())
        if (auto v = f.apply(x)) image.push_back(*v);
    return CoSet::cofin(std::move(image));
}

inline CoSet cartesian(const CoSet& a, const CoSet& b) {
    if ((a.is_fin() && a.support().empty()) || (b.is_fin() && b.support().empty()))
        return empty_set();
    if (a.is_cofin() || b.is_cofin())
        throw not_representable("the product " + to_string(a) + " x " + to_string(b) +
                                " is neither finite nor cofinite");
    std::vector<CoSet> pairs;
    pairs.reserve(a.support().size() * b.support().size());
    for (const CoSet& u : a.support())
        for (const CoSet& v : b.support()) pairs.push_back(opair(u, v));
    return CoSet::fin(std::move(pairs));
}

// Complement of the product of the complements; total exactly when that
// product is.
inline CoSet anti_cartesian(const CoSet& a, const CoSet& b) {
    try {
        return complement(cartesian(complement(a), complement(b)));
    } catch (const not_representable&) {
        throw not_representable("the anti-product of " + to_string(a) + " and " + to_string(b) +
                                " is neither finite nor cofinite");
    }
}

inline CoSet ordinal(int n) {
    CoSet x = empty_set();
    for (int i = 0; i < n; ++i) {
        std::vector<CoSet> next = x.support();
        next.push_back(x);
        x = CoSet::fin(std::move(next));
    }
    return x;
}

// Transitive, linearly ordered by membership, founded: the von Neumann
// numerals in Fin coding.
inline bool is_finite_ordinal(const CoSet& y) {
    if (!is_founded(y)) return false;
    const auto& s = y.support();
    for (const CoSet& m : s)
        if (!subset(m, y)) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!member(s[i], s[j]) && !member(s[j], s[i])) return false;
    return true;
}

inline CoSet anti_ordinal(int n) { return supplement(ordinal(n)); }

// Equal power. Two finite codes compare by support size, two cofinite codes
// are always equipollent, mixed codes never.
inline bool equipollent(const CoSet& a, const CoSet& b) {
    if (a.is_fin() != b.is_fin()) return false;
    if (a.is_cofin()) return true;
    return a.support().size() == b.support().size();
}

// Smaller power than the complement: exactly the Fin codes.
inline bool slim(const CoSet& a) { return a.is_fin(); }

// All choice functions over an indexed family, as explicit graphs.
inline CoSet direct_product_members(const std::vector<std::pair<CoSet, CoSet>>& family) {
    for (const auto& [i, m] : family)
        if (m.is_cofin())
            throw not_representable("family member " + to_string(m) + " is cofinite");
    std::vector<std::vector<CoSet>> graphs{{}};
    for (const auto& [i, m] : family) {
        std::vector<std::vector<CoSet>> extended;
        for (const auto& g : graphs)
            for (const CoSet& v : m.support()) {
                auto next = g;
                next.push_back(opair(i, v));
                extended.push_back(std::move(next));
            }
        graphs = std::move(extended);
        if (graphs.empty()) break;
    }
    std::vector<CoSet> out;
    out.reserve(graphs.size());
    for (auto& g : graphs) out.push_back(CoSet::fin(std::move(g)));
    return CoSet::fin(std::move(out));
}

inline CoSet direct_product(const CoSet& index, const MapSpec& family) {
    if (!is_founded(index))
        throw not_representable("a direct product needs a founded finite index set");
    std::vector<std::pair<CoSet, CoSet>> fam;
    fam.reserve(index.support().size());
    for (const CoSet& i : index.support()) fam.emplace_back(i, family.apply_total(i));
    return direct_product_members(fam);
}

// Deterministic selector: the code-order minimum of each member. Sound for
// finite families of pairwise disjoint non-empty sets.
inline CoSet choice(const CoSet& family_set) {
    const CoSet base = fund(family_set);
    const auto& fam = base.support();
    for (const CoSet& y : fam) {
        if (y.is_cofin())
            throw not_representable("choice over the cofinite member " + to_string(y));
        if (y.support().empty())
            throw choice_violation("family member " + to_string(y) + " is empty");
    }
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            if (!set_intersection(fam[i], fam[j]).support().empty())
                throw choice_violation("family members " + to_string(fam[i]) + " and " +
                                       to_string(fam[j]) + " overlap");
    std::vector<CoSet> picks;
    picks.reserve(fam.size());
    for (const CoSet& y : fam) picks.push_back(y.support().front());
    return CoSet::fin(std::move(picks));
}

// The anti-diagonal {x : x not in f(x)} under the off-domain convention
// f(x) = 0: a CoFin code, and never in the range of f.
inline CoSet diagonal(const MapSpec& f) {
    if (f.is_builtin())
        throw not_representable("diagonal needs an explicit finite graph");
    std::vector<CoSet> self_containing;
    for (const auto& [x, fx] : f.entries())
        if (member(x, fx)) self_containing.push_back(x);
    return CoSet::cofin(std::move(self_containing));
}

} // namespace synto
