#pragma once

#include <vector>

#include "synto/coset.hpp"
#include "synto/errors.hpp"

namespace synto {

// The supplement S: hereditary constructor swap. Involutive, S(0) = V, and
// x in y iff S(x) not in S(y), which is what makes the anti-theory true on
// supplement images.
inline CoSet supplement(const CoSet& a) {
    std::vector<CoSet> image;
    image.reserve(a.support().size());
    for (const CoSet& c : a.support()) image.push_back(supplement(c));
    return a.is_cofin() ? CoSet::fin(std::move(image)) : CoSet::cofin(std::move(image));
}

inline CoSet singleton(const CoSet& a) { return CoSet::fin({a}); }

enum class UnaryOpName { supplement, complement, singleton, identity };

inline const char* name_of(UnaryOpName o) {
    switch (o) {
        case UnaryOpName::supplement: return "S";
        case UnaryOpName::complement: return "~";
        case UnaryOpName::singleton: return "sing";
        case UnaryOpName::identity: return "id";
    }
    return "?";
}

inline CoSet apply_unary(UnaryOpName o, const CoSet& a) {
    switch (o) {
        case UnaryOpName::supplement: return supplement(a);
        case UnaryOpName::complement: return complement(a);
        case UnaryOpName::singleton: return singleton(a);
        case UnaryOpName::identity: return a;
    }
    return a;
}

inline bool is_involution(UnaryOpName o) {
    return o == UnaryOpName::supplement || o == UnaryOpName::complement ||
           o == UnaryOpName::identity;
}

// Def EO, {^o}a := {ox : x in a}. On a CoFin code the exclusion-image rule is
// sound only when o is a bijection, which the involutions are; the singleton
// image of a cofinite set is neither finite nor cofinite.
inline CoSet elements_op(UnaryOpName o, const CoSet& a) {
    if (a.is_cofin() && !is_involution(o))
        throw not_representable(std::string("elements-operator {") + name_of(o) +
                                "} of a cofinite set is a properclass");
    std::vector<CoSet> image;
    image.reserve(a.support().size());
    for (const CoSet& c : a.support()) image.push_back(apply_unary(o, c));
    return a.is_cofin() ? CoSet::cofin(std::move(image)) : CoSet::fin(std::move(image));
}

// Fund functor: keeps Fin-coded sets, collapses CoFin-coded ones to 0.
// A total coercion, not a check.
inline CoSet fund(const CoSet& a) { return a.is_fin() ? a : empty_set(); }

// Anfd functor, the mirror: keeps CoFin-coded sets, inflates the rest to V.
inline CoSet anfd(const CoSet& a) { return a.is_cofin() ? a : universe_set(); }

// Supplement as complements-iteration: the literal recursion
// (neg)a = complement of the (neg)-image of a's support. Equals supplement
// everywhere; kept as an independent route for the S6/S7 checks.
inline CoSet complements_iteration(const CoSet& a) {
    std::vector<CoSet> image;
    image.reserve(a.support().size());
    for (const CoSet& c : a.support()) image.push_back(complements_iteration(c));
    const CoSet mapped =
        a.is_cofin() ? CoSet::cofin(std::move(image)) : CoSet::fin(std::move(image));
    return complement(mapped);
}

} // namespace synto
