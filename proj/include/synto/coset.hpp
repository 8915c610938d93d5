#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "synto/errors.hpp"

namespace synto {

// A code for a hereditarily finite-or-cofinite set. A Fin code denotes the
// finite set of its support members; a CoFin code denotes the complement of
// its support. Canonical form: support sorted by the total code order and
// duplicate-free, so two codes denote the same set iff they are identical.
class CoSet {
public:
    CoSet() = default; // the empty set 0

    static CoSet fin(std::vector<CoSet> elems) {
        return CoSet(false, std::move(elems));
    }
    static CoSet cofin(std::vector<CoSet> exclusions) {
        return CoSet(true, std::move(exclusions));
    }

    bool is_cofin() const { return cofin_; }
    bool is_fin() const { return !cofin_; }
    const std::vector<CoSet>& support() const { return support_; }

    // 0 on empty support, else 1 + max rank over the support. Strictly
    // decreases from a code to each support member, which bounds every
    // recursion over codes.
    int rank() const {
        int r = 0;
        for (const CoSet& c : support_) r = std::max(r, c.rank() + 1);
        return r;
    }

    friend bool operator==(const CoSet& a, const CoSet& b) {
        return a.cofin_ == b.cofin_ && a.support_ == b.support_;
    }
    friend bool operator!=(const CoSet& a, const CoSet& b) { return !(a == b); }

private:
    CoSet(bool cofin, std::vector<CoSet> support)
        : cofin_(cofin), support_(std::move(support)) {
        normalize();
    }

    void normalize();

    bool cofin_ = false;
    std::vector<CoSet> support_;
};

// Total code order: rank, then constructor (Fin before CoFin), then
// lexicographically on the support. Any total order would canonicalize;
// rank-first makes rank bounds visible in enumeration order.
inline int code_compare(const CoSet& a, const CoSet& b) {
    const int ra = a.rank(), rb = b.rank();
    if (ra != rb) return ra < rb ? -1 : 1;
    if (a.is_cofin() != b.is_cofin()) return a.is_cofin() ? 1 : -1;
    const auto& sa = a.support();
    const auto& sb = b.support();
    const std::size_t n = std::min(sa.size(), sb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = code_compare(sa[i], sb[i]); c != 0) return c;
    }
    if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
    return 0;
}

inline bool code_less(const CoSet& a, const CoSet& b) {
    return code_compare(a, b) < 0;
}

inline void CoSet::normalize() {
    std::sort(support_.begin(), support_.end(), code_less);
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

inline const CoSet& empty_set() {
    static const CoSet zero = CoSet::fin({});
    return zero;
}

inline const CoSet& universe_set() {
    static const CoSet v = CoSet::cofin({});
    return v;
}

// Membership is total and decidable: a Fin code contains exactly its support,
// a CoFin code everything but its support.
inline bool member(const CoSet& y, const CoSet& a) {
    const bool listed = std::binary_search(a.support().begin(), a.support().end(), y, code_less);
    return a.is_cofin() ? !listed : listed;
}

// Extensional equality coincides with code identity on canonical codes.
inline bool equal(const CoSet& a, const CoSet& b) { return a == b; }

// (K1) complement: constructor swap. An involution.
inline CoSet complement(const CoSet& a) {
    return a.is_cofin() ? CoSet::fin(a.support()) : CoSet::cofin(a.support());
}

// Hereditarily Fin-coded: exactly the codes with no infinite descending
// membership chain.
inline bool is_founded(const CoSet& a) {
    if (a.is_cofin()) return false;
    for (const CoSet& c : a.support())
        if (!is_founded(c)) return false;
    return true;
}

// Mirror image: hereditarily CoFin-coded. V is anti-founded.
inline bool is_antifounded(const CoSet& a) {
    if (a.is_fin()) return false;
    for (const CoSet& c : a.support())
        if (!is_antifounded(c)) return false;
    return true;
}

inline bool subset(const CoSet& a, const CoSet& b) {
    if (a.is_fin()) {
        for (const CoSet& x : a.support())
            if (!member(x, b)) return false;
        return true;
    }
    // A cofinite set fits inside b only if b is cofinite and excludes no more.
    if (b.is_fin()) return false;
    for (const CoSet& x : b.support())
        if (member(x, a)) return false;
    return true;
}

// Unconstrained input tree for canonicalize: children in any order, with
// duplicates.
struct RawCoSet {
    bool cofin = false;
    std::vector<RawCoSet> children;
};

inline CoSet canonicalize(const RawCoSet& raw) {
    std::vector<CoSet> members;
    members.reserve(raw.children.size());
    for (const RawCoSet& c : raw.children) members.push_back(canonicalize(c));
    return raw.cofin ? CoSet::cofin(std::move(members)) : CoSet::fin(std::move(members));
}

// Surface rendering: 0, V, {..} and co{..} with support in canonical order.
inline std::string to_string(const CoSet& a) {
    if (a.support().empty()) return a.is_cofin() ? "V" : "0";
    std::string out = a.is_cofin() ? "co{" : "{";
    bool first = true;
    for (const CoSet& c : a.support()) {
        if (!first) out += ',';
        first = false;
        out += to_string(c);
    }
    out += '}';
    return out;
}

inline nlohmann::json to_json(const CoSet& a) {
    nlohmann::json children = nlohmann::json::array();
    for (const CoSet& c : a.support()) children.push_back(to_json(c));
    return nlohmann::json{{a.is_cofin() ? "cofin" : "fin", std::move(children)}};
}

// {"fin":[...]} / {"cofin":[...]} with children recursively encoded.
inline std::string encode(const CoSet& a) { return to_json(a).dump(); }

namespace detail {

inline CoSet coset_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.size() != 1)
        throw parse_error("expected an object with a single \"fin\" or \"cofin\" key", 0);
    const auto it = j.begin();
    const std::string& key = it.key();
    if (key != "fin" && key != "cofin")
        throw parse_error("unknown constructor \"" + key + "\"", 0);
    if (!it.value().is_array())
        throw parse_error("constructor \"" + key + "\" requires an array", 0);
    std::vector<CoSet> members;
    members.reserve(it.value().size());
    for (const auto& c : it.value()) members.push_back(coset_from_json(c));
    return key == "cofin" ? CoSet::cofin(std::move(members)) : CoSet::fin(std::move(members));
}

} // namespace detail

inline CoSet decode(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed code: ") + e.what(), e.byte);
    }
    return detail::coset_from_json(j);
}

} // namespace synto
