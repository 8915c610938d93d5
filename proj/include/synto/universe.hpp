#pragma once

#include <algorithm>
#include <vector>

#include "synto/coset.hpp"
#include "synto/errors.hpp"

namespace synto {

// A finite slice of the universe used as quantifier domain: all canonical
// codes of bounded rank whose supports (hereditarily) stay within the width
// bound. Closed under complement and supplement, both of which preserve rank
// and width.
struct TestUniverse {
    int rank_bound = 0;
    int width_bound = 0;
    std::vector<CoSet> elements; // sorted by code order

    bool contains(const CoSet& x) const {
        return std::binary_search(elements.begin(), elements.end(), x, code_less);
    }
};

namespace detail {

inline void combinations(const std::vector<CoSet>& pool, std::size_t k, std::size_t start,
                         std::vector<CoSet>& scratch, std::vector<std::vector<CoSet>>& out) {
    if (scratch.size() == k) {
        out.push_back(scratch);
        return;
    }
    for (std::size_t i = start; i + (k - scratch.size()) <= pool.size(); ++i) {
        scratch.push_back(pool[i]);
        combinations(pool, k, i + 1, scratch, out);
        scratch.pop_back();
    }
}

inline void supports_up_to(const std::vector<CoSet>& pool, std::size_t width,
                           std::vector<std::vector<CoSet>>& out) {
    std::vector<CoSet> scratch;
    for (std::size_t k = 0; k <= width && k <= pool.size(); ++k)
        combinations(pool, k, 0, scratch, out);
}

} // namespace detail

inline TestUniverse enumerate_universe(int rank_bound, int width_bound,
                                       std::size_t element_cap = 5000) {
    std::vector<CoSet> level = {empty_set(), universe_set()};
    for (int r = 1; r <= rank_bound; ++r) {
        std::vector<std::vector<CoSet>> supports;
        detail::supports_up_to(level, static_cast<std::size_t>(width_bound), supports);
        if (supports.size() * 2 > element_cap)
            throw size_limit("universe would exceed the element cap of " +
                             std::to_string(element_cap));
        std::vector<CoSet> next;
        next.reserve(supports.size() * 2);
        for (auto& s : supports) {
            next.push_back(CoSet::fin(s));
            next.push_back(CoSet::cofin(std::move(s)));
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(), code_less);
    level.erase(std::unique(level.begin(), level.end()), level.end());
    if (level.size() > element_cap)
        throw size_limit("universe would exceed the element cap of " +
                         std::to_string(element_cap));
    return TestUniverse{rank_bound, width_bound, std::move(level)};
}

} // namespace synto
