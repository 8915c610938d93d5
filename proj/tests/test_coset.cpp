#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "synto/coset.hpp"

using namespace synto;

namespace {

CoSet O() { return empty_set(); }
CoSet V() { return universe_set(); }

// Brute-force enumeration of all codes with rank <= 2 and support size <= 1,
// written independently of the library's universe module.
std::vector<CoSet> small_codes() {
    std::vector<CoSet> rank0 = {O(), V()};
    std::vector<CoSet> rank1 = rank0;
    for (const CoSet& x : rank0) {
        rank1.push_back(CoSet::fin({x}));
        rank1.push_back(CoSet::cofin({x}));
    }
    std::vector<CoSet> rank2 = rank1;
    for (const CoSet& x : rank1) {
        CoSet f = CoSet::fin({x});
        CoSet c = CoSet::cofin({x});
        if (std::find(rank2.begin(), rank2.end(), f) == rank2.end()) rank2.push_back(f);
        if (std::find(rank2.begin(), rank2.end(), c) == rank2.end()) rank2.push_back(c);
    }
    return rank2;
}

} // namespace

TEST_CASE("canonicalize removes duplicates and sorts") {
    RawCoSet zero;
    RawCoSet two_zeros{false, {zero, zero}};
    CHECK(canonicalize(two_zeros) == CoSet::fin({O()}));

    RawCoSet co_two_zeros{true, {zero, zero}};
    CHECK(canonicalize(co_two_zeros) == CoSet::cofin({O()}));

    RawCoSet vraw{true, {}};
    RawCoSet mixed{false, {vraw, zero}};
    CoSet got = canonicalize(mixed);
    CHECK(got == CoSet::fin({O(), V()}));
    CHECK(got.support().front() == O()); // Fin sorts before CoFin at equal rank
    CHECK(to_string(got) == "{0,V}");
}

TEST_CASE("canonicalize is idempotent and order insensitive") {
    RawCoSet zero;
    RawCoSet vraw{true, {}};
    RawCoSet a{false, {vraw, zero, zero}};
    RawCoSet b{false, {zero, vraw}};
    CHECK(canonicalize(a) == canonicalize(b));
}

TEST_CASE("membership basics") {
    CHECK(member(O(), V()));
    CHECK_FALSE(member(O(), CoSet::cofin({O()})));
    CHECK(member(V(), V())); // V excludes nothing, so it contains itself
    CHECK(member(O(), CoSet::fin({O()})));
    CHECK_FALSE(member(V(), CoSet::fin({O()})));
}

TEST_CASE("equality is code identity") {
    CHECK(equal(CoSet::fin({}), O()));
    CHECK_FALSE(equal(O(), V()));
    CHECK(equal(CoSet::cofin({O()}), complement(CoSet::fin({O()}))));
}

TEST_CASE("complement swaps the constructor") {
    CHECK(complement(O()) == V());
    CHECK(complement(V()) == O());
    CoSet a = CoSet::cofin({O(), CoSet::fin({O()})});
    CHECK(complement(a) == CoSet::fin({O(), CoSet::fin({O()})}));
    for (const CoSet& x : small_codes()) CHECK(complement(complement(x)) == x);
}

TEST_CASE("rank") {
    CHECK(O().rank() == 0);
    CHECK(V().rank() == 0);
    CHECK(CoSet::fin({CoSet::cofin({O()})}).rank() == 2);
}

TEST_CASE("founded and anti-founded are hereditary mirrors") {
    CoSet two = CoSet::fin({O(), CoSet::fin({O()})});
    CHECK(is_founded(two));
    CHECK_FALSE(is_founded(V()));
    CHECK(is_antifounded(V()));
    CHECK(is_antifounded(CoSet::cofin({V()})));
    CHECK_FALSE(is_antifounded(CoSet::fin({V()})));
    CHECK_FALSE(is_founded(CoSet::fin({V()})));
    CHECK_FALSE(is_antifounded(CoSet::cofin({O()})));
}

TEST_CASE("encode / decode") {
    CHECK(encode(O()) == "{\"fin\":[]}");
    CHECK(encode(V()) == "{\"cofin\":[]}");
    for (const CoSet& x : small_codes()) CHECK(decode(encode(x)) == x);

    CHECK_THROWS_AS(decode("{\"fin\":"), parse_error);
    CHECK_THROWS_AS(decode("{\"fin\":[], \"cofin\":[]}"), parse_error);
    CHECK_THROWS_AS(decode("{\"inf\":[]}"), parse_error);
    CHECK_THROWS_AS(decode("[1,2]"), parse_error);
}

TEST_CASE("membership splits exactly between a set and its complement") {
    const auto codes = small_codes();
    for (const CoSet& a : codes)
        for (const CoSet& y : codes)
            CHECK(member(y, a) != member(y, complement(a)));
}

TEST_CASE("self membership marks the constructor") {
    for (const CoSet& a : small_codes()) CHECK(member(a, a) == a.is_cofin());
}

TEST_CASE("extensionality over the enumerated slice") {
    const auto codes = small_codes();
    for (const CoSet& a : codes)
        for (const CoSet& b : codes) {
            bool same_on_slice = true;
            for (const CoSet& y : codes)
                if (member(y, a) != member(y, b)) {
                    same_on_slice = false;
                    break;
                }
            bool same_support = a.is_cofin() == b.is_cofin() && a.support() == b.support();
            CHECK(equal(a, b) == (same_on_slice && same_support));
        }
}

TEST_CASE("subset") {
    CoSet one = CoSet::fin({O()});
    CHECK(subset(O(), one));
    CHECK(subset(one, V()));
    CHECK_FALSE(subset(V(), one));
    CHECK(subset(CoSet::cofin({O()}), V()));
    CHECK_FALSE(subset(V(), CoSet::cofin({O()})));
    CHECK(subset(CoSet::cofin({O(), one}), CoSet::cofin({O()})));
    CHECK_FALSE(subset(CoSet::cofin({O()}), one));
    const auto codes = small_codes();
    for (const CoSet& a : codes)
        for (const CoSet& b : codes) {
            bool pointwise = true;
            for (const CoSet& y : codes)
                if (member(y, a) && !member(y, b)) {
                    pointwise = false;
                    break;
                }
            if (subset(a, b)) CHECK(pointwise);
            // The slice can miss witnesses, so only one direction is exact.
        }
}

TEST_CASE("code order sorts by rank first") {
    std::vector<CoSet> v = {CoSet::fin({CoSet::fin({O()})}), V(), CoSet::fin({O()}), O()};
    std::sort(v.begin(), v.end(), code_less);
    CHECK(v[0] == O());
    CHECK(v[1] == V());
    CHECK(v[2] == CoSet::fin({O()}));
    CHECK(v[3] == CoSet::fin({CoSet::fin({O()})}));
}
