#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "synto/algebra.hpp"

using namespace synto;

namespace {

CoSet O() { return empty_set(); }
CoSet V() { return universe_set(); }

std::vector<CoSet> small_codes() {
    std::vector<CoSet> out = {O(), V()};
    std::size_t lo = 0;
    for (int round = 0; round < 2; ++round) {
        const std::size_t hi = out.size();
        for (std::size_t i = lo; i < hi; ++i) {
            out.push_back(CoSet::fin({out[i]}));
            out.push_back(CoSet::cofin({out[i]}));
        }
        lo = hi;
    }
    return out;
}

std::vector<CoSet> rank1_codes() {
    return {O(), V(), CoSet::fin({O()}), CoSet::cofin({O()}), CoSet::fin({V()}),
            CoSet::cofin({V()})};
}

} // namespace

TEST_CASE("empty and universe") {
    CHECK(empty() == O());
    CHECK(universe() == V());
    CHECK(complement(empty()) == universe());
}

TEST_CASE("pair and pair exclusion") {
    CHECK(pair(O(), O()) == CoSet::fin({O()}));
    CoSet pe = pair_exclusion(O(), V());
    CHECK(pe == CoSet::cofin({O(), V()}));
    CHECK(member(CoSet::fin({O()}), pe));
    CHECK_FALSE(member(V(), pe));
    for (const CoSet& a : rank1_codes())
        for (const CoSet& b : rank1_codes()) {
            CHECK(complement(pair(a, b)) == pair_exclusion(a, b));
            for (const CoSet& y : rank1_codes())
                CHECK(member(y, pair_exclusion(a, b)) == (!equal(y, a) && !equal(y, b)));
        }
}

TEST_CASE("ordered pairs") {
    CHECK(opair(O(), O()) == CoSet::fin({CoSet::fin({O()})}));
    CHECK(anti_opair(O(), O()) == CoSet::cofin({CoSet::cofin({O()})}));

    const auto cs = rank1_codes();
    for (const CoSet& a : cs)
        for (const CoSet& b : cs) {
            auto dec = opair_decompose(opair(a, b));
            REQUIRE(dec.has_value());
            CHECK(dec->first == a);
            CHECK(dec->second == b);
            for (const CoSet& c : cs)
                for (const CoSet& d : cs) {
                    CHECK((opair(a, b) == opair(c, d)) == (a == c && b == d));
                    CHECK((anti_opair(a, b) == anti_opair(c, d)) == (a == c && b == d));
                }
        }
    CHECK_FALSE(opair_decompose(O()).has_value());
    CHECK_FALSE(opair_decompose(V()).has_value());
    CHECK_FALSE(opair_decompose(CoSet::fin({O(), V()})).has_value());
}

TEST_CASE("boolean operations are the pointwise ones") {
    CHECK(set_union(O(), V()) == V());
    CHECK(set_intersection(CoSet::cofin({O()}), CoSet::cofin({CoSet::fin({O()})})) ==
          CoSet::cofin({O(), CoSet::fin({O()})}));
    const auto codes = small_codes();
    for (const CoSet& a : codes)
        for (const CoSet& b : codes) {
            CoSet u = set_union(a, b);
            CoSet n = set_intersection(a, b);
            CoSet d = set_difference(a, b);
            for (const CoSet& y : codes) {
                CHECK(member(y, u) == (member(y, a) || member(y, b)));
                CHECK(member(y, n) == (member(y, a) && member(y, b)));
                CHECK(member(y, d) == (member(y, a) && !member(y, b)));
            }
        }
}

TEST_CASE("boolean lattice identities") {
    const auto codes = small_codes();
    for (const CoSet& a : codes) {
        CHECK(set_union(a, complement(a)) == V());
        CHECK(set_intersection(a, complement(a)) == O());
        for (const CoSet& b : codes) {
            CHECK(set_union(a, b) == set_union(b, a));
            CHECK(set_intersection(a, b) == set_intersection(b, a));
            CHECK(complement(set_union(a, b)) ==
                  set_intersection(complement(a), complement(b)));
            CHECK(complement(set_intersection(a, b)) ==
                  set_union(complement(a), complement(b)));
            CHECK(set_union(a, set_intersection(a, b)) == a);
            CHECK(set_intersection(a, set_union(a, b)) == a);
        }
    }
    const auto r1 = rank1_codes();
    for (const CoSet& a : r1)
        for (const CoSet& b : r1)
            for (const CoSet& c : r1) {
                CHECK(set_union(set_union(a, b), c) == set_union(a, set_union(b, c)));
                CHECK(set_intersection(set_intersection(a, b), c) ==
                      set_intersection(a, set_intersection(b, c)));
            }
}

TEST_CASE("big union") {
    CHECK(big_union(CoSet::fin({CoSet::fin({O()})})) == CoSet::fin({O()}));
    CHECK(big_union(V()) == V());
    CHECK(big_union(CoSet::fin({CoSet::cofin({O()}), CoSet::fin({O()})})) == V());
    const auto codes = small_codes();
    // y in Union(a) iff y lies in some member, exact for Fin arguments.
    for (const CoSet& a : codes) {
        if (a.is_cofin()) continue;
        CoSet u = big_union(a);
        for (const CoSet& y : codes) {
            bool witnessed = false;
            for (const CoSet& z : a.support())
                if (member(y, z)) {
                    witnessed = true;
                    break;
                }
            CHECK(member(y, u) == witnessed);
        }
    }
    // For a cofinite argument every y has cofinitely many containers.
    for (const CoSet& y : codes) {
        bool witnessed = false;
        for (const CoSet& z : codes)
            if (member(y, z) && member(z, V())) {
                witnessed = true;
                break;
            }
        CHECK(witnessed == member(y, big_union(V())));
    }
}

TEST_CASE("complements intersection") {
    CHECK(comp_intersection(V()) == V());
    CHECK(comp_intersection(CoSet::cofin({CoSet::fin({O()})})) == CoSet::fin({O()}));
    CHECK(comp_intersection(O()) == O());
    const auto codes = small_codes();
    for (const CoSet& a : codes) {
        if (a.is_fin()) continue;
        CoSet r = comp_intersection(a);
        const CoSet family = complement(a);
        for (const CoSet& y : codes) {
            bool in_all = true;
            for (const CoSet& z : family.support())
                if (!member(y, z)) {
                    in_all = false;
                    break;
                }
            CHECK(member(y, r) == in_all);
        }
    }
}

TEST_CASE("power set and Richard set") {
    CHECK(powerset(O()) == CoSet::fin({O()}));
    CHECK(richard(O()) == CoSet::cofin({O()}));
    CHECK(richard(V()) == O());
    CHECK(powerset(V()) == V());
    CHECK_THROWS_AS(powerset(CoSet::cofin({O()})), not_representable);
    CHECK_THROWS_AS(richard(CoSet::cofin({O()})), not_representable);

    const auto codes = small_codes();
    for (const CoSet& a : codes) {
        if (a.is_cofin()) continue;
        CoSet p = powerset(a);
        CHECK(richard(a) == complement(p));
        CHECK(p.support().size() == (std::size_t{1} << a.support().size()));
        for (const CoSet& y : codes) {
            CHECK(member(y, p) == subset(y, a));
            CHECK(member(y, richard(a)) == !subset(y, a));
        }
    }
}

TEST_CASE("separation and confiscation") {
    CoSet one = CoSet::fin({O()});
    CoSet two = CoSet::fin({O(), one});
    auto is_zero = [](const CoSet& y) { return y == empty_set(); };
    CHECK(separation(two, is_zero) == one);
    auto not_self_member = [](const CoSet& y) { return !member(y, y); };
    CHECK(separation(V(), not_self_member) == O()); // Fund defuses the Russell set
    CHECK(confiscation(CoSet::cofin({O(), one}), is_zero) == CoSet::cofin({one}));
    CHECK(confiscation(O(), is_zero) == V()); // Anfd inflates non-cofinite arguments

    const auto codes = small_codes();
    for (const CoSet& a : codes) {
        CoSet s = separation(a, is_zero);
        CoSet c = confiscation(a, is_zero);
        for (const CoSet& y : codes) {
            CHECK(member(y, s) == (member(y, fund(a)) && is_zero(y)));
            CHECK(member(y, c) == (member(y, anfd(a)) || is_zero(y)));
        }
    }
}

TEST_CASE("replacement and anti-replacement") {
    CoSet one = CoSet::fin({O()});
    CoSet two = CoSet::fin({O(), one});
    MapSpec sing = MapSpec::from_builtin(UnaryOpName::singleton);
    CHECK(replacement(two, sing) == CoSet::fin({one, CoSet::fin({one})}));
    CHECK(replacement(V(), sing) == O());
    CHECK(anti_replacement(CoSet::cofin({O()}), sing) == CoSet::cofin({one}));
    CHECK(anti_replacement(O(), sing) == V());

    CoSet g = CoSet::fin({opair(O(), one), opair(one, O())});
    MapSpec swap = MapSpec::from_graph(g);
    CHECK(replacement(two, swap) == two);
    CHECK(replacement(CoSet::fin({one, CoSet::fin({V()})}), swap) == CoSet::fin({O()}));

    CHECK_THROWS_AS(MapSpec::from_graph(CoSet::fin({opair(O(), O()), opair(O(), one)})),
                    not_a_function);
    CHECK_THROWS_AS(MapSpec::from_graph(CoSet::fin({one})), not_a_function);
    CHECK_THROWS_AS(MapSpec::from_graph(V()), not_a_function);
}

TEST_CASE("cartesian products") {
    CoSet one = CoSet::fin({O()});
    CHECK(cartesian(one, one) == CoSet::fin({opair(O(), O())}));
    CHECK(anti_cartesian(V(), V()) == V());
    CHECK(cartesian(O(), CoSet::cofin({O()})) == O());
    CHECK_THROWS_AS(cartesian(V(), V()), not_representable);
    CHECK_THROWS_AS(cartesian(one, V()), not_representable);
    CHECK_THROWS_AS(anti_cartesian(O(), O()), not_representable);

    CoSet two = CoSet::fin({O(), one});
    CoSet prod = cartesian(two, one);
    CHECK(prod.support().size() == 2);
    for (const CoSet& u : two.support()) CHECK(member(opair(u, O()), prod));

    // anti product of cofinite sets: complement of the product of the
    // finite complements
    CoSet ac = anti_cartesian(CoSet::cofin({O()}), CoSet::cofin({one}));
    CHECK(ac == complement(CoSet::fin({opair(O(), one)})));
}

TEST_CASE("ordinals") {
    CoSet one = CoSet::fin({O()});
    CHECK(ordinal(0) == O());
    CHECK(ordinal(1) == one);
    CHECK(ordinal(2) == CoSet::fin({O(), one}));
    CHECK(is_finite_ordinal(ordinal(3)));
    CHECK_FALSE(is_finite_ordinal(CoSet::fin({one})));
    CHECK_FALSE(is_finite_ordinal(V()));
    CHECK(anti_ordinal(0) == V());
    CHECK(anti_ordinal(1) == CoSet::cofin({V()}));
    CHECK(anti_ordinal(2) == supplement(ordinal(2)));
}

TEST_CASE("equipollence and slim") {
    CHECK(equipollent(CoSet::fin({O()}), CoSet::fin({V()})));
    CHECK_FALSE(equipollent(O(), V()));
    CHECK(equipollent(CoSet::cofin({O()}), V()));
    CHECK_FALSE(equipollent(CoSet::fin({O()}), CoSet::cofin({O()})));
    CHECK(slim(O()));
    CHECK_FALSE(slim(CoSet::cofin({O()})));
}

TEST_CASE("direct product and Russell's choice law") {
    CoSet one = CoSet::fin({O()});
    CoSet two = CoSet::fin({O(), one});

    MapSpec to_empty = MapSpec::from_graph(CoSet::fin({opair(O(), O())}));
    CHECK(direct_product(one, to_empty) == O());

    MapSpec fam = MapSpec::from_graph(CoSet::fin({opair(O(), one), opair(one, two)}));
    CoSet dp = direct_product(two, fam);
    CHECK(dp.support().size() == 2);

    CHECK(direct_product(O(), fam) == CoSet::fin({O()})); // single empty function

    // product empty iff some member empty, over all small families
    const auto pool = std::vector<CoSet>{O(), one, two, CoSet::fin({V()})};
    for (const CoSet& m0 : pool)
        for (const CoSet& m1 : pool) {
            MapSpec f = MapSpec::from_graph(CoSet::fin({opair(O(), m0), opair(one, m1)}));
            bool empty_member = m0.support().empty() || m1.support().empty();
            CHECK((direct_product(two, f) == O()) == empty_member);
        }

    MapSpec cof = MapSpec::from_graph(CoSet::fin({opair(O(), V())}));
    CHECK_THROWS_AS(direct_product(one, cof), not_representable);
    CHECK_THROWS_AS(direct_product(CoSet::fin({V()}), fam), not_representable);
}

TEST_CASE("choice") {
    CoSet one = CoSet::fin({O()});
    CoSet vv = CoSet::fin({V()});
    CHECK(choice(CoSet::fin({one, vv})) == CoSet::fin({O(), V()}));
    CHECK(choice(O()) == O());
    CHECK(choice(V()) == O()); // Fund coerces the family first

    CoSet fam = CoSet::fin({one, CoSet::fin({V(), CoSet::fin({V()})})});
    CoSet sel = choice(fam);
    for (const CoSet& y : fam.support())
        CHECK(set_intersection(y, sel).support().size() == 1);

    CHECK_THROWS_AS(choice(CoSet::fin({O()})), choice_violation);
    CHECK_THROWS_AS(choice(CoSet::fin({one, CoSet::fin({O(), V()})})), choice_violation);
    CHECK_THROWS_AS(choice(CoSet::fin({CoSet::cofin({O()})})), not_representable);
}

TEST_CASE("diagonal") {
    CoSet one = CoSet::fin({O()});
    MapSpec f1 = MapSpec::from_graph(CoSet::fin({opair(O(), O())}));
    CHECK(diagonal(f1) == V());
    MapSpec f2 = MapSpec::from_graph(CoSet::fin({opair(O(), one)}));
    CHECK(diagonal(f2) == CoSet::cofin({O()}));
    CHECK_THROWS_AS(diagonal(MapSpec::from_builtin(UnaryOpName::identity)), not_representable);

    // Cantor's argument replayed: the diagonal differs from f(x) at x.
    const auto pool = rank1_codes();
    for (const CoSet& v0 : pool)
        for (const CoSet& v1 : pool) {
            MapSpec f = MapSpec::from_graph(
                CoSet::fin({opair(O(), v0), opair(one, v1)}));
            CoSet d = diagonal(f);
            for (const auto& [x, fx] : f.entries()) {
                CHECK(member(x, d) == !member(x, fx));
                CHECK_FALSE(equal(d, fx));
            }
        }
}
