#include <catch2/catch_amalgamated.hpp>

#include "synto/parser.hpp"
#include "synto/properclass.hpp"

using namespace synto;

namespace {
CoSet O() { return empty_set(); }
CoSet V() { return universe_set(); }
} // namespace

TEST_CASE("class_of wraps membership") {
    const TestUniverse u = enumerate_universe(2, 1);
    for (const CoSet& a : u.elements) {
        ClassView c = class_of(a);
        for (const CoSet& y : u.elements) CHECK(c.accepts(y) == member(y, a));
    }
    CHECK(class_of(V()).accepts(O()));
    CHECK_FALSE(class_of(O()).accepts(V()));
}

TEST_CASE("comprehension in the decidable fragment") {
    ClassView russell = comprehend("x", parse_formula("!(x in x)"));
    const TestUniverse u = enumerate_universe(2, 2);
    for (const CoSet& a : u.elements) CHECK(russell.accepts(a) == a.is_fin());

    ClassView all = comprehend("x", parse_formula("x = x"));
    for (const CoSet& a : u.elements) CHECK(all.accepts(a));

    ClassView only_zero = comprehend("x", parse_formula("exists u in {0}. x = u"));
    CHECK(only_zero.accepts(O()));
    CHECK_FALSE(only_zero.accepts(V()));
    CHECK_FALSE(only_zero.accepts(CoSet::fin({O()})));

    CHECK_THROWS_AS(comprehend("x", parse_formula("forall y. y in x")), undecidable_fragment);
    CHECK_THROWS_AS(comprehend("x", parse_formula("x in a")), undecidable_fragment);
}

TEST_CASE("omega and the w-set") {
    ClassView om = omega_class();
    CHECK(om.accepts(ordinal(3)));
    CHECK_FALSE(om.accepts(CoSet::fin({CoSet::fin({O()})})));
    CHECK_FALSE(om.accepts(V()));

    ClassView w = wset_class();
    CHECK_FALSE(w.accepts(anti_ordinal(2)));
    CHECK_FALSE(w.accepts(V()));
    CHECK(w.accepts(O()));
    CHECK(w.accepts(CoSet::cofin({O()}))); // cofinite but no anti-ordinal
}

TEST_CASE("probing representable classes") {
    const TestUniverse u = enumerate_universe(2, 1);
    for (const CoSet& a : u.elements) {
        ProbeResult r = probe_representation(class_of(a), u);
        REQUIRE(r.representable());
        CHECK(*r.code == a);
    }
}

TEST_CASE("probing the middle classes") {
    const TestUniverse u = enumerate_universe(2, 2);

    ProbeResult russell = probe_representation(russell_class(), u);
    CHECK_FALSE(russell.representable());
    CHECK(russell.unknown->first.is_fin());
    CHECK(russell.unknown->second.is_cofin());

    CHECK_FALSE(probe_representation(omega_class(), u).representable());

    // non-pairs: the complement of the pair class, cofinite-looking on any
    // slice but punctured by pairs just outside it
    ClassView non_pairs{"non-pairs",
                        [](const CoSet& y) { return !opair_decompose(y).has_value(); }};
    CHECK_FALSE(probe_representation(non_pairs, u).representable());

    // subsets of a cofinite set
    ClassView pow_cofin{"pow-cofin",
                        [](const CoSet& y) { return subset(y, CoSet::cofin({empty_set()})); }};
    CHECK_FALSE(probe_representation(pow_cofin, u).representable());

    // the matching non-subsets (Richard) class
    ClassView rich_cofin{"rich-cofin",
                         [](const CoSet& y) { return !subset(y, CoSet::cofin({empty_set()})); }};
    CHECK_FALSE(probe_representation(rich_cofin, u).representable());
}

TEST_CASE("set-builder terms materialize through the probe") {
    const TestUniverse u = enumerate_universe(2, 1);
    Evaluator ev(&u);
    install_builder_materializer(ev);
    EvalEnv env;

    CHECK(ev.eval(parse_term("{ x : !(x in 0) }"), env) == V());
    CHECK(ev.eval(parse_term("{ x : x = 0 }"), env) == CoSet::fin({O()}));
    CHECK_THROWS_AS(ev.eval(parse_term("{ x : !(x in x) }"), env), not_representable);
}
