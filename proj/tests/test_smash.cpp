#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "skewrep/kronecker.hpp"
#include "skewrep/smash.hpp"

using namespace skewrep;
using testfix::A3;

namespace {

// the two structures on the sigma-fixed middle simple: action +1 / -1
SmashModule middle_simple(const A3& a, int sign) {
    const Fq& f = a.l0.field();
    Matrix b(f, 1, 1);
    b.set(0, 0, sign > 0 ? f.one() : f.neg(f.one()));
    return SmashModule(a.l0, a.s,
                       {{"-1", Matrix(f, 0, 0)}, {"0", b}, {"1", Matrix(f, 0, 0)}}, 1);
}

// swap structure on the orbit of the outer simple
SmashModule outer_orbit(const A3& a) {
    const Fq& f = a.lm1.field();
    return SmashModule(direct_sum({a.lm1, a.l1}), a.s,
                       {{"-1", Matrix::identity(f, 1)},
                        {"0", Matrix(f, 0, 0)},
                        {"1", Matrix::identity(f, 1)}},
                       1);
}

} // namespace

TEST_CASE("smash module construction enforces the axioms") {
    A3 a(Fq(101));
    const Fq& f = a.l0.field();
    CHECK_NOTHROW(middle_simple(a, +1));
    CHECK_NOTHROW(middle_simple(a, -1));
    CHECK_NOTHROW(outer_orbit(a));

    // wrong block shape
    CHECK_THROWS_AS(SmashModule(a.l0, a.s,
                                {{"-1", Matrix(f, 0, 0)},
                                 {"0", Matrix(f, 1, 2)},
                                 {"1", Matrix(f, 0, 0)}},
                                1),
                    StructureError);
    // missing vertex
    CHECK_THROWS_AS(SmashModule(a.l0, a.s, {{"0", Matrix::identity(f, 1)}}, 1),
                    StructureError);
    // twisted composite is 9, not the identity
    CHECK_THROWS_AS(SmashModule(a.l0, a.s,
                                {{"-1", Matrix(f, 0, 0)},
                                 {"0", Matrix::from_ints(f, {{3}})},
                                 {"1", Matrix(f, 0, 0)}},
                                1),
                    StructureError);
}

TEST_CASE("smash module rejects bad subgroup powers and characteristic") {
    A3 a(Fq(101));
    const Fq& f = a.l0.field();
    CHECK_THROWS_AS(SmashModule(a.l0, a.s,
                                {{"-1", Matrix(f, 0, 0)},
                                 {"0", Matrix::identity(f, 1)},
                                 {"1", Matrix(f, 0, 0)}},
                                3),
                    StructureError);

    // characteristic 2 divides the automorphism order 2
    A3 a2(Fq(2));
    const Fq& f2 = a2.l0.field();
    CHECK_THROWS_AS(SmashModule(a2.l0, a2.s,
                                {{"-1", Matrix(f2, 0, 0)},
                                 {"0", Matrix::identity(f2, 1)},
                                 {"1", Matrix(f2, 0, 0)}},
                                1),
                    StructureError);

    // action that is not a morphism from the twisted representation
    auto q = kronecker_quiver();
    Fq f101(101);
    QuiverAutomorphism sw = kronecker_involution(*q);
    Representation r2 = kronecker_rep(q, f101, KroneckerFamily::Regular, 1, f101.from_int(2));
    CHECK_THROWS_AS(SmashModule(r2, sw,
                                {{"a0", Matrix::identity(f101, 1)},
                                 {"a1", Matrix::identity(f101, 1)}},
                                1),
                    StructureError);
}

TEST_CASE("equivariant hom spaces separate the two characters") {
    A3 a(Fq(101));
    SmashModule plus = middle_simple(a, +1);
    SmashModule minus = middle_simple(a, -1);

    CHECK(smash_hom_basis(plus, plus).size() == 1);
    CHECK(smash_hom_basis(minus, minus).size() == 1);
    CHECK(smash_hom_basis(plus, minus).size() == 0);
    CHECK(smash_hom_basis(outer_orbit(a), outer_orbit(a)).size() == 1);

    // the underlying representations are equal, only the action differs
    CHECK(plus.rep() == minus.rep());
    CHECK(hom_basis(plus.rep(), minus.rep()).size() == 1);

    for (const auto& t : smash_hom_basis(plus, plus)) CHECK(is_smash_morphism(plus, plus, t));
    CHECK(is_smash_morphism(plus, minus, zero_morphism(plus.rep(), minus.rep())));
}

TEST_CASE("equivariant projector averages over the group") {
    A3 a(Fq(101));
    SmashModule plus = middle_simple(a, +1);
    SmashModule minus = middle_simple(a, -1);
    const Fq& f = a.l0.field();

    RepMorphism id = identity_morphism(a.l0);
    CHECK(equivariant_projector(plus, plus, id) == id);
    CHECK(equivariant_projector(minus, minus, id) == id);

    // a nonzero map between the two characters averages to zero
    RepMorphism cross{{{"-1", Matrix(f, 0, 0)},
                       {"0", Matrix::from_ints(f, {{7}})},
                       {"1", Matrix(f, 0, 0)}}};
    REQUIRE(is_morphism(a.l0, a.l0, cross));
    RepMorphism avg = equivariant_projector(plus, minus, cross);
    CHECK(avg.at("0") == Matrix(f, 1, 1));

    // projecting any morphism yields an equivariant one
    SmashModule orb = outer_orbit(a);
    RepMorphism skew{{{"-1", Matrix::from_ints(f, {{3}})},
                      {"0", Matrix(f, 0, 0)},
                      {"1", Matrix::from_ints(f, {{5}})}}};
    REQUIRE(is_morphism(orb.rep(), orb.rep(), skew));
    CHECK(is_smash_morphism(orb, orb, equivariant_projector(orb, orb, skew)));
}

TEST_CASE("equivariant isomorphism testing") {
    A3 a(Fq(101));
    SmashModule plus = middle_simple(a, +1);
    SmashModule minus = middle_simple(a, -1);
    u64 seed = 0;

    CHECK(is_isomorphic_smash(plus, plus, seed).isomorphic);
    CHECK(!is_isomorphic_smash(plus, minus, seed).isomorphic);

    IsoCheck c = is_isomorphic_smash(outer_orbit(a), outer_orbit(a), seed);
    REQUIRE(c.witness);
    CHECK(is_smash_morphism(outer_orbit(a), outer_orbit(a), *c.witness));
}

TEST_CASE("normalizing an isomorphism onto a unit composite") {
    A3 a(Fq(101));
    const Fq& f = a.l0.field();

    // psi = 3 has twisted composite 9; the canonical square root 3 rescales
    // it to the +1 structure
    RepMorphism psi{{{"-1", Matrix(f, 0, 0)},
                     {"0", Matrix::from_ints(f, {{3}})},
                     {"1", Matrix(f, 0, 0)}}};
    SmashModule m = normalize_isomorphism(a.l0, a.s, 1, psi);
    CHECK(m.subgroup_power() == 1);
    CHECK(m.action_at("0") == Matrix::identity(f, 1));
    CHECK(m == middle_simple(a, +1));

    // psi = identity is already normalized
    RepMorphism one{{{"-1", Matrix(f, 0, 0)},
                     {"0", Matrix::identity(f, 1)},
                     {"1", Matrix(f, 0, 0)}}};
    CHECK(normalize_isomorphism(a.l0, a.s, 1, one) == middle_simple(a, +1));

    // a crossing witness on the outer orbit normalizes to the swap
    Representation orbit = direct_sum({a.lm1, a.l1});
    RepMorphism swap{{{"-1", Matrix::from_ints(f, {{2}})},
                      {"0", Matrix(f, 0, 0)},
                      {"1", Matrix::from_ints(f, {{51}})}}};
    SmashModule om = normalize_isomorphism(orbit, a.s, 1, swap);
    Matrix comp = om.action_at("-1").mul(om.action_at("1"));
    CHECK(comp.is_identity());
}

TEST_CASE("canonical induced structure") {
    A3 a(Fq(101));
    u64 seed = 0;
    const Fq& f = a.l0.field();

    SmashModule m0 = induce_canonical(a.l0, a.s, seed);
    CHECK(m0.subgroup_power() == 1);
    CHECK(m0.action_at("0") == Matrix::identity(f, 1));

    // the outer simple has period 2, so the canonical structure lives over
    // the subgroup generated by sigma^2, where the action must be trivial
    SmashModule m1 = induce_canonical(a.lm1, a.s, seed);
    CHECK(m1.subgroup_power() == 2);
    CHECK(m1.action_at("-1").is_identity());

    // explicit subgroup power: the full order always works
    SmashModule m2 = induce_canonical(a.l0, a.s, 2, seed);
    CHECK(m2.subgroup_power() == 2);
    CHECK(m2.action_at("0").is_identity());

    // and an unreachable twist is rejected
    CHECK_THROWS_AS(induce_canonical(a.lm1, a.s, 1, seed), StructureError);
}

TEST_CASE("character twisting scales the action") {
    A3 a(Fq(101));
    SmashModule plus = middle_simple(a, +1);
    SmashModule minus = middle_simple(a, -1);

    CHECK(character_twist(plus, 1) == minus);
    CHECK(character_twist(plus, 2) == plus);
    CHECK(character_twist(minus, 1) == plus);
    CHECK(character_twist(character_twist(plus, 1), 1) == plus);

    // trivial acting group: nothing to twist by
    SmashModule triv = induce_canonical(a.lm1, a.s, 0);
    CHECK(character_twist(triv, 1) == triv);
}

TEST_CASE("induction from a subgroup") {
    A3 a(Fq(101));
    u64 seed = 0;
    SmashModule plus = middle_simple(a, +1);

    // already over the full algebra: nothing happens
    CHECK(induce_from_subgroup(plus) == plus);

    // inducing the trivial structure on the outer simple doubles dimensions
    // and produces the swap
    SmashModule triv = induce_canonical(a.lm1, a.s, seed);
    SmashModule ind = induce_from_subgroup(triv);
    CHECK(ind.subgroup_power() == 1);
    CHECK(ind.total_dim() == 2 * triv.total_dim());
    CHECK(ind.rep().dim("-1") == 1);
    CHECK(ind.rep().dim("1") == 1);
    CHECK(is_isomorphic_smash(ind, outer_orbit(a), seed).isomorphic);
}

TEST_CASE("induction from the path algebra") {
    A3 a(Fq(101));
    u64 seed = 0;

    SmashModule ind = induce_from_path_algebra(a.l0, a.s, 1);
    CHECK(ind.subgroup_power() == 1);
    CHECK(ind.rep().dim("0") == 2);
    auto parts = decompose_smash(ind, seed);
    REQUIRE(parts.size() == 2);
    CHECK(iso_multiset_equal_smash(parts, {middle_simple(a, +1), middle_simple(a, -1)}, seed));

    // inducing up to the whole group subalgebra is the identity wrap
    SmashModule top = induce_from_path_algebra(a.lm1, a.s, 2);
    CHECK(top.subgroup_power() == 2);
    CHECK(top.rep() == a.lm1);
    CHECK(top.action_at("-1").is_identity());
}

TEST_CASE("classification of the modules over a twist orbit") {
    A3 a(Fq(101));
    u64 seed = 0;

    auto c0 = classify_induced(a.l0, a.s, seed);
    REQUIRE(c0.size() == 2);
    CHECK(!is_isomorphic_smash(c0[0], c0[1], seed).isomorphic);
    CHECK(iso_multiset_equal_smash(c0, {middle_simple(a, +1), middle_simple(a, -1)}, seed));

    auto c1 = classify_induced(a.lm1, a.s, seed);
    REQUIRE(c1.size() == 1);
    CHECK(is_isomorphic_smash(c1[0], outer_orbit(a), seed).isomorphic);
    CHECK(is_isomorphic(c1[0].rep(), orbit_module(a.lm1, a.s, seed), seed).isomorphic);

    auto c2 = classify_induced(a.l101, a.s, seed);
    REQUIRE(c2.size() == 2);
    CHECK(!is_isomorphic_smash(c2[0], c2[1], seed).isomorphic);
    for (const auto& m : c2) CHECK(is_isomorphic(m.rep(), a.l101, seed).isomorphic);
}

TEST_CASE("decomposing equivariant modules") {
    A3 a(Fq(101));
    u64 seed = 0;
    SmashModule plus = middle_simple(a, +1);
    SmashModule minus = middle_simple(a, -1);

    CHECK(decompose_smash(plus, seed).size() == 1);
    CHECK(decompose_smash(plus, seed)[0] == plus);

    SmashModule sum = direct_sum_smash({plus, minus, outer_orbit(a)});
    auto parts = decompose_smash(sum, seed);
    REQUIRE(parts.size() == 3);
    CHECK(iso_multiset_equal_smash(parts, {plus, minus, outer_orbit(a)}, seed));
    int total = 0;
    for (const auto& p : parts) total += p.total_dim();
    CHECK(total == sum.total_dim());
}

TEST_CASE("identifying summands against the classification") {
    A3 a(Fq(101));
    u64 seed = 0;
    SmashModule plus = middle_simple(a, +1);
    SmashModule minus = middle_simple(a, -1);

    auto tags = identify(direct_sum_smash({plus, minus}), seed);
    REQUIRE(tags.size() == 2);
    std::set<int> chars;
    for (const auto& t : tags) {
        CHECK(is_isomorphic(t.base, a.l0, seed).isomorphic);
        CHECK(t.period == 1);
        chars.insert(t.character);
        auto classes = classify_induced(t.base, a.s, seed);
        REQUIRE(t.character >= 1);
        REQUIRE(t.character <= static_cast<int>(classes.size()));
        CHECK(is_isomorphic_smash(t.module, classes[t.character - 1], seed).isomorphic);
    }
    CHECK(chars == std::set<int>{1, 2});

    auto orbit_tags = identify(outer_orbit(a), seed);
    REQUIRE(orbit_tags.size() == 1);
    CHECK(orbit_tags[0].period == 2);
    CHECK(orbit_tags[0].character == 1);
}

TEST_CASE("vertex orbit catalogs over the skew group algebra") {
    A3 a(Fq(101));
    Fq f(101);
    u64 seed = 0;

    SmashModule s0 = simple_smash(a.q, f, a.s, "0", 0);
    SmashModule s0m = simple_smash(a.q, f, a.s, "0", 1);
    SmashModule sout = simple_smash(a.q, f, a.s, "-1", 0);
    CHECK(is_isomorphic_smash(s0, middle_simple(a, +1), seed).isomorphic);
    CHECK(is_isomorphic_smash(s0m, middle_simple(a, -1), seed).isomorphic);
    CHECK(is_isomorphic_smash(sout, outer_orbit(a), seed).isomorphic);
    CHECK(!is_isomorphic_smash(s0, s0m, seed).isomorphic);
    CHECK(simple_smash(a.q, f, a.s, "1", 0) == sout); // same orbit, same module

    SmashModule p0 = projective_smash(a.q, f, a.s, "0", 0);
    CHECK(is_isomorphic(p0.rep(), a.l0, seed).isomorphic); // sink: projective is simple
    SmashModule pout = projective_smash(a.q, f, a.s, "-1", 0);
    CHECK(is_isomorphic(pout.rep(), direct_sum({a.lm10, a.l01}), seed).isomorphic);

    SmashModule i0 = injective_smash(a.q, f, a.s, "0", 0);
    CHECK(is_isomorphic(i0.rep(), a.l101, seed).isomorphic);
    SmashModule iout = injective_smash(a.q, f, a.s, "-1", 0);
    CHECK(is_isomorphic(iout.rep(), direct_sum({a.lm1, a.l1}), seed).isomorphic);
}

TEST_CASE("kind classification by underlying decomposition") {
    A3 a(Fq(101));
    Fq f(101);
    u64 seed = 0;

    SmashKind k0 = classify_kind(simple_smash(a.q, f, a.s, "0", 0), seed);
    CHECK(k0.simple);
    CHECK(k0.projective); // the middle vertex is a sink
    CHECK(!k0.injective);
    CHECK(k0.vertex == "0");

    SmashKind kout = classify_kind(simple_smash(a.q, f, a.s, "-1", 0), seed);
    CHECK(kout.simple);
    CHECK(!kout.projective);
    CHECK(kout.injective); // the outer vertices are sources

    SmashKind kp = classify_kind(projective_smash(a.q, f, a.s, "-1", 0), seed);
    CHECK(!kp.simple);
    CHECK(kp.projective);
    CHECK(!kp.injective);

    SmashKind ki = classify_kind(injective_smash(a.q, f, a.s, "0", 0), seed);
    CHECK(!ki.simple);
    CHECK(!ki.projective);
    CHECK(ki.injective);
    CHECK(ki.vertex == "0");

    // rejected inputs: decomposable, or not over the full algebra
    SmashModule plus = middle_simple(a, +1);
    CHECK_THROWS_AS(classify_kind(direct_sum_smash({plus, plus}), seed), StructureError);
    CHECK_THROWS_AS(classify_kind(induce_canonical(a.lm1, a.s, seed), seed), StructureError);
}

TEST_CASE("hom dimension between inductions counts plain morphisms") {
    A3 a(Fq(101));
    SmashModule i0 = induce_from_path_algebra(a.l0, a.s, 1);
    CHECK(smash_hom_basis(i0, i0).size() == hom_basis(a.l0, i0.rep()).size());

    SmashModule i1 = induce_from_path_algebra(a.lm1, a.s, 1);
    CHECK(smash_hom_basis(i1, i1).size() == hom_basis(a.lm1, i1.rep()).size());
    CHECK(smash_hom_basis(i0, i1).size() == hom_basis(a.l0, i1.rep()).size());
}
