#include "doctest.h"
#include "skewrep/polynomial.hpp"

using namespace skewrep;

namespace {

Poly from_ints(const Fq& f, const std::vector<i64>& c) {
    std::vector<FieldElement> v;
    v.reserve(c.size());
    for (i64 x : c) v.push_back(f.from_int(x));
    return Poly(f, std::move(v));
}

} // namespace

TEST_CASE("polynomial ring basics") {
    Fq f(5);
    Poly a = from_ints(f, {1, 2, 1});  // (x+1)^2
    Poly b = from_ints(f, {1, 1});     // x+1
    CHECK(a.degree() == 2);
    CHECK(b.mul(b) == a);
    CHECK(a.sub(a).is_zero());
    CHECK(Poly::zero(f).degree() == -1);

    auto [q, r] = a.divmod(b);
    CHECK(q == b);
    CHECK(r.is_zero());

    Poly c = from_ints(f, {3, 0, 1}); // x^2 + 3
    auto [q2, r2] = c.divmod(b);
    CHECK(b.mul(q2).add(r2) == c);
    CHECK(r2.degree() < b.degree());

    CHECK(a.eval(f.from_int(2)) == f.from_int(4)); // 3^2 = 9 = 4
    CHECK(a.derivative() == from_ints(f, {2, 2}));
    CHECK(poly_gcd(a, b) == b.monic());
}

TEST_CASE("extended gcd gives inverses modulo a polynomial") {
    Fq f(7);
    Poly m = from_ints(f, {1, 0, 1}); // x^2 + 1, irreducible over F_7
    Poly a = from_ints(f, {3, 1});    // x + 3
    XgcdResult g = poly_xgcd(a, m);
    CHECK(g.g.degree() == 0);
    Poly prod = g.u.mul(a).mod(m);
    CHECK(prod == Poly::constant(f, g.g.coeff(0)));
}

TEST_CASE("modular exponentiation and frobenius") {
    Fq f(5);
    Poly m = from_ints(f, {2, 0, 1}); // x^2 + 2, irreducible over F_5
    Poly x = Poly::x(f);
    CHECK(pow_mod(x, 25, m) == x.mod(m)); // x^(q^e) = x in F_25
    CHECK(frobenius_power_x(m, 2) == x.mod(m));
    CHECK(frobenius_power_x(m, 1) == pow_mod(x, 5, m));
}

TEST_CASE("factorization over prime fields") {
    Fq f(5);
    // x^2 + 1 = (x + 2)(x + 3) over F_5
    auto fac = factor(from_ints(f, {1, 0, 1}));
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].factor == from_ints(f, {2, 1}));
    CHECK(fac[1].factor == from_ints(f, {3, 1}));
    CHECK(fac[0].multiplicity == 1);

    // (x - 1)^2 (x - 2) keeps multiplicities
    Poly g = from_ints(f, {4, 1}).mul(from_ints(f, {4, 1})).mul(from_ints(f, {3, 1}));
    auto gfac = factor(g);
    REQUIRE(gfac.size() == 2);
    int total = 0;
    Poly rebuilt = Poly::one(f);
    for (const auto& [p, mult] : gfac) {
        total += mult * (p.degree());
        for (int i = 0; i < mult; ++i) rebuilt = rebuilt.mul(p);
    }
    CHECK(total == 3);
    CHECK(rebuilt == g.monic());

    // x^2 + 2 stays irreducible
    auto irr = factor(from_ints(f, {2, 0, 1}));
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].factor.degree() == 2);
    CHECK(is_irreducible(from_ints(f, {2, 0, 1})));
    CHECK(!is_irreducible(from_ints(f, {1, 0, 1})));
}

TEST_CASE("factorization over an extension field") {
    Fq f(3, 2, {1, 0, 1}); // F_9, i = x with i^2 = -1
    // t^2 + 1 = (t - i)(t + i) over F_9
    Poly sq = Poly(f, {f.one(), f.zero(), f.one()});
    auto fac = factor(sq);
    REQUIRE(fac.size() == 2);
    Poly prod = fac[0].factor.mul(fac[1].factor);
    CHECK(prod == sq);
    auto roots = poly_roots(sq);
    REQUIRE(roots.size() == 2);
    CHECK(f.mul(roots[0], roots[0]) == f.from_int(2));
}

TEST_CASE("roots are sorted canonically") {
    Fq f(7);
    // (x - 3)(x - 5)(x - 1)
    Poly g = from_ints(f, {4, 1}).mul(from_ints(f, {2, 1})).mul(from_ints(f, {6, 1}));
    auto roots = poly_roots(g);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == f.from_int(1));
    CHECK(roots[1] == f.from_int(3));
    CHECK(roots[2] == f.from_int(5));
}

TEST_CASE("canonical irreducible modulus search") {
    auto m = find_irreducible_modulus(3, 2);
    REQUIRE(m.size() == 3);
    CHECK(m[2] == 1);
    CHECK(is_irreducible(Poly(Fq(3), {Fq(3).from_int(m[0]), Fq(3).from_int(m[1]),
                                      Fq(3).from_int(m[2])})));
    // no root in F_3
    Fq f(3);
    for (i64 v = 0; v < 3; ++v) {
        FieldElement x = f.from_int(v);
        FieldElement val = f.add(f.add(f.from_int(m[0]), f.mul(f.from_int(m[1]), x)),
                                 f.mul(f.from_int(m[2]), f.mul(x, x)));
        CHECK(!f.is_zero(val));
    }
}

TEST_CASE("chinese remainder recombination") {
    Fq f(5);
    Poly m1 = from_ints(f, {4, 1});    // x - 1
    Poly m2 = from_ints(f, {3, 1});    // x - 2
    Poly m3 = from_ints(f, {2, 0, 1}); // x^2 + 2
    Poly r1 = Poly::constant(f, f.from_int(3));
    Poly r2 = Poly::constant(f, f.from_int(1));
    Poly r3 = from_ints(f, {0, 1});
    Poly g = poly_crt({r1, r2, r3}, {m1, m2, m3});
    CHECK(g.mod(m1) == r1);
    CHECK(g.mod(m2) == r2);
    CHECK(g.mod(m3) == r3);
    CHECK(g.degree() < 4);
}
