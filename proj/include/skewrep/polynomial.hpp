#pragma once

#include <utility>
#include <vector>

#include "skewrep/field.hpp"

namespace skewrep {

// Dense univariate polynomial over F_{p^e}, little-endian coefficients with
// no trailing zeros.  The zero polynomial has an empty coefficient list and
// degree -1.
class Poly {
public:
    explicit Poly(Fq field) : f_(std::move(field)) {}
    Poly(Fq field, std::vector<FieldElement> coeffs);

    static Poly zero(const Fq& f) { return Poly(f); }
    static Poly one(const Fq& f);
    static Poly x(const Fq& f);
    static Poly constant(const Fq& f, const FieldElement& a);

    const Fq& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement coeff(int i) const; // zero outside the stored range
    FieldElement leading() const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly add(const Poly& o) const;
    Poly sub(const Poly& o) const;
    Poly neg() const;
    Poly mul(const Poly& o) const;
    Poly scale(const FieldElement& a) const;
    Poly monic() const;
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly mod(const Poly& d) const { return divmod(d).second; }
    Poly derivative() const;
    FieldElement eval(const FieldElement& a) const;

    // this(x) with coefficients mapped through an embedding
    Poly lift(const FieldEmbedding& emb) const;

private:
    void trim();

    Fq f_;
    std::vector<FieldElement> c_;
};

Poly poly_gcd(const Poly& a, const Poly& b); // monic gcd
// g = gcd, and u with u*a = g (mod m); used for inverses in quotient rings
struct XgcdResult {
    Poly g, u, v;
};
XgcdResult poly_xgcd(const Poly& a, const Poly& b);

Poly pow_mod(const Poly& base, u64 exp, const Poly& m);
// x^(q^k) mod m, via iterated Frobenius
Poly frobenius_power_x(const Poly& m, int k);

struct PolyFactor {
    Poly factor; // monic irreducible
    int multiplicity;
};

// Complete factorization over the coefficient field, canonically sorted by
// (degree, coefficient encoding).  Requires odd q for equal-degree splitting
// of factors of degree >= 2; splitting is internally seeded and
// deterministic.
std::vector<PolyFactor> factor(const Poly& f);

// Roots in the coefficient field, canonically sorted, without multiplicity.
std::vector<FieldElement> poly_roots(const Poly& f);

bool is_irreducible(const Poly& f);

// Canonical monic irreducible of degree e over F_p: first hit when the
// non-leading coefficient vector is enumerated by integer encoding.
std::vector<i64> find_irreducible_modulus(i64 p, int e);

// Chinese remainder combination: g = residues[i] (mod moduli[i]), with the
// moduli pairwise coprime; deg g < sum of the moduli degrees.
Poly poly_crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli);

} // namespace skewrep
