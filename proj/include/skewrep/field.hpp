#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace skewrep {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Raised on arithmetic misuse: division by zero, characteristic clashes,
// malformed moduli and the like.
class FieldError : public std::runtime_error {
public:
    explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

// Element of F_{p^e} as a little-endian coefficient list of length e with
// entries in [0, p).  The owning Fq supplies all arithmetic.
struct FieldElement {
    std::vector<i64> coeffs;

    bool operator==(const FieldElement&) const = default;
};

// Alternative result for root searches that would leave the current field.
// The meaning of `degree` is documented per operation.
struct NeedsExtension {
    int degree;

    bool operator==(const NeedsExtension&) const = default;
};

using RootResult = std::variant<FieldElement, NeedsExtension>;

// The finite field F_{p^e}, represented as F_p[x]/(modulus).  The modulus is
// monic irreducible of degree e, stored little-endian with length e+1; it is
// empty exactly when e == 1.  Construction without an explicit modulus picks
// the canonical one: the first irreducible polynomial in the enumeration of
// non-leading coefficient vectors by their integer encoding sum c_i p^i.
class Fq {
public:
    explicit Fq(i64 p);
    Fq(i64 p, int e);
    Fq(i64 p, int e, std::vector<i64> modulus);

    i64 p() const { return p_; }
    int e() const { return e_; }
    const std::vector<i64>& modulus() const { return mod_; }
    i64 q() const { return q_; }

    bool operator==(const Fq& o) const {
        return p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_;
    }
    bool operator!=(const Fq& o) const { return !(*this == o); }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(i64 v) const;
    FieldElement from_coeffs(std::vector<i64> c) const;

    bool is_zero(const FieldElement& a) const;
    bool is_one(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(const FieldElement& a, u64 k) const;

    // canonical ordering of elements: integer encoding sum c_i p^i
    i64 canonical_index(const FieldElement& a) const;
    FieldElement element_at(i64 index) const;

    u64 mult_order(const FieldElement& a) const;
    FieldElement smallest_generator() const;

    // Smallest element of multiplicative order exactly n, or the smallest
    // absolute degree e' with n | p^e' - 1 when n does not divide q - 1.
    // Throws FieldError when the characteristic divides n.
    RootResult primitive_root_of_unity(i64 n) const;

    // Smallest rho with rho^n = c, or the minimal extension factor d over
    // this field (a divisor of n) in which such a root exists.  nth_root(0)
    // is 0; throws FieldError when gcd(n, p) != 1.
    RootResult nth_root(const FieldElement& c, i64 n) const;

    // Smallest extension factor d >= 1 such that F_{p^{e d}} contains an
    // element of multiplicative order n.  Throws when p divides n.
    int extension_factor_for_order(i64 n) const;

    // raw-slice arithmetic used by Matrix; pointers reference e consecutive
    // coefficients, dst may alias an input
    void add_in(i64* dst, const i64* a, const i64* b) const;
    void sub_in(i64* dst, const i64* a, const i64* b) const;
    void neg_in(i64* dst, const i64* a) const;
    void mul_in(i64* dst, const i64* a, const i64* b) const;
    void mul_add_in(i64* dst, const i64* a, const i64* b) const; // dst += a*b
    bool is_zero_raw(const i64* a) const;

private:
    void check_element(const FieldElement& a) const;
    void reduce_product(i64* dst, const i64* wide) const; // wide has 2e-1 coeffs

    i64 p_;
    int e_;
    std::vector<i64> mod_; // little-endian, length e+1, monic; empty iff e == 1
    i64 q_;
};

// F_{p^{e*factor}} over the same prime, canonical modulus.
Fq extended_field(const Fq& base, int factor);

// Field homomorphism F_{p^e} -> F_{p^{e'}} with e | e', determined by the
// canonically smallest root of the source modulus in the target field.
class FieldEmbedding {
public:
    FieldEmbedding(Fq from, Fq to);

    const Fq& from() const { return from_; }
    const Fq& to() const { return to_; }
    bool is_identity() const { return from_ == to_; }

    FieldElement map(const FieldElement& a) const;

private:
    Fq from_;
    Fq to_;
    FieldElement gen_image_; // image of x mod source modulus
};

// Chain of embeddings produced by iterated field escalation.
class FieldTower {
public:
    explicit FieldTower(Fq base) : top_(std::move(base)) {}

    const Fq& top() const { return top_; }
    bool is_trivial() const { return steps_.empty(); }

    void extend(int factor);
    FieldElement map(const FieldElement& a) const;

private:
    std::vector<FieldEmbedding> steps_;
    Fq top_;
};

// Smallest prime p >= 101 with p = 1 (mod n); the default coefficient field
// for computations with an automorphism of order n.
Fq default_field_for_order(i64 n);

} // namespace skewrep
