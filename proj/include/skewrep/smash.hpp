#pragma once

#include "skewrep/rep.hpp"

namespace skewrep {

// Module over the skew group algebra kQ # k<sigma^d> for a subgroup power
// d dividing n = order(sigma): a representation X of Q together with one
// action block Phi_v : X_{sigma^{-d}(v)} -> X_v per vertex.  Construction
// enforces the two defining conditions:
//   * Phi is a morphism ^{sigma^d}X -> X, i.e. for every arrow a
//       X_a Phi_{source(a)} = Phi_{target(a)} X_{sigma^{-d}(a)};
//   * the twisted composite of k = n/d factors
//       Phi_v Phi_{sigma^{-d}(v)} ... Phi_{sigma^{-d(k-1)}(v)}
//     is the identity at every vertex.
// The characteristic must not divide n.
class SmashModule {
public:
    SmashModule(Representation rep, QuiverAutomorphism sigma,
                std::map<std::string, Matrix> action, int subgroup_power);

    const Representation& rep() const { return rep_; }
    const QuiverAutomorphism& sigma() const { return sigma_; }
    const std::map<std::string, Matrix>& action() const { return action_; }
    const Matrix& action_at(const std::string& v) const;
    int subgroup_power() const { return d_; } // d
    int order() const { return sigma_.order(); }
    int cyclic_order() const { return sigma_.order() / d_; } // k, order of the acting group
    const Fq& field() const { return rep_.field(); }
    int total_dim() const { return rep_.total_dim(); }

    SmashModule lift(const FieldEmbedding& emb) const;
    SmashModule lift(const FieldTower& tower) const;

    bool operator==(const SmashModule& o) const;

private:
    void validate() const;

    Representation rep_;
    QuiverAutomorphism sigma_;
    std::map<std::string, Matrix> action_;
    int d_;
};

// Equivariant morphisms share the block layout of representation morphisms;
// on top of the arrow conditions they satisfy
//   t_v Phi^X_v = Phi^Y_v t_{sigma^{-d}(v)}  for every vertex v.
using SmashMorphism = RepMorphism;

bool is_smash_morphism(const SmashModule& x, const SmashModule& y, const SmashMorphism& t);

// basis of the equivariant hom space, one stacked kernel computation
std::vector<SmashMorphism> smash_hom_basis(const SmashModule& x, const SmashModule& y);

// average of the translates of a representation morphism f : X -> Y under
// the acting group; equivariant, and fixes f when f already is
SmashMorphism equivariant_projector(const SmashModule& x, const SmashModule& y,
                                    const RepMorphism& f);

// Randomized equivariant isomorphism test, same strategy as the
// representation-level one (basis elements first, then seeded combinations,
// one escalation to the quadratic extension).
IsoCheck is_isomorphic_smash(const SmashModule& x, const SmashModule& y, u64 seed);

SmashModule direct_sum_smash(const std::vector<SmashModule>& parts);

// indecomposable summands as smash modules, canonically ordered
std::vector<SmashModule> decompose_smash(const SmashModule& m, u64 seed);

// Turn an isomorphism psi : ^{sigma^d}X -> X into a smash module structure:
// with theta_v the k-fold twisted composite of psi at v, a polynomial g with
// g(theta)^k = theta (computed on the block diagonal of all theta_v at once)
// gives Phi_v = g(theta_v)^{-1} psi_v, whose twisted composite is the
// identity.  May move to an extension field to split theta's minimal
// polynomial or to adjoin scalar k-th roots.
SmashModule normalize_isomorphism(const Representation& x, const QuiverAutomorphism& s,
                                  int d, const RepMorphism& psi);

// Canonical kQ # k<sigma^d>-module structure on a representation equivalent
// to its twist by sigma^d: finds a witness ^{sigma^d}X -> X
// (deterministically preferring single hom basis elements) and normalizes
// it.  Escalates fields only as far as the normalization requires.  The
// three-argument form uses the minimal twist period of X.
SmashModule induce_canonical(const Representation& x, const QuiverAutomorphism& s, int d,
                             u64 seed);
SmashModule induce_canonical(const Representation& x, const QuiverAutomorphism& s, u64 seed);

// Tensor with the one-dimensional character of the acting cyclic group of
// order k = n/d that sends the generator to zeta^i, zeta the canonical
// primitive k-th root of unity: scales every action block by zeta^i.  Lifts
// to the smallest extension containing zeta when needed.
SmashModule character_twist(const SmashModule& m, int i);

// Induction from kQ # k<sigma^m> to the full skew group algebra: underlying
// representation X + ^{sigma}X + ... + ^{sigma^{m-1}}X, action shifting the
// summands cyclically and applying the subgroup action on the wrap-around.
SmashModule induce_from_subgroup(const SmashModule& m);

// Induction from the path algebra to kQ # k<sigma^m>: underlying
// representation X + ^{sigma^m}X + ... + ^{sigma^{m(k-1)}}X with k = n/m,
// cyclic shift action, identity wrap-around.
SmashModule induce_from_path_algebra(const Representation& x, const QuiverAutomorphism& s, int m);

// The n/m pairwise non-isomorphic indecomposable modules over the full
// skew group algebra lying over the twist orbit of an indecomposable X with
// minimal period m: the inductions of all character twists of the canonical
// structure.  All returned modules share one field.
std::vector<SmashModule> classify_induced(const Representation& x, const QuiverAutomorphism& s,
                                          u64 seed);

// Description of one indecomposable summand in terms of the classification:
// the summand is isomorphic to the induction of the `character`-th twist of
// the canonical structure on `base`.
struct InducedTag {
    SmashModule module;
    Representation base;
    int period;    // minimal twist period of base
    int character; // in [1, n/period]
};

// decompose + match each summand against the classification over its base
std::vector<InducedTag> identify(const SmashModule& m, u64 seed);

// orbit constructions over the full skew group algebra, one module per
// (vertex orbit, character index l in [0, n/m)) with m the orbit size:
// underlying representation is the orbit sum, the wrap-around twists the
// path basis by sigma^m and scales by xi^{m l}, xi the canonical primitive
// n-th root of unity
SmashModule simple_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                         const QuiverAutomorphism& s, const std::string& v, int l);
SmashModule projective_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                             const QuiverAutomorphism& s, const std::string& v, int l);
SmashModule injective_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                            const QuiverAutomorphism& s, const std::string& v, int l);

struct SmashKind {
    bool simple = false;
    bool projective = false;
    bool injective = false;
    std::string vertex; // representative of the matched vertex orbit, if any
};

// Decompose the underlying representation and match the summands against
// the vertex catalogs: the module is simple when the summands are exactly
// the vertex simples of one sigma-orbit, each hit once, and likewise
// projective / injective.  The flags are computed independently; a module
// may satisfy several.  Requires an indecomposable module over the full
// skew group algebra.
SmashKind classify_kind(const SmashModule& m, u64 seed);

bool iso_multiset_equal_smash(std::vector<SmashModule> a, std::vector<SmashModule> b, u64 seed);

std::string canonical_key_smash(const SmashModule& m);

} // namespace skewrep
