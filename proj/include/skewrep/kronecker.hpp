#pragma once

#include "skewrep/smash.hpp"

namespace skewrep {

// the quiver with vertices a0, a1 and two parallel arrows alpha0, alpha1
// from a1 to a0, together with the involution fixing the vertices and
// swapping the arrows
std::shared_ptr<const Quiver> kronecker_quiver();
QuiverAutomorphism kronecker_involution(const Quiver& q);

// upper Jordan block: lambda on the diagonal, ones above it
Matrix jordan_block(const Fq& f, const FieldElement& lambda, int l);

enum class KroneckerFamily {
    Preprojective,   // dims (l+1, l): alpha1 -> [I;0], alpha0 -> [0;I]
    Preinjective,    // dims (l, l+1): alpha1 -> [I,0], alpha0 -> [0,I]
    Regular,         // dims (l, l):   alpha1 -> J_lambda, alpha0 -> I
    RegularInfinity, // dims (l, l):   alpha1 -> I,        alpha0 -> J_0
};

Representation kronecker_rep(std::shared_ptr<const Quiver> q, const Fq& field,
                             KroneckerFamily family, int l);
Representation kronecker_rep(std::shared_ptr<const Quiver> q, const Fq& field,
                             KroneckerFamily family, int l, const FieldElement& lambda);

// Modules over the full skew group algebra of the arrow swap.
// The preprojective and preinjective representations are fixed by the swap
// up to isomorphism, so each carries two module structures (sign 0 and 1):
// the action is plus or minus the antidiagonal exchange matrix per vertex.
SmashModule kronecker_preprojective_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                                          int l, int sign);
SmashModule kronecker_preinjective_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                                         int l, int sign);

// Regular representations come in swap orbits of eigenvalue pairs.  The
// orbit {0, infinity} induces one module on r_0(l) + r_inf(l) whose action
// swaps the two summands.
SmashModule kronecker_regular_pair_smash(std::shared_ptr<const Quiver> q, const Fq& field, int l);

// The orbit {lambda, lambda^{-1}} with lambda^2 not 0 or 1 induces one
// module on r_lambda(l) + r_{lambda^{-1}}(l) with action blocks
//   Phi_{a1} = [[0, A^{-1}], [A, 0]],  Phi_{a0} = [[0, B^{-1}], [B, 0]],
// where B = A J_lambda^{-1} and J_{lambda^{-1}} A = A J_lambda^{-1}.  The
// intertwining space is l-dimensional; the solution is pinned down uniquely
// by requiring the last column of B to be (0, ..., 0, 1)^T.
struct RegularSwap {
    Matrix a;
    Matrix b;
};
RegularSwap derive_regular_swap_matrices(const Fq& field, const FieldElement& lambda, int l);
SmashModule kronecker_regular_lambda_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                                           const FieldElement& lambda, int l);

// One named check of the classification over the given field: catalog
// modules validate, are indecomposable, are pairwise non-isomorphic within
// equal dimension vectors, and agree with the induced classification of
// their underlying representations.  Eigenvalues are deduped against their
// inverses; lambda = +-1 is covered through the induced classification
// (those orbits are singletons carrying two module structures).
struct KroneckerCheck {
    std::string label;
    bool ok;
    std::string detail; // empty when ok
};

// one catalog module in the report: the iso_class_id doubles as a canonical
// label, distinct ids denote non-isomorphic modules once the checks pass
struct KroneckerEntry {
    std::string family; // "P", "I" or "R"
    int l = 0;
    std::string lambda; // "" for P/I, "0,inf" or "lam,laminv" for R
    bool valid = false;
    bool indecomposable = false;
    std::string iso_class_id;
    std::vector<std::string> certificates; // labels of the supporting checks
};

struct KroneckerReport {
    std::vector<KroneckerEntry> entries;
    std::vector<KroneckerCheck> checks;

    bool all_ok() const;
};

KroneckerReport verify_kronecker_classification(const Fq& field, int l_max,
                                                const std::vector<FieldElement>& lambdas,
                                                u64 seed);

} // namespace skewrep
