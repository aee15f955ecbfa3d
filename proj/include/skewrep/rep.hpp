#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewrep/matrix.hpp"
#include "skewrep/quiver.hpp"
#include "skewrep/rng.hpp"

namespace skewrep {

// Representation of a quiver: one F_{p^e} vector space dimension per vertex,
// one matrix per arrow.  The matrix for arrow a has shape
// dims[target] x dims[source]; zero dimensions give empty matrices.
class Representation {
public:
    Representation(std::shared_ptr<const Quiver> quiver, Fq field,
                   std::map<std::string, int> dims,
                   std::map<std::string, Matrix> maps);

    const Quiver& quiver() const { return *quiver_; }
    const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
    const Fq& field() const { return field_; }
    const std::map<std::string, int>& dims() const { return dims_; }
    int dim(const std::string& v) const;
    int total_dim() const;
    const Matrix& map(const std::string& arrow) const;
    const std::map<std::string, Matrix>& maps() const { return maps_; }

    Representation lift(const FieldEmbedding& emb) const;
    Representation lift(const FieldTower& tower) const;

    bool operator==(const Representation& o) const;

private:
    std::shared_ptr<const Quiver> quiver_;
    Fq field_;
    std::map<std::string, int> dims_;
    std::map<std::string, Matrix> maps_;
};

// Morphism X -> Y: a block per vertex, shape dims_Y[v] x dims_X[v].
struct RepMorphism {
    std::map<std::string, Matrix> blocks;

    const Matrix& at(const std::string& v) const;
    bool operator==(const RepMorphism&) const = default;
};

bool is_morphism(const Representation& x, const Representation& y, const RepMorphism& t);
RepMorphism compose(const Representation& x, const Representation& y, const Representation& z,
                    const RepMorphism& f, const RepMorphism& g); // g after f
RepMorphism identity_morphism(const Representation& x);
RepMorphism zero_morphism(const Representation& x, const Representation& y);

// twisted representation ^{sigma^j}X: vertex spaces and arrow maps pulled
// back along sigma^{-j}
Representation twist(const Representation& x, const QuiverAutomorphism& s, int j);
RepMorphism twist_morphism(const RepMorphism& t, const QuiverAutomorphism& s, int j);

// basis of Hom(X, Y) from one stacked kernel computation; deterministic
std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y);

struct IsoCheck {
    bool isomorphic = false;
    std::optional<RepMorphism> witness; // over `field`
    Fq field;                           // X's field, or its quadratic extension after escalation
    bool escalated = false;
};

// Randomized isomorphism test: samples invertible combinations of a hom
// basis (each basis element first, then 20 seeded random combinations),
// escalating once to F_{p^{2e}} before reporting failure.
IsoCheck is_isomorphic(const Representation& x, const Representation& y, u64 seed);

Representation direct_sum(const std::vector<Representation>& parts);

// indecomposable summands, canonically ordered by (total dimension,
// dimension vector, serialized matrices); Krull-Schmidt at desk scale
std::vector<Representation> decompose(const Representation& x, u64 seed);

// least m >= 1 with ^{sigma^m}X isomorphic to X; divides order(sigma)
int minimal_period(const Representation& x, const QuiverAutomorphism& s, u64 seed);

// X + ^{sigma}X + ... + ^{sigma^{m-1}}X for indecomposable X
Representation orbit_module(const Representation& x, const QuiverAutomorphism& s, u64 seed);

bool is_sigma_equivalent(const Representation& x, const QuiverAutomorphism& s, u64 seed);

Representation simple_rep(std::shared_ptr<const Quiver> q, const Fq& field, const std::string& v);
// path-space construction; basis ordered by (path length, arrow name sequence)
Representation projective_rep(std::shared_ptr<const Quiver> q, const Fq& field, const std::string& v);
Representation injective_rep(std::shared_ptr<const Quiver> q, const Fq& field, const std::string& v);

// All paths leaving v (resp. arriving at v) as arrow name sequences paired
// with the far endpoint, sorted by (length, sequence).  These orders define
// the bases of the path-space constructions above.
std::vector<std::pair<std::vector<std::string>, std::string>>
paths_from_vertex(const Quiver& q, const std::string& v);
std::vector<std::pair<std::vector<std::string>, std::string>>
paths_into_vertex(const Quiver& q, const std::string& v);

// basis change by invertible blocks g: maps become g_t X_a g_s^{-1}
Representation conjugate(const Representation& x, const std::map<std::string, Matrix>& g);

// multiset equality up to isomorphism, via greedy matching
bool iso_multiset_equal(std::vector<Representation> a, std::vector<Representation> b, u64 seed);

// deterministic serialization used for canonical ordering
std::string canonical_key(const Representation& x);

} // namespace skewrep
