#pragma once

// Shared fixtures: the three-vertex quiver  -1 --alpha--> 0 <--beta-- 1
// with the reflection swapping the outer vertices, and its six
// indecomposable interval representations.

#include <memory>

#include "skewrep/rep.hpp"
#include "skewrep/rng.hpp"

namespace testfix {

using namespace skewrep;

inline std::shared_ptr<const Quiver> a3_quiver() {
    return std::make_shared<const Quiver>(
        std::vector<std::string>{"-1", "0", "1"},
        std::vector<Arrow>{{"alpha", "-1", "0"}, {"beta", "1", "0"}});
}

inline QuiverAutomorphism a3_swap(const Quiver& q) {
    return QuiverAutomorphism(q, {{"-1", "1"}, {"0", "0"}, {"1", "-1"}},
                              {{"alpha", "beta"}, {"beta", "alpha"}});
}

// interval representation supported on the marked vertices; arrows between
// two present vertices carry the identity
inline Representation a3_interval(std::shared_ptr<const Quiver> q, const Fq& f, bool vm,
                                  bool v0, bool vp) {
    std::map<std::string, int> dims{{"-1", vm ? 1 : 0}, {"0", v0 ? 1 : 0}, {"1", vp ? 1 : 0}};
    std::map<std::string, Matrix> maps;
    auto unit = [&](bool from, bool to) {
        Matrix m(f, to ? 1 : 0, from ? 1 : 0);
        if (from && to) m.set(0, 0, f.one());
        return m;
    };
    maps.emplace("alpha", unit(vm, v0));
    maps.emplace("beta", unit(vp, v0));
    return Representation(std::move(q), f, std::move(dims), std::move(maps));
}

struct A3 {
    std::shared_ptr<const Quiver> q;
    QuiverAutomorphism s;
    Representation lm1, l0, l1, lm10, l01, l101;

    explicit A3(const Fq& f)
        : q(a3_quiver()),
          s(a3_swap(*q)),
          lm1(a3_interval(q, f, true, false, false)),
          l0(a3_interval(q, f, false, true, false)),
          l1(a3_interval(q, f, false, false, true)),
          lm10(a3_interval(q, f, true, true, false)),
          l01(a3_interval(q, f, false, true, true)),
          l101(a3_interval(q, f, true, true, true)) {}

    std::vector<Representation> all() const { return {lm1, l0, l1, lm10, l01, l101}; }
};

// random invertible blockwise basis change for a representation
inline std::map<std::string, Matrix> random_basis_change(const Representation& x, Rng& rng) {
    const Fq& f = x.field();
    std::map<std::string, Matrix> g;
    for (const auto& [v, d] : x.dims()) {
        Matrix m(f, d, d);
        do {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    m.set(i, j, f.element_at(static_cast<i64>(rng.below(static_cast<u64>(f.q())))));
        } while (!m.is_invertible());
        g.emplace(v, std::move(m));
    }
    return g;
}

} // namespace testfix
