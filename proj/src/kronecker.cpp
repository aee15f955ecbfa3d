#include "skewrep/kronecker.hpp"

#include <set>
#include <sstream>

namespace skewrep {

std::shared_ptr<const Quiver> kronecker_quiver() {
    return std::make_shared<const Quiver>(
        std::vector<std::string>{"a0", "a1"},
        std::vector<Arrow>{{"alpha0", "a1", "a0"}, {"alpha1", "a1", "a0"}});
}

QuiverAutomorphism kronecker_involution(const Quiver& q) {
    return QuiverAutomorphism(q, {{"a0", "a0"}, {"a1", "a1"}},
                              {{"alpha0", "alpha1"}, {"alpha1", "alpha0"}});
}

Matrix jordan_block(const Fq& f, const FieldElement& lambda, int l) {
    Matrix j(f, l, l);
    for (int i = 0; i < l; ++i) {
        j.set(i, i, lambda);
        if (i + 1 < l) j.set(i, i + 1, f.one());
    }
    return j;
}

namespace {

// antidiagonal exchange matrix, possibly negated
Matrix exchange(const Fq& f, int l, int sign) {
    Matrix k(f, l, l);
    FieldElement v = sign == 0 ? f.one() : f.neg(f.one());
    for (int i = 0; i < l; ++i) k.set(i, l - 1 - i, v);
    return k;
}

Representation make_rep(std::shared_ptr<const Quiver> q, const Fq& f, int d0, int d1,
                        Matrix m0, Matrix m1) {
    return Representation(std::move(q), f, {{"a0", d0}, {"a1", d1}},
                          {{"alpha0", std::move(m0)}, {"alpha1", std::move(m1)}});
}

} // namespace

Representation kronecker_rep(std::shared_ptr<const Quiver> q, const Fq& field,
                             KroneckerFamily family, int l) {
    if (family == KroneckerFamily::Regular)
        throw StructureError("regular family needs an eigenvalue");
    if (l < 0 || (family != KroneckerFamily::Preprojective &&
                  family != KroneckerFamily::Preinjective && l < 1))
        throw StructureError("family index out of range");
    switch (family) {
    case KroneckerFamily::Preprojective: {
        Matrix m1(field, l + 1, l), m0(field, l + 1, l);
        for (int i = 0; i < l; ++i) {
            m1.set(i, i, field.one());     // [I; 0]
            m0.set(i + 1, i, field.one()); // [0; I]
        }
        return make_rep(std::move(q), field, l + 1, l, std::move(m0), std::move(m1));
    }
    case KroneckerFamily::Preinjective: {
        Matrix m1(field, l, l + 1), m0(field, l, l + 1);
        for (int i = 0; i < l; ++i) {
            m1.set(i, i, field.one());     // [I, 0]
            m0.set(i, i + 1, field.one()); // [0, I]
        }
        return make_rep(std::move(q), field, l, l + 1, std::move(m0), std::move(m1));
    }
    case KroneckerFamily::RegularInfinity:
        return make_rep(std::move(q), field, l, l, jordan_block(field, field.zero(), l),
                        Matrix::identity(field, l));
    default:
        throw StructureError("unreachable family");
    }
}

Representation kronecker_rep(std::shared_ptr<const Quiver> q, const Fq& field,
                             KroneckerFamily family, int l, const FieldElement& lambda) {
    if (family != KroneckerFamily::Regular) return kronecker_rep(std::move(q), field, family, l);
    if (l < 1) throw StructureError("family index out of range");
    return make_rep(std::move(q), field, l, l, Matrix::identity(field, l),
                    jordan_block(field, lambda, l));
}

SmashModule kronecker_preprojective_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                                          int l, int sign) {
    if (sign != 0 && sign != 1) throw StructureError("sign must be 0 or 1");
    Representation rep = kronecker_rep(q, field, KroneckerFamily::Preprojective, l);
    QuiverAutomorphism s = kronecker_involution(*q);
    std::map<std::string, Matrix> action{{"a0", exchange(field, l + 1, sign)},
                                         {"a1", exchange(field, l, sign)}};
    return SmashModule(std::move(rep), std::move(s), std::move(action), 1);
}

SmashModule kronecker_preinjective_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                                         int l, int sign) {
    if (sign != 0 && sign != 1) throw StructureError("sign must be 0 or 1");
    Representation rep = kronecker_rep(q, field, KroneckerFamily::Preinjective, l);
    QuiverAutomorphism s = kronecker_involution(*q);
    std::map<std::string, Matrix> action{{"a0", exchange(field, l, sign)},
                                         {"a1", exchange(field, l + 1, sign)}};
    return SmashModule(std::move(rep), std::move(s), std::move(action), 1);
}

SmashModule kronecker_regular_pair_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                                         int l) {
    Representation sum =
        direct_sum({kronecker_rep(q, field, KroneckerFamily::Regular, l, field.zero()),
                    kronecker_rep(q, field, KroneckerFamily::RegularInfinity, l)});
    QuiverAutomorphism s = kronecker_involution(*q);
    Matrix swap(field, 2 * l, 2 * l);
    for (int i = 0; i < l; ++i) {
        swap.set(i, l + i, field.one());
        swap.set(l + i, i, field.one());
    }
    std::map<std::string, Matrix> action{{"a0", swap}, {"a1", swap}};
    return SmashModule(std::move(sum), std::move(s), std::move(action), 1);
}

RegularSwap derive_regular_swap_matrices(const Fq& field, const FieldElement& lambda, int l) {
    if (l < 1) throw StructureError("block size must be positive");
    if (field.is_zero(lambda)) throw StructureError("eigenvalue must be nonzero");
    FieldElement mu = field.inv(lambda);
    if (mu == lambda)
        throw StructureError("self-inverse eigenvalue: the orbit is a singleton");
    Matrix jmu = jordan_block(field, mu, l);
    auto jlinv_opt = jordan_block(field, lambda, l).inverse();
    if (!jlinv_opt) throw StructureError("eigenvalue block is singular");
    const Matrix& jlinv = *jlinv_opt;

    // intertwiners: J_mu A = A Jlinv, unknown A row-major
    Matrix sys(field, l * l, l * l);
    auto bump = [&](int row, int col, const FieldElement& d) {
        sys.set(row, col, field.add(sys.at(row, col), d));
    };
    for (int r = 0; r < l; ++r) {
        for (int c = 0; c < l; ++c) {
            int row = r * l + c;
            for (int k = 0; k < l; ++k) {
                bump(row, k * l + c, jmu.at(r, k));
                bump(row, r * l + k, field.neg(jlinv.at(k, c)));
            }
        }
    }
    auto kern = sys.kernel_basis();
    if (kern.empty()) throw StructureError("no intertwiner exists");
    auto unflatten = [&](const Matrix& vec) {
        Matrix m(field, l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) m.set(i, j, vec.at(i * l + j, 0));
        return m;
    };
    // pin the last column of B = A Jlinv to (0, ..., 0, 1)^T
    std::vector<FieldElement> last_col;
    for (int i = 0; i < l; ++i) last_col.push_back(jlinv.at(i, l - 1));
    Matrix jcol = Matrix::column(field, last_col);
    Matrix w(field, l, static_cast<int>(kern.size()));
    std::vector<Matrix> gens;
    for (size_t i = 0; i < kern.size(); ++i) {
        gens.push_back(unflatten(kern[i]));
        Matrix col = gens.back().mul(jcol);
        for (int r = 0; r < l; ++r) w.set(r, static_cast<int>(i), col.at(r, 0));
    }
    std::vector<FieldElement> target(static_cast<size_t>(l), field.zero());
    target.back() = field.one();
    auto sol = w.solve(Matrix::column(field, target));
    if (!sol) throw StructureError("no intertwiner with the normalized last column");
    Matrix a(field, l, l);
    for (size_t i = 0; i < gens.size(); ++i)
        a = a.add(gens[i].scalar_mul(sol->at(static_cast<int>(i), 0)));
    Matrix b = a.mul(jlinv);
    if (!a.is_invertible() || !b.is_invertible())
        throw StructureError("normalized intertwiner is singular");
    return RegularSwap{std::move(a), std::move(b)};
}

SmashModule kronecker_regular_lambda_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                                           const FieldElement& lambda, int l) {
    RegularSwap rs = derive_regular_swap_matrices(field, lambda, l);
    FieldElement mu = field.inv(lambda);
    Representation sum =
        direct_sum({kronecker_rep(q, field, KroneckerFamily::Regular, l, lambda),
                    kronecker_rep(q, field, KroneckerFamily::Regular, l, mu)});
    QuiverAutomorphism s = kronecker_involution(*q);
    auto corner = [&](const Matrix& m) {
        Matrix inv = *m.inverse();
        Matrix block(field, 2 * l, 2 * l);
        for (int i = 0; i < l; ++i) {
            for (int j = 0; j < l; ++j) {
                block.set(i, l + j, inv.at(i, j));
                block.set(l + i, j, m.at(i, j));
            }
        }
        return block;
    };
    std::map<std::string, Matrix> action{{"a0", corner(rs.b)}, {"a1", corner(rs.a)}};
    return SmashModule(std::move(sum), std::move(s), std::move(action), 1);
}

bool KroneckerReport::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

namespace {

void record(KroneckerReport& rep, const std::string& label, bool ok,
            const std::string& detail = "") {
    rep.checks.push_back(KroneckerCheck{label, ok, ok ? "" : detail});
}

// run a named step, converting exceptions into failed checks
template <typename F>
void guarded(KroneckerReport& rep, const std::string& label, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        record(rep, label, false, e.what());
    }
}

} // namespace

KroneckerReport verify_kronecker_classification(const Fq& field, int l_max,
                                                const std::vector<FieldElement>& lambdas,
                                                u64 seed) {
    KroneckerReport report;
    auto q = kronecker_quiver();
    QuiverAutomorphism s = kronecker_involution(*q);

    auto check_indec = [&](const std::string& label, const SmashModule& m) {
        size_t parts = decompose_smash(m, seed).size();
        record(report, label + " indecomposable", parts == 1,
               "split into " + std::to_string(parts) + " summands");
        return parts == 1;
    };
    auto add_entry = [&](const std::string& family, int l, const std::string& lambda,
                         const std::string& id, bool indec,
                         std::vector<std::string> certs) {
        report.entries.push_back(
            KroneckerEntry{family, l, lambda, true, indec, id, std::move(certs)});
    };

    for (int l = 0; l <= l_max; ++l) {
        const std::string ls = std::to_string(l);
        guarded(report, "preprojective(" + ls + ")", [&] {
            SmashModule p0 = kronecker_preprojective_smash(q, field, l, 0);
            SmashModule p1 = kronecker_preprojective_smash(q, field, l, 1);
            record(report, "preprojective(" + ls + ") valid", true);
            bool ind0 = check_indec("preprojective(" + ls + ") sign 0", p0);
            bool ind1 = check_indec("preprojective(" + ls + ") sign 1", p1);
            record(report, "preprojective(" + ls + ") signs distinct",
                   !is_isomorphic_smash(p0, p1, seed).isomorphic,
                   "the two signs are isomorphic");
            auto induced =
                classify_induced(kronecker_rep(q, field, KroneckerFamily::Preprojective, l), s, seed);
            record(report, "preprojective(" + ls + ") classification",
                   iso_multiset_equal_smash(induced, {p0, p1}, seed),
                   "induced modules do not match the catalog");
            std::vector<std::string> certs{"preprojective(" + ls + ") signs distinct",
                                           "preprojective(" + ls + ") classification"};
            add_entry("P", l, "", "P(" + ls + ")^(0)", ind0, certs);
            add_entry("P", l, "", "P(" + ls + ")^(1)", ind1, certs);
        });
        guarded(report, "preinjective(" + ls + ")", [&] {
            SmashModule i0 = kronecker_preinjective_smash(q, field, l, 0);
            SmashModule i1 = kronecker_preinjective_smash(q, field, l, 1);
            record(report, "preinjective(" + ls + ") valid", true);
            bool ind0 = check_indec("preinjective(" + ls + ") sign 0", i0);
            bool ind1 = check_indec("preinjective(" + ls + ") sign 1", i1);
            record(report, "preinjective(" + ls + ") signs distinct",
                   !is_isomorphic_smash(i0, i1, seed).isomorphic,
                   "the two signs are isomorphic");
            auto induced =
                classify_induced(kronecker_rep(q, field, KroneckerFamily::Preinjective, l), s, seed);
            record(report, "preinjective(" + ls + ") classification",
                   iso_multiset_equal_smash(induced, {i0, i1}, seed),
                   "induced modules do not match the catalog");
            std::vector<std::string> certs{"preinjective(" + ls + ") signs distinct",
                                           "preinjective(" + ls + ") classification"};
            add_entry("I", l, "", "I(" + ls + ")^(0)", ind0, certs);
            add_entry("I", l, "", "I(" + ls + ")^(1)", ind1, certs);
        });
    }

    // deduplicate eigenvalues against inverses, reject zero and self-inverse
    std::vector<FieldElement> pair_reps;
    std::vector<FieldElement> self_inverse;
    std::set<i64> seen;
    for (const auto& lam : lambdas) {
        if (field.is_zero(lam)) {
            record(report, "eigenvalue 0 rejected", false,
                   "eigenvalue 0 belongs to the pair with infinity");
            continue;
        }
        FieldElement inv = field.inv(lam);
        i64 key = std::min(field.canonical_index(lam), field.canonical_index(inv));
        if (seen.count(key)) continue;
        seen.insert(key);
        if (inv == lam)
            self_inverse.push_back(lam);
        else
            pair_reps.push_back(lam);
    }

    for (int l = 1; l <= l_max; ++l) {
        const std::string ls = std::to_string(l);
        guarded(report, "regular pair (0,inf)(" + ls + ")", [&] {
            SmashModule r = kronecker_regular_pair_smash(q, field, l);
            record(report, "regular pair (0,inf)(" + ls + ") valid", true);
            bool ind = check_indec("regular pair (0,inf)(" + ls + ")", r);
            auto from_zero = classify_induced(
                kronecker_rep(q, field, KroneckerFamily::Regular, l, field.zero()), s, seed);
            auto from_inf = classify_induced(
                kronecker_rep(q, field, KroneckerFamily::RegularInfinity, l), s, seed);
            record(report, "regular pair (0,inf)(" + ls + ") classification",
                   iso_multiset_equal_smash(from_zero, {r}, seed) &&
                       iso_multiset_equal_smash(from_inf, {r}, seed),
                   "induced modules do not match the catalog");
            add_entry("R", l, "0,inf", "R(0,inf)(" + ls + ")", ind,
                      {"regular pair (0,inf)(" + ls + ") classification"});
        });
        std::vector<SmashModule> same_dims;
        guarded(report, "regular pair (0,inf)(" + ls + ") collect",
                [&] { same_dims.push_back(kronecker_regular_pair_smash(q, field, l)); });
        for (const auto& lam : pair_reps) {
            std::string orbit = std::to_string(field.canonical_index(lam)) + "," +
                                std::to_string(field.canonical_index(field.inv(lam)));
            std::string name = "regular pair (lambda=" +
                               std::to_string(field.canonical_index(lam)) + ")(" + ls + ")";
            guarded(report, name, [&] {
                RegularSwap rs = derive_regular_swap_matrices(field, lam, l);
                if (l == 1) {
                    bool a_ok = rs.a.at(0, 0) == lam;
                    bool b_ok = field.is_one(rs.b.at(0, 0));
                    record(report, name + " normalized blocks", a_ok && b_ok,
                           "expected A = [lambda], B = [1]");
                }
                SmashModule r = kronecker_regular_lambda_smash(q, field, lam, l);
                record(report, name + " valid", true);
                bool ind = check_indec(name, r);
                auto from_lam = classify_induced(
                    kronecker_rep(q, field, KroneckerFamily::Regular, l, lam), s, seed);
                auto from_inv = classify_induced(
                    kronecker_rep(q, field, KroneckerFamily::Regular, l, field.inv(lam)), s, seed);
                record(report, name + " classification",
                       iso_multiset_equal_smash(from_lam, {r}, seed) &&
                           iso_multiset_equal_smash(from_inv, {r}, seed),
                       "induced modules do not match the catalog");
                add_entry("R", l, orbit, "R(" + orbit + ")(" + ls + ")", ind,
                          {name + " classification"});
                same_dims.push_back(r);
            });
        }
        for (size_t i = 0; i < same_dims.size(); ++i) {
            for (size_t j = i + 1; j < same_dims.size(); ++j) {
                record(report,
                       "regular catalog " + std::to_string(l) + ": entries " + std::to_string(i) +
                           "," + std::to_string(j) + " distinct",
                       !is_isomorphic_smash(same_dims[i], same_dims[j], seed).isomorphic,
                       "distinct eigenvalue orbits give isomorphic modules");
            }
        }
        for (const auto& lam : self_inverse) {
            std::string name = "self-inverse eigenvalue " +
                               std::to_string(field.canonical_index(lam)) + " (" +
                               std::to_string(l) + ")";
            guarded(report, name, [&] {
                auto induced = classify_induced(
                    kronecker_rep(q, field, KroneckerFamily::Regular, l, lam), s, seed);
                bool ok = induced.size() == 2 &&
                          !is_isomorphic_smash(induced[0], induced[1], seed).isomorphic &&
                          decompose_smash(induced[0], seed).size() == 1 &&
                          decompose_smash(induced[1], seed).size() == 1;
                record(report, name + " two structures", ok,
                       "expected two non-isomorphic indecomposable structures");
            });
        }
    }
    return report;
}

} // namespace skewrep
