#include "skewrep/smash.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skewrep {

SmashModule::SmashModule(Representation rep, QuiverAutomorphism sigma,
                         std::map<std::string, Matrix> action, int subgroup_power)
    : rep_(std::move(rep)), sigma_(std::move(sigma)), action_(std::move(action)),
      d_(subgroup_power) {
    validate();
}

void SmashModule::validate() const {
    const Quiver& q = rep_.quiver();
    int n = sigma_.order();
    if (d_ < 1 || n % d_ != 0)
        throw StructureError("subgroup power must divide the automorphism order");
    if (n % rep_.field().p() == 0)
        throw StructureError("characteristic divides the automorphism order");
    // the automorphism must act on this quiver
    if (sigma_.vertex_map().size() != q.vertices().size() ||
        sigma_.arrow_map().size() != q.arrows().size())
        throw StructureError("automorphism acts on a different quiver");
    for (const auto& a : q.arrows()) {
        auto it = sigma_.arrow_map().find(a.name);
        if (it == sigma_.arrow_map().end())
            throw StructureError("automorphism does not cover arrow " + a.name);
        const Arrow& img = q.arrow(it->second);
        if (img.from != sigma_.vertex(a.from) || img.to != sigma_.vertex(a.to))
            throw StructureError("automorphism is incompatible with arrow " + a.name);
    }
    for (const auto& v : q.vertices()) {
        auto it = action_.find(v);
        if (it == action_.end()) throw StructureError("missing action block at vertex " + v);
        const Matrix& b = it->second;
        if (b.field() != rep_.field())
            throw StructureError("action block at " + v + " is over the wrong field");
        if (b.rows() != rep_.dim(v) || b.cols() != rep_.dim(sigma_.vertex(v, -d_)))
            throw StructureError("action block at " + v + " has the wrong shape");
    }
    if (action_.size() != q.vertices().size())
        throw StructureError("action table mentions unknown vertices");
    for (const auto& a : q.arrows()) {
        Matrix lhs = rep_.map(a.name).mul(action_.at(a.from));
        Matrix rhs = action_.at(a.to).mul(rep_.map(sigma_.arrow(a.name, -d_)));
        if (lhs != rhs)
            throw StructureError("action is not a morphism from the twisted representation (arrow " +
                                 a.name + ")");
    }
    int k = n / d_;
    for (const auto& v : q.vertices()) {
        Matrix comp = action_.at(v);
        std::string w = v;
        for (int j = 1; j < k; ++j) {
            w = sigma_.vertex(w, -d_);
            comp = comp.mul(action_.at(w));
        }
        if (!comp.is_identity())
            throw StructureError("twisted composite of the action is not the identity at vertex " + v);
    }
}

const Matrix& SmashModule::action_at(const std::string& v) const {
    auto it = action_.find(v);
    if (it == action_.end()) throw StructureError("no action block at vertex " + v);
    return it->second;
}

SmashModule SmashModule::lift(const FieldEmbedding& emb) const {
    std::map<std::string, Matrix> action;
    for (const auto& [v, b] : action_) action.emplace(v, b.lift(emb));
    return SmashModule(rep_.lift(emb), sigma_, std::move(action), d_);
}

SmashModule SmashModule::lift(const FieldTower& tower) const {
    std::map<std::string, Matrix> action;
    for (const auto& [v, b] : action_) action.emplace(v, b.lift(tower));
    return SmashModule(rep_.lift(tower), sigma_, std::move(action), d_);
}

bool SmashModule::operator==(const SmashModule& o) const {
    return rep_ == o.rep_ && sigma_ == o.sigma_ && action_ == o.action_ && d_ == o.d_;
}

namespace {

void require_same_algebra(const SmashModule& x, const SmashModule& y) {
    if (!(x.rep().quiver() == y.rep().quiver()))
        throw StructureError("modules live over different quivers");
    if (x.field() != y.field()) throw StructureError("modules live over different fields");
    if (!(x.sigma() == y.sigma()) || x.subgroup_power() != y.subgroup_power())
        throw StructureError("modules live over different skew group algebras");
}

} // namespace

bool is_smash_morphism(const SmashModule& x, const SmashModule& y, const SmashMorphism& t) {
    require_same_algebra(x, y);
    if (!is_morphism(x.rep(), y.rep(), t)) return false;
    int d = x.subgroup_power();
    for (const auto& v : x.rep().quiver().vertices()) {
        Matrix lhs = t.at(v).mul(x.action_at(v));
        Matrix rhs = y.action_at(v).mul(t.at(x.sigma().vertex(v, -d)));
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<SmashMorphism> smash_hom_basis(const SmashModule& x, const SmashModule& y) {
    require_same_algebra(x, y);
    const Quiver& q = x.rep().quiver();
    const Fq& f = x.field();
    const Representation& rx = x.rep();
    const Representation& ry = y.rep();
    int d = x.subgroup_power();

    std::map<std::string, int> offset;
    int unknowns = 0;
    for (const auto& v : q.vertices()) {
        int n = rx.dim(v) * ry.dim(v);
        if (n > 0) {
            offset[v] = unknowns;
            unknowns += n;
        }
    }
    int rows = 0;
    for (const auto& a : q.arrows()) rows += ry.dim(a.to) * rx.dim(a.from);
    for (const auto& v : q.vertices()) rows += ry.dim(v) * rx.dim(x.sigma().vertex(v, -d));

    Matrix sys(f, rows, unknowns);
    auto bump = [&](int row, int col, const FieldElement& delta) {
        sys.set(row, col, f.add(sys.at(row, col), delta));
    };
    int r0 = 0;
    for (const auto& a : q.arrows()) {
        int dxs = rx.dim(a.from), dxt = rx.dim(a.to);
        int dys = ry.dim(a.from), dyt = ry.dim(a.to);
        if (dyt * dxs == 0) continue;
        const Matrix& ya = ry.map(a.name);
        const Matrix& xa = rx.map(a.name);
        for (int r = 0; r < dyt; ++r) {
            for (int c = 0; c < dxs; ++c) {
                int row = r0 + r * dxs + c;
                if (dys > 0)
                    for (int k = 0; k < dys; ++k)
                        bump(row, offset.at(a.from) + k * dxs + c, ya.at(r, k));
                if (dxt > 0)
                    for (int k = 0; k < dxt; ++k)
                        bump(row, offset.at(a.to) + r * dxt + k, f.neg(xa.at(k, c)));
            }
        }
        r0 += dyt * dxs;
    }
    // equivariance: t_v Phi^X_v = Phi^Y_v t_{sigma^{-d}(v)}
    for (const auto& v : q.vertices()) {
        std::string w = x.sigma().vertex(v, -d);
        int dxv = rx.dim(v), dxw = rx.dim(w);
        int dyv = ry.dim(v), dyw = ry.dim(w);
        if (dyv * dxw == 0) continue;
        const Matrix& px = x.action_at(v); // dxv x dxw
        const Matrix& py = y.action_at(v); // dyv x dyw
        for (int r = 0; r < dyv; ++r) {
            for (int c = 0; c < dxw; ++c) {
                int row = r0 + r * dxw + c;
                if (dxv > 0)
                    for (int k = 0; k < dxv; ++k)
                        bump(row, offset.at(v) + r * dxv + k, px.at(k, c));
                if (dyw > 0)
                    for (int k = 0; k < dyw; ++k)
                        bump(row, offset.at(w) + k * dxw + c, f.neg(py.at(r, k)));
            }
        }
        r0 += dyv * dxw;
    }

    std::vector<SmashMorphism> basis;
    for (const Matrix& vec : sys.kernel_basis()) {
        SmashMorphism t;
        for (const auto& v : q.vertices()) {
            Matrix block(f, ry.dim(v), rx.dim(v));
            auto it = offset.find(v);
            if (it != offset.end()) {
                for (int r = 0; r < ry.dim(v); ++r)
                    for (int c = 0; c < rx.dim(v); ++c)
                        block.set(r, c, vec.at(it->second + r * rx.dim(v) + c, 0));
            }
            t.blocks.emplace(v, std::move(block));
        }
        basis.push_back(std::move(t));
    }
    return basis;
}

SmashMorphism equivariant_projector(const SmashModule& x, const SmashModule& y,
                                    const RepMorphism& f) {
    require_same_algebra(x, y);
    const Fq& fld = x.field();
    int d = x.subgroup_power();
    int k = x.cyclic_order();
    std::map<std::string, Matrix> xinv;
    for (const auto& v : x.rep().quiver().vertices()) {
        auto inv = x.action_at(v).inverse();
        if (!inv) throw StructureError("action block is singular at vertex " + v);
        xinv.emplace(v, std::move(*inv));
    }
    SmashMorphism cur = f, acc = f;
    for (int j = 1; j < k; ++j) {
        SmashMorphism next;
        for (const auto& v : x.rep().quiver().vertices())
            next.blocks.emplace(
                v, y.action_at(v).mul(cur.at(x.sigma().vertex(v, -d))).mul(xinv.at(v)));
        cur = std::move(next);
        for (auto& [v, b] : acc.blocks) b = b.add(cur.at(v));
    }
    FieldElement kinv = fld.inv(fld.from_int(k));
    for (auto& [v, b] : acc.blocks) b = b.scalar_mul(kinv);
    return acc;
}

namespace {

SmashMorphism combine_smash(const SmashModule& x, const SmashModule& y,
                            const std::vector<SmashMorphism>& basis,
                            const std::vector<FieldElement>& coeffs) {
    const Fq& f = x.field();
    SmashMorphism r = zero_morphism(x.rep(), y.rep());
    for (size_t i = 0; i < basis.size(); ++i) {
        if (f.is_zero(coeffs[i])) continue;
        for (auto& [v, block] : r.blocks) block = block.add(basis[i].at(v).scalar_mul(coeffs[i]));
    }
    return r;
}

bool blockwise_invertible(const SmashMorphism& t) {
    for (const auto& [v, block] : t.blocks) {
        (void)v;
        if (!block.is_invertible()) return false;
    }
    return true;
}

std::optional<SmashMorphism> find_smash_witness(const SmashModule& x, const SmashModule& y,
                                                Rng& rng, int trials) {
    auto basis = smash_hom_basis(x, y);
    if (basis.empty()) return std::nullopt;
    for (const auto& b : basis)
        if (blockwise_invertible(b)) return b;
    const Fq& f = x.field();
    for (int t = 0; t < trials; ++t) {
        std::vector<FieldElement> cs;
        cs.reserve(basis.size());
        for (size_t i = 0; i < basis.size(); ++i)
            cs.push_back(f.element_at(static_cast<i64>(rng.below(static_cast<u64>(f.q())))));
        SmashMorphism cand = combine_smash(x, y, basis, cs);
        if (blockwise_invertible(cand)) return cand;
    }
    return std::nullopt;
}

constexpr int kIsoTrials = 20;
constexpr int kSplitTrials = 20;

} // namespace

IsoCheck is_isomorphic_smash(const SmashModule& x, const SmashModule& y, u64 seed) {
    require_same_algebra(x, y);
    IsoCheck out{false, std::nullopt, x.field(), false};
    for (const auto& v : x.rep().quiver().vertices())
        if (x.rep().dim(v) != y.rep().dim(v)) return out;
    if (x.total_dim() == 0) {
        out.isomorphic = true;
        out.witness = zero_morphism(x.rep(), y.rep());
        return out;
    }
    Rng rng(seed);
    if (auto w = find_smash_witness(x, y, rng, kIsoTrials)) {
        out.isomorphic = true;
        out.witness = std::move(w);
        return out;
    }
    if (smash_hom_basis(x, y).empty()) return out;
    FieldEmbedding emb(x.field(), extended_field(x.field(), 2));
    SmashModule xl = x.lift(emb), yl = y.lift(emb);
    Rng rng2 = rng.fork();
    if (auto w = find_smash_witness(xl, yl, rng2, kIsoTrials)) {
        out.isomorphic = true;
        out.witness = std::move(w);
        out.field = emb.to();
        out.escalated = true;
        return out;
    }
    return out;
}

SmashModule direct_sum_smash(const std::vector<SmashModule>& parts) {
    if (parts.empty()) throw StructureError("direct sum needs at least one summand");
    for (const auto& p : parts) require_same_algebra(parts.front(), p);
    std::vector<Representation> reps;
    reps.reserve(parts.size());
    for (const auto& p : parts) reps.push_back(p.rep());
    Representation sum = direct_sum(reps);
    std::map<std::string, Matrix> action;
    for (const auto& v : sum.quiver().vertices()) {
        std::vector<Matrix> blocks;
        blocks.reserve(parts.size());
        for (const auto& p : parts) blocks.push_back(p.action_at(v));
        action.emplace(v, Matrix::block_diag(sum.field(), blocks));
    }
    return SmashModule(std::move(sum), parts.front().sigma(), std::move(action),
                       parts.front().subgroup_power());
}

namespace {

int smash_trace_form_rank(const SmashModule& x, const std::vector<SmashMorphism>& endos) {
    const Fq& f = x.field();
    int s = static_cast<int>(endos.size());
    Matrix gram(f, s, s);
    for (int i = 0; i < s; ++i) {
        for (int j = i; j < s; ++j) {
            FieldElement t = f.zero();
            for (const auto& v : x.rep().quiver().vertices()) {
                if (x.rep().dim(v) == 0) continue;
                t = f.add(t, endos[static_cast<size_t>(i)]
                                 .at(v)
                                 .mul(endos[static_cast<size_t>(j)].at(v))
                                 .trace());
            }
            gram.set(i, j, t);
            gram.set(j, i, t);
        }
    }
    return gram.rank();
}

// restrict the module to the subspaces spanned by the columns of c_v
SmashModule restrict_smash(const SmashModule& x, const std::map<std::string, Matrix>& c) {
    std::map<std::string, int> dims;
    for (const auto& [v, b] : c) dims[v] = b.cols();
    std::map<std::string, Matrix> maps;
    for (const auto& a : x.rep().quiver().arrows()) {
        auto sol = c.at(a.to).solve(x.rep().map(a.name).mul(c.at(a.from)));
        if (!sol) throw StructureError("subspace is not arrow-invariant");
        maps.emplace(a.name, std::move(*sol));
    }
    int d = x.subgroup_power();
    std::map<std::string, Matrix> action;
    for (const auto& v : x.rep().quiver().vertices()) {
        auto sol = c.at(v).solve(x.action_at(v).mul(c.at(x.sigma().vertex(v, -d))));
        if (!sol) throw StructureError("subspace is not action-invariant");
        action.emplace(v, std::move(*sol));
    }
    Representation sub(x.rep().quiver_ptr(), x.field(), std::move(dims), std::move(maps));
    return SmashModule(std::move(sub), x.sigma(), std::move(action), d);
}

std::optional<std::pair<SmashModule, SmashModule>> split_smash(const SmashModule& x,
                                                               const SmashMorphism& h) {
    std::map<std::string, Matrix> im_basis, ker_basis;
    int im_total = 0;
    for (const auto& v : x.rep().quiver().vertices()) {
        const Matrix& hv = h.at(v);
        Matrix g = hv.rows() > 0 ? hv.pow(static_cast<u64>(hv.rows())) : hv;
        Matrix im = g.column_space_basis();
        im_total += im.cols();
        Matrix ker(x.field(), hv.rows(), 0);
        for (const Matrix& k : g.kernel_basis()) ker = ker.hstack(k);
        im_basis.emplace(v, std::move(im));
        ker_basis.emplace(v, std::move(ker));
    }
    if (im_total == 0 || im_total == x.total_dim()) return std::nullopt;
    return std::make_pair(restrict_smash(x, im_basis), restrict_smash(x, ker_basis));
}

} // namespace

std::vector<SmashModule> decompose_smash(const SmashModule& m, u64 seed) {
    Rng top(seed);
    std::vector<SmashModule> parts;
    std::vector<std::pair<SmashModule, Rng>> stack;
    stack.emplace_back(m, top.fork());
    while (!stack.empty()) {
        auto [cur, rng] = std::move(stack.back());
        stack.pop_back();
        int total = cur.total_dim();
        if (total == 0) continue;
        auto endos = smash_hom_basis(cur, cur);
        if (endos.size() == 1) {
            parts.push_back(std::move(cur));
            continue;
        }
        if (cur.field().p() > total && smash_trace_form_rank(cur, endos) == 1) {
            parts.push_back(std::move(cur));
            continue;
        }
        const Fq& f = cur.field();
        bool split_done = false;
        for (int trial = 0; trial < kSplitTrials && !split_done; ++trial) {
            std::vector<FieldElement> cs;
            cs.reserve(endos.size());
            for (size_t i = 0; i < endos.size(); ++i)
                cs.push_back(f.element_at(static_cast<i64>(rng.below(static_cast<u64>(f.q())))));
            SmashMorphism fe = combine_smash(cur, cur, endos, cs);
            std::vector<Matrix> blocks;
            for (const auto& v : cur.rep().quiver().vertices())
                if (cur.rep().dim(v) > 0) blocks.push_back(fe.at(v));
            Poly mu = min_poly_of_blocks(blocks, f);
            auto facs = factor(mu);
            if (facs.size() < 2) continue;
            RepMorphism h;
            for (const auto& v : cur.rep().quiver().vertices())
                h.blocks.emplace(v, eval_poly_matrix(facs.front().factor, fe.at(v)));
            if (auto sub = split_smash(cur, h)) {
                stack.emplace_back(std::move(sub->first), rng.fork());
                stack.emplace_back(std::move(sub->second), rng.fork());
                split_done = true;
            }
        }
        if (!split_done) parts.push_back(std::move(cur));
    }
    std::sort(parts.begin(), parts.end(), [](const SmashModule& a, const SmashModule& b) {
        if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
        return canonical_key_smash(a) < canonical_key_smash(b);
    });
    return parts;
}

SmashModule normalize_isomorphism(const Representation& x, const QuiverAutomorphism& s,
                                  int d, const RepMorphism& psi) {
    int n = s.order();
    if (d < 1 || n % d != 0)
        throw StructureError("subgroup power must divide the automorphism order");
    if (n % x.field().p() == 0)
        throw StructureError("characteristic divides the automorphism order");
    if (!is_morphism(twist(x, s, d), x, psi))
        throw StructureError("witness is not a morphism from the twisted representation");
    int k = n / d;
    const Quiver& q = x.quiver();
    // theta_v: the k-fold twisted composite of psi around the orbit of v
    std::map<std::string, Matrix> theta;
    for (const auto& v : q.vertices()) {
        Matrix t = psi.at(v);
        std::string w = v;
        for (int j = 1; j < k; ++j) {
            w = s.vertex(w, -d);
            t = t.mul(psi.at(w));
        }
        theta.emplace(v, std::move(t));
    }
    std::vector<Matrix> blocks;
    for (const auto& v : q.vertices())
        if (x.dim(v) > 0) blocks.push_back(theta.at(v));
    Matrix big = Matrix::block_diag(x.field(), blocks);
    MatrixNthRoot root = commutant_nth_root(big, k);
    // one polynomial applied per block keeps the commutation identity
    // psi_v h(theta_{sigma^{-d}(v)}) = h(theta_v) psi_v intact, so the
    // twisted composite of Phi = g(theta)^{-1} psi telescopes to
    // g(theta_v)^{-k} theta_v = identity
    bool lifted = !root.tower.is_trivial();
    Representation xl = lifted ? x.lift(root.tower) : x;
    const Fq& top = root.tower.top();
    std::map<std::string, Matrix> phi;
    for (const auto& v : q.vertices()) {
        Matrix th = lifted ? theta.at(v).lift(root.tower) : theta.at(v);
        Matrix psv = lifted ? psi.at(v).lift(root.tower) : psi.at(v);
        if (th.rows() == 0) {
            phi.emplace(v, Matrix(top, psv.rows(), psv.cols()));
            continue;
        }
        auto ginv = eval_poly_matrix(root.g, th).inverse();
        if (!ginv) throw StructureError("normalization produced a singular scaling");
        phi.emplace(v, ginv->mul(psv));
    }
    return SmashModule(std::move(xl), s, std::move(phi), d);
}

SmashModule induce_canonical(const Representation& x, const QuiverAutomorphism& s, int d,
                              u64 seed) {
    IsoCheck c = is_isomorphic(twist(x, s, d), x, seed);
    if (!c.isomorphic || !c.witness)
        throw StructureError("the representation is not equivalent to its twist by the "
                             "given subgroup power");
    if (!c.escalated) return normalize_isomorphism(x, s, d, *c.witness);
    FieldEmbedding emb(x.field(), c.field);
    return normalize_isomorphism(x.lift(emb), s, d, *c.witness);
}

SmashModule induce_canonical(const Representation& x, const QuiverAutomorphism& s, u64 seed) {
    return induce_canonical(x, s, minimal_period(x, s, seed), seed);
}

SmashModule character_twist(const SmashModule& m, int i) {
    int k = m.cyclic_order();
    int r = ((i % k) + k) % k;
    if (r == 0) return m;
    int need = m.field().extension_factor_for_order(k);
    if (need > 1) {
        FieldEmbedding emb(m.field(), extended_field(m.field(), need));
        return character_twist(m.lift(emb), i);
    }
    FieldElement zeta = std::get<FieldElement>(m.field().primitive_root_of_unity(k));
    FieldElement scale = m.field().pow(zeta, static_cast<u64>(r));
    std::map<std::string, Matrix> action;
    for (const auto& [v, b] : m.action()) action.emplace(v, b.scalar_mul(scale));
    return SmashModule(m.rep(), m.sigma(), std::move(action), m.subgroup_power());
}

namespace {

// Components twist(x, s, j*step) for j in [0, count); the action shifts
// component j of the source into component j+1 and sends the last one
// through wrap_v : X_{sigma^{-step*count}(v)} -> X_v.
SmashModule cyclic_induction(const Representation& x, const QuiverAutomorphism& s, int step,
                             int count, const std::map<std::string, Matrix>& wrap, int d_out) {
    std::vector<Representation> comps;
    comps.reserve(static_cast<size_t>(count));
    for (int j = 0; j < count; ++j) comps.push_back(twist(x, s, j * step));
    Representation sum = direct_sum(comps);
    const Fq& f = x.field();
    auto offset = [&](const std::string& v, int j) {
        int off = 0;
        for (int i = 0; i < j; ++i) off += x.dim(s.vertex(v, -i * step));
        return off;
    };
    std::map<std::string, Matrix> action;
    for (const auto& v : x.quiver().vertices()) {
        std::string u = s.vertex(v, -step);
        Matrix b(f, sum.dim(v), sum.dim(u));
        for (int j = 0; j + 1 < count; ++j) {
            int sz = x.dim(s.vertex(v, -(j + 1) * step));
            int r0 = offset(v, j + 1), c0 = offset(u, j);
            for (int t = 0; t < sz; ++t) b.set(r0 + t, c0 + t, f.one());
        }
        const Matrix& w = wrap.at(v);
        int c0 = offset(u, count - 1);
        for (int r = 0; r < w.rows(); ++r)
            for (int c = 0; c < w.cols(); ++c) b.set(r, c0 + c, w.at(r, c));
        action.emplace(v, std::move(b));
    }
    return SmashModule(std::move(sum), s, std::move(action), d_out);
}

} // namespace

SmashModule induce_from_subgroup(const SmashModule& m) {
    int d = m.subgroup_power();
    if (d == 1) return m;
    return cyclic_induction(m.rep(), m.sigma(), 1, d, m.action(), 1);
}

SmashModule induce_from_path_algebra(const Representation& x, const QuiverAutomorphism& s,
                                     int m) {
    int n = s.order();
    if (m < 1 || n % m != 0)
        throw StructureError("subgroup power must divide the automorphism order");
    int k = n / m;
    std::map<std::string, Matrix> wrap;
    for (const auto& v : x.quiver().vertices())
        wrap.emplace(v, Matrix::identity(x.field(), x.dim(v)));
    return cyclic_induction(x, s, m, k, wrap, m);
}

std::vector<SmashModule> classify_induced(const Representation& x, const QuiverAutomorphism& s,
                                          u64 seed) {
    SmashModule m0 = induce_canonical(x, s, seed);
    int r = m0.cyclic_order();
    if (r > 1) {
        int need = m0.field().extension_factor_for_order(r);
        if (need > 1) m0 = m0.lift(FieldEmbedding(m0.field(), extended_field(m0.field(), need)));
    }
    std::vector<SmashModule> out;
    out.reserve(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i) out.push_back(induce_from_subgroup(character_twist(m0, i)));
    return out;
}

std::vector<InducedTag> identify(const SmashModule& m, u64 seed) {
    if (m.subgroup_power() != 1)
        throw StructureError("identification works over the full skew group algebra");
    std::vector<InducedTag> out;
    for (const SmashModule& part : decompose_smash(m, seed)) {
        auto bases = decompose(part.rep(), seed);
        if (bases.empty()) continue;
        const Representation& base = bases.front();
        auto candidates = classify_induced(base, m.sigma(), seed);
        int period = m.sigma().order() / static_cast<int>(candidates.size());
        bool matched = false;
        for (size_t i = 0; i < candidates.size(); ++i) {
            SmashModule lhs = part;
            if (lhs.field() != candidates[i].field())
                lhs = lhs.lift(FieldEmbedding(lhs.field(), candidates[i].field()));
            if (is_isomorphic_smash(lhs, candidates[i], seed).isomorphic) {
                out.push_back(InducedTag{part, base, period, static_cast<int>(i) + 1});
                matched = true;
                break;
            }
        }
        if (!matched)
            throw StructureError("summand does not match any induced module over its orbit");
    }
    return out;
}

namespace {

int orbit_size(const QuiverAutomorphism& s, const std::string& v) {
    int m = 1;
    std::string w = s.vertex(v);
    while (w != v) {
        w = s.vertex(w);
        ++m;
    }
    return m;
}

FieldElement wrap_scalar(const Fq& field, const QuiverAutomorphism& s, int m, int l) {
    int n = s.order();
    int r = n / m;
    if (l < 0 || l >= r) throw StructureError("character index out of range");
    if ((m * l) % n == 0) return field.one();
    auto xi = field.primitive_root_of_unity(n);
    if (!std::holds_alternative<FieldElement>(xi))
        throw FieldError("field has no element of multiplicative order " + std::to_string(n));
    return field.pow(std::get<FieldElement>(xi), static_cast<u64>(m * l));
}

using Path = std::vector<std::string>;

Path apply_to_path(const QuiverAutomorphism& s, const Path& p, int j) {
    Path out;
    out.reserve(p.size());
    for (const auto& a : p) out.push_back(s.arrow(a, j));
    return out;
}

// wrap blocks permuting a path basis by sigma^m and scaling by lambda
std::map<std::string, Matrix> path_wrap(
    const Quiver& q, const Fq& field, const QuiverAutomorphism& s, int m,
    const FieldElement& lambda,
    const std::map<std::string, std::vector<Path>>& basis) {
    std::map<std::string, std::map<Path, int>> index;
    for (const auto& [v, paths] : basis)
        for (size_t i = 0; i < paths.size(); ++i) index[v][paths[i]] = static_cast<int>(i);
    std::map<std::string, Matrix> wrap;
    for (const auto& v : q.vertices()) {
        const auto& src = basis.at(s.vertex(v, -m));
        Matrix b(field, static_cast<int>(basis.at(v).size()), static_cast<int>(src.size()));
        for (size_t c = 0; c < src.size(); ++c)
            b.set(index.at(v).at(apply_to_path(s, src[c], m)), static_cast<int>(c), lambda);
        wrap.emplace(v, std::move(b));
    }
    return wrap;
}

std::map<std::string, std::vector<Path>> group_paths(
    const Quiver& q, const std::vector<std::pair<Path, std::string>>& all) {
    std::map<std::string, std::vector<Path>> basis;
    for (const auto& v : q.vertices()) basis[v];
    for (const auto& [path, v] : all) basis[v].push_back(path);
    return basis;
}

} // namespace

SmashModule simple_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                         const QuiverAutomorphism& s, const std::string& v, int l) {
    if (!q->has_vertex(v)) throw StructureError("unknown vertex: " + v);
    int m = orbit_size(s, v);
    FieldElement lambda = wrap_scalar(field, s, m, l);
    Representation base = simple_rep(q, field, v);
    std::map<std::string, Matrix> wrap;
    for (const auto& w : q->vertices())
        wrap.emplace(w, Matrix::identity(field, base.dim(w)).scalar_mul(lambda));
    return induce_from_subgroup(SmashModule(std::move(base), s, std::move(wrap), m));
}

SmashModule projective_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                             const QuiverAutomorphism& s, const std::string& v, int l) {
    if (!q->has_vertex(v)) throw StructureError("unknown vertex: " + v);
    int m = orbit_size(s, v);
    FieldElement lambda = wrap_scalar(field, s, m, l);
    Representation base = projective_rep(q, field, v);
    auto basis = group_paths(*q, paths_from_vertex(*q, v));
    auto wrap = path_wrap(*q, field, s, m, lambda, basis);
    return induce_from_subgroup(SmashModule(std::move(base), s, std::move(wrap), m));
}

SmashModule injective_smash(std::shared_ptr<const Quiver> q, const Fq& field,
                            const QuiverAutomorphism& s, const std::string& v, int l) {
    if (!q->has_vertex(v)) throw StructureError("unknown vertex: " + v);
    int m = orbit_size(s, v);
    FieldElement lambda = wrap_scalar(field, s, m, l);
    Representation base = injective_rep(q, field, v);
    auto basis = group_paths(*q, paths_into_vertex(*q, v));
    auto wrap = path_wrap(*q, field, s, m, lambda, basis);
    return induce_from_subgroup(SmashModule(std::move(base), s, std::move(wrap), m));
}

SmashKind classify_kind(const SmashModule& m, u64 seed) {
    if (m.subgroup_power() != 1)
        throw StructureError("catalog matching works over the full skew group algebra");
    if (decompose_smash(m, seed).size() != 1)
        throw StructureError("catalog matching needs an indecomposable module");
    const Quiver& q = m.rep().quiver();
    const QuiverAutomorphism& s = m.sigma();
    auto parts = decompose(m.rep(), seed);
    // the underlying representation of an indecomposable module is a single
    // twist orbit, so a catalog match must hit every vertex of one
    // sigma-orbit exactly once
    auto orbit_rep = [&](auto&& make) -> std::string {
        std::vector<std::string> hits;
        for (const auto& part : parts) {
            bool matched = false;
            for (const auto& v : q.vertices()) {
                if (is_isomorphic(part, make(v), seed).isomorphic) {
                    hits.push_back(v);
                    matched = true;
                    break;
                }
            }
            if (!matched) return "";
        }
        std::set<std::string> distinct(hits.begin(), hits.end());
        if (distinct.size() != hits.size()) return "";
        std::set<std::string> orbit;
        std::string w = hits.front();
        do {
            orbit.insert(w);
            w = s.vertex(w);
        } while (w != hits.front());
        if (orbit != distinct) return "";
        for (const auto& v : q.vertices())
            if (orbit.count(v)) return v;
        return "";
    };
    auto qp = m.rep().quiver_ptr();
    const Fq& f = m.field();
    SmashKind out;
    std::string hit = orbit_rep([&](const std::string& v) { return simple_rep(qp, f, v); });
    if (!hit.empty()) {
        out.simple = true;
        out.vertex = hit;
    }
    hit = orbit_rep([&](const std::string& v) { return projective_rep(qp, f, v); });
    if (!hit.empty()) {
        out.projective = true;
        if (out.vertex.empty()) out.vertex = hit;
    }
    hit = orbit_rep([&](const std::string& v) { return injective_rep(qp, f, v); });
    if (!hit.empty()) {
        out.injective = true;
        if (out.vertex.empty()) out.vertex = hit;
    }
    return out;
}

bool iso_multiset_equal_smash(std::vector<SmashModule> a, std::vector<SmashModule> b, u64 seed) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool matched = false;
        for (size_t i = 0; i < b.size(); ++i) {
            if (used[i]) continue;
            if (is_isomorphic_smash(x, b[i], seed).isomorphic) {
                used[i] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

std::string canonical_key_smash(const SmashModule& m) {
    std::ostringstream os;
    os << canonical_key(m.rep()) << '#';
    for (const auto& [v, b] : m.action()) {
        (void)v;
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
                os << m.field().canonical_index(b.at(i, j)) << ',';
        os << ';';
    }
    os << '@' << m.subgroup_power();
    return os.str();
}

} // namespace skewrep
