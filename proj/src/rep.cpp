#include "skewrep/rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace skewrep {

Representation::Representation(std::shared_ptr<const Quiver> quiver, Fq field,
                               std::map<std::string, int> dims,
                               std::map<std::string, Matrix> maps)
    : quiver_(std::move(quiver)), field_(std::move(field)),
      dims_(std::move(dims)), maps_(std::move(maps)) {
    if (!quiver_) throw StructureError("representation needs a quiver");
    for (const auto& v : quiver_->vertices()) {
        auto it = dims_.find(v);
        if (it == dims_.end()) throw StructureError("missing dimension for vertex " + v);
        if (it->second < 0) throw StructureError("negative dimension at vertex " + v);
    }
    if (dims_.size() != quiver_->vertices().size())
        throw StructureError("dimension table mentions unknown vertices");
    for (const auto& a : quiver_->arrows()) {
        auto it = maps_.find(a.name);
        if (it == maps_.end()) throw StructureError("missing matrix for arrow " + a.name);
        const Matrix& m = it->second;
        if (m.field() != field_)
            throw StructureError("matrix for arrow " + a.name + " is over the wrong field");
        if (m.rows() != dims_.at(a.to) || m.cols() != dims_.at(a.from))
            throw StructureError("matrix for arrow " + a.name + " has the wrong shape");
    }
    if (maps_.size() != quiver_->arrows().size())
        throw StructureError("matrix table mentions unknown arrows");
}

int Representation::dim(const std::string& v) const {
    auto it = dims_.find(v);
    if (it == dims_.end()) throw StructureError("unknown vertex: " + v);
    return it->second;
}

int Representation::total_dim() const {
    int t = 0;
    for (const auto& [v, d] : dims_) t += d;
    return t;
}

const Matrix& Representation::map(const std::string& arrow) const {
    auto it = maps_.find(arrow);
    if (it == maps_.end()) throw StructureError("unknown arrow: " + arrow);
    return it->second;
}

Representation Representation::lift(const FieldEmbedding& emb) const {
    std::map<std::string, Matrix> maps;
    for (const auto& [a, m] : maps_) maps.emplace(a, m.lift(emb));
    return Representation(quiver_, emb.to(), dims_, std::move(maps));
}

Representation Representation::lift(const FieldTower& tower) const {
    std::map<std::string, Matrix> maps;
    for (const auto& [a, m] : maps_) maps.emplace(a, m.lift(tower));
    return Representation(quiver_, tower.top(), dims_, std::move(maps));
}

bool Representation::operator==(const Representation& o) const {
    return *quiver_ == *o.quiver_ && field_ == o.field_ && dims_ == o.dims_ && maps_ == o.maps_;
}

const Matrix& RepMorphism::at(const std::string& v) const {
    auto it = blocks.find(v);
    if (it == blocks.end()) throw StructureError("morphism has no block at vertex " + v);
    return it->second;
}

bool is_morphism(const Representation& x, const Representation& y, const RepMorphism& t) {
    if (!(x.quiver() == y.quiver()) || x.field() != y.field()) return false;
    for (const auto& v : x.quiver().vertices()) {
        auto it = t.blocks.find(v);
        if (it == t.blocks.end()) return false;
        if (it->second.rows() != y.dim(v) || it->second.cols() != x.dim(v)) return false;
    }
    for (const auto& a : x.quiver().arrows()) {
        Matrix lhs = y.map(a.name).mul(t.at(a.from));
        Matrix rhs = t.at(a.to).mul(x.map(a.name));
        if (lhs != rhs) return false;
    }
    return true;
}

RepMorphism compose(const Representation& x, const Representation& y, const Representation& z,
                    const RepMorphism& f, const RepMorphism& g) {
    (void)y;
    RepMorphism r;
    for (const auto& v : x.quiver().vertices()) r.blocks.emplace(v, g.at(v).mul(f.at(v)));
    (void)z;
    return r;
}

RepMorphism identity_morphism(const Representation& x) {
    RepMorphism r;
    for (const auto& v : x.quiver().vertices())
        r.blocks.emplace(v, Matrix::identity(x.field(), x.dim(v)));
    return r;
}

RepMorphism zero_morphism(const Representation& x, const Representation& y) {
    RepMorphism r;
    for (const auto& v : x.quiver().vertices())
        r.blocks.emplace(v, Matrix(x.field(), y.dim(v), x.dim(v)));
    return r;
}

Representation twist(const Representation& x, const QuiverAutomorphism& s, int j) {
    std::map<std::string, int> dims;
    for (const auto& v : x.quiver().vertices()) dims[v] = x.dim(s.vertex(v, -j));
    std::map<std::string, Matrix> maps;
    for (const auto& a : x.quiver().arrows()) maps.emplace(a.name, x.map(s.arrow(a.name, -j)));
    return Representation(x.quiver_ptr(), x.field(), std::move(dims), std::move(maps));
}

RepMorphism twist_morphism(const RepMorphism& t, const QuiverAutomorphism& s, int j) {
    RepMorphism r;
    for (const auto& [v, m] : t.blocks) {
        (void)m;
        r.blocks.emplace(v, t.at(s.vertex(v, -j)));
    }
    return r;
}

std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y) {
    if (!(x.quiver() == y.quiver())) throw StructureError("hom requires a common quiver");
    if (x.field() != y.field()) throw StructureError("hom requires a common field");
    const Quiver& q = x.quiver();
    const Fq& f = x.field();

    std::map<std::string, int> offset;
    int unknowns = 0;
    for (const auto& v : q.vertices()) {
        int n = x.dim(v) * y.dim(v);
        if (n > 0) {
            offset[v] = unknowns;
            unknowns += n;
        }
    }
    int rows = 0;
    for (const auto& a : q.arrows()) rows += y.dim(a.to) * x.dim(a.from);

    Matrix sys(f, rows, unknowns);
    int r0 = 0;
    for (const auto& a : q.arrows()) {
        int dxs = x.dim(a.from), dxt = x.dim(a.to);
        int dys = y.dim(a.from), dyt = y.dim(a.to);
        if (dyt * dxs == 0) continue;
        const Matrix& ya = y.map(a.name); // dyt x dys
        const Matrix& xa = x.map(a.name); // dxt x dxs
        for (int r = 0; r < dyt; ++r) {
            for (int c = 0; c < dxs; ++c) {
                int row = r0 + r * dxs + c;
                // + Y_a[r,k] theta_s[k,c]
                if (dys > 0) {
                    int base = offset.at(a.from);
                    for (int k = 0; k < dys; ++k) {
                        FieldElement cur = sys.at(row, base + k * dxs + c);
                        sys.set(row, base + k * dxs + c, f.add(cur, ya.at(r, k)));
                    }
                }
                // - X_a[k,c] theta_t[r,k]
                if (dxt > 0 && dyt > 0) {
                    int base = offset.at(a.to);
                    for (int k = 0; k < dxt; ++k) {
                        FieldElement cur = sys.at(row, base + r * dxt + k);
                        sys.set(row, base + r * dxt + k, f.sub(cur, xa.at(k, c)));
                    }
                }
            }
        }
        r0 += dyt * dxs;
    }

    std::vector<RepMorphism> basis;
    for (const Matrix& vec : sys.kernel_basis()) {
        RepMorphism t;
        for (const auto& v : q.vertices()) {
            Matrix block(f, y.dim(v), x.dim(v));
            auto it = offset.find(v);
            if (it != offset.end()) {
                for (int r = 0; r < y.dim(v); ++r)
                    for (int c = 0; c < x.dim(v); ++c)
                        block.set(r, c, vec.at(it->second + r * x.dim(v) + c, 0));
            }
            t.blocks.emplace(v, std::move(block));
        }
        basis.push_back(std::move(t));
    }
    return basis;
}

namespace {

RepMorphism combine(const Representation& x, const Representation& y,
                    const std::vector<RepMorphism>& basis,
                    const std::vector<FieldElement>& coeffs) {
    const Fq& f = x.field();
    RepMorphism r = zero_morphism(x, y);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (f.is_zero(coeffs[i])) continue;
        for (auto& [v, block] : r.blocks)
            block = block.add(basis[i].at(v).scalar_mul(coeffs[i]));
    }
    return r;
}

bool blockwise_invertible(const RepMorphism& t) {
    for (const auto& [v, block] : t.blocks) {
        (void)v;
        if (!block.is_invertible()) return false;
    }
    return true;
}

std::optional<RepMorphism> find_witness(const Representation& x, const Representation& y,
                                        Rng& rng, int trials) {
    auto basis = hom_basis(x, y);
    if (basis.empty()) return std::nullopt;
    // deterministic pass: each basis element alone
    for (const auto& b : basis)
        if (blockwise_invertible(b)) return b;
    const Fq& f = x.field();
    for (int t = 0; t < trials; ++t) {
        std::vector<FieldElement> cs;
        cs.reserve(basis.size());
        for (size_t i = 0; i < basis.size(); ++i)
            cs.push_back(f.element_at(static_cast<i64>(rng.below(static_cast<u64>(f.q())))));
        RepMorphism cand = combine(x, y, basis, cs);
        if (blockwise_invertible(cand)) return cand;
    }
    return std::nullopt;
}

constexpr int kIsoTrials = 20;

} // namespace

IsoCheck is_isomorphic(const Representation& x, const Representation& y, u64 seed) {
    if (!(x.quiver() == y.quiver())) throw StructureError("isomorphism test requires a common quiver");
    if (x.field() != y.field()) throw StructureError("isomorphism test requires a common field");
    IsoCheck out{false, std::nullopt, x.field(), false};
    for (const auto& v : x.quiver().vertices())
        if (x.dim(v) != y.dim(v)) return out;
    if (x.total_dim() == 0) {
        out.isomorphic = true;
        out.witness = zero_morphism(x, y);
        return out;
    }
    Rng rng(seed);
    if (auto w = find_witness(x, y, rng, kIsoTrials)) {
        out.isomorphic = true;
        out.witness = std::move(w);
        return out;
    }
    if (hom_basis(x, y).empty()) return out;
    // escalate once to the quadratic extension
    FieldEmbedding emb(x.field(), extended_field(x.field(), 2));
    Representation xl = x.lift(emb), yl = y.lift(emb);
    Rng rng2 = rng.fork();
    if (auto w = find_witness(xl, yl, rng2, kIsoTrials)) {
        out.isomorphic = true;
        out.witness = std::move(w);
        out.field = emb.to();
        out.escalated = true;
        return out;
    }
    return out;
}

Representation direct_sum(const std::vector<Representation>& parts) {
    if (parts.empty()) throw StructureError("direct sum needs at least one summand");
    const Quiver& q = parts.front().quiver();
    const Fq& f = parts.front().field();
    for (const auto& p : parts) {
        if (!(p.quiver() == q)) throw StructureError("direct sum across different quivers");
        if (p.field() != f) throw StructureError("direct sum across different fields");
    }
    std::map<std::string, int> dims;
    for (const auto& v : q.vertices()) {
        int d = 0;
        for (const auto& p : parts) d += p.dim(v);
        dims[v] = d;
    }
    std::map<std::string, Matrix> maps;
    for (const auto& a : q.arrows()) {
        std::vector<Matrix> blocks;
        blocks.reserve(parts.size());
        for (const auto& p : parts) blocks.push_back(p.map(a.name));
        maps.emplace(a.name, Matrix::block_diag(f, blocks));
    }
    return Representation(parts.front().quiver_ptr(), f, std::move(dims), std::move(maps));
}

namespace {

// rank of the trace form on End(X); when p > dim X it equals dim End/rad,
// so rank one certifies a local endomorphism ring
int trace_form_rank(const Representation& x, const std::vector<RepMorphism>& endos) {
    const Fq& f = x.field();
    int s = static_cast<int>(endos.size());
    Matrix gram(f, s, s);
    for (int i = 0; i < s; ++i) {
        for (int j = i; j < s; ++j) {
            FieldElement t = f.zero();
            for (const auto& v : x.quiver().vertices()) {
                if (x.dim(v) == 0) continue;
                t = f.add(t, endos[static_cast<size_t>(i)].at(v).mul(endos[static_cast<size_t>(j)].at(v)).trace());
            }
            gram.set(i, j, t);
            gram.set(j, i, t);
        }
    }
    return gram.rank();
}

// restriction of X to the subrepresentation spanned by the columns of c_v
Representation restrict_to(const Representation& x, const std::map<std::string, Matrix>& c) {
    std::map<std::string, int> dims;
    for (const auto& [v, b] : c) dims[v] = b.cols();
    std::map<std::string, Matrix> maps;
    for (const auto& a : x.quiver().arrows()) {
        const Matrix& cs = c.at(a.from);
        const Matrix& ct = c.at(a.to);
        auto sol = ct.solve(x.map(a.name).mul(cs));
        if (!sol) throw StructureError("subspace is not arrow-invariant");
        maps.emplace(a.name, std::move(*sol));
    }
    return Representation(x.quiver_ptr(), x.field(), std::move(dims), std::move(maps));
}

std::optional<std::pair<Representation, Representation>>
split_along(const Representation& x, const RepMorphism& h) {
    std::map<std::string, Matrix> im_basis, ker_basis;
    int im_total = 0;
    for (const auto& v : x.quiver().vertices()) {
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
    return std::make_pair(restrict_to(x, im_basis), restrict_to(x, ker_basis));
}

RepMorphism poly_of_endo(const Representation& x, const RepMorphism& f, const Poly& g) {
    RepMorphism r;
    for (const auto& v : x.quiver().vertices()) r.blocks.emplace(v, eval_poly_matrix(g, f.at(v)));
    return r;
}

constexpr int kSplitTrials = 20;

} // namespace

std::vector<Representation> decompose(const Representation& x, u64 seed) {
    Rng top(seed);
    std::vector<Representation> parts;
    std::vector<std::pair<Representation, Rng>> stack;
    stack.emplace_back(x, top.fork());
    while (!stack.empty()) {
        auto [cur, rng] = std::move(stack.back());
        stack.pop_back();
        int total = cur.total_dim();
        if (total == 0) continue;
        auto endos = hom_basis(cur, cur);
        if (endos.size() == 1) {
            parts.push_back(std::move(cur));
            continue;
        }
        if (cur.field().p() > total && trace_form_rank(cur, endos) == 1) {
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
            RepMorphism fe = combine(cur, cur, endos, cs);
            std::vector<Matrix> blocks;
            for (const auto& v : cur.quiver().vertices())
                if (cur.dim(v) > 0) blocks.push_back(fe.at(v));
            Poly mu = min_poly_of_blocks(blocks, f);
            auto facs = factor(mu);
            if (facs.size() < 2) continue;
            // distinct factors give complementary generalized eigenspaces
            RepMorphism h = poly_of_endo(cur, fe, facs.front().factor);
            if (auto sub = split_along(cur, h)) {
                stack.emplace_back(std::move(sub->first), rng.fork());
                stack.emplace_back(std::move(sub->second), rng.fork());
                split_done = true;
            }
        }
        if (!split_done) parts.push_back(std::move(cur));
    }
    std::sort(parts.begin(), parts.end(), [](const Representation& a, const Representation& b) {
        if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
        return canonical_key(a) < canonical_key(b);
    });
    return parts;
}

int minimal_period(const Representation& x, const QuiverAutomorphism& s, u64 seed) {
    int n = s.order();
    for (int m = 1; m < n; ++m)
        if (is_isomorphic(twist(x, s, m), x, seed).isomorphic) return m;
    return n;
}

Representation orbit_module(const Representation& x, const QuiverAutomorphism& s, u64 seed) {
    if (decompose(x, seed).size() != 1)
        throw StructureError("orbit module requires an indecomposable representation");
    int m = minimal_period(x, s, seed);
    std::vector<Representation> parts;
    parts.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) parts.push_back(twist(x, s, j));
    return direct_sum(parts);
}

bool is_sigma_equivalent(const Representation& x, const QuiverAutomorphism& s, u64 seed) {
    return is_isomorphic(twist(x, s, 1), x, seed).isomorphic;
}

Representation simple_rep(std::shared_ptr<const Quiver> q, const Fq& field, const std::string& v) {
    if (!q->has_vertex(v)) throw StructureError("unknown vertex: " + v);
    std::map<std::string, int> dims;
    for (const auto& w : q->vertices()) dims[w] = w == v ? 1 : 0;
    std::map<std::string, Matrix> maps;
    for (const auto& a : q->arrows())
        maps.emplace(a.name, Matrix(field, dims.at(a.to), dims.at(a.from)));
    return Representation(std::move(q), field, std::move(dims), std::move(maps));
}

using Path = std::vector<std::string>;

std::vector<std::pair<Path, std::string>> paths_from_vertex(const Quiver& q, const std::string& v) {
    std::vector<std::pair<Path, std::string>> all, level;
    level.emplace_back(Path{}, v);
    while (!level.empty()) {
        std::sort(level.begin(), level.end());
        all.insert(all.end(), level.begin(), level.end());
        std::vector<std::pair<Path, std::string>> next;
        for (const auto& [path, end] : level) {
            for (const auto& a : q.arrows()) {
                if (a.from != end) continue;
                Path p = path;
                p.push_back(a.name);
                next.emplace_back(std::move(p), a.to);
            }
        }
        level = std::move(next);
    }
    return all;
}

std::vector<std::pair<Path, std::string>> paths_into_vertex(const Quiver& q, const std::string& v) {
    std::vector<std::pair<Path, std::string>> all, level;
    level.emplace_back(Path{}, v);
    while (!level.empty()) {
        std::sort(level.begin(), level.end());
        all.insert(all.end(), level.begin(), level.end());
        std::vector<std::pair<Path, std::string>> next;
        for (const auto& [path, start] : level) {
            for (const auto& a : q.arrows()) {
                if (a.to != start) continue;
                Path p{a.name};
                p.insert(p.end(), path.begin(), path.end());
                next.emplace_back(std::move(p), a.from);
            }
        }
        level = std::move(next);
    }
    return all;
}

Representation projective_rep(std::shared_ptr<const Quiver> q, const Fq& field, const std::string& v) {
    if (!q->has_vertex(v)) throw StructureError("unknown vertex: " + v);
    auto all = paths_from_vertex(*q, v);
    std::map<std::string, std::vector<Path>> basis;
    std::map<std::string, std::map<Path, int>> index;
    for (const auto& w : q->vertices()) basis[w];
    for (const auto& [path, end] : all) {
        index[end][path] = static_cast<int>(basis[end].size());
        basis[end].push_back(path);
    }
    std::map<std::string, int> dims;
    for (const auto& w : q->vertices()) dims[w] = static_cast<int>(basis[w].size());
    std::map<std::string, Matrix> maps;
    for (const auto& a : q->arrows()) {
        Matrix m(field, dims.at(a.to), dims.at(a.from));
        for (const auto& path : basis[a.from]) {
            Path ext = path;
            ext.push_back(a.name);
            m.set(index[a.to].at(ext), index[a.from].at(path), field.one());
        }
        maps.emplace(a.name, std::move(m));
    }
    return Representation(std::move(q), field, std::move(dims), std::move(maps));
}

Representation injective_rep(std::shared_ptr<const Quiver> q, const Fq& field, const std::string& v) {
    if (!q->has_vertex(v)) throw StructureError("unknown vertex: " + v);
    auto all = paths_into_vertex(*q, v);
    std::map<std::string, std::vector<Path>> basis;
    std::map<std::string, std::map<Path, int>> index;
    for (const auto& w : q->vertices()) basis[w];
    for (const auto& [path, start] : all) {
        index[start][path] = static_cast<int>(basis[start].size());
        basis[start].push_back(path);
    }
    std::map<std::string, int> dims;
    for (const auto& w : q->vertices()) dims[w] = static_cast<int>(basis[w].size());
    std::map<std::string, Matrix> maps;
    for (const auto& a : q->arrows()) {
        // strip a leading traversal of `a`: paths starting with it map to
        // their tail, everything else to zero
        Matrix m(field, dims.at(a.to), dims.at(a.from));
        for (const auto& path : basis[a.from]) {
            if (path.empty() || path.front() != a.name) continue;
            Path tail(path.begin() + 1, path.end());
            m.set(index[a.to].at(tail), index[a.from].at(path), field.one());
        }
        maps.emplace(a.name, std::move(m));
    }
    return Representation(std::move(q), field, std::move(dims), std::move(maps));
}

Representation conjugate(const Representation& x, const std::map<std::string, Matrix>& g) {
    std::map<std::string, Matrix> ginv;
    for (const auto& v : x.quiver().vertices()) {
        auto it = g.find(v);
        if (it == g.end()) throw StructureError("basis change misses vertex " + v);
        if (it->second.rows() != x.dim(v) || it->second.cols() != x.dim(v))
            throw StructureError("basis change block has the wrong shape at " + v);
        auto inv = it->second.inverse();
        if (!inv) throw StructureError("basis change block is singular at " + v);
        ginv.emplace(v, std::move(*inv));
    }
    std::map<std::string, Matrix> maps;
    for (const auto& a : x.quiver().arrows())
        maps.emplace(a.name, g.at(a.to).mul(x.map(a.name)).mul(ginv.at(a.from)));
    return Representation(x.quiver_ptr(), x.field(), x.dims(), std::move(maps));
}

bool iso_multiset_equal(std::vector<Representation> a, std::vector<Representation> b, u64 seed) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool matched = false;
        for (size_t i = 0; i < b.size(); ++i) {
            if (used[i]) continue;
            if (is_isomorphic(x, b[i], seed).isomorphic) {
                used[i] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

std::string canonical_key(const Representation& x) {
    std::ostringstream os;
    for (const auto& v : x.quiver().vertices()) os << x.dim(v) << ',';
    os << '|';
    for (const auto& a : x.quiver().arrows()) {
        const Matrix& m = x.map(a.name);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                os << x.field().canonical_index(m.at(i, j)) << ',';
        os << ';';
    }
    return os.str();
}

} // namespace skewrep
