#include "skewrep/matrix.hpp"

#include <algorithm>

namespace skewrep {

Matrix::Matrix(Fq field, int rows, int cols)
    : f_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols * f_.e(), 0) {
    if (rows < 0 || cols < 0) throw FieldError("negative matrix dimension");
}

Matrix Matrix::identity(const Fq& f, int n) {
    Matrix m(f, n, n);
    FieldElement one = f.one();
    for (int i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

Matrix Matrix::from_rows(const Fq& f, const std::vector<std::vector<FieldElement>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw FieldError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

Matrix Matrix::from_ints(const Fq& f, const std::vector<std::vector<i64>>& rows) {
    std::vector<std::vector<FieldElement>> fe;
    fe.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<FieldElement> r;
        r.reserve(row.size());
        for (i64 v : row) r.push_back(f.from_int(v));
        fe.push_back(std::move(r));
    }
    return from_rows(f, fe);
}

Matrix Matrix::column(const Fq& f, const std::vector<FieldElement>& entries) {
    Matrix m(f, static_cast<int>(entries.size()), 1);
    for (size_t i = 0; i < entries.size(); ++i) m.set(static_cast<int>(i), 0, entries[i]);
    return m;
}

i64* Matrix::entry_ptr(int i, int j) {
    return a_.data() + (static_cast<size_t>(i) * cols_ + j) * f_.e();
}

const i64* Matrix::entry_ptr(int i, int j) const {
    return a_.data() + (static_cast<size_t>(i) * cols_ + j) * f_.e();
}

FieldElement Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw FieldError("matrix index out of range");
    const i64* p = entry_ptr(i, j);
    return FieldElement{std::vector<i64>(p, p + f_.e())};
}

void Matrix::set(int i, int j, const FieldElement& a) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw FieldError("matrix index out of range");
    if (static_cast<int>(a.coeffs.size()) != f_.e())
        throw FieldError("entry does not belong to the matrix field");
    std::copy(a.coeffs.begin(), a.coeffs.end(), entry_ptr(i, j));
}

bool Matrix::operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](i64 v) { return v == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(f_, rows_);
}

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldError("matrices over different fields");
}

} // namespace

Matrix Matrix::add(const Matrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw FieldError("shape mismatch in add");
    Matrix r(f_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            f_.add_in(r.entry_ptr(i, j), entry_ptr(i, j), o.entry_ptr(i, j));
    return r;
}

Matrix Matrix::sub(const Matrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw FieldError("shape mismatch in sub");
    Matrix r(f_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            f_.sub_in(r.entry_ptr(i, j), entry_ptr(i, j), o.entry_ptr(i, j));
    return r;
}

Matrix Matrix::neg() const {
    Matrix r(f_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) f_.neg_in(r.entry_ptr(i, j), entry_ptr(i, j));
    return r;
}

Matrix Matrix::mul(const Matrix& o) const {
    check_same_field(*this, o);
    if (cols_ != o.rows_) throw FieldError("shape mismatch in mul");
    Matrix r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const i64* aik = entry_ptr(i, k);
            if (f_.is_zero_raw(aik)) continue;
            for (int j = 0; j < o.cols_; ++j)
                f_.mul_add_in(r.entry_ptr(i, j), aik, o.entry_ptr(k, j));
        }
    }
    return r;
}

Matrix Matrix::scalar_mul(const FieldElement& a) const {
    Matrix r(f_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            f_.mul_in(r.entry_ptr(i, j), entry_ptr(i, j), a.coeffs.data());
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            std::copy(entry_ptr(i, j), entry_ptr(i, j) + f_.e(), r.entry_ptr(j, i));
    return r;
}

Matrix Matrix::pow(u64 k) const {
    if (rows_ != cols_) throw FieldError("pow requires a square matrix");
    Matrix r = identity(f_, rows_);
    Matrix b = *this;
    while (k) {
        if (k & 1) r = r.mul(b);
        b = b.mul(b);
        k >>= 1;
    }
    return r;
}

FieldElement Matrix::trace() const {
    if (rows_ != cols_) throw FieldError("trace requires a square matrix");
    FieldElement t = f_.zero();
    for (int i = 0; i < rows_; ++i) t = f_.add(t, at(i, i));
    return t;
}

Matrix Matrix::hstack(const Matrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_) throw FieldError("hstack row mismatch");
    Matrix r(f_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            std::copy(entry_ptr(i, j), entry_ptr(i, j) + f_.e(), r.entry_ptr(i, j));
        for (int j = 0; j < o.cols_; ++j)
            std::copy(o.entry_ptr(i, j), o.entry_ptr(i, j) + f_.e(), r.entry_ptr(i, cols_ + j));
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    check_same_field(*this, o);
    if (cols_ != o.cols_) throw FieldError("vstack column mismatch");
    Matrix r(f_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            std::copy(entry_ptr(i, j), entry_ptr(i, j) + f_.e(), r.entry_ptr(i, j));
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            std::copy(o.entry_ptr(i, j), o.entry_ptr(i, j) + f_.e(), r.entry_ptr(rows_ + i, j));
    return r;
}

Matrix Matrix::block_diag(const Fq& f, const std::vector<Matrix>& blocks) {
    int r = 0, c = 0;
    for (const auto& b : blocks) {
        if (b.field() != f) throw FieldError("block over a different field");
        r += b.rows();
        c += b.cols();
    }
    Matrix m(f, r, c);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
                std::copy(b.entry_ptr(i, j), b.entry_ptr(i, j) + f.e(), m.entry_ptr(ro + i, co + j));
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

Matrix::Rref Matrix::rref() const {
    Matrix r = *this;
    const int e = f_.e();
    std::vector<i64> tmp(static_cast<size_t>(e));
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pr = -1;
        for (int i = row; i < rows_; ++i) {
            if (!f_.is_zero_raw(r.entry_ptr(i, col))) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != row) {
            for (int j = 0; j < cols_; ++j)
                std::swap_ranges(r.entry_ptr(row, j), r.entry_ptr(row, j) + e, r.entry_ptr(pr, j));
        }
        // scale pivot row to a unit pivot
        FieldElement inv = f_.inv(r.at(row, col));
        for (int j = col; j < cols_; ++j)
            f_.mul_in(r.entry_ptr(row, j), r.entry_ptr(row, j), inv.coeffs.data());
        // clear the column elsewhere
        for (int i = 0; i < rows_; ++i) {
            if (i == row) continue;
            const i64* factor = r.entry_ptr(i, col);
            if (f_.is_zero_raw(factor)) continue;
            std::vector<i64> fcopy(factor, factor + e);
            for (int j = col; j < cols_; ++j) {
                f_.mul_in(tmp.data(), fcopy.data(), r.entry_ptr(row, j));
                f_.sub_in(r.entry_ptr(i, j), r.entry_ptr(i, j), tmp.data());
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), row, std::move(pivots)};
}

int Matrix::rank() const { return rref().rank; }

std::vector<Matrix> Matrix::kernel_basis() const {
    Rref rr = rref();
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int c : rr.pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<Matrix> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        Matrix v(f_, cols_, 1);
        v.set(free, 0, f_.one());
        for (int prow = 0; prow < rr.rank; ++prow) {
            int pcol = rr.pivots[static_cast<size_t>(prow)];
            v.set(pcol, 0, f_.neg(rr.r.at(prow, free)));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix Matrix::column_space_basis() const {
    Rref rr = rref();
    Matrix b(f_, rows_, rr.rank);
    for (int k = 0; k < rr.rank; ++k) {
        int c = rr.pivots[static_cast<size_t>(k)];
        for (int i = 0; i < rows_; ++i) b.set(i, k, at(i, c));
    }
    return b;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    check_same_field(*this, b);
    if (b.rows() != rows_) throw FieldError("solve shape mismatch");
    Matrix aug = hstack(b);
    Rref rr = aug.rref();
    // any pivot inside the augmented block means inconsistency
    for (int c : rr.pivots)
        if (c >= cols_) return std::nullopt;
    Matrix x(f_, cols_, b.cols());
    for (int prow = 0; prow < rr.rank; ++prow) {
        int pcol = rr.pivots[static_cast<size_t>(prow)];
        for (int j = 0; j < b.cols(); ++j) x.set(pcol, j, rr.r.at(prow, cols_ + j));
    }
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    if (rank() != rows_) return std::nullopt;
    return solve(identity(f_, rows_));
}

bool Matrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

Poly Matrix::min_poly() const {
    if (rows_ != cols_) throw FieldError("minimal polynomial requires a square matrix");
    if (rows_ == 0) return Poly::one(f_);
    Poly mu = Poly::one(f_);
    for (int j = 0; j < rows_ && mu.degree() < rows_; ++j) {
        // annihilator of e_j: first linear dependence in the Krylov sequence
        Matrix v(f_, rows_, 1);
        v.set(j, 0, f_.one());
        Matrix krylov = v;
        Matrix cur = v;
        Poly ann(f_);
        for (int k = 1; k <= rows_; ++k) {
            cur = mul(cur);
            auto x = krylov.solve(cur);
            if (x) {
                std::vector<FieldElement> cs;
                for (int i = 0; i < k; ++i) cs.push_back(f_.neg(x->at(i, 0)));
                cs.push_back(f_.one());
                ann = Poly(f_, std::move(cs));
                break;
            }
            krylov = krylov.hstack(cur);
        }
        if (ann.is_zero()) throw FieldError("Krylov sequence did not terminate");
        Poly g = poly_gcd(mu, ann);
        mu = mu.mul(ann.divmod(g).first); // lcm
    }
    return mu.monic();
}

Matrix Matrix::lift(const FieldEmbedding& emb) const {
    if (emb.from() != f_) throw FieldError("embedding source mismatch");
    Matrix r(emb.to(), rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, emb.map(at(i, j)));
    return r;
}

Matrix Matrix::lift(const FieldTower& tower) const {
    Matrix r(tower.top(), rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, tower.map(at(i, j)));
    return r;
}

FittingSplit fitting_split(const Matrix& f) {
    if (f.rows() != f.cols()) throw FieldError("Fitting split requires a square matrix");
    const Fq& k = f.field();
    int n = f.rows();
    if (n == 0) return {Matrix(k, 0, 0), Matrix(k, 0, 0)};
    Matrix g = f.pow(static_cast<u64>(n));
    Matrix im = g.column_space_basis();
    std::vector<Matrix> ker = g.kernel_basis();
    Matrix m = im;
    for (const auto& v : ker) m = m.hstack(v);
    if (m.rows() != m.cols()) throw FieldError("Fitting basis is not square");
    auto minv = m.inverse();
    if (!minv) throw FieldError("Fitting basis is singular");
    // P_im = [im | ker] . diag(I, 0) . [im | ker]^{-1}
    Matrix top(k, im.cols(), n);
    for (int i = 0; i < im.cols(); ++i)
        for (int j = 0; j < n; ++j) top.set(i, j, minv->at(i, j));
    Matrix p_im = im.mul(top);
    Matrix p_ker = Matrix::identity(k, n).sub(p_im);
    return {p_ker, p_im};
}

Poly min_poly_of_blocks(const std::vector<Matrix>& blocks, const Fq& field) {
    Poly mu = Poly::one(field);
    for (const auto& b : blocks) {
        if (b.rows() == 0) continue;
        Poly m = b.min_poly();
        Poly g = poly_gcd(mu, m);
        mu = mu.mul(m.divmod(g).first);
    }
    return mu.monic();
}

Matrix eval_poly_matrix(const Poly& g, const Matrix& a) {
    if (a.rows() != a.cols()) throw FieldError("polynomial evaluation requires a square matrix");
    const Fq& f = a.field();
    Matrix acc(f, a.rows(), a.rows());
    for (int i = g.degree(); i >= 0; --i) {
        acc = acc.mul(a);
        acc = acc.add(Matrix::identity(f, a.rows()).scalar_mul(g.coeff(i)));
    }
    return acc;
}

MatrixNthRoot commutant_nth_root(const Matrix& theta, i64 n) {
    if (theta.rows() != theta.cols()) throw FieldError("n-th root requires a square matrix");
    if (n < 1) throw FieldError("root order must be positive");
    const Fq& base = theta.field();
    if (n % base.p() == 0) throw FieldError("characteristic divides the root order");

    FieldTower tower(base);
    Matrix th = theta;
    if (th.rows() == 0) return {tower, th, Poly::x(base)};
    if (!th.is_invertible()) throw FieldError("n-th root requires an invertible matrix");
    if (n == 1) return {tower, th, Poly::x(base)};

    for (int guard = 0; guard < 64; ++guard) {
        const Fq& k = tower.top();
        Poly mu = th.min_poly();
        auto facs = factor(mu);

        int ext = 0;
        for (const auto& fc : facs) {
            if (fc.factor.degree() >= 2) {
                ext = ext == 0 ? fc.factor.degree() : std::min(ext, fc.factor.degree());
            }
        }
        if (ext == 0) {
            // eigenvalues are in the field; make sure their scalar roots are too
            for (const auto& fc : facs) {
                FieldElement lam = k.neg(fc.factor.coeff(0));
                auto rr = k.nth_root(lam, n);
                if (auto* ne = std::get_if<NeedsExtension>(&rr)) {
                    ext = ne->degree;
                    break;
                }
            }
        }
        if (ext > 0) {
            Fq next = extended_field(k, ext);
            FieldEmbedding emb(k, next);
            th = th.lift(emb);
            tower.extend(ext);
            continue;
        }

        // Newton-lift the scalar root through each local ring k[t]/((t-lam)^m),
        // then CRT the locals into one polynomial g with g(th)^n = th
        std::vector<Poly> residues, moduli;
        for (const auto& fc : facs) {
            FieldElement lam = k.neg(fc.factor.coeff(0));
            FieldElement rho0 = std::get<FieldElement>(k.nth_root(lam, n));
            Poly m = fc.factor;
            for (int i = 1; i < fc.multiplicity; ++i) m = m.mul(fc.factor);
            Poly x = Poly::constant(k, rho0);
            Poly t = Poly::x(k).mod(m);
            FieldElement n_f = k.from_int(n);
            if (k.is_zero(n_f)) throw FieldError("characteristic divides the root order");
            for (int it = 0; it < 64; ++it) {
                Poly err = pow_mod(x, static_cast<u64>(n), m).sub(t);
                if (err.is_zero()) break;
                Poly deriv = pow_mod(x, static_cast<u64>(n - 1), m).scale(n_f);
                auto xg = poly_xgcd(deriv, m);
                if (xg.g.degree() != 0) throw FieldError("Newton derivative not invertible");
                Poly dinv = xg.u.scale(k.inv(xg.g.coeff(0)));
                x = x.sub(err.mul(dinv)).mod(m);
            }
            if (!pow_mod(x, static_cast<u64>(n), m).sub(t).is_zero())
                throw FieldError("Newton iteration did not converge");
            residues.push_back(x);
            moduli.push_back(m);
        }
        Poly g = poly_crt(residues, moduli);
        Matrix rho = eval_poly_matrix(g, th);
        if (rho.pow(static_cast<u64>(n)) != th)
            throw FieldError("n-th root verification failed");
        return {tower, rho, g};
    }
    throw FieldError("field escalation did not terminate");
}

} // namespace skewrep
