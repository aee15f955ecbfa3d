#pragma once

#include <optional>
#include <vector>

#include "skewrep/field.hpp"
#include "skewrep/polynomial.hpp"

namespace skewrep {

// Dense matrix over F_{p^e}.  Entries live in one flat array with stride e,
// row-major; all arithmetic is exact.  Zero-row and zero-column matrices are
// first-class citizens (products and ranks behave as the shapes dictate).
class Matrix {
public:
    Matrix(Fq field, int rows, int cols); // zero-filled

    static Matrix identity(const Fq& f, int n);
    static Matrix from_rows(const Fq& f, const std::vector<std::vector<FieldElement>>& rows);
    static Matrix from_ints(const Fq& f, const std::vector<std::vector<i64>>& rows);
    static Matrix column(const Fq& f, const std::vector<FieldElement>& entries);

    const Fq& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    FieldElement at(int i, int j) const;
    void set(int i, int j, const FieldElement& a);

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix neg() const;
    Matrix mul(const Matrix& o) const;
    Matrix scalar_mul(const FieldElement& a) const;
    Matrix transpose() const;
    Matrix pow(u64 k) const;
    FieldElement trace() const;

    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    static Matrix block_diag(const Fq& f, const std::vector<Matrix>& blocks);

    struct Rref; // defined after the class; holds the reduced matrix
    Rref rref() const;
    int rank() const;

    // kernel as a list of column vectors, each normalized with a unit free
    // coordinate; deterministic given the entries
    std::vector<Matrix> kernel_basis() const;
    // columns of this matrix at the rref pivot positions; a basis of the
    // column space
    Matrix column_space_basis() const;

    // solve this * x = b (b may have several columns); free variables are
    // set to zero; nullopt when inconsistent
    std::optional<Matrix> solve(const Matrix& b) const;
    std::optional<Matrix> inverse() const;
    bool is_invertible() const;

    Poly min_poly() const;

    Matrix lift(const FieldEmbedding& emb) const;
    Matrix lift(const FieldTower& tower) const;

    // raw row-major storage, stride e per entry
    i64* entry_ptr(int i, int j);
    const i64* entry_ptr(int i, int j) const;

private:
    Fq f_;
    int rows_, cols_;
    std::vector<i64> a_;
};

struct Matrix::Rref {
    Matrix r;
    int rank;
    std::vector<int> pivots; // pivot column per pivot row
};

// Complementary projectors P_ker + P_im = I for g = f^dim: P_ker projects
// onto ker(g) along im(g), both commute with f.
struct FittingSplit {
    Matrix p_ker;
    Matrix p_im;
};
FittingSplit fitting_split(const Matrix& f);

// least common multiple of the minimal polynomials of square blocks
Poly min_poly_of_blocks(const std::vector<Matrix>& blocks, const Fq& field);

Matrix eval_poly_matrix(const Poly& g, const Matrix& a);

// rho = g(theta) with rho^n = theta, g a polynomial, computed over the
// smallest canonical extension that splits the minimal polynomial of theta
// and contains the needed scalar n-th roots.  The tower records how to lift
// companion data into rho's field.
struct MatrixNthRoot {
    FieldTower tower;
    Matrix rho;
    Poly g;
};
MatrixNthRoot commutant_nth_root(const Matrix& theta, i64 n);

} // namespace skewrep
