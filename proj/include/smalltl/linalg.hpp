#pragma once

/// Exact linear algebra over the cyclotomic field.
///
/// CycMatrix is a small dense matrix type used for module actions, solved
/// systems and rank computations. SparseMat is a column-major sparse type
/// for operators on tensor-power bases, where the ambient dimension grows
/// as 2^n but morphism images stay thin.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smalltl/scalars.hpp"

namespace smalltl {

using CycVec = std::vector<Cyc>;

/// Dense matrix of Cyc entries, row-major. Entries default to the field-less
/// zero, so freshly constructed matrices carry no field until written to.
class CycMatrix {
  public:
    CycMatrix() = default;
    CycMatrix(int rows, int cols);
    static CycMatrix identity(const CycField* F, int n);
    static CycMatrix zero(int rows, int cols) { return CycMatrix(rows, cols); }
    /// Matrix whose j-th column is columns[j]; all columns must share a size.
    static CycMatrix from_columns(const std::vector<CycVec>& columns);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Cyc& at(int i, int j) const;
    void set(int i, int j, Cyc v);

    bool is_zero() const;
    CycMatrix operator-() const;
    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator*(const Cyc& s) const;
    bool operator==(const CycMatrix& o) const;

    CycMatrix transposed() const;
    CycMatrix kronecker(const CycMatrix& o) const;
    CycVec apply(const CycVec& x) const;
    CycVec column(int j) const;

    std::string to_string() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Cyc> data_;
};

long rank(const CycMatrix& a);

/// Basis of the right kernel {x : Ax = 0}. F supplies the field for the
/// free-variable entries.
std::vector<CycVec> nullspace(const CycMatrix& a, const CycField* F);

/// Solve AX = B exactly; nullopt if inconsistent. Free variables are set
/// to zero, so the result is one particular solution.
std::optional<CycMatrix> try_solve(const CycMatrix& a, const CycMatrix& b);

/// As try_solve but throws SolverFailure when no solution exists.
CycMatrix solve(const CycMatrix& a, const CycMatrix& b);

/// Inverse of a square matrix; throws SolverFailure if singular.
CycMatrix inverse(const CycMatrix& a);

/// Sparse column-major matrix. Stored entries are always nonzero.
class SparseMat {
  public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(cols) {}
    static SparseMat identity(const CycField* F, int n);
    static SparseMat from_dense(const CycMatrix& m);
    CycMatrix to_dense() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long nnz() const;
    bool is_zero() const { return nnz() == 0; }
    const std::map<int, Cyc>& column(int j) const { return cols_data_[j]; }

    /// Accumulate v into entry (i, j), erasing it if the sum vanishes.
    void add_at(int i, int j, const Cyc& v);

    SparseMat operator-() const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    /// Composition this * o (apply o first).
    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator*(const Cyc& s) const;
    bool operator==(const SparseMat& o) const;

    SparseMat transposed() const;
    /// Kronecker product; row index i1 * o.rows + i2, i.e. the right factor
    /// varies fastest.
    SparseMat kronecker(const SparseMat& o) const;
    CycVec apply(const CycVec& x) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, Cyc>> cols_data_;
};

}  // namespace smalltl
