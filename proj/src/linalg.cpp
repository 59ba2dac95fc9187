#include "smalltl/linalg.hpp"

#include <sstream>
#include <utility>

#include "smalltl/errors.hpp"

namespace smalltl {

namespace {

const Cyc kZero{};

/// Row echelon reduction in place. Returns the pivot column of each pivot
/// row, in order. Rows below and above pivots are cleared and pivot rows are
/// scaled to 1, so the result is the reduced echelon form.
std::vector<int> rref(std::vector<CycVec>& m, int cols) {
    std::vector<int> pivots;
    int row = 0;
    const int rows = static_cast<int>(m.size());
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (!m[i][col].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[row], m[p]);
        Cyc inv = m[row][col].inverse();
        for (int j = col; j < static_cast<int>(m[row].size()); ++j)
            if (!m[row][j].is_zero()) m[row][j] = m[row][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Cyc f = m[i][col];
            for (int j = col; j < static_cast<int>(m[i].size()); ++j)
                if (!m[row][j].is_zero()) m[i][j] = m[i][j] - f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<CycVec> to_rows(const CycMatrix& a) {
    std::vector<CycVec> m(a.rows(), CycVec(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
    return m;
}

}  // namespace

CycMatrix::CycMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw IndexOutOfRange("negative matrix dimension");
    data_.resize(static_cast<size_t>(rows) * cols);
}

CycMatrix CycMatrix::identity(const CycField* F, int n) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Cyc(F, 1));
    return m;
}

CycMatrix CycMatrix::from_columns(const std::vector<CycVec>& columns) {
    if (columns.empty()) return CycMatrix(0, 0);
    const int rows = static_cast<int>(columns[0].size());
    CycMatrix m(rows, static_cast<int>(columns.size()));
    for (size_t j = 0; j < columns.size(); ++j) {
        if (static_cast<int>(columns[j].size()) != rows)
            throw ShapeMismatch("from_columns: ragged column sizes");
        for (int i = 0; i < rows; ++i)
            if (!columns[j][i].is_zero()) m.set(i, static_cast<int>(j), columns[j][i]);
    }
    return m;
}

const Cyc& CycMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw IndexOutOfRange("matrix index out of range");
    return data_[static_cast<size_t>(i) * cols_ + j];
}

void CycMatrix::set(int i, int j, Cyc v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw IndexOutOfRange("matrix index out of range");
    data_[static_cast<size_t>(i) * cols_ + j] = std::move(v);
}

bool CycMatrix::is_zero() const {
    for (const Cyc& c : data_)
        if (!c.is_zero()) return false;
    return true;
}

CycMatrix CycMatrix::operator-() const {
    CycMatrix m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        if (!data_[k].is_zero()) m.data_[k] = -data_[k];
    return m;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeMismatch("matrix addition shape mismatch");
    CycMatrix m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
    return m;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeMismatch("matrix subtraction shape mismatch");
    CycMatrix m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
    CycMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Cyc& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Cyc& b = o.at(k, j);
                if (b.is_zero()) continue;
                m.data_[static_cast<size_t>(i) * o.cols_ + j] += a * b;
            }
        }
    }
    return m;
}

CycMatrix CycMatrix::operator*(const Cyc& s) const {
    CycMatrix m(rows_, cols_);
    if (s.is_zero()) return m;
    for (size_t k = 0; k < data_.size(); ++k)
        if (!data_[k].is_zero()) m.data_[k] = data_[k] * s;
    return m;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < data_.size(); ++k)
        if (!(data_[k] == o.data_[k])) return false;
    return true;
}

CycMatrix CycMatrix::transposed() const {
    CycMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) m.set(j, i, at(i, j));
    return m;
}

CycMatrix CycMatrix::kronecker(const CycMatrix& o) const {
    CycMatrix m(rows_ * o.rows_, cols_ * o.cols_);
    for (int i1 = 0; i1 < rows_; ++i1)
        for (int j1 = 0; j1 < cols_; ++j1) {
            const Cyc& a = at(i1, j1);
            if (a.is_zero()) continue;
            for (int i2 = 0; i2 < o.rows_; ++i2)
                for (int j2 = 0; j2 < o.cols_; ++j2) {
                    const Cyc& b = o.at(i2, j2);
                    if (b.is_zero()) continue;
                    m.set(i1 * o.rows_ + i2, j1 * o.cols_ + j2, a * b);
                }
        }
    return m;
}

CycVec CycMatrix::apply(const CycVec& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw ShapeMismatch("matrix apply shape mismatch");
    CycVec y(rows_);
    for (int j = 0; j < cols_; ++j) {
        if (x[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            const Cyc& a = at(i, j);
            if (!a.is_zero()) y[i] += a * x[j];
        }
    }
    return y;
}

CycVec CycMatrix::column(int j) const {
    CycVec y(rows_);
    for (int i = 0; i < rows_; ++i) y[i] = at(i, j);
    return y;
}

std::string CycMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    }
    os << "]";
    return os.str();
}

long rank(const CycMatrix& a) {
    auto m = to_rows(a);
    return static_cast<long>(rref(m, a.cols()).size());
}

std::vector<CycVec> nullspace(const CycMatrix& a, const CycField* F) {
    auto m = to_rows(a);
    auto pivots = rref(m, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<CycVec> basis;
    for (int j = 0; j < a.cols(); ++j) {
        if (is_pivot[j]) continue;
        CycVec v(a.cols());
        v[j] = Cyc(F, 1);
        for (size_t i = 0; i < pivots.size(); ++i)
            if (!m[i][j].is_zero()) v[pivots[i]] = -m[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<CycMatrix> try_solve(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve shape mismatch");
    std::vector<CycVec> m(a.rows(), CycVec(a.cols() + b.cols()));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m[i][a.cols() + j] = b.at(i, j);
    }
    auto pivots = rref(m, a.cols());
    for (size_t i = pivots.size(); i < m.size(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!m[i][a.cols() + j].is_zero()) return std::nullopt;
    CycMatrix x(a.cols(), b.cols());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!m[i][a.cols() + j].is_zero()) x.set(pivots[i], j, m[i][a.cols() + j]);
    return x;
}

CycMatrix solve(const CycMatrix& a, const CycMatrix& b) {
    auto x = try_solve(a, b);
    if (!x) throw SolverFailure("linear system has no solution");
    return *x;
}

CycMatrix inverse(const CycMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("inverse of non-square matrix");
    bool diagonal = true;
    for (int i = 0; i < a.rows() && diagonal; ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j && !a.at(i, j).is_zero()) {
                diagonal = false;
                break;
            }
    if (diagonal) {
        CycMatrix m(a.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i) {
            if (a.at(i, i).is_zero()) throw SolverFailure("singular matrix");
            m.set(i, i, a.at(i, i).inverse());
        }
        return m;
    }
    const CycField* F = nullptr;
    for (int i = 0; i < a.rows() && !F; ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero()) {
                F = a.at(i, j).field();
                break;
            }
    if (!F) throw SolverFailure("singular matrix");
    auto x = try_solve(a, CycMatrix::identity(F, a.rows()));
    if (!x || !(a * *x == CycMatrix::identity(F, a.rows())))
        throw SolverFailure("singular matrix");
    return *x;
}

SparseMat SparseMat::identity(const CycField* F, int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.cols_data_[i].emplace(i, Cyc(F, 1));
    return m;
}

SparseMat SparseMat::from_dense(const CycMatrix& m) {
    SparseMat s(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (!m.at(i, j).is_zero()) s.cols_data_[j].emplace(i, m.at(i, j));
    return s;
}

CycMatrix SparseMat::to_dense() const {
    CycMatrix m(rows_, cols_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : cols_data_[j]) m.set(i, j, v);
    return m;
}

long SparseMat::nnz() const {
    long n = 0;
    for (const auto& col : cols_data_) n += static_cast<long>(col.size());
    return n;
}

void SparseMat::add_at(int i, int j, const Cyc& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw IndexOutOfRange("sparse matrix index out of range");
    if (v.is_zero()) return;
    auto& col = cols_data_[j];
    auto it = col.find(i);
    if (it == col.end()) {
        col.emplace(i, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) col.erase(it);
    }
}

SparseMat SparseMat::operator-() const {
    SparseMat m(rows_, cols_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : cols_data_[j]) m.cols_data_[j].emplace(i, -v);
    return m;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeMismatch("sparse addition shape mismatch");
    SparseMat m = *this;
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : o.cols_data_[j]) m.add_at(i, j, v);
    return m;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeMismatch("sparse subtraction shape mismatch");
    SparseMat m = *this;
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : o.cols_data_[j]) m.add_at(i, j, -v);
    return m;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("sparse product shape mismatch");
    SparseMat m(rows_, o.cols_);
    for (int j = 0; j < o.cols_; ++j) {
        std::map<int, Cyc> acc;
        for (const auto& [k, v] : o.cols_data_[j])
            for (const auto& [i, w] : cols_data_[k]) {
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, w * v);
                else
                    it->second += w * v;
            }
        for (auto& [i, v] : acc)
            if (!v.is_zero()) m.cols_data_[j].emplace(i, std::move(v));
    }
    return m;
}

SparseMat SparseMat::operator*(const Cyc& s) const {
    SparseMat m(rows_, cols_);
    if (s.is_zero()) return m;
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : cols_data_[j]) {
            Cyc w = v * s;
            if (!w.is_zero()) m.cols_data_[j].emplace(i, std::move(w));
        }
    return m;
}

bool SparseMat::operator==(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int j = 0; j < cols_; ++j) {
        const auto& a = cols_data_[j];
        const auto& b = o.cols_data_[j];
        if (a.size() != b.size()) return false;
        auto ita = a.begin();
        auto itb = b.begin();
        for (; ita != a.end(); ++ita, ++itb)
            if (ita->first != itb->first || !(ita->second == itb->second)) return false;
    }
    return true;
}

SparseMat SparseMat::transposed() const {
    SparseMat m(cols_, rows_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : cols_data_[j]) m.cols_data_[i].emplace(j, v);
    return m;
}

SparseMat SparseMat::kronecker(const SparseMat& o) const {
    SparseMat m(rows_ * o.rows_, cols_ * o.cols_);
    for (int j1 = 0; j1 < cols_; ++j1)
        for (const auto& [i1, a] : cols_data_[j1])
            for (int j2 = 0; j2 < o.cols_; ++j2)
                for (const auto& [i2, b] : o.cols_data_[j2])
                    m.cols_data_[j1 * o.cols_ + j2].emplace(i1 * o.rows_ + i2, a * b);
    return m;
}

CycVec SparseMat::apply(const CycVec& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw ShapeMismatch("sparse apply shape mismatch");
    CycVec y(rows_);
    for (int j = 0; j < cols_; ++j) {
        if (x[j].is_zero()) continue;
        for (const auto& [i, v] : cols_data_[j]) y[i] += v * x[j];
    }
    return y;
}

}  // namespace smalltl
