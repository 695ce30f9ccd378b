#ifndef FOLEX_LINALG_HPP
#define FOLEX_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "folex/polynomial.hpp"

namespace folex {

template <Field K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<K>>& rows, int cols) {
        Matrix m(static_cast<int>(rows.size()), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != cols) throw shape_error("ragged rows");
            for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const K& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<K> row(int i) const {
        return std::vector<K>(a_.begin() + static_cast<std::size_t>(i) * cols_,
                              a_.begin() + static_cast<std::size_t>(i + 1) * cols_);
    }

    void append_row(const std::vector<K>& r) {
        if (static_cast<int>(r.size()) != cols_) throw shape_error("row length mismatch");
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
    }

    std::vector<K> mul_vec(const std::vector<K>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw shape_error("vector length mismatch");
        std::vector<K> y(rows_);
        for (int i = 0; i < rows_; ++i) {
            K acc;
            for (int j = 0; j < cols_; ++j) {
                if (!at(i, j).is_zero() && !x[j].is_zero()) acc += at(i, j) * x[j];
            }
            y[i] = acc;
        }
        return y;
    }

    std::vector<K> mul_vec_left(const std::vector<K>& y) const {
        if (static_cast<int>(y.size()) != rows_) throw shape_error("vector length mismatch");
        std::vector<K> x(cols_);
        for (int i = 0; i < rows_; ++i) {
            if (y[i].is_zero()) continue;
            for (int j = 0; j < cols_; ++j) {
                if (!at(i, j).is_zero()) x[j] += y[i] * at(i, j);
            }
        }
        return x;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_, cols_;
    std::vector<K> a_;
};

/// Incrementally maintained reduced row echelon basis of a row space.
/// Deterministic: the canonical basis depends only on the span.
template <Field K>
class RowSpace {
public:
    explicit RowSpace(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    std::vector<K> reduce(std::vector<K> v) const {
        if (static_cast<int>(v.size()) != cols_) throw shape_error("vector length mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            const K factor = c;
            for (int j = 0; j < cols_; ++j) {
                if (!rows_[r][j].is_zero()) v[j] -= factor * rows_[r][j];
            }
        }
        return v;
    }

    bool contains(const std::vector<K>& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const K& c) { return c.is_zero(); });
    }

    /// Reduces and inserts when independent; returns whether the dimension grew.
    bool insert(std::vector<K> v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < cols_; ++j) {
            if (!v[j].is_zero()) { p = j; break; }
        }
        if (p < 0) return false;
        const K inv = K(1) / v[p];
        for (int j = p; j < cols_; ++j) v[j] = v[j] * inv;
        // back-eliminate the new pivot from existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K c = rows_[r][p];
            if (c.is_zero()) continue;
            for (int j = 0; j < cols_; ++j) {
                if (!v[j].is_zero()) rows_[r][j] -= c * v[j];
            }
        }
        // keep rows ordered by pivot column
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    const std::vector<std::vector<K>>& basis_rows() const { return rows_; }
    const std::vector<int>& pivot_columns() const { return pivots_; }

    bool same_space(const RowSpace& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

    bool contains_space(const RowSpace& o) const {
        for (const auto& r : o.rows_) {
            if (!contains(r)) return false;
        }
        return true;
    }

    Matrix<K> to_matrix() const { return Matrix<K>::from_rows(rows_, cols_); }

private:
    int cols_;
    std::vector<std::vector<K>> rows_;
    std::vector<int> pivots_;
};

template <Field K>
RowSpace<K> row_space(const Matrix<K>& m) {
    RowSpace<K> s(m.cols());
    for (int i = 0; i < m.rows(); ++i) s.insert(m.row(i));
    return s;
}

template <Field K>
int rank(const Matrix<K>& m) {
    return row_space(m).dim();
}

inline std::vector<int> seeded_column_order(int cols, std::uint64_t seed) {
    std::vector<int> order(cols);
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    return order;
}

template <Field K>
struct LinearOutcome {
    bool consistent = false;
    std::vector<K> particular;       // one solution, when consistent
    Matrix<K> kernel;                // rows span the solution space of Ax = 0
    std::vector<K> certificate;     // when inconsistent: y with yT A = 0, yT b != 0
    int kernel_dim() const { return kernel.rows(); }
};

/// Solves A x = b. Pivot columns are scanned in seeded order (seed 0 keeps
/// the natural order, which yields the minimal-support particular solution
/// for the declared basis order); the kernel does not depend on the seed's
/// choice of pivots beyond basis presentation, and its dimension never does.
template <Field K>
LinearOutcome<K> solve_linear(const Matrix<K>& A, const std::vector<K>& b, std::uint64_t seed = 0) {
    if (static_cast<int>(b.size()) != A.rows()) throw shape_error("rhs length mismatch");
    const int rows = A.rows(), cols = A.cols();
    const std::vector<int> order = seeded_column_order(cols, seed);

    // eliminate on a working copy, tracking row operations for certificates
    Matrix<K> M = A;
    std::vector<K> rhs = b;
    Matrix<K> T = Matrix<K>::identity(rows);

    std::vector<int> pivot_col;   // per pivot row
    int r = 0;
    for (int oc = 0; oc < cols && r < rows; ++oc) {
        const int c = order[oc];
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (!M.at(i, c).is_zero()) { pr = i; break; }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = 0; j < cols; ++j) std::swap(M.at(pr, j), M.at(r, j));
            std::swap(rhs[pr], rhs[r]);
            for (int j = 0; j < rows; ++j) std::swap(T.at(pr, j), T.at(r, j));
        }
        const K inv = K(1) / M.at(r, c);
        for (int j = 0; j < cols; ++j) {
            if (!M.at(r, j).is_zero()) M.at(r, j) = M.at(r, j) * inv;
        }
        rhs[r] = rhs[r] * inv;
        for (int j = 0; j < rows; ++j) {
            if (!T.at(r, j).is_zero()) T.at(r, j) = T.at(r, j) * inv;
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const K f = M.at(i, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < cols; ++j) {
                if (!M.at(r, j).is_zero()) M.at(i, j) -= f * M.at(r, j);
            }
            rhs[i] -= f * rhs[r];
            for (int j = 0; j < rows; ++j) {
                if (!T.at(r, j).is_zero()) T.at(i, j) -= f * T.at(r, j);
            }
        }
        pivot_col.push_back(c);
        ++r;
    }

    LinearOutcome<K> out;

    // inconsistent rows: zero A-part, nonzero rhs
    for (int i = r; i < rows; ++i) {
        if (!rhs[i].is_zero()) {
            out.consistent = false;
            out.certificate = T.row(i);
            return out;
        }
    }

    out.consistent = true;
    out.particular.assign(cols, K());
    for (int k = 0; k < r; ++k) out.particular[pivot_col[k]] = rhs[k];

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    Matrix<K> kernel(0, cols);
    for (int oc = 0; oc < cols; ++oc) {
        const int f = order[oc];
        if (is_pivot[f]) continue;
        std::vector<K> v(cols);
        v[f] = K(1);
        for (int k = 0; k < r; ++k) v[pivot_col[k]] = -M.at(k, f);
        kernel.append_row(v);
    }
    out.kernel = kernel;
    return out;
}

template <Field K>
Matrix<K> nullspace(const Matrix<K>& A) {
    return solve_linear(A, std::vector<K>(A.rows()), 0).kernel;
}

}  // namespace folex

#endif
