#pragma once

#include "nilmult/numtheory.hpp"

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilmult {

/// Dense integer matrix with unbounded entries, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("IntMatrix: entry count must be rows*cols");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c)
                throw std::invalid_argument("IntMatrix: ragged row list");
            std::size_t j = 0;
            for (std::int64_t v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    /// Fraction-free (Bareiss) determinant; exact over the integers.
    Integer determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant: matrix must be square");
        const std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix a = *this;
        Integer prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t s = k + 1;
                while (s < n && a(s, k) == 0) ++s;
                if (s == n) return 0;
                for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            prev = a(k, k);
        }
        return sign < 0 ? Integer(-a(n - 1, n - 1)) : a(n - 1, n - 1);
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << (*this)(i, j);
            os << "]" << (i + 1 == rows_ ? "]" : "\n");
        }
        if (rows_ == 0) os << "[]";
        return os.str();
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

/// S = U*M*V with U, V unimodular and S diagonal, non-negative, ascending
/// divisibility chain d1 | d2 | ... followed by zeros.
struct SmithDecomposition {
    IntMatrix S, U, V;
};

/// Deterministic Smith normal form: always picks the smallest-absolute-value
/// nonzero pivot of the working submatrix (row-major tie break), reduces its
/// row and column, and repairs the divisibility chain by row merging.
inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithDecomposition r{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    IntMatrix& s = r.S;
    IntMatrix& u = r.U;
    IntMatrix& v = r.V;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(s(a, j), s(b, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(u(a, j), u(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(s(i, a), s(i, b));
        for (std::size_t i = 0; i < cols; ++i) std::swap(v(i, a), v(i, b));
    };
    // row[dst] -= q * row[src], and likewise for columns
    auto row_reduce = [&](std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols; ++j) s(dst, j) -= q * s(src, j);
        for (std::size_t j = 0; j < rows; ++j) u(dst, j) -= q * u(src, j);
    };
    auto col_reduce = [&](std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < rows; ++i) s(i, dst) -= q * s(i, src);
        for (std::size_t i = 0; i < cols; ++i) v(i, dst) -= q * v(i, src);
    };

    const std::size_t dim = std::min(rows, cols);
    std::size_t t = 0;
    while (t < dim) {
        // smallest |nonzero| entry of the submatrix [t.., t..]
        bool found = false;
        std::size_t pi = t, pj = t;
        Integer best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (s(i, j) == 0) continue;
                Integer mag = abs(s(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = std::move(mag);
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;  // submatrix is zero; trailing diagonal stays 0
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i)
            if (s(i, t) != 0) {
                row_reduce(i, t, s(i, t) / s(t, t));
                if (s(i, t) != 0) clean = false;  // remainder smaller than pivot
            }
        for (std::size_t j = t + 1; j < cols; ++j)
            if (s(t, j) != 0) {
                col_reduce(j, t, s(t, j) / s(t, t));
                if (s(t, j) != 0) clean = false;
            }
        if (!clean) continue;  // re-pivot on the smaller remainder

        // the pivot must divide the whole remaining submatrix, or the final
        // diagonal would break the d_t | d_{t+1} chain
        bool merged = false;
        for (std::size_t i = t + 1; i < rows && !merged; ++i)
            for (std::size_t j = t + 1; j < cols && !merged; ++j)
                if (s(i, j) % s(t, t) != 0) {
                    // pull row i into row t and redo the elimination
                    for (std::size_t jj = 0; jj < cols; ++jj) s(t, jj) += s(i, jj);
                    for (std::size_t jj = 0; jj < rows; ++jj) u(t, jj) += u(i, jj);
                    merged = true;
                }
        if (merged) continue;

        if (s(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) s(t, j) = -s(t, j);
            for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
        }
        ++t;
    }
    return r;
}

}  // namespace nilmult
