#pragma once

#include <cassert>
#include <complex>
#include <vector>

#include "wreathrep/qext.hpp"

namespace wreathrep {

inline QExt conj_of(const QExt& x) { return x.conj(); }
inline std::complex<double> conj_of(const std::complex<double>& x) { return std::conj(x); }

// Dense row-major matrix over QExt or complex<double>. Dimensions here stay
// small (irreducibles at desk scale), so no sparsity games.
template <class S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, S(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    S& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const S& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const S& v = (*this)(i, k);
                if (is_zero(v)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (is_zero(o(k, j))) continue;
                    out(i, j) += v * o(k, j);
                }
            }
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix operator+(const Matrix& o) const {
        Matrix m = *this;
        return m += o;
    }
    Matrix& operator-=(const Matrix& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix operator-(const Matrix& o) const {
        Matrix m = *this;
        return m -= o;
    }
    Matrix operator*(const S& s) const {
        Matrix m = *this;
        for (auto& v : m.a_) v = v * s;
        return m;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    S trace() const {
        S t(0);
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    Matrix conj_transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = conj_of((*this)(i, j));
        return m;
    }

    // max |x - y| entrywise after conversion to complex<double>
    double max_diff(const Matrix& o) const {
        double m = 0;
        for (size_t i = 0; i < a_.size(); ++i)
            m = std::max(m, std::abs(to_complex(a_[i]) - to_complex(o.a_[i])));
        return m;
    }

private:
    int rows_, cols_;
    std::vector<S> a_;
};

using CMatrix = Matrix<std::complex<double>>;
using QMatrix = Matrix<QExt>;

template <class S>
Matrix<std::complex<double>> to_complex_matrix(const Matrix<S>& m) {
    Matrix<std::complex<double>> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = to_complex(m(i, j));
    return out;
}

}  // namespace wreathrep
