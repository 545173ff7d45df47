#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "wreathrep/rational.hpp"

namespace wreathrep {

// Thrown when a value cannot be kept in exact form (e.g. a sum of two
// incompatible radicals). Callers fall back to complex<double>.
struct exact_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalar of the form a + b*sqrt(d) with a, b rational and d a squarefree
// integer (possibly negative, so Gaussian rationals and roots of unity for
// small cyclic groups are covered). d == 0 encodes a plain rational.
class QExt {
public:
    QExt() : a_(0), b_(0), d_(0) {}
    QExt(int v) : a_(v), b_(0), d_(0) {}
    QExt(const Rational& v) : a_(v), b_(0), d_(0) {}
    QExt(Rational a, Rational b, long long d);

    static QExt sqrt_of(const Rational& v);  // exact sqrt of any rational

    const Rational& rat() const { return a_; }
    const Rational& radical_coef() const { return b_; }
    long long radicand() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QExt operator-() const { return QExt(-a_, -b_, d_); }
    QExt& operator+=(const QExt& o);
    QExt& operator-=(const QExt& o) { return *this += -o; }
    QExt& operator*=(const QExt& o);
    QExt& operator/=(const QExt& o);
    friend QExt operator+(QExt x, const QExt& y) { return x += y; }
    friend QExt operator-(QExt x, const QExt& y) { return x -= y; }
    friend QExt operator*(QExt x, const QExt& y) { return x *= y; }
    friend QExt operator/(QExt x, const QExt& y) { return x /= y; }
    friend bool operator==(const QExt& x, const QExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }

    QExt conj() const;  // complex conjugate (identity for real radicands)
    std::complex<double> to_complex() const;
    std::string str() const;  // e.g. "-1/2+1/2*sqrt(-3)"

private:
    Rational a_, b_;
    long long d_;
};

inline QExt conj(const QExt& x) { return x.conj(); }
inline std::complex<double> to_complex(const QExt& x) { return x.to_complex(); }
inline bool is_zero(const QExt& x) { return x.is_zero(); }

// Helpers so matrix code can be generic over QExt and complex<double>.
inline std::complex<double> to_complex(const std::complex<double>& x) { return x; }
inline bool is_zero(const std::complex<double>& x) { return x == 0.0; }

}  // namespace wreathrep
