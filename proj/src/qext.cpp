#include "wreathrep/qext.hpp"

#include <cmath>

namespace wreathrep {

namespace {

// n = m^2 * d with d squarefree; returns (m, d). n may be negative.
std::pair<Int, long long> squarefree_split(Int n) {
    long long sign = n < 0 ? -1 : 1;
    if (n < 0) n = -n;
    Int m = 1;
    long long d = 1;
    for (long long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) m *= p;
        if (e % 2) d *= p;
    }
    if (n > 1) d *= n.convert_to<long long>();
    return {m, sign * d};
}

}  // namespace

QExt::QExt(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ == 0 || d_ == 1) {
        if (d_ == 1) a_ += b_;
        b_ = 0;
        d_ = 0;
    }
}

QExt QExt::sqrt_of(const Rational& v) {
    if (v == 0) return QExt();
    // sqrt(p/q) = sqrt(p*q)/q
    Int pq = numerator(v) * denominator(v);
    auto [m, d] = squarefree_split(pq);
    Rational coef(m, denominator(v));
    if (d == 1) return QExt(coef);
    return QExt(Rational(0), coef, d);
}

QExt& QExt::operator+=(const QExt& o) {
    if (d_ == o.d_ || o.b_ == 0) {
        a_ += o.a_;
        b_ += o.b_;
    } else if (b_ == 0) {
        a_ += o.a_;
        b_ = o.b_;
        d_ = o.d_;
    } else {
        throw exact_error("sum of incompatible radicals sqrt(" + std::to_string(d_) +
                          ") and sqrt(" + std::to_string(o.d_) + ")");
    }
    if (b_ == 0) d_ = 0;
    return *this;
}

QExt& QExt::operator*=(const QExt& o) {
    if (d_ == o.d_ || b_ == 0 || o.b_ == 0) {
        long long d = b_ != 0 ? d_ : o.d_;
        Rational a = a_ * o.a_ + b_ * o.b_ * d;
        Rational b = a_ * o.b_ + b_ * o.a_;
        *this = QExt(std::move(a), std::move(b), d);
        return *this;
    }
    // Pure radicals with different radicands still multiply exactly:
    // sqrt(d1)*sqrt(d2) = sqrt(d1*d2), reduced to squarefree form.
    if (a_ == 0 && o.a_ == 0) {
        auto [m, d] = squarefree_split(Int(d_) * Int(o.d_));
        *this = QExt(Rational(0), b_ * o.b_ * m, d) ;
        if (d == 1) *this = QExt(b_ * o.b_ * m);
        return *this;
    }
    throw exact_error("product of incompatible mixed radicals");
}

QExt& QExt::operator/=(const QExt& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (o.b_ == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    // multiply by conjugate over Q: (a - b sqrt(d)) / (a^2 - b^2 d)
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
    QExt inv(o.a_ / norm, -o.b_ / norm, o.d_);
    return *this *= inv;
}

QExt QExt::conj() const {
    if (d_ < 0) return QExt(a_, -b_, d_);
    return *this;
}

std::complex<double> QExt::to_complex() const {
    if (d_ == 0) return {to_double(a_), 0.0};
    double root = std::sqrt(std::abs(static_cast<double>(d_)));
    if (d_ > 0) return {to_double(a_) + to_double(b_) * root, 0.0};
    return {to_double(a_), to_double(b_) * root};
}

std::string QExt::str() const {
    if (d_ == 0) return frac_string(a_);
    std::string s;
    if (a_ != 0) s = frac_string(a_) + (b_ > 0 ? "+" : "");
    s += frac_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
    return s;
}

}  // namespace wreathrep
