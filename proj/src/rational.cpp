#include "wreathrep/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace wreathrep {

std::string frac_string(const Rational& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

Rational parse_frac(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rational(p) / q;
    }
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos) {
        return Rational(Int(s));
    }
    // Decimal literal: go through double and snap to a dyadic rational.
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    Rational r;
    int exp = 0;
    double mant = std::frexp(v, &exp);
    Int num = Int(std::ldexp(mant, 53));
    r = Rational(num);
    int shift = exp - 53;
    if (shift > 0)
        r *= Rational(Int(1) << shift);
    else if (shift < 0)
        r /= Rational(Int(1) << (-shift));
    return r;
}

}  // namespace wreathrep
