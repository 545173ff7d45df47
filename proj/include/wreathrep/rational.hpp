#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wreathrep {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p" or "p/q"
std::string frac_string(const Rational& r);

// Accepts "p", "p/q", or a decimal literal ("0.5", "-1e-3").
Rational parse_frac(const std::string& s);

}  // namespace wreathrep
