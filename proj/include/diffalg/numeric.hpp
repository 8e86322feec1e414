#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace diffalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g = boost::multiprecision::gcd(a, b);
    return g < 0 ? Int(-g) : g;
}

inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

} // namespace diffalg
