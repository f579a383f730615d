#pragma once

#include <boost/rational.hpp>
#include <string>

namespace wdcalc {

// Exact rational arithmetic for exponents. Values stay tiny (denominators
// rarely exceed 4), so long long components are ample.
using Rat = boost::rational<long long>;

inline double rat_to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// "a" when integral, "a/b" otherwise; always reduced, sign on the numerator.
inline std::string rat_to_string(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        s += "/";
        s += std::to_string(r.denominator());
    }
    return s;
}

}  // namespace wdcalc
