#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace modr {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// gcd with the convention gcd(r, 0) = r, so slope 0 means an untwisted node.
inline Int gcd_nonneg(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Canonical representative of x mod m in {0, ..., m-1}; m > 0.
inline Int rep_mod(Int x, Int m) {
    Int v = x % m;
    return v < 0 ? v + m : v;
}

// Floor division (rounds toward negative infinity).
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt big_pow(Int base, Int exp) {
    BigInt acc = 1;
    BigInt b = base;
    for (Int i = 0; i < exp; ++i) acc *= b;
    return acc;
}

inline Rat rat_pow(const Rat& base, Int exp) {
    Rat acc = 1;
    if (exp >= 0) {
        for (Int i = 0; i < exp; ++i) acc *= base;
    } else {
        for (Int i = 0; i < -exp; ++i) acc /= base;
    }
    return acc;
}

// "p/q" (or "p" when q = 1), matching the stream output of cpp_rational.
inline std::string rat_to_string(const Rat& q) {
    return q.str();
}

inline std::string big_to_string(const BigInt& n) {
    return n.str();
}

}  // namespace modr
