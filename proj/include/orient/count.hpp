#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace orient {

// Exact unbounded counters. Every verdict in this project compares these,
// never floating point.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Count pow2(unsigned long e) {
    Count c = 1;
    return c << e;
}

inline Count ipow(Count base, unsigned long e) {
    Count r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Count binom(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace orient
