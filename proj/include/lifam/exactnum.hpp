#pragma once

// Exact integer and rational arithmetic for intersection-theorem bounds.
// Everything here is arbitrary precision; no floating point is used anywhere
// in the library. Backing storage is Boost.Multiprecision (header-only);
// the combinatorial conventions below are the module's actual content.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lifam {

using Integer = boost::multiprecision::cpp_int;
using Natural = boost::multiprecision::cpp_int;   // nonnegative by convention of the ops below
using Rational = boost::multiprecision::cpp_rational;  // always reduced, denominator > 0

namespace exactnum {

// base^e by repeated squaring; exact.
inline Natural power(const Natural& base, unsigned long long e) {
    Natural acc = 1;
    Natural b = base;
    while (e) {
        if (e & 1ULL) acc *= b;
        b *= b;
        e >>= 1ULL;
    }
    return acc;
}

// Binomial coefficient with the conventions used throughout:
// binom(n, k) = 0 when k < 0 or k > n, and binom(n, 0) = 1.
inline Natural binom(unsigned long long n, long long k) {
    if (k < 0) return 0;
    unsigned long long ku = static_cast<unsigned long long>(k);
    if (ku > n) return 0;
    if (n - ku < ku) ku = n - ku;
    Natural r = 1;
    // r stays integral at every step: after i iterations r = binom(n-ku+i, i).
    for (unsigned long long i = 1; i <= ku; ++i) {
        r *= Natural(n - ku + i);
        r /= Natural(i);
    }
    return r;
}

// Gaussian binomial coefficient, evaluated exactly as a single fraction
//   prod_{i=0..k-1} (q^(n-i) - 1) / prod_{i=0..k-1} (q^(k-i) - 1).
// Same edge conventions as binom: 0 when k < 0 or k > n, 1 when k = 0.
// The quotient is always integral; that is checked, not assumed.
inline Natural qbinom(unsigned long long n, long long k, unsigned long long q) {
    if (q < 2) throw std::invalid_argument("qbinom: q must be at least 2");
    if (k < 0) return 0;
    unsigned long long ku = static_cast<unsigned long long>(k);
    if (ku > n) return 0;
    if (ku == 0) return 1;
    Natural num = 1, den = 1;
    for (unsigned long long i = 0; i < ku; ++i) {
        num *= power(q, n - i) - 1;
        den *= power(q, ku - i) - 1;
    }
    if (num % den != 0)
        throw std::logic_error("qbinom: non-integral quotient (unreachable)");
    return num / den;
}

// Sum of binomials binom(n, i) for i in [lo, hi]; negative or out-of-range i
// contribute 0 via the binom conventions.
inline Natural binom_sum(unsigned long long n, long long lo, long long hi) {
    Natural s = 0;
    for (long long i = lo; i <= hi; ++i) s += binom(n, i);
    return s;
}

inline Natural qbinom_sum(unsigned long long n, long long lo, long long hi, unsigned long long q) {
    Natural s = 0;
    for (long long i = lo; i <= hi; ++i) s += qbinom(n, i, q);
    return s;
}

}  // namespace exactnum
}  // namespace lifam
