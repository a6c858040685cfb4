#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <stdexcept>

namespace pavings {

// Exact integer / rational types used everywhere. No floating point is
// allowed in series coefficients; BigFloat exists only for asymptotics.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline BigInt factorial(unsigned long long n) {
    BigInt r = 1;
    for (unsigned long long i = 2; i <= n; ++i) r *= i;
    return r;
}

// (n)!! for n >= -1; (-1)!! = 0!! = 1 by convention.
inline BigInt double_factorial(long long n) {
    if (n < -1) throw std::invalid_argument("double_factorial: n < -1");
    BigInt r = 1;
    for (long long i = n; i >= 2; i -= 2) r *= i;
    return r;
}

// Moebius function by trial division.
inline int moebius(unsigned long long n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
    int primes = 0;
    for (unsigned long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0; // square factor
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

} // namespace pavings
