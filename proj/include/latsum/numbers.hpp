#ifndef LATSUM_NUMBERS_HPP
#define LATSUM_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <vector>

namespace latsum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// p-adic valuation of a nonzero integer.
inline long vp(Int x, const Int& p) {
    long v = 0;
    x = abs(x);
    while (x != 0 && x % p == 0) { x /= p; ++v; }
    return v;
}

/// p-adic valuation of a nonzero rational.
inline long vp(const Rat& x, const Int& p) {
    return vp(num(x), p) - vp(den(x), p);
}

/// Splits n as p^a * e with (e,p)=1.
inline std::pair<long, Int> p_part_split(Int n, const Int& p) {
    long a = vp(n, p);
    Int e = n;
    for (long i = 0; i < a; ++i) e /= p;
    return {a, e};
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline Int pow_int(Int base, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

/// Exponent vector of a Laurent monomial.
using Expo = std::vector<long long>;

} // namespace latsum

#endif
