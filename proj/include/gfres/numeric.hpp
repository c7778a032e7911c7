#pragma once

/*
 * Exact integer / rational arithmetic helpers shared by every module.
 *
 * All combinatorial quantities are computed over arbitrary-precision
 * integers; rationals appear only where a formula genuinely divides
 * (critical degrees, the genus expression) and integrality is then
 * checked explicitly rather than assumed.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfres {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is C(n-k+i, i) after the division
    }
    return r;
}

/// c(n,h): number of degree-h monomials in n variables, extended by 0 for h < 0.
inline Int binom_dim(int n, long long h) {
    if (n < 1) throw std::invalid_argument("binom_dim: need n >= 1");
    if (h < 0) return 0;
    return binomial(n - 1 + h, h);
}

inline long long to_longlong(const Int& v, const char* what = "value") {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw std::overflow_error(std::string(what) + " exceeds 64-bit range");
    return static_cast<long long>(v);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Exact quotient a/b as an Int; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b, const char* what = "quotient") {
    if (b == 0) throw std::invalid_argument("exact_div: zero divisor");
    Int q = a / b;
    if (q * b != a)
        throw std::domain_error(std::string(what) + ": " + a.str() + " not divisible by " + b.str());
    return q;
}

/// All k-element subsets of {0,...,m-1} in lexicographic order.
inline std::vector<std::vector<int>> enumerate_subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == m - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

/// splitmix64 mixing step; used to derive independent per-trial seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic uniform draw in [0, bound); avoids std::uniform_int_distribution
/// whose output is implementation-defined.
template <class Rng>
std::uint64_t next_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: empty range");
    return static_cast<std::uint64_t>(rng()) % bound;
}

} // namespace gfres
