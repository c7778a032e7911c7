#pragma once

/*
 * Caliber, genus bound and twist numerology for curves of degree d in P^n.
 *
 * For d >= n >= 3 the caliber k0 is the unique integer with
 * c(n,k0) <= d < c(n,k0+1), where c(n,h) = binom_dim(n,h) counts degree-h
 * monomials in n variables.  The genus bound is
 *
 *      pi'(n,d) = sum_{h=1}^{k0} (d - c(n,h)) = k0*d - c(n+1,k0) + 1.
 *
 * The twist profile attaches to (n,d) the integers b_i = k0 + i, the
 * critical degrees d_i = prod_{j != i} (k0+j) / (n-1)!  (strictly
 * decreasing, with d_1 = c(n,k0+1) and d_n = c(n,k0)), the factorial
 * weights delta_i = (i-1)!(n-i)!, and the pivot index i0 determined by
 * d_crit[i0+1] <= d < d_crit[i0].
 */

#include "gfres/numeric.hpp"

#include <vector>

namespace gfres {

struct TwistProfile {
    int n = 0;
    long long d = 0;
    long long k0 = 0;
    std::vector<Int> b;           // b[i-1] = k0 + i, i = 1..n
    std::vector<Rational> d_crit; // d_crit[i-1] = d_i, strictly decreasing
    std::vector<Int> delta;       // delta[i-1] = (i-1)! (n-i)!
    Int sigma1;                   // b_1 + ... + b_n
    Int sigman;                   // b_1 * ... * b_n
    int i0 = 0;                   // 1-based pivot, 1 <= i0 <= n-1
};

inline void require_curve_range(int n, long long d) {
    if (n < 3) throw std::invalid_argument("need ambient dimension n >= 3");
    if (d < n) throw std::invalid_argument("need degree d >= n (nondegenerate curve)");
}

/// The unique k0 >= 1 with c(n,k0) <= d < c(n,k0+1).
inline long long caliber(int n, long long d) {
    require_curve_range(n, d);
    long long k = 1;
    while (binom_dim(n, k + 1) <= d) ++k;
    return k;
}

/// Genus bound by direct summation over h = 1..k0.
inline Int genus_bound_pi(int n, long long d) {
    long long k0 = caliber(n, d);
    Int s = 0;
    for (long long h = 1; h <= k0; ++h) s += Int(d) - binom_dim(n, h);
    return s;
}

/// Same bound in closed form: k0*d - c(n+1,k0) + 1.
inline Int genus_bound_pi_closed(int n, long long d) {
    long long k0 = caliber(n, d);
    return Int(k0) * d - binom_dim(n + 1, k0) + 1;
}

inline TwistProfile twist_profile(int n, long long d) {
    TwistProfile tp;
    tp.n = n;
    tp.d = d;
    tp.k0 = caliber(n, d);

    Int prod = 1;
    tp.sigma1 = 0;
    for (int i = 1; i <= n; ++i) {
        Int bi = Int(tp.k0) + i;
        tp.b.push_back(bi);
        tp.sigma1 += bi;
        prod *= bi;
    }
    tp.sigman = prod;

    const Int fnm1 = factorial(n - 1);
    for (int i = 1; i <= n; ++i) {
        tp.delta.push_back(factorial(i - 1) * factorial(n - i));
        tp.d_crit.push_back(Rational(prod / tp.b[i - 1], fnm1));
    }

    // d lies in [d_n, d_1) = [c(n,k0), c(n,k0+1)); the half-open intervals
    // [d_{i+1}, d_i) partition it, so the pivot below exists and is unique.
    tp.i0 = 0;
    for (int i = 1; i <= n - 1; ++i) {
        if (Rational(d) >= tp.d_crit[i] && Rational(d) < tp.d_crit[i - 1]) {
            tp.i0 = i;
            break;
        }
    }
    if (tp.i0 == 0) throw std::logic_error("twist_profile: pivot index not found");
    return tp;
}

/// Genus from the symmetric functions of the twists:
///     g = (sigma1/n - (n+1)/2) * d - sigman/n! + 1.
/// Throws if the rational expression is non-integral (corrupted profile).
inline Int genus_from_twists(const TwistProfile& tp) {
    Rational g = (Rational(tp.sigma1, tp.n) - Rational(tp.n + 1, 2)) * tp.d -
                 Rational(tp.sigman, factorial(tp.n)) + 1;
    if (!is_integer(g))
        throw std::domain_error("genus_from_twists: non-integral genus " +
                                Rational(g).str() + " (corrupted profile)");
    return numerator(g);
}

} // namespace gfres
