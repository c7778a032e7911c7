#pragma once

/*
 * The Eagon-Northcott complex of a (k0+1) x (k0+n-1) matrix phi of linear
 * forms in n+1 variables.  Writing f = k0+n-1 and g = k0+1:
 *
 *   E_0 = S,                E_i = S(-(k0+i))^{y_i}   for i = 1..n-1,
 *   y_i = C(f, k0+i) * C(k0+i-1, i-1)
 *       = (f)! / ((k0+i) * k0! * (i-1)! * (n-i-1)!).
 *
 * Basis of E_i: pairs (S, mu) with S a (k0+i)-subset of columns (lex order)
 * and mu a monomial of degree i-1 in g dual letters (grlex order, largest
 * first); the pair index is subset-major.
 *
 *   d_0(v_S)        = det phi[:, S]                        (plain minors)
 *   d_i(v_S @ mu)   = sum_k (-1)^k sum_u mu_u phi[u, S_k] (v_{S-S_k} @ mu/e_u)
 *
 * for i >= 1, with k the 0-based position inside S and mu_u the exponent of
 * letter u in mu.  The construction asserts d o d = 0 before returning.
 */

#include "gfres/complexes.hpp"
#include "gfres/graded_matrix.hpp"
#include "gfres/numeric.hpp"
#include "gfres/poly.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfres {

inline std::vector<Int> en_sizes(int n, long long k0) {
    if (n < 3) throw std::invalid_argument("en_sizes: need n >= 3");
    if (k0 < 1) throw std::invalid_argument("en_sizes: need k0 >= 1");
    std::vector<Int> y;
    const long long f = k0 + n - 1;
    for (int i = 1; i <= n - 1; ++i)
        y.push_back(binomial(f, k0 + i) * binomial(k0 + i - 1, i - 1));
    return y;
}

// same numbers via the factorial form, used as an independent cross-check
inline std::vector<Int> en_sizes_factorial(int n, long long k0) {
    if (n < 3) throw std::invalid_argument("en_sizes: need n >= 3");
    if (k0 < 1) throw std::invalid_argument("en_sizes: need k0 >= 1");
    std::vector<Int> y;
    const Int top = factorial(k0 + n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        Int den = Int(k0 + i) * factorial(k0) * factorial(i - 1) * factorial(n - 1 - i);
        y.push_back(exact_div(top, den, "en size"));
    }
    return y;
}

template <class T>
struct ENInput {
    int n = 0;
    long long k0 = 0;
    std::vector<std::string> vars;  // n+1 coordinate names
    GradedMatrix<T> phi;            // (k0+1) x (k0+n-1), linear entries

    void validate() const {
        if (n < 3) throw std::invalid_argument("ENInput: need n >= 3");
        if (k0 < 1) throw std::invalid_argument("ENInput: need k0 >= 1");
        if (static_cast<int>(vars.size()) != n + 1)
            throw std::invalid_argument("ENInput: expected n+1 variables");
        if (phi.rows() != k0 + 1 || phi.cols() != k0 + n - 1)
            throw std::invalid_argument(
                "ENInput: phi must be (k0+1) x (k0+n-1), found " +
                std::to_string(phi.rows()) + " x " + std::to_string(phi.cols()));
        if (phi.nvars != n + 1)
            throw std::invalid_argument("ENInput: phi variable count != n+1");
        for (int i = 0; i < phi.rows(); ++i)
            for (int j = 0; j < phi.cols(); ++j)
                if (!phi.at(i, j).is_zero() && phi.at(i, j).degree() != 1)
                    throw std::invalid_argument(
                        "ENInput: entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is not a linear form");
    }
};

template <class T>
FreeComplex<T> build_en(const ENInput<T>& in) {
    in.validate();
    const int n = in.n;
    const long long k0 = in.k0;
    const int f = static_cast<int>(k0 + n - 1);
    const int g = static_cast<int>(k0 + 1);
    const int nv = n + 1;

    FreeComplex<T> c;
    c.n = n;
    c.vars = in.vars;
    c.blocks.resize(n);
    c.blocks[0] = {0};

    // bases: per homological degree i, the list of (subset, monomial) pairs
    struct Basis {
        std::vector<std::vector<int>> subsets;
        std::vector<Mono> monos;
        long long size() const {
            return static_cast<long long>(subsets.size()) *
                   static_cast<long long>(monos.size());
        }
        long long index(size_t si, size_t mi) const { return si * monos.size() + mi; }
    };
    std::vector<Basis> basis(n); // basis[i] for E_i, i >= 1
    const auto expected = en_sizes(n, k0);
    for (int i = 1; i <= n - 1; ++i) {
        basis[i].subsets = enumerate_subsets(f, static_cast<int>(k0) + i);
        basis[i].monos = enumerate_monomials(g, i - 1);
        c.blocks[i].assign(static_cast<size_t>(basis[i].size()),
                           static_cast<int>(k0) + i);
        if (Int(basis[i].size()) != expected[i - 1])
            throw std::logic_error("build_en: basis size disagrees with y_i");
    }

    c.diff.resize(n - 1);

    // d_0: the plain maximal minors of phi, one per g-subset in lex order
    {
        auto dets = detail::subset_dets(in.phi);
        GradedMatrix<T> d0(c.blocks[0], c.blocks[1], nv);
        for (size_t si = 0; si < basis[1].subsets.size(); ++si)
            d0.at(0, static_cast<int>(si)) = dets.at(basis[1].subsets[si]);
        c.diff[0] = std::move(d0);
    }

    // d_i for i >= 1
    for (int i = 1; i <= n - 2; ++i) {
        const Basis& src = basis[i + 1];
        const Basis& dst = basis[i];
        std::map<std::vector<int>, size_t> subset_index;
        for (size_t si = 0; si < dst.subsets.size(); ++si)
            subset_index.emplace(dst.subsets[si], si);
        std::map<Mono, size_t> mono_index;
        for (size_t mi = 0; mi < dst.monos.size(); ++mi)
            mono_index.emplace(dst.monos[mi], mi);

        GradedMatrix<T> d(c.blocks[i], c.blocks[i + 1], nv);
        for (size_t si = 0; si < src.subsets.size(); ++si) {
            const auto& s = src.subsets[si];
            for (size_t mi = 0; mi < src.monos.size(); ++mi) {
                const Mono& mu = src.monos[mi];
                long long col = src.index(si, mi);
                std::vector<int> rest;
                Mono nu(g);
                for (size_t k = 0; k < s.size(); ++k) {
                    rest.assign(s.begin(), s.end());
                    rest.erase(rest.begin() + static_cast<long>(k));
                    size_t ti = subset_index.at(rest);
                    for (int u = 0; u < g; ++u) {
                        if (mu[u] == 0) continue;
                        const HomPoly<T>& lin = in.phi.at(u, s[k]);
                        if (lin.is_zero()) continue;
                        nu = mu;
                        --nu[u];
                        long long row = dst.index(ti, mono_index.at(nu));
                        T w = T(static_cast<long long>(k % 2 == 0 ? mu[u] : -mu[u]));
                        d.at(static_cast<int>(row), static_cast<int>(col)) +=
                            w * lin;
                    }
                }
            }
        }
        c.diff[i] = std::move(d);
    }

    // the construction is asserted, not assumed
    VerificationReport rep = check_complex(c);
    if (!rep.pass())
        throw std::logic_error("build_en: differentials fail d o d = 0");
    return c;
}

// random matrix of linear forms over F_p (dense, coefficients uniform mod p)
inline ENInput<GF> random_phi(int n, long long k0, std::uint64_t seed,
                              long long prime = kDefaultPrime) {
    ENInput<GF> in;
    in.n = n;
    in.k0 = k0;
    in.vars = default_var_names(n + 1);
    std::mt19937_64 rng(mix64(seed));
    in.phi = GradedMatrix<GF>(std::vector<int>(k0 + 1, 0),
                              std::vector<int>(k0 + n - 1, 1), n + 1);
    for (int i = 0; i < in.phi.rows(); ++i)
        for (int j = 0; j < in.phi.cols(); ++j)
            in.phi.at(i, j) = random_hom_poly<GF>(n + 1, 1, [&] {
                return GF::make(static_cast<long long>(next_below(rng, prime)), prime);
            });
    in.validate();
    return in;
}

// random matrix of linear forms with small integer coefficients
inline ENInput<Rational> random_phi_rational(int n, long long k0,
                                             std::uint64_t seed) {
    ENInput<Rational> in;
    in.n = n;
    in.k0 = k0;
    in.vars = default_var_names(n + 1);
    std::mt19937_64 rng(mix64(seed));
    in.phi = GradedMatrix<Rational>(std::vector<int>(k0 + 1, 0),
                                    std::vector<int>(k0 + n - 1, 1), n + 1);
    for (int i = 0; i < in.phi.rows(); ++i)
        for (int j = 0; j < in.phi.cols(); ++j)
            in.phi.at(i, j) = random_hom_poly<Rational>(n + 1, 1, [&] {
                return Rational(static_cast<long long>(next_below(rng, 19)) - 9);
            });
    in.validate();
    return in;
}

// the 2 x n catalecticant (X_0 ... X_{n-1}; X_1 ... X_n): k0 = 1, and the
// minors cut out the rational normal curve of degree n
template <class T>
ENInput<T> monomial_phi(int n) {
    ENInput<T> in;
    in.n = n;
    in.k0 = 1;
    in.vars = default_var_names(n + 1);
    in.phi = GradedMatrix<T>({0, 0}, std::vector<int>(n, 1), n + 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < n; ++j)
            in.phi.at(i, j) = HomPoly<T>::variable(n + 1, i + j);
    in.validate();
    return in;
}

} // namespace gfres
