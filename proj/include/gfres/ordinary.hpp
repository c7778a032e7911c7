#pragma once

/*
 * Ordinariness of a finite point configuration in P^{n-1}.
 *
 * weak_ordinary_check: for h = 1..hmax the evaluation matrix (points x
 * degree-h monomials) must have rank min(d, c(n,h)).  Once the rank reaches
 * d at some h it stays d for larger h (multiply by a linear form avoiding
 * the points), so later rows are passed by monotonicity without a new
 * factorization; the record says so.
 *
 * strong_ordinary_check at level h (needs c(n,h) <= d): every c(n,h)-subset
 * of the points must give a nonsingular square evaluation matrix.  Subsets
 * are enumerated exhaustively up to `cap`, then sampled.
 *
 * Numeric ranks use SVD with the relative threshold
 *     sigma > tol * sigma_max * max(rows, cols),
 * and a result is flagged ill-conditioned when some singular value falls
 * within a factor 100 of the threshold on either side.  Rational input is
 * handled exactly (Bareiss), no tolerances involved.
 */

#include "gfres/linalg.hpp"
#include "gfres/numeric.hpp"
#include "gfres/poly.hpp"
#include "gfres/report.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace gfres {

inline constexpr double kRankTol = 1e-8;
inline constexpr long long kSubsetCap = 20000;

template <class T>
struct PointConfiguration {
    int nv = 0; // coordinate count, i.e. the points live in P^{nv-1}
    std::vector<std::vector<T>> pts;

    int count() const { return static_cast<int>(pts.size()); }
};

namespace detail {

inline double abs2(const std::complex<double>& z) { return std::norm(z); }

inline bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

inline bool proportional(const std::vector<std::complex<double>>& a,
                         const std::vector<std::complex<double>>& b) {
    // chordal distance between unit representatives: |a||b| - |<a,b>| small
    std::complex<double> dot = 0;
    double na = 0, nb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * std::conj(b[i]);
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
    }
    double cos2 = std::norm(dot) / (na * nb);
    return 1.0 - cos2 < 1e-14; // sin^2 of the angle
}

inline bool vec_is_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool vec_is_zero(const std::vector<std::complex<double>>& v) {
    double n2 = 0;
    for (const auto& x : v) n2 += std::norm(x);
    return n2 < 1e-24;
}

} // namespace detail

template <class T>
PointConfiguration<T> make_point_configuration(int nv,
                                               std::vector<std::vector<T>> pts) {
    if (nv < 2) throw std::invalid_argument("point configuration: need nv >= 2");
    PointConfiguration<T> c;
    c.nv = nv;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (static_cast<int>(pts[i].size()) != nv)
            throw std::invalid_argument("point " + std::to_string(i) +
                                        " has the wrong coordinate count");
        if (detail::vec_is_zero(pts[i]))
            throw std::invalid_argument("point " + std::to_string(i) +
                                        " is the zero vector");
    }
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (detail::proportional(pts[i], pts[j]))
                throw std::invalid_argument("points " + std::to_string(i) + " and " +
                                            std::to_string(j) +
                                            " coincide in projective space");
    c.pts = std::move(pts);
    return c;
}

// rows: one per (optionally sub-selected) point; cols: degree-h monomials in
// grlex order.  Complex rows are scaled to unit length.
template <class T>
DenseMatrix<T> evaluation_matrix(const PointConfiguration<T>& c, int h,
                                 const std::vector<int>* subset = nullptr) {
    const auto monos = enumerate_monomials(c.nv, h);
    const int rows = subset ? static_cast<int>(subset->size()) : c.count();
    DenseMatrix<T> m(rows, static_cast<int>(monos.size()));
    for (int r = 0; r < rows; ++r) {
        const auto& p = c.pts[subset ? (*subset)[r] : r];
        for (size_t j = 0; j < monos.size(); ++j) {
            T v = T(1);
            for (int k = 0; k < c.nv; ++k)
                for (int e = 0; e < monos[j][k]; ++e) v = v * p[k];
            m.at(r, static_cast<int>(j)) = v;
        }
        if constexpr (std::is_same_v<T, std::complex<double>>) {
            double n2 = 0;
            for (size_t j = 0; j < monos.size(); ++j)
                n2 += std::norm(m.at(r, static_cast<int>(j)));
            double n = std::sqrt(n2);
            if (n > 0)
                for (size_t j = 0; j < monos.size(); ++j)
                    m.at(r, static_cast<int>(j)) /= n;
        }
    }
    return m;
}

struct NumericRank {
    int rank = 0;
    bool ill_conditioned = false;
    double sigma_max = 0, threshold = 0;
};

inline NumericRank numeric_rank(const DenseMatrix<std::complex<double>>& m,
                                double tol = kRankTol) {
    Eigen::MatrixXcd a(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) a(i, j) = m.at(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const auto& sv = svd.singularValues();
    NumericRank r;
    r.sigma_max = sv.size() ? sv(0) : 0.0;
    r.threshold = tol * r.sigma_max * std::max(m.rows, m.cols);
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) > r.threshold) ++r.rank;
        if (sv(i) > r.threshold / 100 && sv(i) < r.threshold * 100)
            r.ill_conditioned = true; // near the decision boundary
    }
    return r;
}

inline long long default_hmax(int nv, long long d) {
    long long h = 1;
    while (binom_dim(nv, h) < d) ++h;
    return h;
}

struct OrdinaryOptions {
    long long hmax = 0; // 0 = default_hmax
    double tol = kRankTol;
    long long cap = kSubsetCap;
    std::uint64_t seed = 1;
};

template <class T>
VerificationReport weak_ordinary_check(const PointConfiguration<T>& c,
                                       OrdinaryOptions opt = {}) {
    VerificationReport rep;
    rep.subject = "weak ordinariness of " + std::to_string(c.count()) + " points in P^" +
                  std::to_string(c.nv - 1);
    const long long d = c.count();
    if (d == 0) throw std::invalid_argument("weak_ordinary_check: no points");
    const long long hmax = opt.hmax > 0 ? opt.hmax : default_hmax(c.nv, d);
    bool reached_full = false;
    for (long long h = 1; h <= hmax; ++h) {
        Int cnh = binom_dim(c.nv, h);
        long long expected = cnh < d ? to_longlong(cnh, "c(n,h)") : d;
        Json detail;
        detail["h"] = h;
        detail["expected_rank"] = expected;
        if (reached_full && expected == d) {
            detail["by_monotonicity"] = true;
            rep.add("rank at degree " + std::to_string(h), true, detail);
            continue;
        }
        bool ok;
        if constexpr (std::is_same_v<T, Rational>) {
            int rank = rank_exact(evaluation_matrix(c, static_cast<int>(h)));
            detail["rank"] = rank;
            ok = rank == expected;
        } else {
            NumericRank nr = numeric_rank(evaluation_matrix(c, static_cast<int>(h)), opt.tol);
            detail["rank"] = nr.rank;
            if (nr.ill_conditioned) detail["warning"] = "singular values near the rank threshold";
            ok = nr.rank == expected;
        }
        if (ok && expected == d) reached_full = true;
        rep.add("rank at degree " + std::to_string(h), ok, detail);
    }
    return rep;
}

template <class T>
VerificationReport strong_ordinary_check(const PointConfiguration<T>& c, long long h,
                                         OrdinaryOptions opt = {}) {
    VerificationReport rep;
    const long long d = c.count();
    Int cnh_big = binom_dim(c.nv, h);
    rep.subject = "strong ordinariness at degree " + std::to_string(h) + " for " +
                  std::to_string(d) + " points in P^" + std::to_string(c.nv - 1);
    if (cnh_big > d) {
        // no c(n,h)-subsets exist; the condition degenerates to the weak one
        Json note;
        note["reason"] = "c(n,h) = " + cnh_big.str() + " exceeds the point count " +
                         std::to_string(d) + "; checking the weak condition at this degree";
        OrdinaryOptions w = opt;
        w.hmax = h;
        VerificationReport weak = weak_ordinary_check(c, w);
        rep.add("delegated to weak check", weak.pass(), note);
        for (auto& ch : weak.checks) rep.checks.push_back(std::move(ch));
        return rep;
    }
    const long long cnh = to_longlong(cnh_big, "c(n,h)");
    Int total = binomial(d, cnh);
    const bool exhaustive = total <= opt.cap;
    Json plan;
    plan["subset_size"] = cnh;
    plan["total_subsets"] = total.str();
    plan["mode"] = exhaustive ? "exhaustive" : "sampled";
    long long tested = 0;
    Json failures = Json::array();

    auto test_subset = [&](const std::vector<int>& s) {
        ++tested;
        bool nonsingular;
        if constexpr (std::is_same_v<T, Rational>) {
            nonsingular = det_exact(evaluation_matrix(c, static_cast<int>(h), &s)) != 0;
        } else {
            NumericRank nr = numeric_rank(evaluation_matrix(c, static_cast<int>(h), &s), opt.tol);
            nonsingular = nr.rank == static_cast<int>(cnh);
        }
        if (!nonsingular && failures.size() < 25) failures.push_back(s);
        return nonsingular;
    };

    bool all_ok = true;
    if (exhaustive) {
        for (const auto& s : enumerate_subsets(static_cast<int>(d), static_cast<int>(cnh)))
            all_ok = test_subset(s) && all_ok;
    } else {
        std::mt19937_64 rng(mix64(opt.seed));
        std::vector<int> idx(static_cast<size_t>(d));
        for (long long i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = static_cast<int>(i);
        for (long long trial = 0; trial < opt.cap; ++trial) {
            // partial Fisher-Yates: the first cnh entries form the sample
            for (long long k = 0; k < cnh; ++k) {
                long long j = k + static_cast<long long>(next_below(rng, static_cast<std::uint64_t>(d - k)));
                std::swap(idx[static_cast<size_t>(k)], idx[static_cast<size_t>(j)]);
            }
            std::vector<int> s(idx.begin(), idx.begin() + static_cast<long>(cnh));
            std::sort(s.begin(), s.end());
            all_ok = test_subset(s) && all_ok;
        }
        plan["seed"] = opt.seed;
    }
    plan["tested"] = tested;
    if (!failures.empty()) plan["singular_subsets"] = failures;
    rep.add("all tested subsets in general position", all_ok, plan);
    return rep;
}

} // namespace gfres
