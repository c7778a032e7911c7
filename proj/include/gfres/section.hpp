#pragma once

/*
 * Hyperplane sections of a monomial curve.
 *
 * Substituting the parameterization into a hyperplane sum c_j X_j yields a
 * binary form of degree e; its e roots (t:s), counted in P^1, are the
 * section points.  Roots are computed as eigenvalues of the balanced
 * companion matrix of the dehomogenization at s = 1; vanishing leading
 * coefficients correspond to roots at (1:0).
 *
 * Non-generic hyperplanes -- repeated roots, or two or more roots at
 * infinity -- raise SectionError.  Generic ones produce d = e distinct
 * points; a seeded random chart matrix (its last row equal to the
 * hyperplane) maps them into P^{n-1} as a PointConfiguration ready for the
 * ordinariness checks.
 */

#include "gfres/curves.hpp"
#include "gfres/ordinary.hpp"
#include "gfres/report.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfres {

struct SectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SectionResult {
    std::vector<std::complex<double>> roots; // finite roots t (s = 1)
    bool has_infinity_root = false;
    std::vector<std::vector<std::complex<double>>> points; // ambient, unit norm
    PointConfiguration<std::complex<double>> config;       // chart coordinates
    double max_residual = 0; // |c . x| / |c| over returned points
    double min_chordal = 0;  // smallest pairwise distance in P^n

    Json to_json() const {
        Json j;
        Json rt = Json::array();
        for (const auto& r : roots) rt.push_back({{"re", r.real()}, {"im", r.imag()}});
        j["finite_roots"] = std::move(rt);
        j["infinity_root"] = has_infinity_root;
        j["max_residual"] = max_residual;
        j["min_pairwise_chordal"] = min_chordal;
        j["points_in_chart"] = config.count();
        return j;
    }
};

namespace detail {

// Parlett-Reinsch style balancing with powers of two (exact in binary)
inline void balance_in_place(Eigen::MatrixXcd& a) {
    const int n = static_cast<int>(a.rows());
    for (int sweep = 0; sweep < 8; ++sweep) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            double r = 0, c = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    r += std::abs(a(i, j));
                    c += std::abs(a(j, i));
                }
            if (r == 0 || c == 0) continue;
            double f = 1;
            while (c < r / 2) {
                c *= 2;
                r /= 2;
                f *= 2;
            }
            while (c > r * 2) {
                c /= 2;
                r *= 2;
                f /= 2;
            }
            if (f != 1) {
                changed = true;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
        if (!changed) break;
    }
}

inline double chordal(const std::vector<std::complex<double>>& a,
                      const std::vector<std::complex<double>>& b) {
    // both assumed unit vectors; sin of the principal angle
    std::complex<double> dot = 0;
    for (size_t i = 0; i < a.size(); ++i) dot += a[i] * std::conj(b[i]);
    double c2 = std::min(1.0, std::norm(dot));
    return std::sqrt(1.0 - c2);
}

} // namespace detail

struct SectionOptions {
    std::uint64_t chart_seed = 1;
    double tol = kRankTol;          // residual acceptance for returned points
    double separation = 1e-7;       // minimal allowed pairwise chordal distance
    double leading_coef_rel = 1e-12; // relative cutoff for degree drop
};

inline SectionResult hyperplane_section(const MonomialCurve& curve,
                                        const std::vector<std::complex<double>>& coeffs,
                                        SectionOptions opt = {}) {
    using C = std::complex<double>;
    if (static_cast<int>(coeffs.size()) != curve.n + 1)
        throw std::invalid_argument("hyperplane_section: expected n+1 coefficients");

    // binary form coefficients by t-exponent
    std::vector<C> a(static_cast<size_t>(curve.e) + 1, C(0));
    for (size_t j = 0; j < coeffs.size(); ++j)
        a[static_cast<size_t>(curve.exps[j].first)] += coeffs[j];
    double amax = 0;
    for (const C& x : a) amax = std::max(amax, std::abs(x));
    if (amax == 0) throw std::invalid_argument("hyperplane_section: zero hyperplane");

    long long m = -1;
    for (long long k = curve.e; k >= 0; --k)
        if (std::abs(a[static_cast<size_t>(k)]) > opt.leading_coef_rel * amax) {
            m = k;
            break;
        }
    if (m < 0) throw std::invalid_argument("hyperplane_section: zero hyperplane");
    const long long inf_count = curve.e - m;
    if (inf_count >= 2)
        throw SectionError("non-generic hyperplane: root at infinity with multiplicity " +
                           std::to_string(inf_count));

    SectionResult res;
    res.has_infinity_root = inf_count == 1;

    if (m > 0) {
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(m, m);
        for (long long i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
        for (long long k = 0; k < m; ++k)
            comp(k, m - 1) = -a[static_cast<size_t>(k)] / a[static_cast<size_t>(m)];
        detail::balance_in_place(comp);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
        if (es.info() != Eigen::Success)
            throw SectionError("eigenvalue iteration failed to converge");
        for (long long k = 0; k < m; ++k) res.roots.push_back(es.eigenvalues()(k));
    }

    // ambient points, normalized parameters first for conditioning
    for (const C& t : res.roots) {
        double s2 = 1.0 / std::sqrt(1.0 + std::norm(t));
        auto pt = param_eval<C>(curve, t * s2, C(s2));
        double n2 = 0;
        for (const C& x : pt) n2 += std::norm(x);
        double nrm = std::sqrt(n2);
        for (C& x : pt) x /= nrm;
        res.points.push_back(std::move(pt));
    }
    if (res.has_infinity_root) {
        auto pt = param_eval<C>(curve, C(1), C(0));
        double n2 = 0;
        for (const C& x : pt) n2 += std::norm(x);
        double nrm = std::sqrt(n2);
        for (C& x : pt) x /= nrm;
        res.points.push_back(std::move(pt));
    }

    // distinctness in P^n
    res.min_chordal = 2.0;
    for (size_t i = 0; i < res.points.size(); ++i)
        for (size_t j = i + 1; j < res.points.size(); ++j)
            res.min_chordal =
                std::min(res.min_chordal, detail::chordal(res.points[i], res.points[j]));
    if (res.points.size() > 1 && res.min_chordal < opt.separation)
        throw SectionError(
            "non-generic hyperplane: section points collide (min chordal distance " +
            std::to_string(res.min_chordal) + ")");

    // residual of the section equation at each returned point
    double cn2 = 0;
    for (const C& x : coeffs) cn2 += std::norm(x);
    const double cnorm = std::sqrt(cn2);
    for (const auto& pt : res.points) {
        C dot = 0;
        for (size_t j = 0; j < pt.size(); ++j) dot += coeffs[j] * pt[j];
        res.max_residual = std::max(res.max_residual, std::abs(dot) / cnorm);
    }
    if (res.max_residual > 1e-6)
        throw SectionError("section points fail the hyperplane equation (residual " +
                           std::to_string(res.max_residual) + ")");

    // seeded chart: random rows on top, the hyperplane itself as last row
    const int nv = curve.n + 1;
    std::mt19937_64 rng(mix64(opt.chart_seed));
    Eigen::MatrixXcd chart(nv, nv);
    for (int attempt = 0;; ++attempt) {
        for (int i = 0; i + 1 < nv; ++i)
            for (int j = 0; j < nv; ++j)
                chart(i, j) =
                    C((static_cast<double>(next_below(rng, 2001)) - 1000.0) / 1000.0, 0);
        for (int j = 0; j < nv; ++j) chart(nv - 1, j) = coeffs[static_cast<size_t>(j)];
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(chart);
        if (lu.isInvertible()) break;
        if (attempt >= 50)
            throw SectionError("failed to draw an invertible chart matrix");
    }

    std::vector<std::vector<C>> chart_pts;
    for (const auto& pt : res.points) {
        Eigen::VectorXcd x(nv);
        for (int j = 0; j < nv; ++j) x(j) = pt[static_cast<size_t>(j)];
        Eigen::VectorXcd y = chart * x;
        std::vector<C> q(static_cast<size_t>(nv - 1));
        for (int j = 0; j + 1 < nv; ++j) q[static_cast<size_t>(j)] = y(j);
        chart_pts.push_back(std::move(q));
    }
    res.config = make_point_configuration<C>(nv - 1, std::move(chart_pts));
    return res;
}

// convenience: a seeded random real hyperplane
inline std::vector<std::complex<double>> random_hyperplane(int n, std::uint64_t seed) {
    std::mt19937_64 rng(mix64(seed ^ 0x5bd1e995u));
    std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
    for (auto& x : c)
        x = std::complex<double>(
            (static_cast<double>(next_below(rng, 2001)) - 1000.0) / 1000.0, 0);
    return c;
}

} // namespace gfres
