#pragma once

/*
 * Matrices of homogeneous polynomials between twisted free modules.
 *
 * A map  (+) S(-b_j)  ->  (+) S(-a_i)  is stored with row_twists = (a_i),
 * col_twists = (b_j); entry (i,j) must be zero or homogeneous of degree
 * b_j - a_i.  Twists are listed in the same order as the rows/columns.
 *
 * maximal_minors follows the Laplace-compatible sign conventions:
 *   - wide r <= c: one minor per column subset S (lex order), with the
 *     complement-shuffle sign tau(S) = (-1)^{sum_k (S_k - k)};
 *   - tall r = c+1: the cofactor vector p_k = (-1)^k det(drop row k),
 *     which satisfies p * M = 0 identically;
 *   - tall r > c+1: row subsets, lex order, with tau on the row subset.
 */

#include "gfres/linalg.hpp"
#include "gfres/numeric.hpp"
#include "gfres/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfres {

struct GradingError : std::invalid_argument {
    GradingError(const std::string& what, int i, int j)
        : std::invalid_argument(what), row(i), col(j) {}
    int row, col;
};

template <class T>
struct GradedMatrix {
    std::vector<int> row_twists;
    std::vector<int> col_twists;
    int nvars = 0;
    std::vector<HomPoly<T>> e; // row-major

    GradedMatrix() = default;
    GradedMatrix(std::vector<int> rt, std::vector<int> ct, int nv)
        : row_twists(std::move(rt)), col_twists(std::move(ct)), nvars(nv),
          e(row_twists.size() * col_twists.size(), HomPoly<T>(nv)) {}

    int rows() const { return static_cast<int>(row_twists.size()); }
    int cols() const { return static_cast<int>(col_twists.size()); }
    HomPoly<T>& at(int i, int j) { return e[static_cast<size_t>(i) * cols() + j]; }
    const HomPoly<T>& at(int i, int j) const {
        return e[static_cast<size_t>(i) * cols() + j];
    }

    // zero entries pass; nonzero entries must have degree col - row
    void validate() const {
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j) {
                const auto& p = at(i, j);
                if (p.nvars() != nvars)
                    throw GradingError("entry (" + std::to_string(i) + "," +
                                           std::to_string(j) +
                                           ") lives in the wrong polynomial ring",
                                       i, j);
                if (p.is_zero()) continue;
                int want = col_twists[j] - row_twists[i];
                if (p.degree() != want)
                    throw GradingError(
                        "entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") has degree " + std::to_string(p.degree()) +
                            ", grading requires " + std::to_string(want),
                        i, j);
            }
    }
};

template <class T>
GradedMatrix<T> matmul(const GradedMatrix<T>& a, const GradedMatrix<T>& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner sizes " + std::to_string(a.cols()) +
                                    " and " + std::to_string(b.rows()) + " differ");
    for (int k = 0; k < a.cols(); ++k)
        if (a.col_twists[k] != b.row_twists[k])
            throw std::invalid_argument(
                "matmul: twist mismatch at inner index " + std::to_string(k) + ": " +
                std::to_string(a.col_twists[k]) + " vs " +
                std::to_string(b.row_twists[k]));
    GradedMatrix<T> r(a.row_twists, b.col_twists, a.nvars);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            HomPoly<T> s(a.nvars);
            for (int k = 0; k < a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

template <class T>
GradedMatrix<T> transpose(const GradedMatrix<T>& m) {
    // note: twists of the transpose are negated twists in the graded sense;
    // callers below only use the entry layout, so we keep the raw lists.
    GradedMatrix<T> r(m.col_twists, m.row_twists, m.nvars);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j);
    return r;
}

namespace detail {

// Determinants of M[0..t) x S for every t-subset S of columns, computed by
// memoized Laplace expansion along the last kept row.  Requires rows <= cols.
template <class T>
std::map<std::vector<int>, HomPoly<T>> subset_dets(const GradedMatrix<T>& m) {
    const int r = m.rows(), c = m.cols();
    if (r > c) throw std::logic_error("subset_dets: more rows than columns");
    std::map<std::vector<int>, HomPoly<T>> prev;
    prev[{}] = HomPoly<T>::constant(m.nvars, T(1));
    for (int t = 1; t <= r; ++t) {
        std::map<std::vector<int>, HomPoly<T>> cur;
        for (const auto& s : enumerate_subsets(c, t)) {
            HomPoly<T> det(m.nvars);
            std::vector<int> rest(s.begin(), s.end() - 1); // reused buffer
            for (int k = 0; k < t; ++k) {
                rest.assign(s.begin(), s.end());
                rest.erase(rest.begin() + k);
                const HomPoly<T>& pivot = m.at(t - 1, s[k]);
                if (pivot.is_zero()) continue;
                HomPoly<T> term = pivot * prev.at(rest);
                if ((t - 1 + k) % 2 == 0)
                    det += term;
                else
                    det -= term;
            }
            cur.emplace(s, std::move(det));
        }
        prev = std::move(cur);
    }
    return prev;
}

inline int shuffle_sign(const std::vector<int>& s) {
    long long sum = 0;
    for (size_t k = 0; k < s.size(); ++k) sum += s[k] - static_cast<long long>(k);
    return sum % 2 == 0 ? 1 : -1;
}

} // namespace detail

// See the header comment for the three layout cases.
template <class T>
std::vector<HomPoly<T>> maximal_minors(const GradedMatrix<T>& m) {
    const int r = m.rows(), c = m.cols();
    if (r == 0 || c == 0) throw std::invalid_argument("maximal_minors: empty matrix");
    if (r <= c) {
        auto dets = detail::subset_dets(m);
        std::vector<HomPoly<T>> out;
        for (const auto& s : enumerate_subsets(c, r)) {
            HomPoly<T> v = dets.at(s);
            if (detail::shuffle_sign(s) < 0) v = -v;
            out.push_back(std::move(v));
        }
        return out;
    }
    GradedMatrix<T> tr = transpose(m);
    auto dets = detail::subset_dets(tr); // keyed by kept-row subsets
    if (r == c + 1) {
        // cofactor vector: p[k] = (-1)^k det(M with row k deleted)
        std::vector<HomPoly<T>> out;
        std::vector<int> kept;
        for (int k = 0; k < r; ++k) {
            kept.clear();
            for (int i = 0; i < r; ++i)
                if (i != k) kept.push_back(i);
            HomPoly<T> v = dets.at(kept);
            if (k % 2 != 0) v = -v;
            out.push_back(std::move(v));
        }
        return out;
    }
    std::vector<HomPoly<T>> out;
    for (const auto& s : enumerate_subsets(r, c)) {
        HomPoly<T> v = dets.at(s);
        if (detail::shuffle_sign(s) < 0) v = -v;
        out.push_back(std::move(v));
    }
    return out;
}

template <class T, class U, class Conv>
DenseMatrix<U> evaluate(const GradedMatrix<T>& m, const std::vector<U>& pt, Conv conv) {
    DenseMatrix<U> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(pt, conv);
    return r;
}

inline GradedMatrix<GF> reduce_mod(const GradedMatrix<Rational>& m, long long p) {
    GradedMatrix<GF> r(m.row_twists, m.col_twists, m.nvars);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = reduce_mod(m.at(i, j), p);
    return r;
}

} // namespace gfres
