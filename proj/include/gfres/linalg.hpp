#pragma once

/*
 * Dense matrices over exact scalars, with rank/determinant by Gauss
 * elimination (fields) and fraction-free Bareiss elimination (integers).
 * Rational matrices are ranked exactly by clearing denominators row-wise
 * and running Bareiss over the integers.
 */

#include "gfres/gf.hpp"
#include "gfres/numeric.hpp"
#include "gfres/poly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace gfres {

template <class T>
struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<T> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {
        if (r < 0 || c < 0) throw std::invalid_argument("DenseMatrix: negative size");
    }
    T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// rank over a field (exact ==, exact /); destroys its copy of the input
template <class T>
int rank_field(DenseMatrix<T> m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (!scalar_is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        T inv = T(1) / m.at(rank, col);
        for (int i = rank + 1; i < m.rows; ++i) {
            if (scalar_is_zero(m.at(i, col))) continue;
            T f = m.at(i, col) * inv;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

namespace detail {

// Fraction-free elimination with full pivoting.  Returns (rank, det_of_leading
// r x r block up to recorded sign only meaningful when square & full rank).
inline std::pair<int, Int> bareiss(DenseMatrix<Int> m) {
    const int r = m.rows, c = m.cols;
    int rank = 0;
    int sign = 1;
    Int prev = 1;
    const int steps = r < c ? r : c;
    for (int k = 0; k < steps; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < r && pi < 0; ++i)
            for (int j = k; j < c; ++j)
                if (m.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != k) {
            for (int j = 0; j < c; ++j) std::swap(m.at(pi, j), m.at(k, j));
            sign = -sign;
        }
        if (pj != k) {
            for (int i = 0; i < r; ++i) std::swap(m.at(i, pj), m.at(i, k));
            sign = -sign;
        }
        for (int i = k + 1; i < r; ++i) {
            for (int j = k + 1; j < c; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev; // exact by the Bareiss identity
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
        ++rank;
    }
    return {rank, rank > 0 ? Int(sign * prev) : Int(sign)};
}

} // namespace detail

inline int rank_bareiss(const DenseMatrix<Int>& m) { return detail::bareiss(m).first; }

inline Int det_bareiss(const DenseMatrix<Int>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    if (m.rows == 0) return 1;
    auto [rank, det] = detail::bareiss(m);
    return rank == m.rows ? det : Int(0);
}

// exact rank of a rational matrix: clear denominators per row, then Bareiss
inline int rank_exact(const DenseMatrix<Rational>& m) {
    DenseMatrix<Int> z(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        Int lcm = 1;
        for (int j = 0; j < m.cols; ++j) {
            Int den = boost::multiprecision::denominator(m.at(i, j));
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        for (int j = 0; j < m.cols; ++j) {
            Rational v = m.at(i, j) * Rational(lcm);
            z.at(i, j) = boost::multiprecision::numerator(v);
        }
    }
    return rank_bareiss(z);
}

inline Rational det_exact(const DenseMatrix<Rational>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    if (m.rows == 0) return 1;
    DenseMatrix<Int> z(m.rows, m.cols);
    Rational scale = 1;
    for (int i = 0; i < m.rows; ++i) {
        Int lcm = 1;
        for (int j = 0; j < m.cols; ++j)
            lcm = boost::multiprecision::lcm(
                lcm, Int(boost::multiprecision::denominator(m.at(i, j))));
        scale *= Rational(1, lcm);
        for (int j = 0; j < m.cols; ++j)
            z.at(i, j) = boost::multiprecision::numerator(m.at(i, j) * Rational(lcm));
    }
    return Rational(det_bareiss(z)) * scale;
}

inline int rank_gf(const DenseMatrix<GF>& m) { return rank_field(m); }

} // namespace gfres
