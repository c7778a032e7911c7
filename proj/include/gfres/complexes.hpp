#pragma once

/*
 * Finite free complexes  E_{n-1} -> ... -> E_1 -> E_0  of graded modules,
 * plus the two verification tools used throughout:
 *
 *   check_complex            exact: gradings valid and d_i o d_{i+1} = 0,
 *                            reporting every nonzero composite entry;
 *   probabilistic_exactness  evaluates the differentials at random points
 *                            off the zero locus of d_0 and compares ranks
 *                            against the unique telescoping rank pattern
 *                            (rank d_0 = 1, rank d_{i-1} + rank d_i = dim E_i,
 *                            rank d_{n-2} = dim E_{n-1}).
 *
 * Points where every entry of d_0 vanishes are rejected and resampled; after
 * kMaxRejects consecutive rejections the input is reported degenerate.
 */

#include "gfres/graded_matrix.hpp"
#include "gfres/linalg.hpp"
#include "gfres/numeric.hpp"
#include "gfres/report.hpp"
#include "gfres/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

namespace gfres {

inline constexpr int kMaxRejects = 100;

template <class T>
struct FreeComplex {
    int n = 0;                           // number of blocks E_0 .. E_{n-1}
    std::vector<std::string> vars;       // coordinate names of the ambient ring
    std::vector<std::vector<int>> blocks; // blocks[i] = twists of E_i, in row order
    std::vector<GradedMatrix<T>> diff;   // diff[i] : E_{i+1} -> E_i

    int nvars() const { return static_cast<int>(vars.size()); }

    // structural consistency of sizes and twist lists (cheap, exact)
    void validate_layout() const {
        if (n < 2) throw std::invalid_argument("FreeComplex: need at least two blocks");
        if (static_cast<int>(blocks.size()) != n)
            throw std::invalid_argument("FreeComplex: block count != n");
        if (static_cast<int>(diff.size()) != n - 1)
            throw std::invalid_argument("FreeComplex: need n-1 differentials");
        for (int i = 0; i + 1 < n; ++i) {
            if (diff[i].row_twists != blocks[i])
                throw std::invalid_argument("FreeComplex: d_" + std::to_string(i) +
                                            " rows disagree with block " +
                                            std::to_string(i));
            if (diff[i].col_twists != blocks[i + 1])
                throw std::invalid_argument("FreeComplex: d_" + std::to_string(i) +
                                            " columns disagree with block " +
                                            std::to_string(i + 1));
            if (diff[i].nvars != nvars())
                throw std::invalid_argument("FreeComplex: d_" + std::to_string(i) +
                                            " uses a different variable count");
        }
    }

    // aggregate E_1..E_{n-1} into a Betti shape (twists descending per block)
    BettiShape shape() const {
        BettiShape s;
        s.n = n;
        s.provenance = ShapeProvenance::fixture;
        for (int i = 1; i < n; ++i) {
            std::map<int, long long, std::greater<int>> agg;
            for (int t : blocks[i]) ++agg[t];
            std::vector<BettiEntry> blk;
            for (auto [t, m] : agg) blk.push_back({t, m});
            s.blocks.push_back(std::move(blk));
        }
        return s;
    }
};

// Exact verification: every differential respects the grading and all
// composites d_i o d_{i+1} vanish identically.
template <class T>
VerificationReport check_complex(const FreeComplex<T>& c) {
    VerificationReport rep;
    rep.subject = "free complex with " + std::to_string(c.n) + " blocks";
    c.validate_layout();
    for (int i = 0; i + 1 < c.n; ++i) {
        bool ok = true;
        Json detail;
        try {
            c.diff[i].validate();
        } catch (const GradingError& g) {
            ok = false;
            detail["error"] = g.what();
        }
        rep.add("grading of d_" + std::to_string(i), ok, detail);
    }
    for (int i = 0; i + 2 < c.n; ++i) {
        const std::string name =
            "d_" + std::to_string(i) + " o d_" + std::to_string(i + 1) + " = 0";
        Json detail;
        try {
            GradedMatrix<T> comp = matmul(c.diff[i], c.diff[i + 1]);
            Json bad = Json::array();
            for (int r = 0; r < comp.rows(); ++r)
                for (int col = 0; col < comp.cols(); ++col)
                    if (!comp.at(r, col).is_zero()) {
                        Json entry;
                        entry["row"] = r;
                        entry["col"] = col;
                        entry["value"] = comp.at(r, col).str(c.vars);
                        bad.push_back(std::move(entry));
                    }
            if (!bad.empty()) detail["nonzero_entries"] = bad;
            rep.add(name, bad.empty(), detail);
        } catch (const std::exception& e) {
            // grading-inconsistent entries can make the product undefined;
            // that is a failed check, not a crash
            detail["error"] = e.what();
            rep.add(name, false, detail);
        }
    }
    return rep;
}

// the only rank pattern compatible with exactness off the zero locus
inline bool exactness_rank_pattern(const std::vector<long long>& dims,
                                   std::vector<long long>& out) {
    // dims[i] = dim E_i, i = 0..n-1; out[i] = required rank of d_i
    const int n = static_cast<int>(dims.size());
    out.assign(n - 1, 0);
    out[0] = 1;
    for (int i = 1; i + 1 < n; ++i) {
        out[i] = dims[i] - out[i - 1];
        if (out[i] < 0) return false;
        if (out[i] > std::min(dims[i], dims[i + 1])) return false;
    }
    return out[n - 2] == dims[n - 1];
}

struct ExactnessOptions {
    int trials = 20;
    std::uint64_t seed = 1;
    long long prime = kDefaultPrime; // used by the GF overload
    long long coord_range = 101;     // rational points drawn from [-50, 50]
};

namespace detail {

template <class T, class DrawPoint, class Rank>
VerificationReport probabilistic_exactness_impl(const FreeComplex<T>& c,
                                                const ExactnessOptions& opt,
                                                DrawPoint draw_point, Rank rank_of) {
    VerificationReport rep;
    rep.subject = "probabilistic exactness";
    c.validate_layout();

    std::vector<long long> dims;
    for (const auto& b : c.blocks) dims.push_back(static_cast<long long>(b.size()));
    std::vector<long long> expected;
    if (!exactness_rank_pattern(dims, expected)) {
        Json d;
        d["dims"] = dims;
        rep.add("rank pattern exists", false, d);
        return rep;
    }
    {
        Json d;
        d["dims"] = dims;
        d["expected_ranks"] = expected;
        d["trials"] = opt.trials;
        d["seed"] = opt.seed;
        rep.add("rank pattern exists", true, d);
    }

    int rejects_total = 0;
    std::uint64_t draw_index = 0;
    using Point = std::invoke_result_t<DrawPoint, std::mt19937_64&>;
    for (int t = 0; t < opt.trials; ++t) {
        // every draw uses its own generator keyed by a global draw counter,
        // so results are reproducible from (seed, trials) alone
        Point pt;
        int rejects = 0;
        bool degenerate = false;
        while (true) {
            std::mt19937_64 rng(mix64(opt.seed ^ (0x9e3779b97f4a7c15ULL * ++draw_index)));
            auto cand = draw_point(rng);
            bool on_locus = true;
            for (int j = 0; j < c.diff[0].cols() && on_locus; ++j)
                if (!scalar_is_zero(c.diff[0].at(0, j).eval(cand, [](const T& x) { return x; })))
                    on_locus = false;
            // d_0 is 1 x m for resolutions of curves; for general first rows
            // reject only if every entry of every row vanishes
            if (on_locus && c.diff[0].rows() > 1) {
                for (int i = 1; i < c.diff[0].rows() && on_locus; ++i)
                    for (int j = 0; j < c.diff[0].cols() && on_locus; ++j)
                        if (!scalar_is_zero(
                                c.diff[0].at(i, j).eval(cand, [](const T& x) { return x; })))
                            on_locus = false;
            }
            if (!on_locus) {
                pt = std::move(cand);
                break;
            }
            ++rejects;
            ++rejects_total;
            if (rejects >= kMaxRejects) {
                degenerate = true;
                break;
            }
        }
        if (degenerate) {
            Json d;
            d["trial"] = t;
            d["consecutive_rejections"] = rejects;
            rep.add("point off the zero locus of d_0", false, d);
            return rep;
        }
        std::vector<long long> got;
        for (int i = 0; i + 1 < c.n; ++i) {
            auto m = evaluate(c.diff[i], pt, [](const T& x) { return x; });
            got.push_back(rank_of(m));
        }
        bool ok = got == expected;
        Json d;
        d["trial"] = t;
        d["ranks"] = got;
        if (!ok) {
            d["expected"] = expected;
            rep.add("ranks at random point", false, d);
            return rep;
        }
        if (t == 0) rep.add("ranks at random point", true, d); // record one witness
    }
    Json d;
    d["trials"] = opt.trials;
    d["rejections"] = rejects_total;
    rep.add("all trials match the exact rank pattern", true, d);
    return rep;
}

} // namespace detail

inline VerificationReport probabilistic_exactness(const FreeComplex<GF>& c,
                                                  const ExactnessOptions& opt = {}) {
    const long long p = opt.prime;
    auto draw = [&, p](std::mt19937_64& rng) {
        std::vector<GF> pt;
        for (int k = 0; k < c.nvars(); ++k)
            pt.push_back(GF::make(static_cast<long long>(next_below(rng, p)), p));
        return pt;
    };
    return detail::probabilistic_exactness_impl(
        c, opt, draw, [](const DenseMatrix<GF>& m) { return rank_gf(m); });
}

inline VerificationReport probabilistic_exactness(const FreeComplex<Rational>& c,
                                                  const ExactnessOptions& opt = {}) {
    auto draw = [&](std::mt19937_64& rng) {
        std::vector<Rational> pt;
        for (int k = 0; k < c.nvars(); ++k) {
            long long v = static_cast<long long>(next_below(rng, opt.coord_range)) -
                          (opt.coord_range - 1) / 2;
            pt.push_back(Rational(v));
        }
        return pt;
    };
    return detail::probabilistic_exactness_impl(
        c, opt, draw, [](const DenseMatrix<Rational>& m) { return rank_exact(m); });
}

// --- Hilbert data from a Betti shape ---------------------------------------

// H(h) = sum_{i=0}^{n-1} (-1)^i sum_j c(n+1, h - a_{i,j}) with E_0 = S.
inline Int hilbert_function(const BettiShape& s, long long h) {
    const int n = s.n;
    Int acc = binom_dim(n + 1, h);
    int sign = -1;
    for (const auto& blk : s.blocks) {
        for (const auto& e : blk) acc += sign * e.mult * binom_dim(n + 1, h - e.twist);
        sign = -sign;
    }
    return acc;
}

struct HilbertPolynomial {
    long long d = 0;
    long long g = 0;
    long long stable_from = 0; // H(h) = d h - g + 1 for all h >= this
};

// Degree and genus read off the shape, cross-checked against the Hilbert
// function on a window past the largest twist.
inline HilbertPolynomial hilbert_polynomial(const BettiShape& s) {
    ShapeInvariants inv = validate_shape(s); // throws ShapeError when corrupt
    HilbertPolynomial hp;
    hp.d = inv.d;
    hp.g = to_longlong(inv.g, "genus");
    hp.stable_from = 1 + s.max_twist();
    for (long long h = hp.stable_from; h < hp.stable_from + 6; ++h) {
        Int lhs = hilbert_function(s, h);
        Int rhs = Int(hp.d) * h - hp.g + 1;
        if (lhs != rhs) {
            ShapeError err("Hilbert function disagrees with its polynomial at h = " +
                           std::to_string(h) + ": " + lhs.str() + " vs " + rhs.str());
            throw err;
        }
    }
    return hp;
}

} // namespace gfres
