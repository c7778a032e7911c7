#pragma once

/*
 * Betti shapes: the twist/multiplicity data of a length-(n-1) graded free
 * resolution  0 -> E_{n-1} -> ... -> E_1 -> O  of a curve in P^n.
 *
 * solve_shape(n,d) produces the minimal shape attached to (n,d): writing
 * m_i = (n-1)!/delta_i * (d_i - d), block E_i carries twist k0+i with
 * multiplicity m_i for i <= i0 and twist k0+i+1 with multiplicity -m_{i+1}
 * for i >= i0 (both at i = i0); zero multiplicities are dropped.  The
 * half-open pivot rule makes every multiplicity a nonnegative integer;
 * this is checked, never assumed.
 *
 * validate_shape computes the signed power sums
 *
 *   T_p = sum_{i=1}^{n-1} (-1)^{i+1} sum_j mult_{j,i} * twist_{j,i}^p
 *
 * and enforces T_0 = 1, T_p = 0 for 1 <= p <= n-2,
 * T_{n-1} = (-1)^n (n-1)! d and T_n = (-1)^n n! (g - 1 + (n+1)d/2) with
 * d, g integral.  The (-1)^n factor is forced: expanding the alternating
 * Hilbert-series kernel sum_i (-1)^i sum_j x^{a_{j,i}} = (1-x)^{n-1} Q(x)
 * gives d = Q(1) = (-1)^{n-1}/(n-1)! * K^{(n-1)}(1), and every shape listed
 * in the length-2 catalogue for P^3 (e.g. the twisted cubic: T_2 = -6 = -2!*3)
 * confirms it; with even n the factor is invisible.
 */

#include "gfres/combinat.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gfres {

using ordered_json = nlohmann::ordered_json;

enum class ShapeProvenance { solved, redundancy_added, fixture, eagon_northcott };

inline const char* to_string(ShapeProvenance p) {
    switch (p) {
        case ShapeProvenance::solved: return "solved";
        case ShapeProvenance::redundancy_added: return "redundancy-added";
        case ShapeProvenance::fixture: return "fixture";
        case ShapeProvenance::eagon_northcott: return "eagon-northcott";
    }
    return "?";
}

struct BettiEntry {
    int twist = 0;
    long long mult = 0;
    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

struct BettiShape {
    int n = 0;
    // blocks[i-1] describes E_i, i = 1..n-1; entries sorted by descending
    // twist, multiplicities positive, twists within a block distinct.
    std::vector<std::vector<BettiEntry>> blocks;
    ShapeProvenance provenance = ShapeProvenance::solved;

    int max_twist() const {
        int m = 0;
        for (const auto& b : blocks)
            for (const auto& e : b) m = std::max(m, e.twist);
        return m;
    }

    long long rank(int i) const { // rank of E_i, i >= 1
        long long r = 0;
        for (const auto& e : blocks.at(i - 1)) r += e.mult;
        return r;
    }

    friend bool operator==(const BettiShape& a, const BettiShape& b) {
        return a.n == b.n && a.blocks == b.blocks; // provenance is advisory
    }
};

struct ShapeInvariants {
    std::vector<Int> T; // T[p], p = 0..n
    long long d = 0;
    Int g;
};

struct ShapeError : std::runtime_error {
    std::vector<int> violated; // indices p of the violated T_p identities
    explicit ShapeError(const std::string& msg, std::vector<int> v = {})
        : std::runtime_error(msg), violated(std::move(v)) {}
};

namespace detail {

inline void sort_block(std::vector<BettiEntry>& b) {
    std::sort(b.begin(), b.end(),
              [](const BettiEntry& x, const BettiEntry& y) { return x.twist > y.twist; });
}

/// Structural well-formedness: positive data, distinct twists per block,
/// weak monotonicity min twist(E_{i+1}) >= max twist(E_i).
inline std::optional<std::string> malformed_reason(const BettiShape& s) {
    if (s.n < 3) return "ambient dimension n must be >= 3";
    if ((int)s.blocks.size() != s.n - 1)
        return "expected " + std::to_string(s.n - 1) + " blocks, found " +
               std::to_string(s.blocks.size());
    for (int i = 1; i <= s.n - 1; ++i) {
        const auto& b = s.blocks[i - 1];
        if (b.empty()) return "block E_" + std::to_string(i) + " is empty";
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].mult <= 0)
                return "nonpositive multiplicity in E_" + std::to_string(i);
            if (b[j].twist <= 0)
                return "nonpositive twist in E_" + std::to_string(i);
            if (j + 1 < b.size() && b[j].twist <= b[j + 1].twist)
                return "twists in E_" + std::to_string(i) +
                       " not strictly descending (duplicate or unsorted)";
        }
    }
    for (int i = 1; i <= s.n - 2; ++i) {
        int max_lower = s.blocks[i - 1].front().twist;      // descending order
        int min_upper = s.blocks[i].back().twist;
        if (min_upper < max_lower)
            return "weak monotonicity violated between E_" + std::to_string(i) +
                   " and E_" + std::to_string(i + 1);
    }
    return std::nullopt;
}

/// Core of solve_shape with an explicit pivot; exposed so tests can verify
/// that admissible pivot choices at interval endpoints give equal shapes.
inline BettiShape solve_shape_with_pivot(int n, long long d, int i0) {
    TwistProfile tp = twist_profile(n, d);
    const Int fnm1 = factorial(n - 1);

    auto multiplicity = [&](int i, bool above) -> long long {
        // above=false: (n-1)!/delta_i * (d_i - d); above=true: the negative.
        Rational m = Rational(fnm1, tp.delta[i - 1]) *
                     (above ? Rational(d) - tp.d_crit[i - 1]
                            : tp.d_crit[i - 1] - Rational(d));
        if (!is_integer(m) || m < 0)
            throw ShapeError("solve_shape: multiplicity for twist k0+" +
                             std::to_string(i) + " is not a nonnegative integer: " +
                             m.str());
        return to_longlong(numerator(m), "shape multiplicity");
    };

    BettiShape s;
    s.n = n;
    s.provenance = ShapeProvenance::solved;
    s.blocks.resize(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<BettiEntry> blk;
        if (i >= i0) { // twist k0+i+1, multiplicity from d - d_{i+1}
            long long m = multiplicity(i + 1, true);
            if (m > 0) blk.push_back({int(tp.k0) + i + 1, m});
        }
        if (i <= i0) { // twist k0+i, multiplicity from d_i - d
            long long m = multiplicity(i, false);
            if (m > 0) blk.push_back({int(tp.k0) + i, m});
        }
        if (blk.empty())
            throw ShapeError("solve_shape: block E_" + std::to_string(i) +
                             " came out empty");
        s.blocks[i - 1] = std::move(blk);
    }
    if (auto r = malformed_reason(s)) throw ShapeError("solve_shape: " + *r);
    return s;
}

} // namespace detail

inline BettiShape solve_shape(int n, long long d) {
    TwistProfile tp = twist_profile(n, d);
    return detail::solve_shape_with_pivot(n, d, tp.i0);
}

/// Stack u extra copies of the same twist onto E_{i+1} and E_i (1 <= i <= n-2).
/// The added summands cancel in every T_p, so all invariants are unchanged.
inline BettiShape add_redundancy(const BettiShape& s, int i, int twist, long long u) {
    if (i < 1 || i > s.n - 2)
        throw std::invalid_argument("add_redundancy: need 1 <= i <= n-2");
    if (u <= 0) throw std::invalid_argument("add_redundancy: need u > 0");
    BettiShape r = s;
    for (int blk : {i, i + 1}) {
        auto& b = r.blocks[blk - 1];
        auto it = std::find_if(b.begin(), b.end(),
                               [&](const BettiEntry& e) { return e.twist == twist; });
        if (it != b.end())
            it->mult += u;
        else
            b.push_back({twist, u});
        detail::sort_block(b);
    }
    if (auto reason = detail::malformed_reason(r))
        throw std::invalid_argument("add_redundancy: twist " + std::to_string(twist) +
                                    " not admissible: " + *reason);
    r.provenance = ShapeProvenance::redundancy_added;
    return r;
}

/// Power-sum validation; returns T_0..T_n and the derived (d, g) on success,
/// throws ShapeError listing every violated identity otherwise.
inline ShapeInvariants validate_shape(const BettiShape& s) {
    if (auto reason = detail::malformed_reason(s))
        throw ShapeError("validate_shape: " + *reason);

    const int n = s.n;
    ShapeInvariants inv;
    for (int p = 0; p <= n; ++p) {
        Int t = 0;
        for (int i = 1; i <= n - 1; ++i) {
            Int inner = 0;
            for (const auto& e : s.blocks[i - 1]) {
                Int pw = 1;
                for (int q = 0; q < p; ++q) pw *= e.twist;
                inner += Int(e.mult) * pw;
            }
            t += (i % 2 == 1) ? inner : -inner;
        }
        inv.T.push_back(t);
    }

    std::vector<int> violated;
    std::ostringstream oss;
    auto complain = [&](int p, const std::string& what) {
        violated.push_back(p);
        if (!violated.empty() && violated.size() > 1) oss << "; ";
        oss << "T_" << p << " " << what;
    };

    if (inv.T[0] != 1) complain(0, "= " + inv.T[0].str() + " (expected 1)");
    for (int p = 1; p <= n - 2; ++p)
        if (inv.T[p] != 0) complain(p, "= " + inv.T[p].str() + " (expected 0)");

    const int sn = (n % 2 == 0) ? 1 : -1; // the (-1)^n normalization
    const Int fnm1 = factorial(n - 1);
    Int ttop = sn * inv.T[n - 1];
    if (ttop <= 0 || ttop % fnm1 != 0) {
        complain(n - 1, "= " + inv.T[n - 1].str() + " (expected (-1)^n * (n-1)! * d, i.e. " +
                            (sn > 0 ? "+" : "-") + std::string("a positive multiple of ") +
                            fnm1.str() + ")");
    } else {
        inv.d = to_longlong(ttop / fnm1, "degree");
    }

    // (-1)^n T_n = n! (g - 1 + (n+1)d/2)  =>  g = (-1)^n T_n/n! + 1 - (n+1)d/2
    if (violated.empty()) {
        Rational g = Rational(sn * inv.T[n], factorial(n)) + 1 -
                     Rational((n + 1) * Int(inv.d), 2);
        if (!is_integer(g))
            complain(n, "gives non-integral genus " + g.str());
        else
            inv.g = numerator(g);
    }

    if (!violated.empty())
        throw ShapeError("shape invariants violated: " + oss.str(), violated);
    return inv;
}

/// Length-2 catalogue for curves in P^3 of degree d: with r = d - c(3,k0)
/// and t = c(3,k0+1) - d (so r + t = k0 + 2),
///   t >= r+1:  E_2 = (k0+3)^r (k0+2)^{t-r-1},  E_1 = (k0+1)^t
///   t <= r+1:  E_2 = (k0+3)^r,                  E_1 = (k0+2)^{r+1-t} (k0+1)^t
/// (zero-multiplicity summands dropped; both cases agree when t = r+1).
inline BettiShape shape3(long long d) {
    long long k0 = caliber(3, d);
    long long r = d - to_longlong(binom_dim(3, k0), "c(3,k0)");
    long long t = to_longlong(binom_dim(3, k0 + 1), "c(3,k0+1)") - d;
    if (r + t != k0 + 2) throw std::logic_error("shape3: r + t != k0 + 2");

    BettiShape s;
    s.n = 3;
    s.provenance = ShapeProvenance::solved;
    s.blocks.resize(2);
    auto push = [](std::vector<BettiEntry>& b, long long twist, long long mult) {
        if (mult > 0) b.push_back({int(twist), mult});
    };
    if (t >= r + 1) {
        push(s.blocks[1], k0 + 3, r);
        push(s.blocks[1], k0 + 2, t - r - 1);
        push(s.blocks[0], k0 + 1, t);
    } else {
        push(s.blocks[1], k0 + 3, r);
        push(s.blocks[0], k0 + 2, r + 1 - t);
        push(s.blocks[0], k0 + 1, t);
    }
    if (!(s == solve_shape(3, d)))
        throw std::logic_error("shape3: catalogue disagrees with solve_shape(3,d)");
    return s;
}

// ---- JSON serialization -------------------------------------------------

inline ordered_json shape_to_json(const BettiShape& s) {
    ordered_json j;
    j["n"] = s.n;
    ordered_json blocks = ordered_json::array();
    for (const auto& b : s.blocks) {
        ordered_json blk = ordered_json::array();
        for (const auto& e : b) blk.push_back({{"twist", e.twist}, {"mult", e.mult}});
        blocks.push_back(blk);
    }
    j["blocks"] = blocks;
    return j;
}

inline BettiShape shape_from_json(const nlohmann::json& j) {
    BettiShape s;
    s.n = j.at("n").get<int>();
    for (const auto& blk : j.at("blocks")) {
        std::vector<BettiEntry> b;
        for (const auto& e : blk)
            b.push_back({e.at("twist").get<int>(), e.at("mult").get<long long>()});
        detail::sort_block(b);
        s.blocks.push_back(std::move(b));
    }
    s.provenance = ShapeProvenance::fixture;
    if (auto reason = detail::malformed_reason(s))
        throw ShapeError("shape_from_json: " + *reason);
    return s;
}

} // namespace gfres
