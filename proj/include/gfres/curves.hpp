#pragma once

/*
 * Monomial curves  (t:s) -> (t^a0 s^b0 : ... : t^an s^bn)  with a_j + b_j = e.
 *
 * Validation guarantees the map is a degree-e parameterization birational
 * onto its image: exponents in range, pairwise distinct, and gcd of the
 * pairwise differences a_j - a_k equal to 1.
 *
 * semigroup_hilbert counts the monomials t^a s^{he-a} expressible as
 * degree-h products of the coordinate monomials (dynamic programming on the
 * reachable exponent sets); this equals the Hilbert function of the
 * coordinate ring of the image.
 *
 * verify_ideal_on_curve substitutes the parameterization into polynomial
 * generators exactly (over Q) and reports any surviving terms.
 */

#include "gfres/numeric.hpp"
#include "gfres/poly.hpp"
#include "gfres/report.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gfres {

struct MonomialCurve {
    int n = 0;       // ambient projective dimension
    long long e = 0; // parameterization degree
    std::vector<std::pair<long long, long long>> exps; // (a_j, b_j), j = 0..n
};

inline MonomialCurve make_monomial_curve(int n, long long e,
                                         std::vector<long long> alphas) {
    if (n < 2) throw std::invalid_argument("monomial curve: need n >= 2");
    if (e < 1) throw std::invalid_argument("monomial curve: need degree >= 1");
    if (static_cast<int>(alphas.size()) != n + 1)
        throw std::invalid_argument("monomial curve: expected n+1 exponents");
    MonomialCurve c;
    c.n = n;
    c.e = e;
    for (long long a : alphas) {
        if (a < 0 || a > e)
            throw std::invalid_argument("monomial curve: exponent " +
                                        std::to_string(a) + " outside [0, " +
                                        std::to_string(e) + "]");
        c.exps.emplace_back(a, e - a);
    }
    for (size_t i = 0; i < c.exps.size(); ++i)
        for (size_t j = i + 1; j < c.exps.size(); ++j)
            if (c.exps[i] == c.exps[j])
                throw std::invalid_argument(
                    "monomial curve: coordinates " + std::to_string(i) + " and " +
                    std::to_string(j) + " repeat the same monomial");
    long long g = 0;
    for (size_t j = 1; j < c.exps.size(); ++j)
        g = std::gcd(g, c.exps[j].first - c.exps[0].first);
    if (g < 0) g = -g;
    if (g != 1)
        throw std::invalid_argument(
            "monomial curve: exponent differences share the factor " +
            std::to_string(g) + ", parameterization is not birational");
    return c;
}

// evaluate the parameterization at (t, s); U is any ring with * and pow-by-
// repeated-multiplication semantics (complex<double>, Rational, GF)
template <class U>
std::vector<U> param_eval(const MonomialCurve& c, const U& t, const U& s) {
    auto up = [](const U& x, long long e) {
        U r = U(1);
        for (long long k = 0; k < e; ++k) r = r * x;
        return r;
    };
    std::vector<U> out;
    for (const auto& [a, b] : c.exps) out.push_back(up(t, a) * up(s, b));
    return out;
}

// |{ exponents a : t^a s^{he-a} is a degree-h product of coordinates }|
inline long long semigroup_hilbert(const MonomialCurve& c, long long h) {
    if (h < 0) return 0;
    if (h == 0) return 1;
    std::vector<char> cur(static_cast<size_t>(c.e) + 1, 0), next;
    for (const auto& [a, b] : c.exps) cur[static_cast<size_t>(a)] = 1;
    for (long long step = 2; step <= h; ++step) {
        next.assign(static_cast<size_t>(step * c.e) + 1, 0);
        for (size_t a = 0; a < cur.size(); ++a) {
            if (!cur[a]) continue;
            for (const auto& [aj, bj] : c.exps)
                next[a + static_cast<size_t>(aj)] = 1;
        }
        cur.swap(next);
    }
    long long count = 0;
    for (char f : cur) count += f;
    return count;
}

// exact check that each generator vanishes along the curve; failures list
// the generator index and the surviving t-exponents
inline VerificationReport verify_ideal_on_curve(
    const std::vector<HomPoly<Rational>>& gens, const MonomialCurve& c) {
    VerificationReport rep;
    rep.subject = "ideal generators vanish on the parameterized curve";
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& f = gens[gi];
        if (f.nvars() != c.n + 1)
            throw std::invalid_argument("verify_ideal_on_curve: generator " +
                                        std::to_string(gi) +
                                        " has the wrong variable count");
        // f(t^{a_j} s^{b_j}) collected by total t-exponent; the s-exponent
        // is determined by homogeneity
        std::map<long long, Rational> coef;
        for (const auto& [m, cf] : f.terms()) {
            long long ta = 0;
            for (int j = 0; j <= c.n; ++j) ta += static_cast<long long>(m[j]) * c.exps[j].first;
            coef[ta] += cf;
        }
        Json surviving = Json::array();
        for (const auto& [ta, cf] : coef)
            if (cf != 0) {
                Json e;
                e["t_exponent"] = ta;
                e["coefficient"] = ScalarIO<Rational>::abs_str(cf < 0 ? Rational(-cf) : cf);
                if (cf < 0) e["coefficient"] = "-" + e["coefficient"].get<std::string>();
                surviving.push_back(std::move(e));
            }
        Json detail;
        detail["generator"] = gi;
        if (!surviving.empty()) detail["surviving_terms"] = surviving;
        rep.add("generator " + std::to_string(gi) + " vanishes on the curve",
                surviving.empty(), detail);
    }
    return rep;
}

// text form "n=4 e=5 exps=(2,3)(3,2)(4,1)(5,0)(0,5)" used by fixtures/CLI
inline std::string format_curve(const MonomialCurve& c) {
    std::string s = "n=" + std::to_string(c.n) + " e=" + std::to_string(c.e) + " exps=";
    for (const auto& [a, b] : c.exps)
        s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return s;
}

inline MonomialCurve parse_curve(const std::string& text) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("curve line: " + why +
                                    " (expected 'n=4 e=5 exps=(2,3)(3,2)...')");
    };
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto expect = [&](const std::string& tok) {
        skip_ws();
        if (text.compare(i, tok.size(), tok) != 0) fail("expected '" + tok + "'");
        i += tok.size();
    };
    auto integer = [&]() -> long long {
        skip_ws();
        size_t start = i;
        if (i < text.size() && text[i] == '-') ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail("expected an integer");
        return std::stoll(text.substr(start, i - start));
    };
    expect("n=");
    int n = static_cast<int>(integer());
    expect("e=");
    long long e = integer();
    expect("exps=");
    std::vector<long long> alphas;
    std::vector<long long> betas;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        expect("(");
        alphas.push_back(integer());
        expect(",");
        betas.push_back(integer());
        expect(")");
    }
    MonomialCurve c = make_monomial_curve(n, e, std::move(alphas));
    for (size_t j = 0; j < betas.size(); ++j)
        if (c.exps[j].second != betas[j])
            fail("pair " + std::to_string(j) + " does not sum to e");
    return c;
}

} // namespace gfres
