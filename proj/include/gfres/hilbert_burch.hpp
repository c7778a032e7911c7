#pragma once

/*
 * Random space-curve resolutions in P^3.
 *
 * For the length-2 shape of degree d (see shape3) the middle map is an
 * (r+1) x r matrix M of forms; the cofactor vector of its maximal minors
 * gives the row d_0 with d_0 * M = 0 identically, so
 *
 *     0 -> E_2 --M--> E_1 --minors--> S
 *
 * is a complex whose generator degrees automatically match the twists of
 * E_1 (the column twist sums of the two blocks agree).  Random dense M over
 * F_p is generically exact, which the probabilistic checker confirms.
 */

#include "gfres/complexes.hpp"
#include "gfres/gf.hpp"
#include "gfres/graded_matrix.hpp"
#include "gfres/shapes.hpp"

#include <random>
#include <vector>

namespace gfres {

inline std::vector<int> expand_twists(const std::vector<BettiEntry>& block) {
    std::vector<int> t;
    for (const auto& e : block)
        for (long long k = 0; k < e.mult; ++k) t.push_back(e.twist);
    return t;
}

inline FreeComplex<GF> random_hilbert_burch(long long d, std::uint64_t seed,
                                            long long prime = kDefaultPrime) {
    const BettiShape s = shape3(d);
    std::vector<int> e1 = expand_twists(s.blocks[0]);
    std::vector<int> e2 = expand_twists(s.blocks[1]);

    std::mt19937_64 rng(mix64(seed ^ 0x48422d31ULL));
    GradedMatrix<GF> m(e1, e2, 4);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            int deg = e2[static_cast<size_t>(j)] - e1[static_cast<size_t>(i)];
            if (deg < 0) continue;
            m.at(i, j) = random_hom_poly<GF>(4, deg, [&] {
                return GF::make(static_cast<long long>(next_below(rng, prime)), prime);
            });
        }
    m.validate();

    auto gens = maximal_minors(m); // cofactor vector, gens . M = 0
    GradedMatrix<GF> d0({0}, e1, 4);
    for (int k = 0; k < static_cast<int>(gens.size()); ++k)
        d0.at(0, k) = gens[static_cast<size_t>(k)];

    FreeComplex<GF> c;
    c.n = 3;
    c.vars = default_var_names(4);
    c.blocks = {{0}, e1, e2};
    c.diff = {std::move(d0), std::move(m)};
    VerificationReport rep = check_complex(c);
    if (!rep.pass())
        throw std::logic_error("random_hilbert_burch: cofactor identity failed");
    return c;
}

} // namespace gfres
