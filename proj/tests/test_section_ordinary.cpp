#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "gfres/curves.hpp"
#include "gfres/ordinary.hpp"
#include "gfres/parse.hpp"
#include "gfres/section.hpp"

using namespace gfres;
using C = std::complex<double>;

namespace {

MonomialCurve quintic() { return make_monomial_curve(4, 5, {2, 3, 4, 5, 0}); }

std::vector<C> coeffs(std::initializer_list<double> v) {
    std::vector<C> c;
    for (double x : v) c.emplace_back(x, 0.0);
    return c;
}

// the five defining quadrics of the quintic
std::vector<HomPoly<Rational>> quintic_gens() {
    const std::vector<std::string> vars = {"X", "Y", "Z", "T", "U"};
    std::vector<HomPoly<Rational>> gens;
    for (const char* s : {"X^2-ZU", "XY-TU", "Y^2-XZ", "YZ-XT", "Z^2-YT"})
        gens.push_back(parse_poly<Rational>(s, vars, [](long long k) { return Rational(k); }));
    return gens;
}

PointConfiguration<C> coplanar_config() {
    std::vector<std::vector<C>> pts = {{1, 0, 0, 0},
                                       {0, 1, 0, 0},
                                       {0, 0, 1, 0},
                                       {1, 1, 1, 0},  // in the plane of the first three
                                       {1, 2, 3, 1}};
    return make_point_configuration<C>(4, std::move(pts));
}

PointConfiguration<Rational> coplanar_config_q() {
    auto r = [](long long a, long long b, long long c, long long d) {
        return std::vector<Rational>{Rational(a), Rational(b), Rational(c), Rational(d)};
    };
    return make_point_configuration<Rational>(
        4, {r(1, 0, 0, 0), r(0, 1, 0, 0), r(0, 0, 1, 0), r(1, 1, 1, 0), r(1, 2, 3, 1)});
}

} // namespace

TEST_CASE("the section by T - U = 0 consists of the fifth roots of unity", "[section]") {
    SectionResult res = hyperplane_section(quintic(), coeffs({0, 0, 0, 1, -1}));
    REQUIRE(res.roots.size() == 5);
    CHECK(!res.has_infinity_root);
    for (const C& t : res.roots) {
        CHECK(std::abs(std::abs(t) - 1.0) < 1e-10);
        C t5 = t * t * t * t * t;
        CHECK(std::abs(t5 - C(1, 0)) < 1e-10);
    }
    CHECK(res.max_residual < 1e-8);
    CHECK(res.min_chordal > 0.5);
    CHECK(res.config.count() == 5);
    CHECK(res.config.nv == 4);
}

TEST_CASE("degenerate hyperplanes are refused", "[section]") {
    auto c = quintic();
    // T = 0 meets the curve only at the quintuple point t = 0
    CHECK_THROWS_AS(hyperplane_section(c, coeffs({0, 0, 0, 1, 0})), SectionError);
    // U = 0 only at the quintuple point at infinity
    CHECK_THROWS_AS(hyperplane_section(c, coeffs({0, 0, 0, 0, 1})), SectionError);
    // X - Y = 0 has a double point at t = 0
    CHECK_THROWS_AS(hyperplane_section(c, coeffs({1, -1, 0, 0, 0})), SectionError);
    // not hyperplanes at all
    CHECK_THROWS_AS(hyperplane_section(c, coeffs({0, 0, 0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(hyperplane_section(c, coeffs({1, 0})), std::invalid_argument);
}

TEST_CASE("a single root at infinity is picked up as a section point", "[section]") {
    // Z + 3U pulls back to t^4 + 3: four simple finite roots plus (0,0,0,1,0)
    SectionResult res = hyperplane_section(quintic(), coeffs({0, 0, 1, 0, 3}));
    CHECK(res.has_infinity_root);
    REQUIRE(res.roots.size() == 4);
    for (const C& t : res.roots) CHECK(std::abs(std::abs(t) - std::pow(3.0, 0.25)) < 1e-9);
    REQUIRE(res.points.size() == 5);
    const auto& inf = res.points.back();
    for (int j : {0, 1, 2, 4}) CHECK(std::abs(inf[static_cast<size_t>(j)]) < 1e-12);
    CHECK(std::abs(std::abs(inf[3]) - 1.0) < 1e-12);
    CHECK(res.config.count() == 5);
}

TEST_CASE("section points satisfy the curve equations numerically", "[section]") {
    auto c = quintic();
    auto gens = quintic_gens();
    auto conv = [](const Rational& r) { return C(static_cast<double>(r), 0.0); };
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SectionResult res = hyperplane_section(c, random_hyperplane(4, seed));
        REQUIRE(res.config.count() == 5);
        CHECK(res.max_residual < 1e-8);
        for (const auto& pt : res.points)
            for (const auto& f : gens) CHECK(std::abs(f.eval(pt, conv)) < 1e-9);
    }
}

TEST_CASE("the chart is reproducible and seed-dependent", "[section]") {
    auto c = quintic();
    auto h = random_hyperplane(4, 3);
    SectionOptions opt;
    opt.chart_seed = 11;
    auto a = hyperplane_section(c, h, opt);
    auto b = hyperplane_section(c, h, opt);
    REQUIRE(a.config.count() == b.config.count());
    for (int i = 0; i < a.config.count(); ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(a.config.pts[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                  b.config.pts[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    // a different chart changes coordinates but not the underlying roots
    opt.chart_seed = 12;
    auto other = hyperplane_section(c, h, opt);
    REQUIRE(other.roots.size() == a.roots.size());
    for (size_t k = 0; k < a.roots.size(); ++k)
        CHECK(std::abs(a.roots[k] - other.roots[k]) < 1e-14);
}

TEST_CASE("point configurations are validated", "[ordinary]") {
    CHECK_THROWS_AS(make_point_configuration<C>(4, {{0, 0, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_point_configuration<C>(4, {{1, 0, 0}}), std::invalid_argument);
    // (i, -1, 0, 0) = i * (1, i, 0, 0): the same projective point
    CHECK_THROWS_AS(
        make_point_configuration<C>(4, {{C(1, 0), C(0, 1), 0, 0}, {C(0, 1), C(-1, 0), 0, 0}}),
        std::invalid_argument);
    CHECK_NOTHROW(
        make_point_configuration<C>(4, {{C(1, 0), C(0, 1), 0, 0}, {C(0, 1), C(1, 0), 0, 0}}));
}

TEST_CASE("numeric rank pins the tolerance semantics", "[ordinary]") {
    DenseMatrix<C> m(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1e-12; // far below threshold: cleanly rank one
    NumericRank r = numeric_rank(m);
    CHECK(r.rank == 1);
    CHECK(!r.ill_conditioned);
    CHECK(r.sigma_max == Catch::Approx(1.0));

    m.at(1, 1) = 1e-8; // right at the decision boundary
    r = numeric_rank(m);
    CHECK(r.rank == 1);
    CHECK(r.ill_conditioned);

    m.at(1, 1) = 0.5;
    r = numeric_rank(m);
    CHECK(r.rank == 2);
    CHECK(!r.ill_conditioned);
}

TEST_CASE("default degree window", "[ordinary]") {
    CHECK(default_hmax(4, 5) == 2);   // c(4,1) = 4 < 5 <= c(4,2) = 10
    CHECK(default_hmax(4, 15) == 3);  // c(4,2) = 10 < 15 <= c(4,3) = 20
    CHECK(default_hmax(5, 3) == 1);
}

TEST_CASE("hyperplane sections of the quintic are ordinary", "[ordinary]") {
    auto c = quintic();
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        SectionResult res = hyperplane_section(c, random_hyperplane(4, seed));
        VerificationReport weak = weak_ordinary_check(res.config);
        INFO("seed " << seed << ": " << weak.to_json().dump(2));
        CHECK(weak.pass());

        VerificationReport strong = strong_ordinary_check(res.config, 1);
        INFO("seed " << seed << ": " << strong.to_json().dump(2));
        CHECK(strong.pass());
        // five points, subsets of size c(4,1) = 4, checked exhaustively
        CHECK(strong.checks[0].detail["tested"] == 5);
        CHECK(strong.checks[0].detail["mode"] == "exhaustive");
    }
}

TEST_CASE("strong check delegates when subsets cannot fill the degree", "[ordinary]") {
    auto res = hyperplane_section(quintic(), random_hyperplane(4, 7));
    // c(4,2) = 10 exceeds the five section points
    VerificationReport rep = strong_ordinary_check(res.config, 2);
    CHECK(rep.pass());
    REQUIRE(!rep.checks.empty());
    CHECK(rep.checks[0].name == "delegated to weak check");
}

TEST_CASE("four coplanar points pass the weak check but fail the strong one",
          "[ordinary]") {
    SECTION("numeric") {
        auto cfg = coplanar_config();
        VerificationReport weak = weak_ordinary_check(cfg);
        CHECK(weak.pass());
        VerificationReport strong = strong_ordinary_check(cfg, 1);
        CHECK(!strong.pass());
        const auto& detail = strong.checks[0].detail;
        REQUIRE(detail.contains("singular_subsets"));
        REQUIRE(detail["singular_subsets"].size() == 1);
        CHECK(detail["singular_subsets"][0] == std::vector<int>{0, 1, 2, 3});
    }
    SECTION("exact") {
        auto cfg = coplanar_config_q();
        VerificationReport weak = weak_ordinary_check(cfg);
        CHECK(weak.pass());
        VerificationReport strong = strong_ordinary_check(cfg, 1);
        CHECK(!strong.pass());
        CHECK(strong.checks[0].detail["singular_subsets"][0] ==
              std::vector<int>{0, 1, 2, 3});
    }
}

TEST_CASE("exact and numeric ranks agree on rational configurations", "[ordinary]") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coord(-5, 5);
    for (int rep = 0; rep < 6; ++rep) {
        const int d = 6 + rep;
        PointConfiguration<Rational> cq;
        while (true) {
            std::vector<std::vector<Rational>> pts;
            for (int i = 0; i < d; ++i) {
                std::vector<Rational> p(4);
                for (auto& x : p) x = Rational(coord(rng));
                pts.push_back(std::move(p));
            }
            try {
                cq = make_point_configuration<Rational>(4, std::move(pts));
                break;
            } catch (const std::invalid_argument&) { /* redraw */ }
        }
        std::vector<std::vector<C>> cpts;
        for (const auto& p : cq.pts) {
            std::vector<C> cp;
            for (const auto& x : p) cp.emplace_back(static_cast<double>(x), 0.0);
            cpts.push_back(std::move(cp));
        }
        auto cc = make_point_configuration<C>(4, std::move(cpts));

        OrdinaryOptions opt;
        opt.hmax = 3;
        VerificationReport exact = weak_ordinary_check(cq, opt);
        VerificationReport numeric = weak_ordinary_check(cc, opt);
        REQUIRE(exact.checks.size() == numeric.checks.size());
        for (size_t i = 0; i < exact.checks.size(); ++i) {
            INFO("rep " << rep << " " << exact.checks[i].name);
            CHECK(exact.checks[i].pass == numeric.checks[i].pass);
            if (exact.checks[i].detail.contains("rank") &&
                numeric.checks[i].detail.contains("rank"))
                CHECK(exact.checks[i].detail["rank"] == numeric.checks[i].detail["rank"]);
        }
    }
}

TEST_CASE("the sampled branch of the strong check", "[ordinary]") {
    // thirty points on the twisted cubic, parameters on the unit circle: every
    // four points are independent, and C(30,4) = 27405 exceeds the cap
    std::vector<std::vector<C>> pts;
    for (int k = 0; k < 30; ++k) {
        double th = 2.0 * M_PI * k / 30.0;
        C t(std::cos(th), std::sin(th));
        pts.push_back({C(1, 0), t, t * t, t * t * t});
    }
    auto cfg = make_point_configuration<C>(4, std::move(pts));
    OrdinaryOptions opt;
    opt.cap = 500;
    opt.seed = 5;
    VerificationReport rep = strong_ordinary_check(cfg, 1, opt);
    CHECK(rep.pass());
    const auto& detail = rep.checks[0].detail;
    CHECK(detail["mode"] == "sampled");
    CHECK(detail["tested"] == 500);
    CHECK(detail["seed"] == 5);

    // reproducible under the same seed
    auto again = strong_ordinary_check(cfg, 1, opt);
    CHECK(rep.to_json().dump() == again.to_json().dump());
}

TEST_CASE("weak check shortcuts by monotonicity after reaching full rank",
          "[ordinary]") {
    auto res = hyperplane_section(quintic(), random_hyperplane(4, 2));
    OrdinaryOptions opt;
    opt.hmax = 4;
    VerificationReport rep = weak_ordinary_check(res.config, opt);
    CHECK(rep.pass());
    REQUIRE(rep.checks.size() == 4);
    // full rank happens at h = 2; later degrees are inferred, not recomputed
    CHECK(rep.checks[2].detail.contains("by_monotonicity"));
    CHECK(rep.checks[3].detail.contains("by_monotonicity"));
}
