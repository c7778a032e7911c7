#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gfres/graded_matrix.hpp"
#include "gfres/linalg.hpp"
#include "gfres/parse.hpp"

using namespace gfres;

namespace {

const std::vector<std::string> kVars4 = {"X", "Y", "Z", "T"};

HomPoly<Rational> q4(const std::string& text) {
    return parse_poly<Rational>(text, kVars4, [](long long k) { return Rational(k); });
}

DenseMatrix<Int> int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    DenseMatrix<Int> m(static_cast<int>(rows.size()),
                       static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (long long v : r) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

DenseMatrix<Rational> to_rational(const DenseMatrix<Int>& m) {
    DenseMatrix<Rational> r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(i, j) = Rational(m.at(i, j));
    return r;
}

// the catalecticant rows (X_{i+j}) on four variables: the twisted-cubic matrix
GradedMatrix<Rational> twisted_cubic_phi() {
    GradedMatrix<Rational> m({0, 0}, {1, 1, 1}, 4);
    const char* entries[2][3] = {{"X", "Y", "Z"}, {"Y", "Z", "T"}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = q4(entries[i][j]);
    return m;
}

} // namespace

TEST_CASE("fraction-free determinant agrees with closed forms", "[linalg]") {
    SECTION("Vandermonde") {
        const std::vector<long long> xs = {2, -1, 3, 7};
        const int n = static_cast<int>(xs.size());
        DenseMatrix<Int> v(n, n);
        for (int i = 0; i < n; ++i) {
            Int p = 1;
            for (int j = 0; j < n; ++j) {
                v.at(i, j) = p;
                p *= xs[i];
            }
        }
        Int expect = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) expect *= Int(xs[j] - xs[i]);
        CHECK(det_bareiss(v) == expect);
    }
    SECTION("permutation and singular matrices") {
        CHECK(det_bareiss(int_matrix({{0, 1}, {1, 0}})) == -1);
        CHECK(det_bareiss(int_matrix({{1, 2}, {2, 4}})) == 0);
        CHECK(det_bareiss(int_matrix({{5}})) == 5);
    }
    SECTION("random matrices: Bareiss equals rational elimination") {
        std::mt19937_64 rng(31);
        std::uniform_int_distribution<long long> coef(-20, 20);
        for (int rep = 0; rep < 15; ++rep) {
            int n = 2 + static_cast<int>(rep % 4);
            DenseMatrix<Int> m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = coef(rng);
            CHECK(Rational(det_bareiss(m)) == det_exact(to_rational(m)));
            CHECK(rank_bareiss(m) == rank_exact(to_rational(m)));
        }
    }
}

TEST_CASE("rank over exact fields", "[linalg]") {
    CHECK(rank_bareiss(int_matrix({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}})) == 2);
    CHECK(rank_bareiss(int_matrix({{0, 0}, {0, 0}})) == 0);

    DenseMatrix<Rational> r(2, 2);
    r.at(0, 0) = Rational(1, 2);
    r.at(0, 1) = Rational(1, 3);
    r.at(1, 0) = Rational(1, 4);
    r.at(1, 1) = Rational(1, 6);
    CHECK(rank_exact(r) == 1); // second row is half the first

    DenseMatrix<GF> g(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.at(i, j) = GF::make((i + 1) * (j + 2), 101);
    CHECK(rank_gf(g) == 1); // rank-one outer product
    g.at(2, 2) = GF::make(7, 101);
    CHECK(rank_gf(g) == 2);
}

TEST_CASE("grading validation names the offending entry", "[graded]") {
    GradedMatrix<Rational> m({0, 0}, {1, 2}, 4);
    m.at(0, 0) = q4("X");
    m.at(0, 1) = q4("Y^2-XZ");
    m.at(1, 1) = q4("T^2");
    // zero entry at (1,0) passes
    CHECK_NOTHROW(m.validate());

    m.at(1, 0) = q4("Z^2"); // degree 2 in a degree-1 slot
    try {
        m.validate();
        FAIL("expected GradingError");
    } catch (const GradingError& e) {
        CHECK(e.row == 1);
        CHECK(e.col == 0);
        const std::string msg = e.what();
        CHECK(msg.find("(1,0)") != std::string::npos);
        CHECK(msg.find("degree 2") != std::string::npos);
        CHECK(msg.find("requires 1") != std::string::npos);
    }
}

TEST_CASE("graded multiplication checks the inner twists", "[graded]") {
    GradedMatrix<Rational> a({0}, {1, 1}, 4), good({1, 1}, {2}, 4), bad({1, 2}, {3}, 4);
    a.at(0, 0) = q4("X");
    a.at(0, 1) = q4("Y");
    good.at(0, 0) = q4("Y");
    good.at(1, 0) = q4("-X");
    CHECK(matmul(a, good).at(0, 0).is_zero());
    CHECK_THROWS_AS(matmul(a, bad), std::invalid_argument);

    GradedMatrix<Rational> wrong_size({1}, {2}, 4);
    CHECK_THROWS_AS(matmul(a, wrong_size), std::invalid_argument);
}

TEST_CASE("maximal minors of a wide matrix carry the shuffle sign", "[graded]") {
    auto minors = maximal_minors(twisted_cubic_phi());
    REQUIRE(minors.size() == 3);
    CHECK(minors[0] == q4("XZ-Y^2"));
    CHECK(minors[1] == -q4("XT-YZ")); // odd shuffle for columns {0,2}
    CHECK(minors[2] == q4("YT-Z^2"));
}

TEST_CASE("cofactor vector of a tall-by-one matrix annihilates it", "[graded]") {
    SECTION("transposed catalecticant") {
        GradedMatrix<Rational> m({0, 0, 0}, {1, 1}, 4);
        const char* entries[3][2] = {{"X", "Y"}, {"Y", "Z"}, {"Z", "T"}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) m.at(i, j) = q4(entries[i][j]);
        auto p = maximal_minors(m);
        REQUIRE(p.size() == 3);
        CHECK(p[0] == q4("YT-Z^2"));
        CHECK(p[1] == -q4("XT-YZ"));
        CHECK(p[2] == q4("XZ-Y^2"));
        for (int j = 0; j < 2; ++j) {
            HomPoly<Rational> dot(4);
            for (int i = 0; i < 3; ++i) dot += p[i] * m.at(i, j);
            CHECK(dot.is_zero());
        }
    }
    SECTION("random linear entries") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> coef(-4, 4);
        for (int rep = 0; rep < 6; ++rep) {
            GradedMatrix<Rational> m({0, 0, 0, 0}, {1, 1, 1}, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 3; ++j)
                    m.at(i, j) = random_hom_poly<Rational>(
                        4, 1, [&] { return Rational(coef(rng)); });
            auto p = maximal_minors(m);
            REQUIRE(p.size() == 4);
            for (int j = 0; j < 3; ++j) {
                HomPoly<Rational> dot(4);
                for (int i = 0; i < 4; ++i) dot += p[i] * m.at(i, j);
                INFO("rep " << rep << " column " << j);
                CHECK(dot.is_zero());
            }
        }
    }
}

TEST_CASE("row-subset minors for very tall matrices", "[graded]") {
    // 4 x 2: six 2 x 2 minors over row subsets, lex order, with the shuffle sign
    GradedMatrix<Rational> m({0, 0, 0, 0}, {1, 1}, 4);
    const char* entries[4][2] = {{"X", "Y"}, {"Y", "Z"}, {"Z", "T"}, {"T", "X"}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = q4(entries[i][j]);
    auto minors = maximal_minors(m);
    REQUIRE(minors.size() == 6);
    CHECK(minors[0] == q4("XZ-Y^2"));   // rows {0,1}, even shuffle
    CHECK(minors[1] == -q4("XT-YZ"));   // rows {0,2}, odd shuffle
    CHECK(minors[2] == q4("X^2-YT"));   // rows {0,3}, even shuffle
    CHECK(minors[5] == q4("ZX-T^2"));   // rows {2,3}, even shuffle
}

TEST_CASE("evaluation of a graded matrix and numeric agreement", "[graded]") {
    auto m = twisted_cubic_phi();
    std::vector<Rational> pt = {Rational(1), Rational(2), Rational(4), Rational(8)};
    auto conv = [](const Rational& c) { return c; };
    auto dm = evaluate(m, pt, conv);
    // the point lies on the twisted cubic (1, t, t^2, t^3), so rank drops to 1
    CHECK(rank_exact(dm) == 1);
    std::vector<Rational> off = {Rational(1), Rational(2), Rational(4), Rational(9)};
    CHECK(rank_exact(evaluate(m, off, conv)) == 2);
}

TEST_CASE("reduction of a graded matrix mod p", "[graded]") {
    auto m = twisted_cubic_phi();
    auto g = reduce_mod(m, 13);
    CHECK(g.rows() == 2);
    CHECK(g.cols() == 3);
    CHECK_NOTHROW(g.validate());
    auto minors_q = maximal_minors(m);
    auto minors_p = maximal_minors(g);
    REQUIRE(minors_q.size() == minors_p.size());
    for (size_t i = 0; i < minors_q.size(); ++i)
        CHECK(reduce_mod(minors_q[i], 13) == minors_p[i]);
}

TEST_CASE("shuffle sign", "[graded]") {
    CHECK(detail::shuffle_sign({0, 1, 2}) == 1);
    CHECK(detail::shuffle_sign({0, 2}) == -1);
    CHECK(detail::shuffle_sign({1, 2}) == 1);
    CHECK(detail::shuffle_sign({2, 3}) == 1);
    CHECK(detail::shuffle_sign({}) == 1);
}
