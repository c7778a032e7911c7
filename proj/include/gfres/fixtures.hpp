#pragma once

/*
 * Curve fixtures: a monomial curve together with its explicit graded free
 * resolution, stored as plain text.
 *
 *   # comment
 *   curve: 4 5 : 2 3 4 5 0          n e : t-exponents of the coordinates
 *   vars: X Y Z T U
 *   block 0: 0                      twists of E_i, in row/column order
 *   block 1: 2 2 2 2 2
 *   ...
 *   matrix d0: 1 x 5                then one bracket row per line
 *   [X^2-ZU, XY-TU, ...]
 *   ...
 *   expect: d=5 g=1
 *
 * The loader performs structural validation (layout, gradings) and leaves
 * the mathematical verification to verify_fixture, which aggregates every
 * exact and probabilistic check into one report.
 */

#include "gfres/complexes.hpp"
#include "gfres/curves.hpp"
#include "gfres/graded_matrix.hpp"
#include "gfres/parse.hpp"
#include "gfres/report.hpp"
#include "gfres/shapes.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfres {

struct CurveFixture {
    std::string name;
    MonomialCurve curve;
    FreeComplex<Rational> complex;
    long long expect_d = 0;
    long long expect_g = 0;
};

struct FixtureError : std::runtime_error {
    FixtureError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

namespace detail {

inline bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

inline std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace detail

inline CurveFixture parse_fixture(std::istream& is, const std::string& name) {
    CurveFixture fx;
    fx.name = name;
    std::optional<MonomialCurve> curve;
    std::vector<std::string> vars;
    std::vector<std::vector<int>> blocks;
    std::vector<GradedMatrix<Rational>> diffs;
    bool have_expect = false;

    auto from_int = [](long long k) { return Rational(k); };

    std::string raw;
    int lineno = 0;
    auto next_line = [&]() -> std::optional<std::string> {
        while (std::getline(is, raw)) {
            ++lineno;
            std::string line = detail::trim(raw);
            if (line.empty() || line[0] == '#') continue;
            return line;
        }
        return std::nullopt;
    };

    for (auto ol = next_line(); ol; ol = next_line()) {
        const std::string& line = *ol;
        if (detail::starts_with(line, "curve:")) {
            curve = parse_curve(line.substr(6));
        } else if (detail::starts_with(line, "vars:")) {
            std::string rest = line.substr(5);
            for (char& ch : rest)
                if (ch == ',') ch = ' ';
            std::istringstream vs(rest);
            std::string v;
            while (vs >> v) vars.push_back(v);
        } else if (detail::starts_with(line, "block")) {
            std::istringstream bs(line.substr(5));
            int idx = 0;
            std::string colon;
            if (!(bs >> idx >> colon) || colon != ":")
                throw FixtureError("malformed block header", lineno);
            if (idx != static_cast<int>(blocks.size()))
                throw FixtureError("block " + std::to_string(idx) + " out of order",
                                   lineno);
            std::vector<int> tw;
            int t;
            while (bs >> t) tw.push_back(t);
            if (tw.empty()) throw FixtureError("empty block", lineno);
            blocks.push_back(std::move(tw));
        } else if (detail::starts_with(line, "matrix")) {
            std::istringstream ms(line.substr(6));
            std::string label, x;
            int r = 0, c = 0;
            if (!(ms >> label >> r >> x >> c) || x != "x" ||
                !detail::starts_with(label, "d"))
                throw FixtureError("malformed matrix header", lineno);
            int idx = std::stoi(label.substr(1, label.size() - 2)); // "d0:" -> 0
            if (idx != static_cast<int>(diffs.size()))
                throw FixtureError("matrix d" + std::to_string(idx) + " out of order",
                                   lineno);
            if (idx + 1 >= static_cast<int>(blocks.size()))
                throw FixtureError("matrix before its blocks were declared", lineno);
            if (vars.empty()) throw FixtureError("matrix before vars", lineno);
            if (r != static_cast<int>(blocks[idx].size()) ||
                c != static_cast<int>(blocks[idx + 1].size()))
                throw FixtureError("matrix size disagrees with blocks", lineno);
            GradedMatrix<Rational> m(blocks[static_cast<size_t>(idx)],
                                     blocks[static_cast<size_t>(idx) + 1],
                                     static_cast<int>(vars.size()));
            for (int i = 0; i < r; ++i) {
                auto row = next_line();
                if (!row) throw FixtureError("unexpected end of file inside matrix", lineno);
                std::vector<HomPoly<Rational>> cells;
                try {
                    cells = parse_bracket_row<Rational>(*row, vars, from_int);
                } catch (const ParseError& e) {
                    throw FixtureError(std::string("row ") + std::to_string(i) + ": " +
                                           e.what(),
                                       lineno);
                }
                if (static_cast<int>(cells.size()) != c)
                    throw FixtureError("row " + std::to_string(i) + " has " +
                                           std::to_string(cells.size()) +
                                           " entries, expected " + std::to_string(c),
                                       lineno);
                for (int j = 0; j < c; ++j) m.at(i, j) = std::move(cells[static_cast<size_t>(j)]);
            }
            try {
                m.validate();
            } catch (const GradingError& g) {
                throw FixtureError(std::string("matrix d") + std::to_string(idx) + ": " +
                                       g.what(),
                                   lineno);
            }
            diffs.push_back(std::move(m));
        } else if (detail::starts_with(line, "expect:")) {
            std::string rest = line.substr(7);
            for (char& ch : rest)
                if (ch == '=' ) ch = ' ';
            std::istringstream es(rest);
            std::string key;
            bool have_d = false, have_g = false;
            while (es >> key) {
                long long v;
                if (!(es >> v)) throw FixtureError("malformed expect line", lineno);
                if (key == "d") {
                    fx.expect_d = v;
                    have_d = true;
                } else if (key == "g") {
                    fx.expect_g = v;
                    have_g = true;
                } else {
                    throw FixtureError("unknown expect key '" + key + "'", lineno);
                }
            }
            if (!have_d || !have_g)
                throw FixtureError("expect line must set both d and g", lineno);
            have_expect = true;
        } else {
            throw FixtureError("unrecognized line: " + line, lineno);
        }
    }

    if (!curve) throw FixtureError("missing curve line", lineno);
    if (vars.empty()) throw FixtureError("missing vars line", lineno);
    if (blocks.size() < 3) throw FixtureError("need at least blocks 0..2", lineno);
    if (!have_expect) throw FixtureError("missing expect line", lineno);
    if (blocks[0] != std::vector<int>{0})
        throw FixtureError("block 0 must be the single twist 0", lineno);
    if (static_cast<int>(vars.size()) != curve->n + 1)
        throw FixtureError("vars count must be n+1", lineno);

    fx.curve = *curve;
    fx.complex.n = static_cast<int>(blocks.size());
    fx.complex.vars = vars;
    fx.complex.blocks = std::move(blocks);
    fx.complex.diff = std::move(diffs);
    fx.complex.validate_layout();
    return fx;
}

inline CurveFixture load_fixture(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open fixture file: " + path);
    std::string name = path;
    if (auto p = name.find_last_of('/'); p != std::string::npos) name = name.substr(p + 1);
    if (auto p = name.rfind(".fixture"); p != std::string::npos) name = name.substr(0, p);
    return parse_fixture(f, name);
}

inline std::string format_fixture(const CurveFixture& fx) {
    std::ostringstream os;
    os << "# " << fx.name << "\n";
    os << "curve: " << format_curve(fx.curve) << "\n";
    os << "vars: ";
    for (size_t i = 0; i < fx.complex.vars.size(); ++i)
        os << (i ? "," : "") << fx.complex.vars[i];
    os << "\n";
    for (size_t i = 0; i < fx.complex.blocks.size(); ++i) {
        os << "block " << i << ":";
        for (int t : fx.complex.blocks[i]) os << " " << t;
        os << "\n";
    }
    for (size_t k = 0; k < fx.complex.diff.size(); ++k) {
        const auto& m = fx.complex.diff[k];
        os << "matrix d" << k << ": " << m.rows() << " x " << m.cols() << "\n";
        for (int i = 0; i < m.rows(); ++i) {
            os << "[";
            for (int j = 0; j < m.cols(); ++j) {
                if (j) os << ", ";
                os << m.at(i, j).str(fx.complex.vars);
            }
            os << "]\n";
        }
    }
    os << "expect: d=" << fx.expect_d << " g=" << fx.expect_g << "\n";
    return os.str();
}

inline void save_fixture(const CurveFixture& fx, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write fixture file: " + path);
    f << format_fixture(fx);
}

// bare complex in the same grammar (no curve/expect lines); works for any
// scalar with a ScalarIO printer
template <class T>
std::string format_complex(const FreeComplex<T>& c,
                           const std::string& comment = "") {
    std::ostringstream os;
    if (!comment.empty()) os << "# " << comment << "\n";
    os << "vars: ";
    for (size_t i = 0; i < c.vars.size(); ++i) os << (i ? "," : "") << c.vars[i];
    os << "\n";
    for (size_t i = 0; i < c.blocks.size(); ++i) {
        os << "block " << i << ":";
        for (int t : c.blocks[i]) os << " " << t;
        os << "\n";
    }
    for (size_t k = 0; k < c.diff.size(); ++k) {
        const auto& m = c.diff[k];
        os << "matrix d" << k << ": " << m.rows() << " x " << m.cols() << "\n";
        for (int i = 0; i < m.rows(); ++i) {
            os << "[";
            for (int j = 0; j < m.cols(); ++j) {
                if (j) os << ", ";
                os << m.at(i, j).str(c.vars);
            }
            os << "]\n";
        }
    }
    return os.str();
}

// reduce a rational complex mod p (for the probabilistic rank checks)
inline FreeComplex<GF> reduce_complex(const FreeComplex<Rational>& c, long long p) {
    FreeComplex<GF> r;
    r.n = c.n;
    r.vars = c.vars;
    r.blocks = c.blocks;
    for (const auto& d : c.diff) r.diff.push_back(reduce_mod(d, p));
    return r;
}

struct FixtureVerifyOptions {
    long long hilbert_hmax = 12;
    int trials = 20;
    std::uint64_t seed = 1;
    long long prime = kDefaultPrime;
};

// the full exact + probabilistic pipeline for one fixture
inline VerificationReport verify_fixture(const CurveFixture& fx,
                                         FixtureVerifyOptions opt = {}) {
    VerificationReport rep;
    rep.subject = "fixture " + fx.name;

    // 1. complex: gradings and d o d = 0
    VerificationReport cx = check_complex(fx.complex);
    for (auto& ch : cx.checks) rep.checks.push_back(std::move(ch));

    // 2. shape invariants -> (d, g), compared with the declared expectation
    BettiShape shape = fx.complex.shape();
    try {
        ShapeInvariants inv = validate_shape(shape);
        Json d;
        d["d"] = inv.d;
        d["g"] = to_longlong(inv.g);
        d["expected_d"] = fx.expect_d;
        d["expected_g"] = fx.expect_g;
        rep.add("shape invariants give the declared degree and genus",
                inv.d == fx.expect_d && inv.g == fx.expect_g, d);
    } catch (const ShapeError& e) {
        Json d;
        d["error"] = e.what();
        rep.add("shape invariants give the declared degree and genus", false, d);
    }

    // 3. curve degree matches
    {
        Json d;
        d["parameterization_degree"] = fx.curve.e;
        rep.add("curve parameterization degree equals d", fx.curve.e == fx.expect_d, d);
    }

    // 4. the generators (row d_0) vanish on the curve
    {
        std::vector<HomPoly<Rational>> gens;
        for (int j = 0; j < fx.complex.diff[0].cols(); ++j)
            gens.push_back(fx.complex.diff[0].at(0, j));
        VerificationReport vr = verify_ideal_on_curve(gens, fx.curve);
        Json d;
        d["generators"] = gens.size();
        for (const auto& ch : vr.checks)
            if (!ch.pass) d["failures"].push_back(ch.detail);
        rep.add("generators vanish on the curve", vr.pass(), d);
    }

    // 5. semigroup Hilbert function == Hilbert function of the shape
    {
        bool ok = true;
        Json rows = Json::array();
        for (long long h = 0; h <= opt.hilbert_hmax; ++h) {
            long long counted = semigroup_hilbert(fx.curve, h);
            Int from_shape = hilbert_function(shape, h);
            bool match = Int(counted) == from_shape;
            ok = ok && match;
            Json r;
            r["h"] = h;
            r["semigroup"] = counted;
            r["shape"] = from_shape.str();
            if (!match) r["mismatch"] = true;
            rows.push_back(std::move(r));
        }
        Json d;
        d["rows"] = std::move(rows);
        rep.add("semigroup count matches the shape Hilbert function", ok, d);
    }

    // 6. Hilbert polynomial window
    try {
        HilbertPolynomial hp = hilbert_polynomial(shape);
        Json d;
        d["d"] = hp.d;
        d["g"] = to_longlong(hp.g, "genus");
        d["stable_from"] = hp.stable_from;
        rep.add("Hilbert function agrees with d*h - g + 1 past the last twist",
                hp.d == fx.expect_d && hp.g == fx.expect_g, d);
    } catch (const ShapeError& e) {
        Json d;
        d["error"] = e.what();
        rep.add("Hilbert function agrees with d*h - g + 1 past the last twist", false, d);
    }

    // 7. probabilistic exactness mod p
    {
        FreeComplex<GF> cp = reduce_complex(fx.complex, opt.prime);
        ExactnessOptions eo;
        eo.trials = opt.trials;
        eo.seed = opt.seed;
        eo.prime = opt.prime;
        VerificationReport pr = probabilistic_exactness(cp, eo);
        Json d;
        d["prime"] = opt.prime;
        d["trials"] = opt.trials;
        d["seed"] = opt.seed;
        for (const auto& ch : pr.checks)
            if (!ch.pass) d["failures"].push_back(Json{{"name", ch.name}, {"detail", ch.detail}});
        rep.add("probabilistic exactness mod p", pr.pass(), d);
    }

    return rep;
}

} // namespace gfres
