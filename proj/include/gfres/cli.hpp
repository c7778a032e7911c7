#pragma once

/*
 * Command-line surface.  Every subcommand prints a single JSON document on
 * stdout (ordered keys, so identical flags + seed give byte-identical
 * output) and returns:
 *
 *   0  success / verification passed
 *   1  verification failed (including non-generic section inputs)
 *   2  usage or input errors
 *
 * Defaults: seed 1, trials 20, prime 32003 (GF_PRIME environment variable
 * overrides when --prime is not given), tolerance 1e-8.
 */

#include "gfres/combinat.hpp"
#include "gfres/complexes.hpp"
#include "gfres/curves.hpp"
#include "gfres/eagon_northcott.hpp"
#include "gfres/fixtures.hpp"
#include "gfres/ordinary.hpp"
#include "gfres/report.hpp"
#include "gfres/section.hpp"
#include "gfres/shapes.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifndef GFRES_FIXTURE_DIR
#define GFRES_FIXTURE_DIR "fixtures"
#endif

namespace gfres::cli {

inline long long env_default_prime() {
    if (const char* p = std::getenv("GF_PRIME")) {
        try {
            long long v = std::stoll(p);
            if (v >= 2) return v;
        } catch (...) {
        }
    }
    return kDefaultPrime;
}

inline std::string fixture_path(const std::string& id, const std::string& dir) {
    if (id != "ex1" && id != "ex2")
        throw std::invalid_argument("unknown fixture id '" + id +
                                    "' (known: ex1, ex2)");
    return dir + "/" + id + ".fixture";
}

namespace detail {

inline void emit(std::ostream& out, const Json& j, bool pretty) {
    if (pretty)
        out << j.dump(2) << "\n";
    else
        out << j.dump() << "\n";
}

inline std::vector<std::complex<double>> parse_hyperplane(const std::string& text,
                                                          int expected) {
    std::vector<std::complex<double>> c;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ','))
        c.emplace_back(std::stod(cur), 0.0);
    if (static_cast<int>(c.size()) != expected)
        throw std::invalid_argument("hyperplane needs " + std::to_string(expected) +
                                    " comma-separated coefficients");
    return c;
}

inline PointConfiguration<std::complex<double>> read_points_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open points file: " + path);
    Json j = Json::parse(f);
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("points file must be a nonempty JSON array");
    std::vector<std::vector<std::complex<double>>> pts;
    for (const auto& row : j) {
        std::vector<std::complex<double>> p;
        for (const auto& x : row) {
            if (x.is_array()) // [re, im]
                p.emplace_back(x.at(0).get<double>(), x.at(1).get<double>());
            else
                p.emplace_back(x.get<double>(), 0.0);
        }
        pts.push_back(std::move(p));
    }
    // read nv before std::move(pts): argument evaluation order is unspecified
    const int nv = static_cast<int>(pts.front().size());
    return make_point_configuration<std::complex<double>>(nv, std::move(pts));
}

inline Json weak_to_json(const VerificationReport& r) {
    Json j;
    j["pass"] = r.pass();
    Json arr = Json::array();
    for (const auto& c : r.checks) {
        Json e = c.detail;
        e["pass"] = c.pass;
        arr.push_back(std::move(e));
    }
    j["records"] = std::move(arr);
    return j;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"graded free resolutions of maximal-genus space curves"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");

    const long long prime_default = env_default_prime();

    // ---- pi ----
    auto* c_pi = app.add_subcommand("pi", "genus bound pi'(n,d) and the caliber k0");
    int pi_n = 0;
    long long pi_d = 0;
    c_pi->add_option("--n", pi_n, "ambient projective dimension")->required();
    c_pi->add_option("--d", pi_d, "curve degree")->required();

    // ---- shape ----
    auto* c_shape = app.add_subcommand("shape", "minimal resolution shape for (n,d)");
    int sh_n = 0;
    long long sh_d = 0;
    c_shape->add_option("--n", sh_n, "ambient projective dimension")->required();
    c_shape->add_option("--d", sh_d, "curve degree")->required();

    // ---- shape3 ----
    auto* c_shape3 = app.add_subcommand("shape3", "P^3 catalogue shape for degree d");
    long long s3_d = 0;
    c_shape3->add_option("--d", s3_d, "curve degree")->required();

    // ---- en ----
    auto* c_en = app.add_subcommand(
        "en", "build the determinantal complex of a random linear matrix");
    int en_n = 0;
    long long en_k0 = 0, en_prime = 0;
    std::uint64_t en_seed = 1;
    int en_trials = 20;
    bool en_rational = false;
    std::string en_out;
    c_en->add_option("--n", en_n, "ambient projective dimension")->required();
    c_en->add_option("--k0", en_k0, "caliber")->required();
    c_en->add_option("--seed", en_seed, "random seed");
    c_en->add_option("--trials", en_trials, "exactness trial count");
    c_en->add_option("--prime", en_prime, "coefficient field modulus");
    c_en->add_flag("--rational", en_rational, "draw the matrix over Q instead of F_p");
    c_en->add_option("--out", en_out, "write the complex in fixture format to this file");

    // ---- verify ----
    auto* c_verify = app.add_subcommand("verify", "run the full pipeline on a fixture");
    std::string vf_id, vf_file, vf_dir = GFRES_FIXTURE_DIR;
    std::uint64_t vf_seed = 1;
    int vf_trials = 20;
    long long vf_prime = 0, vf_hmax = 12;
    c_verify->add_option("--id", vf_id, "bundled fixture id (ex1, ex2)");
    c_verify->add_option("--file", vf_file, "path to a fixture file");
    c_verify->add_option("--fixture-dir", vf_dir, "directory of bundled fixtures");
    c_verify->add_option("--seed", vf_seed, "random seed");
    c_verify->add_option("--trials", vf_trials, "exactness trial count");
    c_verify->add_option("--prime", vf_prime, "coefficient field modulus");
    c_verify->add_option("--hmax", vf_hmax, "largest degree for the Hilbert comparison");

    // ---- fixture ----
    auto* c_fixture = app.add_subcommand("fixture", "inspect or re-emit a fixture");
    std::string fx_id, fx_file, fx_dir = GFRES_FIXTURE_DIR, fx_out;
    bool fx_verify_all = false, fx_emit = false;
    std::uint64_t fx_seed = 1;
    int fx_trials = 20;
    long long fx_prime = 0;
    c_fixture->add_option("--id", fx_id, "bundled fixture id (ex1, ex2)");
    c_fixture->add_option("--file", fx_file, "path to a fixture file");
    c_fixture->add_option("--fixture-dir", fx_dir, "directory of bundled fixtures");
    c_fixture->add_flag("--verify-all", fx_verify_all, "also run the full pipeline");
    c_fixture->add_flag("--emit", fx_emit, "print the canonical fixture text to stdout");
    c_fixture->add_option("--out", fx_out, "write the canonical fixture text to this file");
    c_fixture->add_option("--seed", fx_seed, "random seed for --verify-all");
    c_fixture->add_option("--trials", fx_trials, "exactness trials for --verify-all");
    c_fixture->add_option("--prime", fx_prime, "modulus for --verify-all");

    // ---- section ----
    auto* c_section = app.add_subcommand("section",
                                         "intersect a fixture curve with a hyperplane");
    std::string se_id, se_file, se_dir = GFRES_FIXTURE_DIR, se_hyperplane;
    std::uint64_t se_seed = 1;
    double se_tol = kRankTol;
    c_section->add_option("--id", se_id, "bundled fixture id (ex1, ex2)");
    c_section->add_option("--file", se_file, "path to a fixture file");
    c_section->add_option("--fixture-dir", se_dir, "directory of bundled fixtures");
    c_section->add_option("--seed", se_seed, "hyperplane + chart seed");
    c_section->add_option("--hyperplane", se_hyperplane,
                          "explicit coefficients c0,...,cn instead of a random draw");
    c_section->add_option("--tol", se_tol, "numeric tolerance");

    // ---- ordinary ----
    auto* c_ord = app.add_subcommand(
        "ordinary", "section a curve repeatedly and test point general position");
    std::string or_id, or_file, or_dir = GFRES_FIXTURE_DIR, or_points;
    std::uint64_t or_seed = 1;
    int or_sections = 20;
    long long or_strong_h = 0, or_cap = kSubsetCap, or_hmax = 0;
    double or_tol = kRankTol;
    c_ord->add_option("--id", or_id, "bundled fixture id (ex1, ex2)");
    c_ord->add_option("--file", or_file, "path to a fixture file");
    c_ord->add_option("--fixture-dir", or_dir, "directory of bundled fixtures");
    c_ord->add_option("--points", or_points,
                      "JSON file with a point configuration (skips sectioning)");
    c_ord->add_option("--seed", or_seed, "base seed for the hyperplane draws");
    c_ord->add_option("--sections", or_sections, "number of hyperplane sections");
    c_ord->add_option("--strong-h", or_strong_h, "also run the subset check at this degree");
    c_ord->add_option("--cap", or_cap, "subset cap for the strong check");
    c_ord->add_option("--hmax", or_hmax, "largest degree for the weak check (0 = default)");
    c_ord->add_option("--tol", or_tol, "numeric tolerance");

    // ---- hilbert ----
    auto* c_hil = app.add_subcommand("hilbert", "Hilbert function of the solved shape");
    int hi_n = 0;
    long long hi_d = 0, hi_hmax = 0;
    c_hil->add_option("--n", hi_n, "ambient projective dimension")->required();
    c_hil->add_option("--d", hi_d, "curve degree")->required();
    c_hil->add_option("--hmax", hi_hmax, "table upper bound (0 = stable window)");

    std::vector<const char*> argv;
    argv.push_back("gfres");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help() << "\n";
        return 2;
    }

    auto pick_prime = [&](long long flag) { return flag >= 2 ? flag : prime_default; };

    try {
        if (*c_pi) {
            TwistProfile tp = twist_profile(pi_n, pi_d);
            Json j;
            j["k0"] = tp.k0;
            j["pi"] = to_longlong(genus_bound_pi(pi_n, pi_d), "pi");
            detail::emit(out, j, pretty);
            return 0;
        }
        if (*c_shape) {
            detail::emit(out, shape_to_json(solve_shape(sh_n, sh_d)), pretty);
            return 0;
        }
        if (*c_shape3) {
            detail::emit(out, shape_to_json(shape3(s3_d)), pretty);
            return 0;
        }
        if (*c_en) {
            const long long p = pick_prime(en_prime);
            Json j;
            j["n"] = en_n;
            j["k0"] = en_k0;
            j["seed"] = en_seed;
            Json sizes = Json::array();
            for (const auto& y : en_sizes(en_n, en_k0)) sizes.push_back(to_longlong(y));
            j["sizes"] = std::move(sizes);
            VerificationReport ex;
            std::string emitted;
            if (en_rational) {
                auto c = build_en(random_phi_rational(en_n, en_k0, en_seed));
                ExactnessOptions eo;
                eo.trials = en_trials;
                eo.seed = en_seed;
                ex = probabilistic_exactness(c, eo);
                j["scalars"] = "rational";
                HilbertPolynomial hp = hilbert_polynomial(c.shape());
                j["d"] = hp.d;
                j["g"] = to_longlong(hp.g, "genus");
                if (!en_out.empty())
                    emitted = format_complex(c, "random determinantal complex, seed " +
                                                    std::to_string(en_seed));
            } else {
                auto c = build_en(random_phi(en_n, en_k0, en_seed, p));
                ExactnessOptions eo;
                eo.trials = en_trials;
                eo.seed = en_seed;
                eo.prime = p;
                ex = probabilistic_exactness(c, eo);
                j["scalars"] = "mod " + std::to_string(p);
                HilbertPolynomial hp = hilbert_polynomial(c.shape());
                j["d"] = hp.d;
                j["g"] = to_longlong(hp.g, "genus");
                if (!en_out.empty())
                    emitted = format_complex(c, "random determinantal complex, seed " +
                                                    std::to_string(en_seed) + ", prime " +
                                                    std::to_string(p));
            }
            j["exactness"] = ex.to_json();
            if (!en_out.empty()) {
                std::ofstream f(en_out);
                if (!f) throw std::invalid_argument("cannot write " + en_out);
                f << emitted;
                j["written"] = en_out;
            }
            detail::emit(out, j, pretty);
            return ex.pass() ? 0 : 1;
        }
        if (*c_verify) {
            if (vf_id.empty() == vf_file.empty())
                throw std::invalid_argument("verify needs exactly one of --id / --file");
            CurveFixture fx =
                load_fixture(vf_file.empty() ? fixture_path(vf_id, vf_dir) : vf_file);
            FixtureVerifyOptions opt;
            opt.trials = vf_trials;
            opt.seed = vf_seed;
            opt.prime = pick_prime(vf_prime);
            opt.hilbert_hmax = vf_hmax;
            VerificationReport rep = verify_fixture(fx, opt);
            detail::emit(out, rep.to_json(), pretty);
            return rep.pass() ? 0 : 1;
        }
        if (*c_fixture) {
            if (fx_id.empty() == fx_file.empty())
                throw std::invalid_argument("fixture needs exactly one of --id / --file");
            CurveFixture fx =
                load_fixture(fx_file.empty() ? fixture_path(fx_id, fx_dir) : fx_file);
            if (fx_emit) {
                out << format_fixture(fx);
                return 0;
            }
            if (!fx_out.empty()) save_fixture(fx, fx_out);
            Json j;
            j["name"] = fx.name;
            j["curve"] = format_curve(fx.curve);
            j["shape"] = shape_to_json(fx.complex.shape());
            j["expect"] = {{"d", fx.expect_d}, {"g", fx.expect_g}};
            if (!fx_out.empty()) j["written"] = fx_out;
            int rc = 0;
            if (fx_verify_all) {
                FixtureVerifyOptions opt;
                opt.trials = fx_trials;
                opt.seed = fx_seed;
                opt.prime = pick_prime(fx_prime);
                VerificationReport rep = verify_fixture(fx, opt);
                j["verify"] = rep.to_json();
                rc = rep.pass() ? 0 : 1;
            }
            detail::emit(out, j, pretty);
            return rc;
        }
        if (*c_section) {
            if (se_id.empty() == se_file.empty())
                throw std::invalid_argument("section needs exactly one of --id / --file");
            CurveFixture fx =
                load_fixture(se_file.empty() ? fixture_path(se_id, se_dir) : se_file);
            std::vector<std::complex<double>> hp =
                se_hyperplane.empty()
                    ? random_hyperplane(fx.curve.n, se_seed)
                    : detail::parse_hyperplane(se_hyperplane, fx.curve.n + 1);
            SectionOptions so;
            so.chart_seed = se_seed;
            so.tol = se_tol;
            Json j;
            j["curve"] = format_curve(fx.curve);
            j["seed"] = se_seed;
            Json hj = Json::array();
            for (const auto& x : hp) hj.push_back(x.real());
            j["hyperplane"] = std::move(hj);
            try {
                SectionResult sr = hyperplane_section(fx.curve, hp, so);
                j["section"] = sr.to_json();
                detail::emit(out, j, pretty);
                return 0;
            } catch (const SectionError& e) {
                j["error"] = e.what();
                j["non_generic"] = true;
                detail::emit(out, j, pretty);
                return 1;
            }
        }
        if (*c_ord) {
            OrdinaryOptions oo;
            oo.tol = or_tol;
            oo.cap = or_cap;
            oo.seed = or_seed;
            oo.hmax = or_hmax;
            Json j;
            bool all_ok = true;
            if (!or_points.empty()) {
                auto cfg = detail::read_points_json(or_points);
                j["points"] = cfg.count();
                VerificationReport w = weak_ordinary_check(cfg, oo);
                j["weak"] = detail::weak_to_json(w);
                all_ok = w.pass();
                if (or_strong_h > 0) {
                    VerificationReport s = strong_ordinary_check(cfg, or_strong_h, oo);
                    j["strong"] = s.to_json();
                    all_ok = all_ok && s.pass();
                }
            } else {
                if (or_id.empty() == or_file.empty())
                    throw std::invalid_argument(
                        "ordinary needs one of --id / --file / --points");
                CurveFixture fx =
                    load_fixture(or_file.empty() ? fixture_path(or_id, or_dir) : or_file);
                j["curve"] = format_curve(fx.curve);
                j["sections"] = or_sections;
                j["seed"] = or_seed;
                Json runs = Json::array();
                for (int k = 0; k < or_sections; ++k) {
                    std::uint64_t s = or_seed + static_cast<std::uint64_t>(k);
                    Json rj;
                    rj["seed"] = s;
                    SectionOptions so;
                    so.chart_seed = s;
                    so.tol = or_tol;
                    try {
                        SectionResult sr =
                            hyperplane_section(fx.curve, random_hyperplane(fx.curve.n, s), so);
                        OrdinaryOptions so2 = oo;
                        so2.seed = s;
                        VerificationReport w = weak_ordinary_check(sr.config, so2);
                        rj["weak_pass"] = w.pass();
                        if (!w.pass()) rj["weak"] = detail::weak_to_json(w);
                        bool ok = w.pass();
                        if (or_strong_h > 0) {
                            VerificationReport st =
                                strong_ordinary_check(sr.config, or_strong_h, so2);
                            rj["strong_pass"] = st.pass();
                            if (!st.pass()) rj["strong"] = st.to_json();
                            ok = ok && st.pass();
                        }
                        all_ok = all_ok && ok;
                    } catch (const SectionError& e) {
                        rj["resampled"] = e.what();
                        all_ok = false;
                    }
                    runs.push_back(std::move(rj));
                }
                j["runs"] = std::move(runs);
            }
            j["pass"] = all_ok;
            detail::emit(out, j, pretty);
            return all_ok ? 0 : 1;
        }
        if (*c_hil) {
            BettiShape s = solve_shape(hi_n, hi_d);
            HilbertPolynomial hp = hilbert_polynomial(s);
            Json j;
            j["n"] = hi_n;
            j["d"] = hp.d;
            j["g"] = to_longlong(hp.g, "genus");
            j["k0"] = caliber(hi_n, hi_d);
            j["stable_from"] = hp.stable_from;
            long long top = hi_hmax > 0 ? hi_hmax : hp.stable_from + 5;
            Json table = Json::array();
            for (long long h = 0; h <= top; ++h) {
                Json row;
                row["h"] = h;
                row["H"] = to_longlong(hilbert_function(s, h), "Hilbert value");
                table.push_back(std::move(row));
            }
            j["table"] = std::move(table);
            detail::emit(out, j, pretty);
            return 0;
        }
    } catch (const std::exception& e) {
        Json j;
        j["error"] = e.what();
        detail::emit(out, j, pretty);
        return 2;
    }
    err << app.help() << "\n";
    return 2;
}

} // namespace gfres::cli
