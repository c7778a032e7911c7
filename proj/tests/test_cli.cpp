#include <catch2/catch_amalgamated.hpp>

#include "gfres/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace gfres;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Tests below pin the default modulus, so make sure no ambient GF_PRIME
// leaks in (and that the tests that do set it clean up after themselves).
struct EnvGuard {
    EnvGuard() { unsetenv("GF_PRIME"); }
    ~EnvGuard() { unsetenv("GF_PRIME"); }
};

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("cli_tmp_") + name;
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
    f.close();
    return path;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("pi subcommand prints the caliber and genus bound", "[cli]") {
    CliResult r = run_cli({"pi", "--n", "4", "--d", "15"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"k0\":2,\"pi\":16}\n"); // exact bytes, ordered keys
    CHECK(r.err.empty());

    // spot values against the library itself
    for (auto [n, d] : {std::pair<int, long long>{3, 5}, {3, 9}, {5, 21}, {6, 40}}) {
        CliResult s = run_cli({"pi", "--n", std::to_string(n), "--d", std::to_string(d)});
        REQUIRE(s.code == 0);
        Json j = s.json();
        CHECK(j.at("k0").get<long long>() == caliber(n, d));
        CHECK(j.at("pi").get<long long>() == to_longlong(genus_bound_pi(n, d)));
    }
}

TEST_CASE("identical flags give byte-identical output", "[cli]") {
    auto twice = [](const std::vector<std::string>& args) {
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        REQUIRE(a.code == b.code);
        CHECK(a.out == b.out);
        return a;
    };

    CHECK(twice({"pi", "--n", "4", "--d", "15"}).code == 0);
    CHECK(twice({"shape", "--n", "5", "--d", "23"}).code == 0);
    CHECK(twice({"en", "--n", "3", "--k0", "1", "--seed", "7", "--trials", "5"}).code == 0);
    CHECK(twice({"verify", "--id", "ex1", "--trials", "3", "--hmax", "6", "--seed", "5"})
              .code == 0);

    // a different seed must change the random-matrix output
    CliResult s7 = run_cli({"en", "--n", "3", "--k0", "1", "--seed", "7", "--trials", "5"});
    CliResult s8 = run_cli({"en", "--n", "3", "--k0", "1", "--seed", "8", "--trials", "5"});
    CHECK(s7.out != s8.out);
}

TEST_CASE("--pretty is an app-level flag that indents the same document", "[cli]") {
    CliResult compact = run_cli({"pi", "--n", "4", "--d", "15"});
    CliResult pretty = run_cli({"--pretty", "pi", "--n", "4", "--d", "15"});
    REQUIRE(pretty.code == 0);
    CHECK(pretty.out != compact.out);
    CHECK(pretty.out.find("\n  \"k0\": 2") != std::string::npos);
    CHECK(pretty.json() == compact.json());

    // after the subcommand it is rejected as an unknown option
    CliResult misplaced = run_cli({"pi", "--n", "4", "--d", "15", "--pretty"});
    CHECK(misplaced.code == 2);
    CHECK(!misplaced.err.empty());
}

TEST_CASE("shape subcommand emits the solved twists and multiplicities", "[cli]") {
    CliResult r = run_cli({"shape", "--n", "3", "--d", "6"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "{\"n\":3,\"blocks\":[[{\"twist\":3,\"mult\":4}],[{\"twist\":4,\"mult\":3}]]}\n");

    Json j = r.json();
    CHECK(j == shape_to_json(solve_shape(3, 6)));
}

TEST_CASE("shape3 subcommand matches the P^3 catalogue and the general solver",
          "[cli]") {
    CliResult q = run_cli({"shape3", "--d", "5"});
    REQUIRE(q.code == 0);
    CHECK(q.out == "{\"n\":3,\"blocks\":[[{\"twist\":3,\"mult\":2},{\"twist\":2,"
                   "\"mult\":1}],[{\"twist\":4,\"mult\":2}]]}\n");

    for (long long d : {3, 4, 7, 11}) {
        CliResult a = run_cli({"shape3", "--d", std::to_string(d)});
        CliResult b = run_cli({"shape", "--n", "3", "--d", std::to_string(d)});
        REQUIRE(a.code == 0);
        REQUIRE(b.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("hilbert subcommand tabulates H and reports d, g, k0", "[cli]") {
    CliResult r = run_cli({"hilbert", "--n", "4", "--d", "15"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j.at("n") == 4);
    CHECK(j.at("d") == 15);
    CHECK(j.at("g") == 16);
    CHECK(j.at("k0") == 2);
    long long stable = j.at("stable_from").get<long long>();
    const auto& table = j.at("table");
    REQUIRE(table.is_array());
    REQUIRE(!table.empty());
    bool saw_stable = false;
    for (const auto& row : table) {
        long long h = row.at("h").get<long long>();
        long long H = row.at("H").get<long long>();
        CHECK(H >= 0);
        if (h >= stable) {
            CHECK(H == 15 * h - 16 + 1); // d*h - g + 1 past the last twist
            saw_stable = true;
        }
    }
    CHECK(saw_stable);

    CliResult capped = run_cli({"hilbert", "--n", "3", "--d", "4", "--hmax", "3"});
    REQUIRE(capped.code == 0);
    CHECK(capped.json().at("table").size() == 4); // h = 0..3
}

TEST_CASE("en subcommand certifies a random determinantal complex", "[cli]") {
    EnvGuard env;
    CliResult r = run_cli({"en", "--n", "3", "--k0", "2", "--seed", "4", "--trials", "6"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j.at("n") == 3);
    CHECK(j.at("k0") == 2);
    CHECK(j.at("seed") == 4);
    CHECK(j.at("scalars") == "mod 32003");
    CHECK(j.at("exactness").at("pass") == true);

    // the reported sizes and invariants agree with the library closed forms
    std::vector<long long> want;
    for (const auto& y : en_sizes(3, 2)) want.push_back(to_longlong(y));
    REQUIRE(j.at("sizes").size() == want.size());
    for (size_t i = 0; i < want.size(); ++i)
        CHECK(j.at("sizes").at(i).get<long long>() == want[i]);
    CHECK(j.at("d").get<long long>() == to_longlong(binom_dim(3, 2)));
    CHECK(j.at("g").get<long long>() == to_longlong(genus_bound_pi(3, 6)));
}

TEST_CASE("en --rational draws the matrix over Q", "[cli]") {
    CliResult r = run_cli({"en", "--n", "3", "--k0", "1", "--seed", "2", "--trials",
                           "4", "--rational"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j.at("scalars") == "rational");
    CHECK(j.at("exactness").at("pass") == true);
}

TEST_CASE("en --out writes the complex in fixture matrix format", "[cli]") {
    EnvGuard env;
    std::string path = "cli_tmp_en_out.txt";
    std::remove(path.c_str());
    CliResult r = run_cli({"en", "--n", "3", "--k0", "1", "--seed", "9", "--trials",
                           "4", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.json().at("written") == path);
    std::string text = read_file(path);
    CHECK(text.find("block 0: 0") != std::string::npos);
    CHECK(text.find("matrix d0:") != std::string::npos);
    CHECK(text.find("matrix d1:") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify --id ex1 runs the whole pipeline and passes", "[cli]") {
    CliResult r = run_cli({"verify", "--id", "ex1", "--trials", "5", "--hmax", "8"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j.at("subject") == "fixture ex1");
    CHECK(j.at("pass") == true);

    std::vector<std::string> names;
    for (const auto& c : j.at("checks")) {
        CHECK(c.at("pass") == true);
        names.push_back(c.at("name").get<std::string>());
    }
    for (const char* expected :
         {"shape invariants give the declared degree and genus",
          "curve parameterization degree equals d",
          "generators vanish on the curve",
          "semigroup count matches the shape Hilbert function",
          "Hilbert function agrees with d*h - g + 1 past the last twist",
          "probabilistic exactness mod p"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());

    // the declared invariants are serialized as JSON numbers, not strings
    for (const auto& c : j.at("checks"))
        if (c.at("name") == "shape invariants give the declared degree and genus") {
            CHECK(c.at("detail").at("d").is_number());
            CHECK(c.at("detail").at("g").is_number());
            CHECK(c.at("detail").at("g") == 1);
        }
}

TEST_CASE("verify exits 1 when the declared genus disagrees", "[cli]") {
    std::string text = read_file(std::string(GFRES_FIXTURE_DIR) + "/ex1.fixture");
    size_t pos = text.find("expect: d=5 g=1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("expect: d=5 g=1").size(), "expect: d=5 g=2");
    std::string path = write_temp("bad_genus.fixture", text);

    CliResult r = run_cli({"verify", "--file", path, "--trials", "3", "--hmax", "6"});
    CHECK(r.code == 1);
    Json j = r.json();
    CHECK(j.at("pass") == false);
    // exactly the two expectation-dependent checks fail; the complex itself
    // is still a valid resolution of the curve
    for (const auto& c : j.at("checks")) {
        std::string name = c.at("name").get<std::string>();
        bool genus_dependent =
            name == "shape invariants give the declared degree and genus" ||
            name == "Hilbert function agrees with d*h - g + 1 past the last twist";
        CHECK(c.at("pass").get<bool>() == !genus_dependent);
    }
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2", "[cli]") {
    SECTION("missing required flag") {
        CliResult r = run_cli({"pi", "--n", "4"});
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.find("--d") != std::string::npos);
    }
    SECTION("unknown subcommand") {
        CHECK(run_cli({"frobnicate"}).code == 2);
    }
    SECTION("no subcommand at all") {
        CHECK(run_cli({}).code == 2);
    }
    SECTION("unknown flag") {
        CHECK(run_cli({"pi", "--n", "4", "--d", "15", "--bogus"}).code == 2);
    }
    SECTION("verify needs exactly one input source") {
        CliResult both = run_cli({"verify", "--id", "ex1", "--file", "x.fixture"});
        CHECK(both.code == 2);
        CHECK(both.json().at("error").get<std::string>().find("exactly one") !=
              std::string::npos);
        CliResult neither = run_cli({"verify"});
        CHECK(neither.code == 2);
    }
    SECTION("unknown fixture id") {
        CliResult r = run_cli({"verify", "--id", "ex9"});
        CHECK(r.code == 2);
        CHECK(r.json().at("error").get<std::string>().find("unknown fixture id") !=
              std::string::npos);
    }
    SECTION("unreadable fixture file") {
        CliResult r = run_cli({"verify", "--file", "no_such_dir/zz.fixture"});
        CHECK(r.code == 2);
        CHECK(r.json().contains("error"));
    }
    SECTION("out-of-range parameters become reported errors") {
        CliResult r = run_cli({"pi", "--n", "2", "--d", "5"});
        CHECK(r.code == 2);
        CHECK(r.json().contains("error"));
    }
}

TEST_CASE("help requests exit 0", "[cli]") {
    CliResult top = run_cli({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("pi") != std::string::npos);
    CHECK(top.out.find("verify") != std::string::npos);

    CliResult sub = run_cli({"section", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--hyperplane") != std::string::npos);
}

TEST_CASE("section reports the cut points for a generic hyperplane", "[cli]") {
    CliResult r = run_cli({"section", "--id", "ex1", "--seed", "3"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j.at("hyperplane").size() == 5);
    const Json& s = j.at("section");
    long long finite = s.at("finite_roots").size();
    long long infinity = s.at("infinity_root").get<bool>() ? 1 : 0;
    CHECK(finite + infinity == 5); // quintic cut in 5 points
    CHECK(s.at("points_in_chart") == 5);
    CHECK(s.at("max_residual").get<double>() < 1e-6);
    CHECK(s.at("min_pairwise_chordal").get<double>() > 1e-7);
}

TEST_CASE("section flags a degenerate hyperplane as non-generic with exit 1",
          "[cli]") {
    // T = 0 meets the parameterization (t^2 s^3 : t^3 s^2 : t^4 s : t^5 : s^5)
    // where t^5 = 0: one point with multiplicity five
    CliResult r = run_cli({"section", "--id", "ex1", "--hyperplane", "0,0,0,1,0"});
    CHECK(r.code == 1);
    Json j = r.json();
    CHECK(j.at("non_generic") == true);
    CHECK(!j.at("error").get<std::string>().empty());
    CHECK(j.at("hyperplane") == Json::array({0, 0, 0, 1, 0}));
}

TEST_CASE("ordinary sections a fixture repeatedly and passes on ex1", "[cli]") {
    CliResult r = run_cli({"ordinary", "--id", "ex1", "--sections", "2", "--seed",
                           "1", "--strong-h", "1"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j.at("pass") == true);
    REQUIRE(j.at("runs").size() == 2);
    for (const auto& run : j.at("runs")) {
        CHECK(run.at("weak_pass") == true);
        CHECK(run.at("strong_pass") == true);
    }
}

TEST_CASE("ordinary --points detects a coplanar configuration with exit 1",
          "[cli]") {
    Json pts = Json::array();
    pts.push_back({1, 0, 0, 0});
    pts.push_back({0, 1, 0, 0});
    pts.push_back({0, 0, 1, 0});
    pts.push_back({1, 1, 1, 0}); // fourth point in the same hyperplane
    pts.push_back({1, 2, 3, 1});
    std::string path = write_temp("coplanar.json", pts.dump());

    CliResult r =
        run_cli({"ordinary", "--points", path, "--strong-h", "1", "--seed", "2"});
    CHECK(r.code == 1);
    Json j = r.json();
    CHECK(j.at("points") == 5);
    CHECK(j.at("pass") == false);
    CHECK(j.at("weak").at("pass") == true); // rank only needs some 4 independent
    CHECK(j.at("strong").at("pass") == false);

    bool found = false;
    for (const auto& c : j.at("strong").at("checks"))
        if (c.contains("detail") && c.at("detail").contains("singular_subsets")) {
            CHECK(c.at("detail").at("singular_subsets") ==
                  Json::array({Json::array({0, 1, 2, 3})}));
            found = true;
        }
    CHECK(found);
    std::remove(path.c_str());
}

TEST_CASE("GF_PRIME environment variable sets the default modulus", "[cli]") {
    EnvGuard env;
    setenv("GF_PRIME", "101", 1);
    CliResult r = run_cli({"en", "--n", "3", "--k0", "1", "--seed", "2", "--trials", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.json().at("scalars") == "mod 101");

    // an explicit --prime wins over the environment
    CliResult p = run_cli({"en", "--n", "3", "--k0", "1", "--seed", "2", "--trials",
                           "4", "--prime", "13"});
    REQUIRE(p.code == 0);
    CHECK(p.json().at("scalars") == "mod 13");

    unsetenv("GF_PRIME");
    CliResult d = run_cli({"en", "--n", "3", "--k0", "1", "--seed", "2", "--trials", "4"});
    REQUIRE(d.code == 0);
    CHECK(d.json().at("scalars") == "mod 32003");
}

TEST_CASE("fixture --emit prints the canonical fixture text", "[cli]") {
    CliResult r = run_cli({"fixture", "--id", "ex1", "--emit"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# ", 0) == 0); // comment header, not JSON
    CHECK(r.out.find("curve: n=4 e=5 exps=(2,3)(3,2)(4,1)(5,0)(0,5)") !=
          std::string::npos);
    CHECK(r.out.find("vars: X,Y,Z,T,U") != std::string::npos);
    CHECK(r.out.find("matrix d0: 1 x 5") != std::string::npos);
    CHECK(r.out.find("expect: d=5 g=1") != std::string::npos);

    // the emitted text is itself a loadable fixture; the name header follows
    // the file stem, everything else must round-trip byte for byte
    std::string path = write_temp("reemitted.fixture", r.out);
    CliResult again = run_cli({"fixture", "--file", path, "--emit"});
    REQUIRE(again.code == 0);
    CHECK(again.out.rfind("# cli_tmp_reemitted\n", 0) == 0);
    CHECK(again.out.substr(again.out.find('\n')) == r.out.substr(r.out.find('\n')));
    std::remove(path.c_str());
}

TEST_CASE("fixture summary reports curve, shape, and expectations", "[cli]") {
    CliResult r = run_cli({"fixture", "--id", "ex2"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j.at("name") == "ex2");
    CHECK(j.at("curve").get<std::string>().rfind("n=4 e=15", 0) == 0);
    CHECK(j.at("expect").at("d") == 15);
    CHECK(j.at("expect").at("g") == 16);
    CHECK(j.at("shape").at("blocks").size() == 3);
}
