#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "pedalis/cli.hpp"
#include "pedalis/config.hpp"
#include "pedalis/errors.hpp"
#include "pedalis/gallery.hpp"

using namespace pedalis;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "pedalis");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content = {}) {
    const auto p = std::filesystem::temp_directory_path() / ("pedalis_test_" + name);
    if (!content.empty()) std::ofstream(p) << content;
    return p;
}

std::vector<Vec3> obj_vertices(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::vector<Vec3> v;
    std::string tag;
    while (in >> tag) {
        if (tag == "v") {
            Vec3 x;
            in >> x[0] >> x[1] >> x[2];
            v.push_back(x);
        } else {
            std::getline(in, tag);
        }
    }
    return v;
}

const char* kParaboloid = R"([surface]
kind = point   # z = (u^2 + v^2)/2
x = u
y = v
z = (u^2 + v^2)/2

[domain]
u = -1, 1
v = -1, 1

[grid]
nu = 12
nv = 10
)";

}  // namespace

TEST_SUITE("config") {

TEST_CASE("expressions") {
    const ExprFn f = compile_expression("2*sin(u)^2 - sqrt(v)/4 + cos(pi*u) - -1");
    const double u = 0.3, v = 2.0;
    CHECK(f(u, v) == doctest::Approx(2 * std::pow(std::sin(u), 2) - std::sqrt(v) / 4 + std::cos(M_PI * u) + 1));
    CHECK(compile_expression("2^3^2")(0, 0) == doctest::Approx(512.0));
    CHECK(compile_expression("-u^2")(3, 0) == doctest::Approx(-9.0));
    CHECK_THROWS_AS(compile_expression("u +"), ParseError);
    CHECK_THROWS_AS(compile_expression("tan(u)"), ParseError);
    CHECK_THROWS_AS(compile_expression("w"), ParseError);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
}

TEST_CASE("point config") {
    const SurfaceConfig cfg = parse_config(kParaboloid);
    CHECK(cfg.kind == SurfaceKind::Point);
    CHECK(cfg.domain.u0 == -1.0);
    CHECK(cfg.grid.nu == 12);
    CHECK(cfg.grid.nv == 10);
    const SurfaceFamily fam = build_family(cfg);
    CHECK((fam.surface.point(0.5, 1.0) - Vec3(0.5, 1.0, 0.625)).norm() < 1e-15);
    CHECK(std::abs(fam.normal(0.2, 0.1).norm() - 1.0) < 1e-12);
}

TEST_CASE("quadric config") {
    const SurfaceConfig cfg = parse_config("[surface]\nkind = quadric\nspace = dual\n"
                                           "matrix = 0 0 0 1/2; 0 1 0 0; 0 0 1 0; 1/2 0 0 1\n");
    REQUIRE(cfg.quadric.has_value());
    CHECK(cfg.quadric->to_poly() == parse_poly("u1^2 + u2^2 + u3^2 + u0*u3", Space::Dual));
    CHECK_THROWS_AS(build_family(cfg), UsageError);
}

TEST_CASE("malformed configs") {
    CHECK_THROWS_AS(parse_config("[surface]\nx = u\n"), ParseError);
    CHECK_THROWS_AS(parse_config("[surface]\nkind = blob\n"), ParseError);
    CHECK_THROWS_AS(parse_config("[surface]\nkind = point\nx = u\ny = v\nz = (u\n[domain]\nu=0,1\nv=0,1\n"),
                    ParseError);
    CHECK_THROWS(parse_config("[surface]\nkind = point\nx = u\ny = v\nz = u\n[domain]\nu=1,0\nv=0,1\n"));
    CHECK_THROWS_AS(load_config("/nonexistent/pedalis.cfg"), NotFound);
}

}

TEST_SUITE("cli") {

TEST_CASE("map") {
    Run r = run({"map", "--op", "alpha", "--plane", "-1,0,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,0,0,1\n");
    r = run({"map", "--op", "alpha", "--plane", "1,0,0,0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("exceptional: ideal plane") != std::string::npos);
    r = run({"map", "--op", "sigma", "--point", "1,2,0,0", "--dehomogenize"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,0.5,0,0\n");
    r = run({"map", "--op", "alpha-star", "--point", "1,0,0,0"});
    CHECK(r.code == 2);
    r = run({"map", "--op", "alpha-z", "--plane", "-1,0,0,1", "--z", "3,4,5", "--dehomogenize"});
    CHECK(r.out == "1,3,4,1\n");
    CHECK(run({"map", "--op", "beta", "--plane", "1,0,0,1"}).code == 1);
    CHECK(run({"map", "--op", "alpha", "--plane", "1,0,x"}).code == 1);
    CHECK(run({"map", "--op", "alpha"}).code == 1);
}

TEST_CASE("implicit") {
    const GalleryEntry& pl = get_entry("pluecker");
    Run r = run({"implicit", "--direction", "pedal", "--strip", to_string(pl.poly("F*"))});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string poly, report;
    std::getline(lines, poly);
    std::getline(lines, report);
    CHECK(equal_up_to_scale(parse_poly(poly), pl.poly("G")));
    CHECK(report == "r=2 k=0 n=3 deg=4");

    r = run({"implicit", "--direction", "inverse-pedal", "--strip", "x3 - x0"});
    CHECK(r.code == 0);
    CHECK(equal_up_to_scale(parse_poly(r.out.substr(0, r.out.find('\n'))),
                            parse_poly("u1^2 + u2^2 + u3^2 + u0*u3", Space::Dual)));
    CHECK(run({"implicit", "--direction", "pedal", "u0 + (u1"}).code == 1);
    CHECK(run({"implicit", "--direction", "pedal", "x0 + x1"}).code == 1);

    const auto cfg = temp_file("quadric.cfg", "[surface]\nkind = quadric\nspace = point\n"
                                              "matrix = -1 0 0 0; 0 1 0 0; 0 0 1 0; 0 0 0 1\n");
    r = run({"implicit", "--direction", "inverse-pedal", "--strip", "--config", cfg.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("r=") != std::string::npos);
}

TEST_CASE("sample writes OBJ meshes") {
    const auto out = temp_file("pluecker.obj");
    Run r = run({"sample", "--surface", "pluecker", "--construct", "pedal", "--grid", "60x60", "--out", out.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("vertices=", 0) == 0);
    const auto verts = obj_vertices(out);
    REQUIRE(!verts.empty());
    const CompiledPoly g = get_entry("pluecker").poly("G").compile();
    double worst = 0.0;
    for (const Vec3& x : verts) worst = std::max(worst, g.normalized_residual(Vec4(1, x[0], x[1], x[2])));
    CHECK(worst < 1e-8);

    r = run({"sample", "--surface", "plane-conchoid", "--construct", "conchoid:0.7", "--grid", "20x20", "--out",
             out.string()});
    CHECK(r.code == 0);
    CHECK(run({"sample", "--surface", "plane-conchoid", "--grid", "1x1", "--out", out.string()}).code == 1);
    CHECK(run({"sample", "--surface", "plane-conchoid", "--grid", "ax3"}).code == 1);
    CHECK(run({"sample", "--surface", "nowhere", "--out", out.string()}).code == 1);
    CHECK(run({"sample", "--surface", "plane-conchoid", "--construct", "offset:x", "--out", out.string()}).code == 1);

    const auto cfg = temp_file("paraboloid.cfg", kParaboloid);
    r = run({"sample", "--surface", cfg.string(), "--construct", "offset:0.25", "--grid", "8x8", "--out",
             out.string()});
    CHECK(r.code == 0);

    // every sample sits on the pole set
    const auto poles = temp_file("poles.cfg", "[surface]\nkind = polar\ns1 = 1\ns2 = 0\ns3 = 0\nr = 1/(u - u)\n"
                                              "[domain]\nu = 0, 1\nv = 0, 1\n");
    CHECK(run({"sample", "--surface", poles.string(), "--construct", "self", "--grid", "4x4", "--out",
               out.string()}).code == 3);
}

TEST_CASE("verify") {
    Run a = run({"verify", "--suite", "involutions", "--samples", "2000", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out.find("status=fail") == std::string::npos);
    CHECK(a.out.find("suite=involutions seed=7 checks=5 passed=5 failed=0 status=pass") != std::string::npos);
    Run b = run({"verify", "--suite", "involutions", "--samples", "2000", "--seed", "7"});
    CHECK(a.out == b.out);
    CHECK(run({"verify", "--suite", "degrees"}).code == 0);
    CHECK(run({"verify", "--suite", "nothing"}).code == 1);
    CHECK(run({"verify", "--samples", "0"}).code == 1);
}

TEST_CASE("usage") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

}
