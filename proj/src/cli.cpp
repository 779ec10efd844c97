#include "pedalis/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pedalis/config.hpp"
#include "pedalis/errors.hpp"
#include "pedalis/gallery.hpp"
#include "pedalis/hompoly.hpp"
#include "pedalis/projmaps.hpp"
#include "pedalis/surfkit.hpp"
#include "pedalis/verify.hpp"

namespace pedalis {

namespace {

std::string shortest(double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string join(const Vec4& t) {
    std::string s;
    for (int i = 0; i < 4; ++i) s += (i ? "," : "") + shortest(t[i]);
    return s;
}

template <int N>
Eigen::Matrix<double, N, 1> parse_tuple(const std::string& text, const char* what) {
    Eigen::Matrix<double, N, 1> out;
    std::stringstream ss(text);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i == N) throw ParseError(std::string(what) + " takes " + std::to_string(N) + " numbers");
        const char* b = item.data();
        const char* e = b + item.size();
        while (b < e && *b == ' ') ++b;
        if (b < e && *b == '+') ++b;
        double v = 0.0;
        const auto res = std::from_chars(b, e, v);
        if (res.ec != std::errc() || res.ptr != e) throw ParseError("bad number '" + item + "' in " + what);
        out[i++] = v;
    }
    if (i != N) throw ParseError(std::string(what) + " takes " + std::to_string(N) + " numbers");
    return out;
}

Grid parse_grid(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos) throw UsageError("grid must look like NUxNV");
    int nu = 0, nv = 0;
    const auto a = std::from_chars(text.data(), text.data() + x, nu);
    const auto b = std::from_chars(text.data() + x + 1, text.data() + text.size(), nv);
    if (a.ec != std::errc() || a.ptr != text.data() + x || b.ec != std::errc() ||
        b.ptr != text.data() + text.size())
        throw UsageError("grid must look like NUxNV");
    if (nu < 2 || nv < 2) throw UsageError("grid needs at least 2x2 samples");
    return {nu, nv};
}

std::string exceptional_message(const std::string& op, const GeometryError& e) {
    if (op == "alpha" || op == "pi") return "exceptional: ideal plane";
    if (op == "alpha-star" || op == "pi-star") return "exceptional: origin";
    return std::string("exceptional: ") + e.what();
}

// ---- map ------------------------------------------------------------------

struct MapArgs {
    std::string op, plane, point, z;
    bool dehomogenize = false;
};

int cmd_map(const MapArgs& a, std::ostream& out) {
    const bool needs_plane = a.op == "alpha" || a.op == "pi" || a.op == "alpha-z";
    if (needs_plane && a.plane.empty()) throw UsageError("--op " + a.op + " needs --plane");
    if (!needs_plane && a.point.empty()) throw UsageError("--op " + a.op + " needs --point");

    Vec4 result;
    if (a.op == "alpha") {
        result = alpha_hom(HPlane(parse_tuple<4>(a.plane, "--plane"))).x;
    } else if (a.op == "pi") {
        result = polarity_pi(HPlane(parse_tuple<4>(a.plane, "--plane"))).x;
    } else if (a.op == "alpha-star") {
        result = alpha_star_hom(HPoint(parse_tuple<4>(a.point, "--point"))).u;
    } else if (a.op == "pi-star") {
        result = polarity_pi_star(HPoint(parse_tuple<4>(a.point, "--point"))).u;
    } else if (a.op == "sigma") {
        result = inversion_sigma(HPoint(parse_tuple<4>(a.point, "--point"))).x;
    } else {
        if (a.z.empty()) throw UsageError("--op alpha-z needs --z x,y,z");
        const AffPlane e = AffPlane::from_homogeneous(HPlane(parse_tuple<4>(a.plane, "--plane")));
        result = HPoint::from_affine(alpha_z(e, parse_tuple<3>(a.z, "--z"))).x;
    }

    Vec4 c = canonical(result);
    if (c.isZero()) throw ExceptionalElement("map result is the zero tuple");
    if (a.dehomogenize) {
        if (std::abs(c[0]) <= kExceptionalEps) throw ExceptionalElement("ideal result cannot be dehomogenized");
        c /= c[0];
    }
    out << join(c) << '\n';
    return kExitOk;
}

// ---- implicit ---------------------------------------------------------------

struct ImplicitArgs {
    std::string direction, poly, config;
    bool strip = false;
};

int cmd_implicit(const ImplicitArgs& a, std::ostream& out) {
    HomPoly4 input;
    if (!a.config.empty()) {
        const SurfaceConfig cfg = load_config(a.config);
        if (!cfg.quadric) throw UsageError("--config must describe a quadric");
        input = cfg.quadric->to_poly();
    } else if (!a.poly.empty()) {
        const Space dflt = a.direction == "pedal" ? Space::Dual : Space::Point;
        input = parse_poly(a.poly, dflt);
    } else {
        throw UsageError("implicit needs a polynomial or --config");
    }

    const HomPoly4 pulled = a.direction == "pedal" ? pedal_pullback(input) : inverse_pedal_pullback(input);
    if (!a.strip) {
        out << to_string(pulled) << '\n';
        return kExitOk;
    }
    const StripResult s = strip_exceptional(pulled);
    out << to_string(s.reduced) << '\n';
    out << "r=" << s.r << " k=" << s.k << " n=" << input.degree() << " deg=" << s.reduced.degree() << '\n';
    return kExitOk;
}

// ---- sample -----------------------------------------------------------------

struct SampleArgs {
    std::string surface, construct = "self", grid = "60x60", out;
};

struct Source {
    VectorChart normal;
    ScalarChart support;
    PointSurface surface;
};

Source load_source(const std::string& name) {
    const auto names = list_entries();
    if (std::find(names.begin(), names.end(), name) != names.end()) {
        const GalleryEntry& e = get_entry(name);
        return {e.normal, e.support, e.surface};
    }
    if (!std::filesystem::exists(name)) throw NotFound("no gallery entry or config file named '" + name + "'");
    SurfaceFamily fam = build_family(load_config(name));
    return {fam.normal, fam.support, fam.surface};
}

double parse_offset(const std::string& text) {
    double d = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), d);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ParseError("bad distance '" + text + "'");
    return d;
}

PointSurface construct(const Source& src, const std::string& what) {
    if (what == "self") return src.surface;
    if (what == "pedal") return to_points(gamma(src.normal, src.support));
    if (what == "inverse-pedal") return envelope_surface(phi(src.normal, src.support));
    if (what.rfind("offset:", 0) == 0)
        return envelope_surface(offset_map(phi(src.normal, src.support), parse_offset(what.substr(7))));
    if (what.rfind("conchoid:", 0) == 0)
        return to_points(conchoid_map(gamma(src.normal, src.support), parse_offset(what.substr(9))));
    throw UsageError("unknown construction '" + what + "'");
}

int cmd_sample(const SampleArgs& a, std::ostream& out, std::ostream& err) {
    const Grid grid = parse_grid(a.grid);
    const Mesh mesh = sample_mesh(construct(load_source(a.surface), a.construct), grid.nu, grid.nv);
    std::ostream* report = &out;
    if (a.out.empty() || a.out == "-") {
        write_obj(mesh, out);
        report = &err;
    } else {
        std::ofstream file(a.out);
        if (!file) throw UsageError("cannot write '" + a.out + "'");
        write_obj(mesh, file);
    }
    *report << "vertices=" << mesh.vertices.size() << " faces=" << mesh.triangles.size() << '\n';
    return kExitOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 0;
    std::size_t samples = 10000;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_suite(a.suite, {a.seed, a.samples});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::size_t failed = 0;
    for (const auto& r : results) {
        out << format_check(r) << '\n';
        if (!r.pass) {
            ++failed;
            err << "FAIL " << r.suite << '/' << r.name << '\n';
        }
    }
    out << "suite=" << a.suite << " seed=" << a.seed << " checks=" << results.size()
        << " passed=" << results.size() - failed << " failed=" << failed
        << " status=" << (failed ? "fail" : "pass") << '\n';
    err << results.size() - failed << '/' << results.size() << " checks passed in " << seconds << " s\n";
    return failed ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Offset and conchoid surfaces through the foot-point correspondence", "pedalis"};
    app.require_subcommand(1);

    MapArgs map_args;
    auto* map = app.add_subcommand("map", "Apply a foot-point, inversion or polarity map");
    map->add_option("--op", map_args.op, "Map to apply")
        ->required()
        ->check(CLI::IsMember({"alpha", "alpha-star", "sigma", "pi", "pi-star", "alpha-z"}));
    map->add_option("--plane", map_args.plane, "Plane u0,u1,u2,u3")->allow_extra_args(false);
    map->add_option("--point", map_args.point, "Point x0,x1,x2,x3")->allow_extra_args(false);
    map->add_option("--z", map_args.z, "Foot-point centre x,y,z for alpha-z");
    map->add_flag("--dehomogenize", map_args.dehomogenize, "Scale the result to leading coordinate 1");

    ImplicitArgs imp_args;
    auto* imp = app.add_subcommand("implicit", "Pull a polynomial back along the pedal correspondence");
    imp->add_option("--direction", imp_args.direction, "pedal or inverse-pedal")
        ->required()
        ->check(CLI::IsMember({"pedal", "inverse-pedal"}));
    imp->add_flag("--strip", imp_args.strip, "Remove exceptional factors and report r, k, n, degree");
    imp->add_option("--config", imp_args.config, "Quadric config file");
    imp->add_option("poly", imp_args.poly, "Polynomial in canonical text form");

    SampleArgs sam_args;
    auto* sam = app.add_subcommand("sample", "Write a triangle mesh as OBJ");
    sam->add_option("--surface", sam_args.surface, "Gallery entry or config file")->required();
    sam->add_option("--construct", sam_args.construct, "self | pedal | inverse-pedal | offset:d | conchoid:d");
    sam->add_option("--grid", sam_args.grid, "Samples as NUxNV");
    sam->add_option("--out", sam_args.out, "Output path (default stdout)");

    VerifyArgs ver_args;
    ver_args.seed = default_seed();
    auto* ver = app.add_subcommand("verify", "Run verification suites");
    ver->add_option("--suite", ver_args.suite, "involutions | diagrams | gallery | degrees | all")
        ->check(CLI::IsMember({"involutions", "diagrams", "gallery", "degrees", "all"}));
    ver->add_option("--seed", ver_args.seed, "Random seed (default PEDALIS_SEED or 42)");
    ver->add_option("--samples", ver_args.samples, "Random samples per involution check")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*map) return cmd_map(map_args, out);
        if (*imp) return cmd_implicit(imp_args, out);
        if (*sam) return cmd_sample(sam_args, out, err);
        return cmd_verify(ver_args, out, err);
    } catch (const EmptyMesh& e) {
        err << e.what() << '\n';
        return kExitEmpty;
    } catch (const GeometryError& e) {
        err << (*map ? exceptional_message(map_args.op, e) : std::string(e.what())) << '\n';
        return kExitGeometry;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace pedalis
