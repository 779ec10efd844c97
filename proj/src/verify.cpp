#include "pedalis/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "pedalis/errors.hpp"
#include "pedalis/gallery.hpp"
#include "pedalis/hompoly.hpp"
#include "pedalis/kernels.hpp"

namespace pedalis {

namespace {

constexpr double kProjectiveTol = 1e-9;
constexpr double kResidualTol = 1e-8;
constexpr double kDiagramTol = 1e-9;

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Four coordinates: |c0| in [0.1, 2] with random sign, c1..c3 uniform in
// [-2, 2] and redrawn until their norm is at least 0.1.
Vec4 random_tuple(std::uint64_t seed, std::size_t index, std::uint64_t stream) {
    std::mt19937_64 rng(splitmix(splitmix(seed) ^ splitmix(index * 4 + stream)));
    std::uniform_real_distribution<double> mag(0.1, 2.0), coord(-2.0, 2.0);
    Vec4 t;
    t[0] = (rng() & 1 ? 1.0 : -1.0) * mag(rng);
    do {
        t[1] = coord(rng);
        t[2] = coord(rng);
        t[3] = coord(rng);
    } while (t.tail<3>().norm() < 0.1);
    return t;
}

template <typename F>
CheckResult timed(const std::string& suite, const std::string& name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = body();
    r.suite = suite;
    r.name = name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

CheckResult batch_check(std::size_t n, double threshold, const BatchMeasure& f) {
    const ResidualReport rep = summarize(measure_batch(f, n));
    CheckResult r;
    r.value = rep.max;
    r.threshold = threshold;
    r.samples = rep.samples;
    r.pass = rep.max < threshold && rep.samples == n;
    return r;
}

CheckResult exact_check(bool ok) {
    CheckResult r;
    r.exact = true;
    r.value = ok ? 0.0 : 1.0;
    r.samples = 1;
    r.pass = ok;
    return r;
}

std::string label(std::string s) {
    for (char& c : s)
        if (c == ' ') c = '_';
    return s;
}

}  // namespace

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PEDALIS_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && end != env) return v;
    }
    return 42;
}

HPlane random_plane(std::uint64_t seed, std::size_t index) { return HPlane(random_tuple(seed, index, 0)); }
HPoint random_point(std::uint64_t seed, std::size_t index) { return HPoint(random_tuple(seed, index, 1)); }

std::vector<CheckResult> verify_involutions(const VerifyOptions& opt) {
    const std::uint64_t seed = opt.seed;
    const std::size_t n = opt.samples;
    std::vector<CheckResult> out;
    out.push_back(timed("involutions", "alpha_star_after_alpha", [&] {
        return batch_check(n, kProjectiveTol, [seed](std::size_t i) -> std::optional<double> {
            const HPlane u = random_plane(seed, i);
            return projective_distance(alpha_star_hom(alpha_hom(u)).u, u.u);
        });
    }));
    out.push_back(timed("involutions", "alpha_after_alpha_star", [&] {
        return batch_check(n, kProjectiveTol, [seed](std::size_t i) -> std::optional<double> {
            const HPoint x = random_point(seed, i);
            return projective_distance(alpha_hom(alpha_star_hom(x)).x, x.x);
        });
    }));
    out.push_back(timed("involutions", "alpha_equals_sigma_after_pi", [&] {
        return batch_check(n, kProjectiveTol, [seed](std::size_t i) -> std::optional<double> {
            const HPlane u = random_plane(seed, i);
            return projective_distance(alpha_hom(u).x, inversion_sigma(polarity_pi(u)).x);
        });
    }));
    out.push_back(timed("involutions", "alpha_star_equals_pi_star_after_sigma", [&] {
        return batch_check(n, kProjectiveTol, [seed](std::size_t i) -> std::optional<double> {
            const HPoint x = random_point(seed, i);
            return projective_distance(alpha_star_hom(x).u, polarity_pi_star(inversion_sigma(x)).u);
        });
    }));
    out.push_back(timed("involutions", "affine_round_trip", [&] {
        return batch_check(n, kProjectiveTol, [seed](std::size_t i) -> std::optional<double> {
            const AffPoint p = random_point(seed, i).dehomogenize();
            return (alpha_affine(alpha_star_affine(p)) - p).norm() / std::max(1.0, p.norm());
        });
    }));
    return out;
}

const std::vector<double>& diagram_offsets() {
    static const std::vector<double> d = {-1.0, -0.3, 0.0, 0.5, 2.0};
    return d;
}

std::vector<CheckResult> verify_diagrams(const VerifyOptions&) {
    std::vector<CheckResult> out;
    for (const auto& name : list_entries()) {
        const GalleryEntry& e = get_entry(name);
        if (!e.diagram_family) continue;
        for (double d : diagram_offsets()) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%g", d);
            out.push_back(timed("diagrams", name + "/d=" + buf, [&] {
                const CommutationReport rep = commutation_check(e.normal, e.support, d, Grid{50, 50});
                CheckResult r;
                r.value = std::max(rep.pedal_deviation, rep.inverse_deviation);
                r.threshold = kDiagramTol;
                r.samples = rep.samples;
                r.pass = r.value < kDiagramTol && rep.samples == 2500;
                return r;
            }));
        }
    }
    return out;
}

std::vector<CheckResult> verify_degrees(const VerifyOptions&) {
    std::vector<CheckResult> out;
    for (const auto& name : list_entries()) {
        const GalleryEntry& e = get_entry(name);
        for (const auto& exp : e.degrees) {
            out.push_back(timed("degrees", name + "/" + exp.dual, [&] {
                bool ok = false;
                try {
                    const DegreeReport r = degree_bookkeeping(e.poly(exp.dual));
                    ok = r.n == exp.expected.n && r.r == exp.expected.r && r.k == exp.expected.k &&
                         r.degree == exp.expected.degree && r.degree == 2 * r.n - r.r - 2 * r.k;
                } catch (const std::logic_error&) {
                    ok = false;
                }
                return exact_check(ok);
            }));
        }
    }
    return out;
}

std::vector<CheckResult> verify_gallery(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (const auto& name : list_entries()) {
        const GalleryEntry& e = get_entry(name);
        for (const auto& c : e.checks) {
            out.push_back(timed("gallery", name + "/" + label(c.label), [&] {
                const ResidualReport rep = residual_report(c.chart, c.space, e.poly(c.poly), c.domain, Grid{60, 60});
                CheckResult r;
                r.value = rep.max;
                r.threshold = kResidualTol;
                r.samples = rep.samples;
                r.pass = rep.max < kResidualTol;
                return r;
            }));
        }
        for (const auto& p : e.pairs) {
            if (p.pedal) {
                out.push_back(timed("gallery", name + "/pedal:" + p.dual + "->" + p.point, [&] {
                    const HomPoly4 g = strip_exceptional(pedal_pullback(e.poly(p.dual))).reduced;
                    return exact_check(equal_up_to_scale(g, e.poly(p.point)));
                }));
            }
            if (p.inverse) {
                out.push_back(timed("gallery", name + "/inverse:" + p.point + "->" + p.dual, [&] {
                    const HomPoly4 f = strip_exceptional(inverse_pedal_pullback(e.poly(p.point))).reduced;
                    return exact_check(equal_up_to_scale(f, e.poly(p.dual)));
                }));
            }
        }
    }
    for (auto& r : verify_degrees(opt)) {
        r.suite = "gallery";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (suite == "involutions") return verify_involutions(opt);
    if (suite == "diagrams") return verify_diagrams(opt);
    if (suite == "gallery") return verify_gallery(opt);
    if (suite == "degrees") return verify_degrees(opt);
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const char* s : {"involutions", "diagrams", "gallery", "degrees"}) {
            auto part = run_suite(s, opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw UsageError("unknown suite '" + suite + "'");
}

std::string format_check(const CheckResult& r) {
    char buf[96];
    std::snprintf(buf, sizeof buf, " value=%.6e threshold=%.1e samples=%zu status=%s", r.value, r.threshold, r.samples,
                  r.pass ? "pass" : "fail");
    return "check=" + r.suite + "/" + r.name + buf;
}

}  // namespace pedalis
