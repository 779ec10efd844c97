#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pedalis/projmaps.hpp"

namespace pedalis {

struct CheckResult {
    std::string suite;
    std::string name;
    /// Max deviation (numeric checks) or 0/1 mismatch flag (exact checks).
    double value = 0.0;
    double threshold = 0.0;
    std::size_t samples = 0;
    bool exact = false;
    bool pass = false;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::size_t samples = 10000;
};

/// PEDALIS_SEED if set and numeric, else 42.
std::uint64_t default_seed();

/// Random non-exceptional inputs, a pure function of (seed, index):
/// |u0| in [0.1, 2], |u| >= 0.1 and likewise for points.
HPlane random_plane(std::uint64_t seed, std::size_t index);
HPoint random_point(std::uint64_t seed, std::size_t index);

std::vector<CheckResult> verify_involutions(const VerifyOptions& opt);
std::vector<CheckResult> verify_diagrams(const VerifyOptions& opt);
std::vector<CheckResult> verify_gallery(const VerifyOptions& opt);
std::vector<CheckResult> verify_degrees(const VerifyOptions& opt);

/// involutions | diagrams | gallery | degrees | all. Throws UsageError for
/// other names.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

/// `check=<suite>/<name> value=<v> threshold=<t> samples=<n> status=pass|fail`
std::string format_check(const CheckResult& r);

/// Diagram offsets used by the commutation suite.
const std::vector<double>& diagram_offsets();

}  // namespace pedalis
