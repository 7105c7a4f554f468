#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wintgen/invariants.hpp"
#include "wintgen/patch.hpp"

namespace wintgen {

// Everything the CLI reports about one surface point.
struct PointReport {
    double u = 0.0, v = 0.0;
    double K = 0.0, KN = 0.0;
    std::optional<double> KN_signed;
    double H2 = 0.0;
    double defect = 0.0;
    double circular_residual = 0.0;
    double semiparallel_norm = 0.0;
    PointClassification cls;
};

enum class OutputFormat { Json, Csv };

struct RunConfig {
    // patch source: either a spec file or an inline family
    std::string patch_path;
    std::string family;
    double c1 = 0.0, c2 = 0.0;

    // evaluation target: a grid or a single point
    int nu = 1, nv = 1;
    std::optional<std::pair<double, double>> at;

    double tol = kDefaultTol;
    OutputFormat format = OutputFormat::Json;
    std::string out_path;  // empty = stdout
    std::uint64_t seed = 0;
    int workers = 1;
    bool flags_only = false;  // `classify` behaviour

    void validate() const;
    SurfacePatch resolve_patch() const;
};

PointReport evaluate_point(const SurfacePatch& patch, double u, double v,
                           double tol = kDefaultTol);

// Row-major in (u,v): u is the outer loop. Grid endpoints are inset by 1e-6
// of the domain span, since family domains are open intervals. Results are
// merged in index order, so any worker count yields the same sequence.
std::vector<PointReport> evaluate_grid(const SurfacePatch& patch, const RunConfig& config);

// Deterministic emitters: fixed field order, floats with 17 significant
// digits. Two identical runs produce byte-identical output.
std::string reports_to_json(const SurfacePatch& patch, const RunConfig& config,
                            const std::vector<PointReport>& reports);
std::string reports_to_csv(const std::vector<PointReport>& reports, bool flags_only);

// Re-parses the JSON document emitted above (round-trip checks).
std::vector<PointReport> reports_from_json(const std::string& text);

std::vector<std::string> active_flag_names(const PointFlags& flags);

std::string format_g17(double v);

}  // namespace wintgen
