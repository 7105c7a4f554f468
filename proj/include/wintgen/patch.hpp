#pragma once

#include <string>
#include <vector>

#include "wintgen/expr.hpp"
#include "wintgen/linalg.hpp"

namespace wintgen {

struct Domain {
    double u0 = 0.0, u1 = 1.0;
    double v0 = 0.0, v1 = 1.0;

    bool contains(double u, double v) const {
        return u >= u0 && u <= u1 && v >= v0 && v <= v1;
    }
};

enum class PatchFamily { Generic, Vranceanu };

// Ambient 2-jet of the immersion at one parameter point.
struct Jet2 {
    Vec X, Xu, Xv, Xuu, Xuv, Xvv;
    std::size_t dim() const { return X.size(); }
};

// An immersion X(u,v) into R^n given by n component expressions. Immutable
// after construction; evaluation is pure, so patches are safe to share
// across workers. Vranceanu patches carry their profile r(v) so the
// geometry layer can use the explicit rotation-surface frame.
struct SurfacePatch {
    std::string label;
    std::size_t ambient_dim = 0;
    std::vector<Expression> components;
    Domain domain;
    PatchFamily family = PatchFamily::Generic;
    Expression profile;  // r(v), Vranceanu only

    // Exact ambient position and derivatives to second order.
    // Throws DomainError if a component is undefined at (u,v).
    Jet2 eval_jet2(double u, double v) const;

    void validate() const;  // dimension / component-count consistency
};

// Patch spec JSON:
//   {"label": ..., "ambient_dim": n, "components": ["...", ...],
//    "domain": [u0,u1,v0,v1], "family": "vranceanu", "r": "..."}
// "family"/"r" are optional; when family is "vranceanu" the four rotation
// surface components are derived from r and "components" may be omitted.
SurfacePatch load_patch_json(const std::string& json_text);
SurfacePatch load_patch_file(const std::string& path);
std::string patch_to_json(const SurfacePatch& patch);

// Built-in analytic patches used throughout the tests and suites.
SurfacePatch make_unit_sphere_patch(std::size_t ambient_dim = 3);
SurfacePatch make_plane_patch(std::size_t ambient_dim = 3);

}  // namespace wintgen
