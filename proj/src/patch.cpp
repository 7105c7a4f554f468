#include "wintgen/patch.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wintgen/errors.hpp"
#include "wintgen/vranceanu.hpp"

namespace wintgen {

Jet2 SurfacePatch::eval_jet2(double u, double v) const {
    if (!domain.contains(u, v))
        throw DomainError("parameter point (" + std::to_string(u) + "," + std::to_string(v) +
                          ") outside patch domain");
    Jet2 jet;
    const std::size_t n = components.size();
    jet.X = zeros(n);
    jet.Xu = zeros(n);
    jet.Xv = zeros(n);
    jet.Xuu = zeros(n);
    jet.Xuv = zeros(n);
    jet.Xvv = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ScalarJet2 j = components[i].eval_jet(u, v);
        jet.X[i] = j.v;
        jet.Xu[i] = j.du;
        jet.Xv[i] = j.dv;
        jet.Xuu[i] = j.duu;
        jet.Xuv[i] = j.duv;
        jet.Xvv[i] = j.dvv;
    }
    return jet;
}

void SurfacePatch::validate() const {
    if (ambient_dim < 3) throw InputError("ambient_dim must be >= 3");
    if (components.size() != ambient_dim)
        throw InputError("patch has " + std::to_string(components.size()) +
                         " components but ambient_dim = " + std::to_string(ambient_dim));
    if (!(domain.u1 > domain.u0) || !(domain.v1 > domain.v0))
        throw InputError("empty patch domain");
    if (family == PatchFamily::Vranceanu && profile.empty())
        throw InputError("vranceanu patch is missing its profile r(v)");
}

SurfacePatch load_patch_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad patch JSON: ") + e.what());
    }
    try {
        SurfacePatch p;
        p.label = j.value("label", std::string("patch"));
        if (j.contains("domain")) {
            const auto& d = j.at("domain");
            if (!d.is_array() || d.size() != 4) throw InputError("domain must be [u0,u1,v0,v1]");
            p.domain = {d[0].get<double>(), d[1].get<double>(), d[2].get<double>(),
                        d[3].get<double>()};
        }
        const std::string family = j.value("family", std::string());
        if (family == "vranceanu") {
            if (!j.contains("r")) throw InputError("vranceanu patch spec needs \"r\"");
            const Expression r = parse_expression(j.at("r").get<std::string>());
            SurfacePatch built = vranceanu_patch(r, p.domain);
            built.label = p.label;
            return built;
        }
        if (!family.empty()) throw InputError("unknown patch family '" + family + "'");
        p.ambient_dim = j.at("ambient_dim").get<std::size_t>();
        for (const auto& c : j.at("components"))
            p.components.push_back(parse_expression(c.get<std::string>()));
        p.validate();
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad patch JSON: ") + e.what());
    }
}

SurfacePatch load_patch_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open patch file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_patch_json(ss.str());
}

namespace {
std::string json_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
}  // namespace

std::string patch_to_json(const SurfacePatch& patch) {
    // Emitted by hand: field order and float formatting must be stable.
    std::string out = "{\n";
    out += "  \"label\": " + nlohmann::json(patch.label).dump() + ",\n";
    out += "  \"ambient_dim\": " + std::to_string(patch.ambient_dim) + ",\n";
    out += "  \"components\": [";
    for (std::size_t i = 0; i < patch.components.size(); ++i) {
        if (i) out += ", ";
        out += nlohmann::json(patch.components[i].to_string()).dump();
    }
    out += "],\n";
    out += "  \"domain\": [" + json_number(patch.domain.u0) + ", " + json_number(patch.domain.u1) +
           ", " + json_number(patch.domain.v0) + ", " + json_number(patch.domain.v1) + "]";
    if (patch.family == PatchFamily::Vranceanu) {
        out += ",\n  \"family\": \"vranceanu\",\n";
        out += "  \"r\": " + nlohmann::json(patch.profile.to_string()).dump();
    }
    out += "\n}\n";
    return out;
}

SurfacePatch make_unit_sphere_patch(std::size_t ambient_dim) {
    if (ambient_dim < 3) throw InputError("sphere needs ambient_dim >= 3");
    SurfacePatch p;
    p.label = "unit-sphere";
    p.ambient_dim = ambient_dim;
    p.components.push_back(parse_expression("cos(u)*cos(v)"));
    p.components.push_back(parse_expression("sin(u)*cos(v)"));
    p.components.push_back(parse_expression("sin(v)"));
    for (std::size_t i = 3; i < ambient_dim; ++i)
        p.components.push_back(Expression::constant(0.0));
    p.domain = {-3.0, 3.0, -1.4, 1.4};
    return p;
}

SurfacePatch make_plane_patch(std::size_t ambient_dim) {
    if (ambient_dim < 3) throw InputError("plane needs ambient_dim >= 3");
    SurfacePatch p;
    p.label = "plane";
    p.ambient_dim = ambient_dim;
    p.components.push_back(Expression::var_u());
    p.components.push_back(Expression::var_v());
    for (std::size_t i = 2; i < ambient_dim; ++i)
        p.components.push_back(Expression::constant(0.0));
    p.domain = {-10.0, 10.0, -10.0, 10.0};
    return p;
}

}  // namespace wintgen
