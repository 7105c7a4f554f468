#include "wintgen/report.hpp"

#include <atomic>
#include <cstdio>
#include <thread>

#include <json.hpp>

#include "wintgen/errors.hpp"
#include "wintgen/semiparallel.hpp"
#include "wintgen/vranceanu.hpp"

namespace wintgen {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void RunConfig::validate() const {
    if (nu < 1 || nv < 1) throw InputError("grid resolution must be >= 1");
    if (!(tol > 0.0)) throw InputError("tolerance must be > 0");
    if (workers < 1) throw InputError("worker count must be >= 1");
    if (patch_path.empty() == family.empty())
        throw InputError("exactly one of --patch or --family is required");
}

SurfacePatch RunConfig::resolve_patch() const {
    if (!patch_path.empty()) return load_patch_file(patch_path);
    const ProfileFamily fam = make_family(family, c1, c2);
    SurfacePatch p = vranceanu_patch(fam.r, Domain{0.0, 2.0 * M_PI, fam.v_min, fam.v_max});
    p.label = family;
    return p;
}

PointReport evaluate_point(const SurfacePatch& patch, double u, double v, double tol) {
    const SecondFundamentalForm sff = surface_point_sff(patch, u, v);
    const CurvatureInvariants inv = curvature_invariants(sff);
    const CurvatureEllipse ell = curvature_ellipse(sff);
    const SemiparallelResidual res = curvature_action_direct(sff, inv.K);

    PointReport rep;
    rep.u = u;
    rep.v = v;
    rep.K = inv.K;
    rep.KN = inv.KN;
    rep.KN_signed = inv.KN_signed;
    rep.H2 = inv.H2;
    rep.defect = inv.defect;
    rep.circular_residual = ell.circular_residual;
    rep.semiparallel_norm = res.norm;
    rep.cls = classify_point(sff, res, tol);
    return rep;
}

std::vector<PointReport> evaluate_grid(const SurfacePatch& patch, const RunConfig& config) {
    const int nu = config.nu, nv = config.nv;
    const double du = patch.domain.u1 - patch.domain.u0;
    const double dv = patch.domain.v1 - patch.domain.v0;
    const double u_lo = patch.domain.u0 + 1e-6 * du, u_hi = patch.domain.u1 - 1e-6 * du;
    const double v_lo = patch.domain.v0 + 1e-6 * dv, v_hi = patch.domain.v1 - 1e-6 * dv;

    auto grid_u = [&](int i) {
        return nu == 1 ? 0.5 * (u_lo + u_hi) : u_lo + (u_hi - u_lo) * i / (nu - 1);
    };
    auto grid_v = [&](int j) {
        return nv == 1 ? 0.5 * (v_lo + v_hi) : v_lo + (v_hi - v_lo) * j / (nv - 1);
    };

    const std::size_t total = static_cast<std::size_t>(nu) * nv;
    std::vector<PointReport> reports(total);
    std::vector<std::string> errors(total);

    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t idx = cursor.fetch_add(1);
            if (idx >= total) return;
            const double u = grid_u(static_cast<int>(idx) / nv);
            const double v = grid_v(static_cast<int>(idx) % nv);
            try {
                reports[idx] = evaluate_point(patch, u, v, config.tol);
            } catch (const std::exception& e) {
                errors[idx] = "at (u=" + format_g17(u) + ", v=" + format_g17(v) + "): " + e.what();
            }
        }
    };

    const int workers = std::min<std::size_t>(config.workers, total);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Report the first failing grid point regardless of worker scheduling.
    for (std::size_t i = 0; i < total; ++i)
        if (!errors[i].empty()) throw DomainError("grid evaluation failed " + errors[i]);
    return reports;
}

std::vector<std::string> active_flag_names(const PointFlags& f) {
    std::vector<std::string> names;
    if (f.regular) names.push_back("regular");
    if (f.totally_geodesic) names.push_back("totally_geodesic");
    if (f.totally_umbilical) names.push_back("totally_umbilical");
    if (f.minimal) names.push_back("minimal");
    if (f.isotropic) names.push_back("isotropic");
    if (f.flat_normal) names.push_back("flat_normal");
    if (f.wintgen_ideal) names.push_back("wintgen_ideal");
    if (f.semiparallel) names.push_back("semiparallel");
    if (f.h2_equals_3k) names.push_back("h2_equals_3k");
    return names;
}

namespace {

void append_flags_json(const PointFlags& flags, std::string& out) {
    out += "[";
    const auto names = active_flag_names(flags);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += '"';
        out += names[i];
        out += '"';
    }
    out += "]";
}

void append_point_json(const PointReport& r, bool flags_only, std::string& out) {
    out += "{\"u\": " + format_g17(r.u) + ", \"v\": " + format_g17(r.v);
    if (!flags_only) {
        out += ", \"K\": " + format_g17(r.K);
        out += ", \"KN\": " + format_g17(r.KN);
        out += ", \"KN_signed\": " + (r.KN_signed ? format_g17(*r.KN_signed) : "null");
        out += ", \"H2\": " + format_g17(r.H2);
        out += ", \"defect\": " + format_g17(r.defect);
        out += ", \"circular_residual\": " + format_g17(r.circular_residual);
        out += ", \"semiparallel_norm\": " + format_g17(r.semiparallel_norm);
    }
    out += ", \"kind\": \"" + std::string(kind_name(r.cls.kind)) + "\"";
    out += ", \"flags\": ";
    append_flags_json(r.cls.flags, out);
    out += "}";
}

}  // namespace

std::string reports_to_json(const SurfacePatch& patch, const RunConfig& config,
                            const std::vector<PointReport>& reports) {
    std::string out = "{\n";
    out += "  \"label\": " + nlohmann::json(patch.label).dump() + ",\n";
    out += "  \"ambient_dim\": " + std::to_string(patch.ambient_dim) + ",\n";
    out += "  \"grid\": [" + std::to_string(config.nu) + ", " + std::to_string(config.nv) + "],\n";
    out += "  \"tol\": " + format_g17(config.tol) + ",\n";
    out += "  \"points\": [\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        out += "    ";
        append_point_json(reports[i], config.flags_only, out);
        if (i + 1 < reports.size()) out += ",";
        out += "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string reports_to_csv(const std::vector<PointReport>& reports, bool flags_only) {
    std::string out;
    if (flags_only) out = "u,v,kind,flags\n";
    else
        out =
            "u,v,K,KN,KN_signed,H2,defect,circular_residual,semiparallel_norm,kind,flags\n";
    for (const PointReport& r : reports) {
        out += format_g17(r.u) + "," + format_g17(r.v) + ",";
        if (!flags_only) {
            out += format_g17(r.K) + "," + format_g17(r.KN) + ",";
            out += (r.KN_signed ? format_g17(*r.KN_signed) : "") + ",";
            out += format_g17(r.H2) + "," + format_g17(r.defect) + ",";
            out += format_g17(r.circular_residual) + "," + format_g17(r.semiparallel_norm) + ",";
        }
        out += kind_name(r.cls.kind);
        out += ",";
        const auto names = active_flag_names(r.cls.flags);
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i) out += ";";
            out += names[i];
        }
        out += "\n";
    }
    return out;
}

std::vector<PointReport> reports_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad report JSON: ") + e.what());
    }
    std::vector<PointReport> out;
    for (const auto& p : doc.at("points")) {
        PointReport r;
        r.u = p.at("u").get<double>();
        r.v = p.at("v").get<double>();
        if (p.contains("K")) {
            r.K = p.at("K").get<double>();
            r.KN = p.at("KN").get<double>();
            if (!p.at("KN_signed").is_null()) r.KN_signed = p.at("KN_signed").get<double>();
            r.H2 = p.at("H2").get<double>();
            r.defect = p.at("defect").get<double>();
            r.circular_residual = p.at("circular_residual").get<double>();
            r.semiparallel_norm = p.at("semiparallel_norm").get<double>();
        }
        const std::string kind = p.at("kind").get<std::string>();
        if (kind == "first") r.cls.kind = WintgenKind::First;
        else if (kind == "second") r.cls.kind = WintgenKind::Second;
        else if (kind == "indeterminate") r.cls.kind = WintgenKind::Indeterminate;
        else r.cls.kind = WintgenKind::None;
        PointFlags f;
        f.regular = false;
        for (const auto& name : p.at("flags")) {
            const std::string s = name.get<std::string>();
            if (s == "regular") f.regular = true;
            else if (s == "totally_geodesic") f.totally_geodesic = true;
            else if (s == "totally_umbilical") f.totally_umbilical = true;
            else if (s == "minimal") f.minimal = true;
            else if (s == "isotropic") f.isotropic = true;
            else if (s == "flat_normal") f.flat_normal = true;
            else if (s == "wintgen_ideal") f.wintgen_ideal = true;
            else if (s == "semiparallel") f.semiparallel = true;
            else if (s == "h2_equals_3k") f.h2_equals_3k = true;
        }
        r.cls.flags = f;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace wintgen
