// Command-line front door for the curvature-invariants engine: evaluate
// invariants on grids, classify points, generate rotation-surface families,
// and run the verification suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 numeric/domain
// error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wintgen/errors.hpp"
#include "wintgen/report.hpp"
#include "wintgen/verify.hpp"
#include "wintgen/vranceanu.hpp"

namespace {

using namespace wintgen;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open output file '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

void parse_grid(const std::string& text, RunConfig& config) {
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) throw InputError("--grid expects NUxNV, e.g. 32x32");
    try {
        config.nu = std::stoi(text.substr(0, x));
        config.nv = std::stoi(text.substr(x + 1));
    } catch (const std::exception&) {
        throw InputError("--grid expects NUxNV, e.g. 32x32");
    }
}

void parse_at(const std::string& text, RunConfig& config) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("--at expects U,V");
    try {
        config.at = {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw InputError("--at expects U,V");
    }
}

int run_eval(const RunConfig& config) {
    RunConfig cfg = config;
    cfg.validate();
    const SurfacePatch patch = cfg.resolve_patch();

    std::vector<PointReport> reports;
    if (cfg.at) {
        reports.push_back(evaluate_point(patch, cfg.at->first, cfg.at->second, cfg.tol));
        cfg.nu = cfg.nv = 1;
    } else {
        reports = evaluate_grid(patch, cfg);
    }

    // Serialize only after every point succeeded: a failure leaves no
    // partial output file behind.
    const std::string body = cfg.format == OutputFormat::Csv
                                 ? reports_to_csv(reports, cfg.flags_only)
                                 : reports_to_json(patch, cfg, reports);
    write_output(cfg.out_path, body);
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, long count, bool json,
               const std::string& out_path) {
    const std::vector<SuiteResult> results = run_suites(suite, seed, count);
    const std::string body = json ? suites_to_json(results) : suites_to_text(results);
    write_output(out_path, body);
    bool pass = true;
    for (const SuiteResult& r : results) pass = pass && r.pass;
    return pass ? 0 : 1;
}

int run_family(const std::string& name, double c1, double c2, std::string out_path) {
    const ProfileFamily fam = make_family(name, c1, c2);
    SurfacePatch patch = vranceanu_patch(fam.r, Domain{0.0, 2.0 * M_PI, fam.v_min, fam.v_max});
    patch.label = name;
    if (out_path.empty()) out_path = name + ".json";
    write_output(out_path, patch_to_json(patch));
    std::printf("family %s: r = %s, u in [0, 2*pi], v in (%.12g, %.12g)\n", name.c_str(),
                fam.r.to_string().c_str(), fam.v_min, fam.v_max);
    std::printf("patch spec written to %s\n", out_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wintgen: curvature invariants, Wintgen ideality and semiparallelity "
                 "for parametric surfaces in Euclidean n-space"};
    app.require_subcommand(1);

    RunConfig config;
    std::string grid_text, at_text, format_text = "json";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--patch", config.patch_path, "patch spec JSON file");
        cmd->add_option("--family", config.family,
                        "inline family: first-kind, second-kind, exponential");
        cmd->add_option("--c1", config.c1, "family constant c1");
        cmd->add_option("--c2", config.c2, "family constant c2");
        cmd->add_option("--grid", grid_text, "grid resolution NUxNV");
        cmd->add_option("--at", at_text, "single point U,V");
        cmd->add_option("--tol", config.tol, "classification tolerance");
        cmd->add_option("--format", format_text, "output format: json|csv");
        cmd->add_option("--out", config.out_path, "output path (default stdout)");
        cmd->add_option("--seed", config.seed, "seed for randomized runs (unused by eval)");
        cmd->add_option("--workers", config.workers, "worker threads for grid evaluation");
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate invariants over a grid or point");
    add_common(eval_cmd);
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "like eval, but report classification flags only");
    add_common(classify_cmd);

    std::string suite = "all";
    std::uint64_t seed = 0;
    long count = 0;
    std::string verify_out, verify_format = "text";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite,
                           "lemma41, ddvv-fuzz, vranceanu, gauss-eq, canonical, witness, all");
    verify_cmd->add_option("--seed", seed, "RNG seed for the randomized suites");
    verify_cmd->add_option("--count", count, "case count override");
    verify_cmd->add_option("--format", verify_format, "output format: text|json");
    verify_cmd->add_option("--out", verify_out, "output path (default stdout)");

    std::string family_name;
    double fam_c1 = 0.0, fam_c2 = 0.0;
    std::string family_out;
    CLI::App* family_cmd = app.add_subcommand("family", "write a rotation-surface patch spec");
    family_cmd->add_option("name", family_name, "first-kind, second-kind or exponential")
        ->required();
    family_cmd->add_option("--c1", fam_c1, "family constant c1");
    family_cmd->add_option("--c2", fam_c2, "family constant c2");
    family_cmd->add_option("--out", family_out, "patch spec path (default <name>.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed() || classify_cmd->parsed()) {
            config.flags_only = classify_cmd->parsed();
            if (!grid_text.empty()) parse_grid(grid_text, config);
            if (!at_text.empty()) parse_at(at_text, config);
            if (format_text == "csv") config.format = OutputFormat::Csv;
            else if (format_text == "json") config.format = OutputFormat::Json;
            else throw wintgen::InputError("unknown format '" + format_text + "'");
            return run_eval(config);
        }
        if (verify_cmd->parsed()) {
            if (verify_format != "json" && verify_format != "text")
                throw wintgen::InputError("unknown format '" + verify_format + "'");
            return run_verify(suite, seed, count, verify_format == "json", verify_out);
        }
        if (family_cmd->parsed()) return run_family(family_name, fam_c1, fam_c2, family_out);
    } catch (const wintgen::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const wintgen::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
