#include <doctest.h>

#include <cmath>

#include "wintgen/errors.hpp"
#include "wintgen/report.hpp"
#include "wintgen/verify.hpp"
#include "wintgen/vranceanu.hpp"

using namespace wintgen;

namespace {

RunConfig sphere_config(int nu, int nv) {
    RunConfig cfg;
    cfg.family = "";
    cfg.patch_path = "";  // patch passed directly below
    cfg.nu = nu;
    cfg.nv = nv;
    return cfg;
}

}  // namespace

TEST_CASE("sphere grid: every point umbilical with zero defect") {
    const SurfacePatch sphere = make_unit_sphere_patch();
    RunConfig cfg = sphere_config(4, 4);
    const std::vector<PointReport> reports = evaluate_grid(sphere, cfg);
    REQUIRE(reports.size() == 16);
    for (const PointReport& r : reports) {
        CHECK(std::abs(r.defect) <= 1e-9);
        CHECK(r.cls.flags.totally_umbilical);
        CHECK(r.cls.flags.wintgen_ideal);
        CHECK(r.K == doctest::Approx(1.0));
    }
}

TEST_CASE("single point on the first-kind family") {
    const ProfileFamily fam = first_kind_profile(1.0, 0.0);
    const SurfacePatch patch =
        vranceanu_patch(fam.r, Domain{0.0, 2 * M_PI, fam.v_min, fam.v_max});
    const PointReport r = evaluate_point(patch, 0.0, 0.0);
    CHECK(r.K == doctest::Approx(2.0));
    CHECK(r.KN == doctest::Approx(2.0));
    CHECK(r.H2 == doctest::Approx(4.0));
    CHECK(std::abs(r.defect) <= 1e-10);
    CHECK(r.cls.kind == WintgenKind::First);
}

TEST_CASE("grid ordering is row-major in (u,v) and worker-count independent") {
    const SurfacePatch sphere = make_unit_sphere_patch();
    RunConfig cfg = sphere_config(3, 5);
    const std::vector<PointReport> seq = evaluate_grid(sphere, cfg);
    // u constant across each row of nv entries, v strictly increasing
    for (int iu = 0; iu < 3; ++iu)
        for (int iv = 0; iv + 1 < 5; ++iv) {
            const PointReport& a = seq[iu * 5 + iv];
            const PointReport& b = seq[iu * 5 + iv + 1];
            CHECK(a.u == b.u);
            CHECK(a.v < b.v);
        }

    cfg.workers = 8;
    const std::vector<PointReport> par = evaluate_grid(sphere, cfg);
    const std::string json_seq = reports_to_json(sphere, cfg, seq);
    const std::string json_par = reports_to_json(sphere, cfg, par);
    CHECK(json_seq == json_par);
}

TEST_CASE("json serialization round trip is value-identical") {
    const ProfileFamily fam = second_kind_profile(0.0, -1.0);
    const SurfacePatch patch =
        vranceanu_patch(fam.r, Domain{0.0, 2 * M_PI, fam.v_min, fam.v_max});
    RunConfig cfg = sphere_config(3, 3);
    const std::vector<PointReport> reports = evaluate_grid(patch, cfg);
    const std::string json = reports_to_json(patch, cfg, reports);
    const std::vector<PointReport> parsed = reports_from_json(json);
    REQUIRE(parsed.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(parsed[i].u == reports[i].u);
        CHECK(parsed[i].v == reports[i].v);
        CHECK(parsed[i].K == reports[i].K);
        CHECK(parsed[i].KN == reports[i].KN);
        REQUIRE(parsed[i].KN_signed.has_value() == reports[i].KN_signed.has_value());
        if (parsed[i].KN_signed) CHECK(*parsed[i].KN_signed == *reports[i].KN_signed);
        CHECK(parsed[i].H2 == reports[i].H2);
        CHECK(parsed[i].defect == reports[i].defect);
        CHECK(parsed[i].circular_residual == reports[i].circular_residual);
        CHECK(parsed[i].semiparallel_norm == reports[i].semiparallel_norm);
        CHECK(parsed[i].cls.kind == reports[i].cls.kind);
        CHECK(active_flag_names(parsed[i].cls.flags) ==
              active_flag_names(reports[i].cls.flags));
    }
    // serializing the parsed reports again reproduces the document
    CHECK(reports_to_json(patch, cfg, parsed) == json);
}

TEST_CASE("csv columns") {
    const SurfacePatch sphere = make_unit_sphere_patch();
    RunConfig cfg = sphere_config(1, 1);
    const std::vector<PointReport> reports = evaluate_grid(sphere, cfg);
    const std::string csv = reports_to_csv(reports, false);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "u,v,K,KN,KN_signed,H2,defect,circular_residual,semiparallel_norm,kind,flags");
    // ambient dim 3: the KN_signed cell is empty
    const auto line = csv.substr(csv.find('\n') + 1);
    std::size_t commas = 0, pos = 0;
    for (char ch : line)
        if (ch == ',') ++commas;
    (void)pos;
    CHECK(commas == 10);
    CHECK(line.find(",,") != std::string::npos);

    const std::string flags_csv = reports_to_csv(reports, true);
    CHECK(flags_csv.substr(0, flags_csv.find('\n')) == "u,v,kind,flags");
}

TEST_CASE("config validation") {
    RunConfig cfg;
    cfg.family = "first-kind";
    cfg.nu = 0;
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg.nu = 2;
    cfg.tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg.tol = 1e-8;
    cfg.workers = 0;
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg.workers = 1;
    cfg.patch_path = "also-set.json";
    CHECK_THROWS_AS(cfg.validate(), InputError);  // patch and family together
    cfg.patch_path = "";
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("grid evaluation reports the offending point on domain errors") {
    // profile defined only on part of the requested grid
    SurfacePatch patch;
    patch.label = "half-line";
    patch.ambient_dim = 3;
    patch.components = {Expression::var_u(), Expression::var_v(),
                        parse_expression("sqrt(v)")};
    patch.domain = {-1, 1, -1, 1};
    RunConfig cfg = sphere_config(2, 4);
    try {
        evaluate_grid(patch, cfg);
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("at (u=") != std::string::npos);
    }
}

TEST_CASE("verify suite serialization is deterministic") {
    const auto r1 = run_suites("lemma41", 7, 500);
    const auto r2 = run_suites("lemma41", 7, 500);
    CHECK(suites_to_json(r1) == suites_to_json(r2));
    CHECK(suites_to_text(r1) == suites_to_text(r2));
    CHECK_THROWS_AS(run_suites("bogus", 7, 10), InputError);
}
