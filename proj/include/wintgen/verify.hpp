#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wintgen/geometry.hpp"
#include "wintgen/invariants.hpp"
#include "wintgen/patch.hpp"
#include "wintgen/rng.hpp"

namespace wintgen {

// Named verification suites shared by the CLI (`verify`) and the acceptance
// tests. Every suite is deterministic in (seed, count): identical inputs
// produce identical results and identical serialized reports.

struct CheckResult {
    std::string name;
    std::size_t count = 0;  // cases exercised
    double worst = 0.0;     // worst observed value (direction depends on the check)
    double tol = 0.0;       // threshold it was compared against
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool pass = true;

    void add(CheckResult c) {
        pass = pass && c.pass;
        checks.push_back(std::move(c));
    }
};

// Random second-fundamental-form tensor over a random orthonormal frame in
// R^n, coefficients uniform in [-2, 2].
SecondFundamentalForm random_sff(Rng& rng, std::size_t ambient_dim);

// Random polynomial patch of total degree <= 3 per component, coefficients
// uniform in [-1, 1].
SurfacePatch random_polynomial_patch(Rng& rng, std::size_t ambient_dim);

// Intrinsic Gaussian curvature from the metric alone: Brioschi formula on
// central finite differences of E, F, G (step h). Independent of the
// second-fundamental-form path, which is what it cross-checks.
double brioschi_curvature_fd(const SurfacePatch& patch, double u, double v, double h = 1e-4);

// Direct-vs-closed-form equivalence of the curvature action on `count`
// random tensors, ambient dims 4..8, plus the closed Vranceanu coefficient
// check against the generic pipeline.
SuiteResult run_lemma41(std::uint64_t seed, std::size_t count);

// Wintgen inequality fuzz: `count` random polynomial patches (dims 4..7),
// one random regular point each; defect >= -1e-8 and the exactness identity
// defect = |B|^2 + |C|^2 - 2|B^C|.
SuiteResult run_ddvv_fuzz(std::uint64_t seed, std::size_t count);

// Closed-form checks for the rotation-surface family: pipeline equality for
// the assorted profiles, the first/second-kind ODE equivalences, and the
// exponential semiparallel family with its perturbed control.
SuiteResult run_vranceanu(std::uint64_t seed);

// Extrinsic vs intrinsic (Brioschi) Gaussian curvature on the analytic test
// patches, 100 points each.
SuiteResult run_gauss_eq(std::uint64_t seed);

// Canonical-form round trip: `count` tensors generated in first/second-kind
// canonical form over random ambient frames; recovery and reconstruction.
SuiteResult run_canonical(std::uint64_t seed, std::size_t count);

// Witness checks: `count` umbilical (mu = 0) Wintgen-ideal semiparallel
// tensors plus the hand-derived first-kind point residuals.
SuiteResult run_witness(std::uint64_t seed, std::size_t count);

// name in {lemma41, ddvv-fuzz, vranceanu, gauss-eq, canonical, witness, all};
// count <= 0 picks each suite's default.
std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed,
                                    long count = 0);

std::string suites_to_json(const std::vector<SuiteResult>& results);
std::string suites_to_text(const std::vector<SuiteResult>& results);

}  // namespace wintgen
