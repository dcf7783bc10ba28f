#pragma once

#include "coeffbounds/bounds.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coeffbounds {

/// One recorded worst case of a check: what was violated, at which named
/// inputs, and by how much (negative = satisfied with that margin).
struct Witness {
    std::string label;
    std::vector<std::pair<std::string, double>> inputs;
    double violation;
};

/// Outcome of one verification check. pass == (worst_violation <= tolerance).
/// Checks that bundle sub-inequalities with different tolerances normalize
/// each sub-violation (raw minus its own tolerance) and report tolerance 0.
struct CheckReport {
    std::string name;
    std::string description;
    double tolerance = 0.0;
    double worst_violation = 0.0;
    bool pass = true;
    std::uint64_t seed = 0;
    std::vector<Witness> witnesses; // up to 5 worst, descending
};

struct SuiteConfig {
    int alpha_steps = 1000;
    int gamma_steps = 1000;
    int samples = 100000;   // Monte Carlo triples per campaign point
    long budget = 100000;   // evaluations per chart optimization
    std::uint64_t seed = 1;
    double margin = 1e-4;   // distance kept from the open interval endpoints
};

// gamma <= gamma_nu: mu stays below 10/sqrt(34), the cubic lower edge
// L1 = (4/27)(mu+1)^3 - (mu+1) stays below 0.24984, and nu stays above 1/3,
// so L1 < nu throughout and the functional bound is 1 there.
CheckReport check_case1(const SuiteConfig& cfg);

// gamma >= gamma_nu: the reduction of nu >= (mu^2+8)/12 on [gamma_2, gamma_4],
// its closed-form restatement at gamma_2, and the negative discriminant that
// certifies nu >= (2/3)(mu - 1) for every gamma.
CheckReport check_case2(const SuiteConfig& cfg);

// Each threshold curve maps to its defining value: mu(gamma_half) = 1/2,
// mu(gamma_2) = 2, mu(gamma_4) = 4, nu(gamma_nu) = 1, all to 1e-12.
CheckReport check_equivalences(const SuiteConfig& cfg);

// Every valid (alpha, gamma) lands in a covered region, on the side of the
// region table matching its gamma range.
CheckReport check_region_coverage(const SuiteConfig& cfg);

// Ordering, strict monotonicity, caps, the gamma_half/gamma_nu crossover at
// alpha_nu, and the alpha -> 0 limit values of all threshold curves.
CheckReport check_threshold_curves(const SuiteConfig& cfg);

// The a3 bound branches agree at gamma_a3 and the a4 branches at gamma_nu,
// evaluated at and on both sides of each switch point.
CheckReport check_branch_continuity(const SuiteConfig& cfg);

// Specializations: gamma = 1 closed forms, the alpha -> 0 piecewise bounds,
// and the starlikeness threshold facts (gamma_star < 1 - alpha, the minimum
// of gamma_star - (1 - alpha), the alpha = 1/pi values).
CheckReport check_specializations(const SuiteConfig& cfg);

// Monte Carlo domination over a grid_points x grid_points parameter grid:
// no sampled admissible triple beats any of the three bounds.
CheckReport check_domination(const SuiteConfig& cfg, int grid_points = 20);

// Domination, chart optimization reaching each bound, and extremal-function
// attainment at one parameter point.
CheckReport campaign_domination_sharpness(const Params& p, const SuiteConfig& cfg);

// campaign_domination_sharpness merged over the default campaign points
// (a 5x5 parameter grid plus two spot points).
CheckReport check_sharpness(const SuiteConfig& cfg);

// Brute-force maximum vs the closed-form functional bound at seeded points
// in each covered region: within 5e-3 from below, never above by > 1e-6.
CheckReport check_phi_regions(const SuiteConfig& cfg);

std::vector<std::string> suite_names();

// Runs one named check, or all of them for "all". Throws std::invalid_argument
// for an unknown selector.
std::vector<CheckReport> run_suite(std::string_view selector, const SuiteConfig& cfg);

bool all_pass(const std::vector<CheckReport>& reports);

// "PASS name worst_violation=... tol=..." one-liner.
std::string summary_line(const CheckReport& r);

// JSON document for a suite run: selector, config, per-check reports with
// witnesses. Deterministic field order.
std::string suite_json(std::string_view selector, const SuiteConfig& cfg,
                       const std::vector<CheckReport>& reports);

} // namespace coeffbounds
