#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coeffbounds/checks.hpp"
#include "coeffbounds/schwarz.hpp"

#include "json.hpp"

#include <cmath>

using namespace coeffbounds;

namespace {

SuiteConfig small_config() {
    SuiteConfig cfg;
    cfg.alpha_steps = 60;
    cfg.gamma_steps = 60;
    cfg.samples = 2000;
    cfg.budget = 10000;
    cfg.seed = 7;
    return cfg;
}

} // namespace

TEST_CASE("printed constants used by the case checks") {
    const double a = 0.5;
    const double disc =
        8.0 * std::pow(1.0 - a, 3) * (a * a * a - 2.0 * a * a + 17.0 * a - 52.0);
    CHECK(std::abs(disc - (-43.875)) < 1e-12);
    CHECK(std::abs((a * a - 2.0 * a - 3.0) - (-3.75)) < 1e-15);

    // the gamma_2 reduction evaluates to 29/9 at alpha = 1/2 (strictly above 1)
    const double g2 = thresholds(0.5).gamma_2;
    const double big = (43.0 - 23.0 * a + 5.0 * a * a - a * a * a) * g2 * g2 /
                       (std::pow(1.0 - a, 3) * (2.0 - a) * (2.0 - a));
    CHECK(std::abs(big - 29.0 / 9.0) < 1e-12);

    // at gamma_2 the D6 lower edge passes exactly through nu's comparison point
    const MuNu mn = mu_nu(Params(0.5, g2));
    CHECK(std::abs(mn.mu - 2.0) < 1e-12);
    CHECK(std::abs((mn.mu * mn.mu + 8.0) / 12.0 - 1.0) < 1e-12);
}

TEST_CASE("all checks pass on reduced grids") {
    const SuiteConfig cfg = small_config();
    for (const CheckReport& r : run_suite("all", cfg)) {
        INFO(r.name, ": worst=", r.worst_violation, " tol=", r.tolerance);
        CHECK(r.pass);
    }
}

TEST_CASE("single-check selectors and unknown selector") {
    const SuiteConfig cfg = small_config();
    const auto reports = run_suite("case2", cfg);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].name == "case2");
    CHECK(reports[0].pass);
    CHECK_THROWS_AS(run_suite("bogus", cfg), std::invalid_argument);
}

TEST_CASE("campaign at the worked examples") {
    SuiteConfig cfg = small_config();
    cfg.samples = 20000;
    cfg.budget = 100000;
    {
        const CheckReport r = campaign_domination_sharpness(Params(0.5, 1.0), cfg);
        CHECK(r.pass);
    }
    {
        const CheckReport r = campaign_domination_sharpness(Params(0.5, 0.05), cfg);
        CHECK(r.pass);
    }
    // the worked numbers behind those campaigns
    const double best4 = maximize_over_body(
        [](const SchwarzTriple& t) {
            return 0.8 * std::abs(t.c3 + 12.0 * t.c1 * t.c2 + 51.0 * t.c1 * t.c1 * t.c1);
        },
        100000, 7);
    CHECK(best4 >= 40.8 - 5e-3);
    CHECK(best4 <= 40.8 + 1e-9);
}

TEST_CASE("region coverage at the worked examples") {
    CHECK(phi(mu_nu(Params(0.5, 0.05))).value() == 1.0);
    const MuNu mn = mu_nu(Params(0.5, 1.0));
    CHECK(phi(mn).value() == mn.nu);
    CHECK(std::abs(phi(mn).value() - 51.0) < 1e-12);
    // at gamma_nu both bound branches coincide
    const double gnu = thresholds(0.5).gamma_nu;
    const double case1 = 2.0 * gnu / 2.5;
    const double case2 = case1 * mu_nu(Params(0.5, gnu)).nu;
    CHECK(std::abs(case1 - case2) < 1e-12);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    const SuiteConfig cfg = small_config();
    const CheckReport a = check_domination(cfg, 4);
    const CheckReport b = check_domination(cfg, 4);
    CHECK(a.worst_violation == b.worst_violation);
    CHECK(suite_json("domination", cfg, {a}) == suite_json("domination", cfg, {b}));

    const CheckReport c = check_phi_regions(cfg);
    const CheckReport d = check_phi_regions(cfg);
    CHECK(c.worst_violation == d.worst_violation);
}

TEST_CASE("summary lines and JSON schema") {
    const SuiteConfig cfg = small_config();
    const auto reports = run_suite("continuity", cfg);
    REQUIRE(reports.size() == 1);
    CHECK(summary_line(reports[0]).substr(0, 4) == "PASS");
    CHECK(all_pass(reports));

    const std::string text = suite_json("continuity", cfg, reports);
    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc["suite"] == "continuity");
    CHECK(doc["all_pass"] == true);
    REQUIRE(doc["checks"].size() == 1);
    const auto& jr = doc["checks"][0];
    for (const char* key : {"name", "description", "tolerance", "worst_violation", "pass",
                            "seed", "witnesses"})
        CHECK(jr.contains(key));
    CHECK(jr["witnesses"].size() <= 5);
    for (const auto& w : jr["witnesses"]) {
        CHECK(w.contains("label"));
        CHECK(w.contains("violation"));
        CHECK(w.contains("inputs"));
    }
}
