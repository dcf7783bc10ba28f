#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coeffbounds/bounds.hpp"
#include "coeffbounds/coeffs.hpp"
#include "coeffbounds/rand.hpp"
#include "coeffbounds/schwarz.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace coeffbounds;

namespace {

// Monte Carlo maximum of |a_k| over random admissible triples; a lower bound
// on the sharp bound, independent of the closed-form branch logic.
double mc_max(const Params& p, int k, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double best = 0.0;
    for (int s = 0; s < samples; ++s) {
        const SchwarzTriple t =
            body_sample(random_unit_disk(rng), random_unit_disk(rng), random_unit_disk(rng));
        const InitialCoeffs c = coeffs_closed(p, t);
        const double v = k == 2 ? std::abs(c.a2) : k == 3 ? std::abs(c.a3) : std::abs(c.a4);
        best = std::max(best, v);
    }
    return best;
}

double bisect(double lo, double hi, auto&& f) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("Params validates its hypotheses") {
    CHECK_THROWS_WITH_AS(Params(1.2, 0.5), "alpha must lie in (0,1)", std::domain_error);
    CHECK_THROWS_AS(Params(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(Params(1.0, 0.5), std::domain_error);
    CHECK_THROWS_WITH_AS(Params(0.5, 0.0), "gamma must lie in (0,1]", std::domain_error);
    CHECK_THROWS_AS(Params(0.5, 1.5), std::domain_error);
    CHECK_NOTHROW(Params(0.5, 1.0));
    CHECK_NOTHROW(Params(1e-8, 1e-8));
}

TEST_CASE("a2 bound: values and Monte Carlo attainment") {
    CHECK(std::abs(bound_a2(Params(1e-8, 1.0)) - 2.0) < 1e-6);
    CHECK(std::abs(bound_a2(Params(0.5, 1.0)) - 4.0) < 1e-12);
    CHECK(std::abs(bound_a2(Params(0.5, 0.5)) - 2.0) < 1e-12);

    for (double g : {1.0, 0.5}) {
        const Params p(0.5, g);
        const double best = mc_max(p, 2, 20000, 99);
        CHECK(best <= bound_a2(p) + 1e-9);
        CHECK(best >= bound_a2(p) - 5e-3);
    }
}

TEST_CASE("a3 bound: branches, values, Monte Carlo attainment") {
    {
        const auto [v, br] = bound_a3(Params(0.5, 0.05));
        CHECK(br == A3Branch::Small);
        CHECK(std::abs(v - 1.0 / 15.0) < 1e-12);
        const double best = mc_max(Params(0.5, 0.05), 3, 30000, 3);
        CHECK(best <= v + 1e-9);
        CHECK(best >= v - 5e-3);
    }
    {
        const auto [v, br] = bound_a3(Params(0.5, 1.0));
        CHECK(br == A3Branch::Large);
        CHECK(std::abs(v - 40.0 / 3.0) < 1e-12);
        const double best = mc_max(Params(0.5, 1.0), 3, 30000, 4);
        CHECK(best <= v + 1e-9);
        CHECK(best >= v - 5e-3);
    }
    // switch point tends to 1/3 as alpha -> 0
    CHECK(std::abs(thresholds(1e-8).gamma_a3 - 1.0 / 3.0) < 1e-6);
}

TEST_CASE("a4 bound: values and limits") {
    CHECK(std::abs(bound_a4(Params(1e-8, 1.0)).first - 4.0) < 1e-6);
    {
        const auto [v, br] = bound_a4(Params(0.5, 1.0));
        CHECK(br == A4Branch::Case2);
        CHECK(std::abs(v - 40.8) < 1e-12);
    }
    {
        const auto [v, br] = bound_a4(Params(0.5, 0.05));
        CHECK(br == A4Branch::Case1);
        CHECK(std::abs(v - 0.04) < 1e-12);
    }
    CHECK(std::abs(thresholds(1e-8).gamma_nu - 0.342997) < 1e-4);
}

TEST_CASE("mu and nu") {
    const MuNu mn = mu_nu(Params(0.5, 1.0));
    CHECK(std::abs(mn.mu - 12.0) < 1e-12);
    CHECK(std::abs(mn.nu - 51.0) < 1e-12);
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const Thresholds th = thresholds(a);
        CHECK(std::abs(mu_nu(Params(a, th.gamma_nu)).nu - 1.0) < 1e-12);
        CHECK(std::abs(mu_nu(Params(a, th.gamma_2)).mu - 2.0) < 1e-12);
        CHECK(std::abs(mu_nu(Params(a, th.gamma_half)).mu - 0.5) < 1e-12);
        CHECK(std::abs(mu_nu(Params(a, th.gamma_4)).mu - 4.0) < 1e-12);
    }
}

TEST_CASE("thresholds at alpha = 1/2, with root-finding oracles") {
    const Thresholds th = thresholds(0.5);
    CHECK(std::abs(th.gamma_nu - 0.114707866935281) < 1e-12);
    CHECK(std::abs(th.gamma_nu - 0.114708) < 1e-6);
    CHECK(std::abs(th.gamma_2 - 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(th.gamma_half - 1.0 / 24.0) < 1e-15);
    CHECK(std::abs(th.gamma_4 - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(th.gamma_a3 - 0.1) < 1e-15);

    const double root_nu =
        bisect(1e-6, 1.0, [](double g) { return mu_nu(Params(0.5, g)).nu - 1.0; });
    CHECK(std::abs(root_nu - th.gamma_nu) < 1e-10);
    const double root_2 =
        bisect(1e-6, 1.0, [](double g) { return mu_nu(Params(0.5, g)).mu - 2.0; });
    CHECK(std::abs(root_2 - th.gamma_2) < 1e-10);
}

TEST_CASE("alpha_nu: value, residual, crossover") {
    const double an = alpha_nu();
    CHECK(std::abs(an - 0.951226) < 1e-5);
    CHECK(std::abs(an - 0.951226418506016) < 1e-9);
    const double residual = ((5.0 * an - 56.0) * an + 177.0) * an - 122.0;
    CHECK(std::abs(residual) < 1e-8);
    const Thresholds th = thresholds(an);
    CHECK(std::abs(th.gamma_half - th.gamma_nu) < 1e-8);
}

TEST_CASE("starlikeness threshold values at alpha = 1/pi") {
    const double ap = 1.0 / std::numbers::pi;
    CHECK(std::abs(gamma_star(ap) - (0.5 - ap)) < 1e-12);
    CHECK(std::abs(beta_star(ap) - 0.5) < 1e-12);
    CHECK(std::abs(gamma_star(ap) - (1.0 - ap) + 0.5) < 1e-12);
    CHECK_THROWS_WITH_AS(gamma_star(0.7), "alpha must lie in (0, 2/pi)", std::domain_error);
    CHECK_THROWS_AS(gamma_star(2.0 / std::numbers::pi), std::domain_error);
    CHECK_THROWS_AS(beta_star(-0.1), std::domain_error);
}

TEST_CASE("branch continuity at both switch points") {
    for (int i = 0; i < 100; ++i) {
        const double a = 0.01 + 0.98 * double(i) / 99.0;
        const Thresholds th = thresholds(a);
        {
            const double below = bound_a3(Params(a, th.gamma_a3 - 1e-12)).first;
            const double above = bound_a3(Params(a, th.gamma_a3 + 1e-12)).first;
            CHECK(std::abs(below - above) < 1e-9);
        }
        {
            const double below = bound_a4(Params(a, th.gamma_nu - 1e-12)).first;
            const double above = bound_a4(Params(a, th.gamma_nu + 1e-12)).first;
            CHECK(std::abs(below - above) < 1e-9);
        }
    }
}

TEST_CASE("threshold curves: monotone, ordered, crossover at alpha_nu") {
    const double an = alpha_nu();
    Thresholds prev{};
    bool ok_mono = true, ok_order = true, ok_cross = true, ok_caps = true;
    for (int i = 0; i < 1000; ++i) {
        const double a = 1e-4 + (1.0 - 2e-4) * double(i) / 999.0;
        const Thresholds th = thresholds(a);
        if (i > 0) {
            ok_mono = ok_mono && th.gamma_half < prev.gamma_half && th.gamma_2 < prev.gamma_2 &&
                      th.gamma_4 < prev.gamma_4 && th.gamma_nu < prev.gamma_nu;
        }
        ok_order = ok_order && th.gamma_half < th.gamma_2 && th.gamma_2 < th.gamma_4 &&
                   th.gamma_nu < th.gamma_2;
        ok_caps = ok_caps && th.gamma_half < 0.1 && th.gamma_2 < 0.4 && th.gamma_4 < 0.8 &&
                  th.gamma_nu < std::sqrt(2.0 / 17.0);
        ok_cross = ok_cross && ((a <= an) == (th.gamma_half <= th.gamma_nu + 1e-15));
        prev = th;
    }
    CHECK(ok_mono);
    CHECK(ok_order);
    CHECK(ok_cross);
    CHECK(ok_caps);
}

TEST_CASE("gamma_star stays below 1 - alpha") {
    const double hi = 2.0 / std::numbers::pi;
    for (int i = 0; i < 1000; ++i) {
        const double a = hi * (1e-4 + (1.0 - 2e-4) * double(i) / 999.0);
        CHECK(gamma_star(a) < 1.0 - a);
    }
}

TEST_CASE("gamma = 1 closed forms") {
    for (int i = 0; i < 200; ++i) {
        const double a = 1e-4 + (1.0 - 2e-4) * double(i) / 199.0;
        const Params p(a, 1.0);
        const double k = a * a - 6.0 * a + 17.0;
        const double r2 = 2.0 / (1.0 - a);
        const double r3 = 2.0 * (3.0 - a) / ((1.0 - a) * (1.0 - a) * (2.0 - a));
        const double r4 =
            2.0 / (3.0 - a) *
            (1.0 / 3.0 + 2.0 / 3.0 * k / ((1.0 - a) * (1.0 - a) * (1.0 - a) * (2.0 - a)));
        CHECK(std::abs(bound_a2(p) - r2) <= 1e-12 * std::max(1.0, r2));
        CHECK(std::abs(bound_a3(p).first - r3) <= 1e-12 * std::max(1.0, r3));
        CHECK(std::abs(bound_a4(p).first - r4) <= 1e-12 * std::max(1.0, r4));
    }
}

TEST_CASE("alpha -> 0 piecewise forms") {
    const double eps = 1e-8;
    for (double g : {0.05, 0.2, 1.0 / 3.0, 0.335, 0.342, 0.3431, 0.5, 0.8, 1.0}) {
        const Params p(eps, g);
        const double r2 = 2.0 * g;
        const double r3 = g <= 1.0 / 3.0 ? g : 3.0 * g * g;
        const double r4 =
            g <= std::sqrt(2.0 / 17.0) ? 2.0 * g / 3.0 : 2.0 * g * (1.0 + 17.0 * g * g) / 9.0;
        CHECK(std::abs(bound_a2(p) - r2) < 1e-6);
        CHECK(std::abs(bound_a3(p).first - r3) < 1e-6);
        CHECK(std::abs(bound_a4(p).first - r4) < 1e-6);
    }
}
