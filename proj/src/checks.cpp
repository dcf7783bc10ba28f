#include "coeffbounds/checks.hpp"

#include "coeffbounds/coeffs.hpp"
#include "coeffbounds/rand.hpp"
#include "coeffbounds/schwarz.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace coeffbounds {

namespace {

constexpr double kMuCap = 1.7149858514250883;   // 10/sqrt(34)
constexpr double kL1Cap = 0.24984;              // cubic edge at mu = 10/sqrt(34) is 0.2498383...
constexpr double kGammaNuCap = 0.3429971702850177; // sqrt(2/17)

double cubic_edge(double x) { return 4.0 / 27.0 * (x + 1.0) * (x + 1.0) * (x + 1.0) - (x + 1.0); }

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    if (n == 1) {
        xs[0] = lo;
        return xs;
    }
    for (int i = 0; i < n; ++i) xs[std::size_t(i)] = lo + (hi - lo) * double(i) / double(n - 1);
    return xs;
}

// Interior alpha grid; the formulas are singular at alpha = 1.
std::vector<double> alpha_grid(const SuiteConfig& cfg) {
    return linspace(cfg.margin, 1.0 - cfg.margin, cfg.alpha_steps);
}

// Keeps the running worst violation plus the k worst witnesses.
class Tracker {
public:
    explicit Tracker(std::size_t keep = 5) : keep_(keep) {}

    void record(double violation, const char* label,
                std::initializer_list<std::pair<const char*, double>> inputs) {
        worst_ = std::max(worst_, violation);
        if (top_.size() >= keep_ && violation <= top_.back().violation) return;
        Witness w;
        w.label = label;
        w.violation = violation;
        w.inputs.reserve(inputs.size());
        for (const auto& [k, v] : inputs) w.inputs.emplace_back(k, v);
        auto pos = std::upper_bound(top_.begin(), top_.end(), violation,
                                    [](double v, const Witness& x) { return v > x.violation; });
        top_.insert(pos, std::move(w));
        if (top_.size() > keep_) top_.pop_back();
    }

    double worst() const { return worst_; }
    std::vector<Witness> take() { return std::move(top_); }

private:
    std::size_t keep_;
    double worst_ = -std::numeric_limits<double>::infinity();
    std::vector<Witness> top_;
};

CheckReport finish(std::string name, std::string description, double tolerance,
                   std::uint64_t seed, Tracker& t) {
    CheckReport r;
    r.name = std::move(name);
    r.description = std::move(description);
    r.tolerance = tolerance;
    r.worst_violation = t.worst();
    r.pass = r.worst_violation <= tolerance;
    r.seed = seed;
    r.witnesses = t.take();
    return r;
}

std::uint64_t cell_seed(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ull * (i * 2654435761ull + j + 1ull));
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    return x;
}

} // namespace

CheckReport check_case1(const SuiteConfig& cfg) {
    Tracker t;
    const double an = alpha_nu();
    for (int i = 0; i < cfg.alpha_steps; ++i) {
        const double a = an * double(i + 1) / double(cfg.alpha_steps + 1);
        const Thresholds th = thresholds(a);
        for (int j = 0; j < cfg.gamma_steps; ++j) {
            const double g =
                th.gamma_half + (th.gamma_nu - th.gamma_half) * double(j + 1) / double(cfg.gamma_steps);
            const MuNu mn = mu_nu(Params(a, g));
            const double l1 = cubic_edge(mn.mu);
            t.record(l1 - mn.nu, "L1 < R1", {{"alpha", a}, {"gamma", g}, {"L1", l1}, {"R1", mn.nu}});
            t.record(mn.mu - kMuCap, "mu < 10/sqrt(34)", {{"alpha", a}, {"gamma", g}, {"mu", mn.mu}});
            t.record(l1 - kL1Cap, "L1 < 0.24984", {{"alpha", a}, {"gamma", g}, {"L1", l1}});
            t.record(1.0 / 3.0 - mn.nu, "R1 > 1/3", {{"alpha", a}, {"gamma", g}, {"R1", mn.nu}});
        }
    }
    return finish("case1", "alpha grid in (0, alpha_nu), gamma grid in (gamma_half, gamma_nu]", 0.0,
                  cfg.seed, t);
}

CheckReport check_case2(const SuiteConfig& cfg) {
    Tracker t;
    auto big_factor = [](double a, double g) {
        return (43.0 + a * (-23.0 + a * (5.0 - a))) * g * g /
               ((1.0 - a) * (1.0 - a) * (1.0 - a) * (2.0 - a) * (2.0 - a));
    };
    for (double a : alpha_grid(cfg)) {
        const Thresholds th = thresholds(a);
        const double k = a * a - 6.0 * a + 17.0;

        // (i) nu >= (mu^2+8)/12 on [gamma_2, gamma_4], via its gamma^2 form.
        for (int j = 0; j < cfg.gamma_steps; ++j) {
            const double frac =
                cfg.gamma_steps == 1 ? 0.0 : double(j) / double(cfg.gamma_steps - 1);
            const double g = th.gamma_2 + (th.gamma_4 - th.gamma_2) * frac;
            t.record(1.0 - big_factor(a, g), "quadratic reduction >= 1 on [gamma_2, gamma_4]",
                     {{"alpha", a}, {"gamma", g}, {"value", big_factor(a, g)}});
        }

        // (ii) at gamma_2 the reduction collapses to -6(a^2-2a-3) over a
        // positive factor; check the identity and the sign agreement.
        const double quad = a * a - 2.0 * a - 3.0;
        const double lhs = big_factor(a, th.gamma_2) - 1.0;
        const double rhs = -6.0 * quad / ((5.0 - a) * (5.0 - a) * (1.0 - a));
        t.record(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)) - 1e-12,
                 "reduction identity at gamma_2", {{"alpha", a}, {"lhs", lhs}, {"rhs", rhs}});
        t.record(std::max(-lhs, quad), "sign agreement: reduction > 0 iff a^2-2a-3 < 0",
                 {{"alpha", a}, {"reduction", lhs}, {"quad", quad}});

        // (iii) the discriminant of 2 k g^2 - 4(1-a)^2(5-a) g + 3(1-a)^3(2-a)
        // is negative, so nu >= (2/3)(mu - 1) for every gamma.
        const double disc =
            8.0 * (1.0 - a) * (1.0 - a) * (1.0 - a) * (a * a * a - 2.0 * a * a + 17.0 * a - 52.0);
        t.record(disc, "discriminant < 0", {{"alpha", a}, {"D", disc}});
        for (int j = 0; j < cfg.gamma_steps; ++j) {
            const double g = double(j + 1) / double(cfg.gamma_steps);
            const MuNu mn = mu_nu(Params(a, g));
            const double slack = mn.nu - 2.0 / 3.0 * (mn.mu - 1.0);
            t.record(-slack, "nu >= (2/3)(mu-1)", {{"alpha", a}, {"gamma", g}, {"slack", slack}});
            const double trinomial = 2.0 * k * g * g - 4.0 * (1.0 - a) * (1.0 - a) * (5.0 - a) * g +
                                     3.0 * (1.0 - a) * (1.0 - a) * (1.0 - a) * (2.0 - a);
            const double scaled = slack * 3.0 * (1.0 - a) * (1.0 - a) * (1.0 - a) * (2.0 - a);
            t.record(std::abs(scaled - trinomial) / std::max(1.0, std::abs(trinomial)) - 1e-12,
                     "trinomial identity", {{"alpha", a}, {"gamma", g}});
        }
    }
    return finish("case2",
                  "alpha grid in (0,1); gamma on [gamma_2, gamma_4] for the reduction, (0,1] for "
                  "the trinomial",
                  0.0, cfg.seed, t);
}

CheckReport check_equivalences(const SuiteConfig& cfg) {
    Tracker t;
    for (double a : alpha_grid(cfg)) {
        const Thresholds th = thresholds(a);
        const double m_half = mu_nu(Params(a, th.gamma_half)).mu;
        const double m_2 = mu_nu(Params(a, th.gamma_2)).mu;
        const double m_4 = mu_nu(Params(a, th.gamma_4)).mu;
        const double n_nu = mu_nu(Params(a, th.gamma_nu)).nu;
        t.record(std::abs(m_half - 0.5), "mu(gamma_half) == 1/2", {{"alpha", a}, {"mu", m_half}});
        t.record(std::abs(m_2 - 2.0), "mu(gamma_2) == 2", {{"alpha", a}, {"mu", m_2}});
        t.record(std::abs(m_4 - 4.0), "mu(gamma_4) == 4", {{"alpha", a}, {"mu", m_4}});
        t.record(std::abs(n_nu - 1.0), "nu(gamma_nu) == 1", {{"alpha", a}, {"nu", n_nu}});
    }
    return finish("equivalences", "alpha grid in (0,1), thresholds mapped through mu and nu", 1e-12,
                  cfg.seed, t);
}

CheckReport check_region_coverage(const SuiteConfig& cfg) {
    Tracker t;
    for (double a : alpha_grid(cfg)) {
        const double gnu = thresholds(a).gamma_nu;
        for (int j = 0; j < cfg.gamma_steps; ++j) {
            const double g = double(j + 1) / double(cfg.gamma_steps);
            const MuNu mn = mu_nu(Params(a, g));
            const Region r = classify(mn);
            const auto value = phi(mn);
            double v = -1.0;
            if (!value.has_value()) {
                v = 1.0;
            } else if (g <= gnu) {
                // unit branch; at g == gamma_nu both answers coincide.
                if (*value != 1.0 && std::abs(*value - mn.nu) > 1e-12) v = 1.0;
            } else {
                if (std::abs(*value - mn.nu) > 0.0) v = 1.0;
            }
            t.record(v, "covered region matches the gamma range",
                     {{"alpha", a},
                      {"gamma", g},
                      {"mu", mn.mu},
                      {"nu", mn.nu},
                      {"region", double(int(r))}});
        }
    }
    return finish("coverage", "alpha grid in (0,1) x gamma grid in (0,1]", 0.0, cfg.seed, t);
}

CheckReport check_threshold_curves(const SuiteConfig& cfg) {
    Tracker t;
    const double an = alpha_nu();
    const auto poly = [](double a) { return ((5.0 * a - 56.0) * a + 177.0) * a - 122.0; };
    t.record(std::abs(an - 0.951226) - 1e-5, "alpha_nu == 0.951226 +- 1e-5", {{"alpha_nu", an}});
    t.record(std::abs(poly(an)) - 1e-8, "cubic residual at alpha_nu < 1e-8",
             {{"alpha_nu", an}, {"residual", poly(an)}});
    {
        const Thresholds th = thresholds(an);
        t.record(std::abs(th.gamma_half - th.gamma_nu) - 1e-8, "gamma_half == gamma_nu at alpha_nu",
                 {{"alpha_nu", an}, {"gamma_half", th.gamma_half}, {"gamma_nu", th.gamma_nu}});
    }

    const auto grid = alpha_grid(cfg);
    Thresholds prev{};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a = grid[i];
        const Thresholds th = thresholds(a);
        t.record(th.gamma_half - th.gamma_2, "gamma_half < gamma_2", {{"alpha", a}});
        t.record(th.gamma_2 - th.gamma_4, "gamma_2 < gamma_4", {{"alpha", a}});
        t.record(th.gamma_nu - th.gamma_2, "gamma_nu < gamma_2", {{"alpha", a}});
        t.record(th.gamma_half - 0.1, "gamma_half < 1/10", {{"alpha", a}});
        t.record(th.gamma_2 - 0.4, "gamma_2 < 2/5", {{"alpha", a}});
        t.record(th.gamma_4 - 0.8, "gamma_4 < 4/5", {{"alpha", a}});
        t.record(th.gamma_nu - kGammaNuCap, "gamma_nu < sqrt(2/17)", {{"alpha", a}});
        const double cross = th.gamma_half - th.gamma_nu;
        t.record((a < an ? cross : -cross) - 1e-12, "gamma_half <= gamma_nu iff alpha <= alpha_nu",
                 {{"alpha", a}, {"gamma_half", th.gamma_half}, {"gamma_nu", th.gamma_nu}});
        if (i > 0) {
            t.record(th.gamma_half - prev.gamma_half, "gamma_half strictly decreasing", {{"alpha", a}});
            t.record(th.gamma_2 - prev.gamma_2, "gamma_2 strictly decreasing", {{"alpha", a}});
            t.record(th.gamma_4 - prev.gamma_4, "gamma_4 strictly decreasing", {{"alpha", a}});
            t.record(th.gamma_nu - prev.gamma_nu, "gamma_nu strictly decreasing", {{"alpha", a}});
        }
        prev = th;
    }

    // alpha -> 0+ limit values, evaluated just inside the interval.
    const Thresholds lim = thresholds(1e-8);
    t.record(std::abs(lim.gamma_half - 0.1) - 1e-7, "gamma_half -> 1/10", {{"value", lim.gamma_half}});
    t.record(lim.gamma_half - 0.1, "gamma_half below 1/10", {{"value", lim.gamma_half}});
    t.record(std::abs(lim.gamma_2 - 0.4) - 1e-7, "gamma_2 -> 2/5", {{"value", lim.gamma_2}});
    t.record(lim.gamma_2 - 0.4, "gamma_2 below 2/5", {{"value", lim.gamma_2}});
    t.record(std::abs(lim.gamma_4 - 0.8) - 1e-7, "gamma_4 -> 4/5", {{"value", lim.gamma_4}});
    t.record(lim.gamma_4 - 0.8, "gamma_4 below 4/5", {{"value", lim.gamma_4}});
    t.record(std::abs(lim.gamma_nu - 0.342997) - 1e-4, "gamma_nu -> 0.342997",
             {{"value", lim.gamma_nu}});
    return finish("thresholds", "alpha grid in (0,1) plus the alpha -> 0 limit point", 0.0, cfg.seed,
                  t);
}

CheckReport check_branch_continuity(const SuiteConfig& cfg) {
    Tracker t;
    const int n = std::min(cfg.alpha_steps, 100);
    for (double a : linspace(0.01, 0.99, n)) {
        const Thresholds th = thresholds(a);
        {
            const double g = th.gamma_a3;
            const double small = 2.0 * g / (2.0 - a);
            const double large = 2.0 * (3.0 - a) * g * g / ((1.0 - a) * (1.0 - a) * (2.0 - a));
            t.record(std::abs(small - large), "a3 branches agree at gamma_a3",
                     {{"alpha", a}, {"gamma", g}, {"small", small}, {"large", large}});
            const double below = bound_a3(Params(a, g - 1e-12)).first;
            const double above = bound_a3(Params(a, g + 1e-12)).first;
            t.record(std::abs(below - above), "a3 bound continuous across gamma_a3",
                     {{"alpha", a}, {"gamma", g}, {"below", below}, {"above", above}});
        }
        {
            const double g = th.gamma_nu;
            const double case1 = 2.0 * g / (3.0 - a);
            const double case2 = case1 * mu_nu(Params(a, g)).nu;
            t.record(std::abs(case1 - case2), "a4 branches agree at gamma_nu",
                     {{"alpha", a}, {"gamma", g}, {"case1", case1}, {"case2", case2}});
            const double below = bound_a4(Params(a, g - 1e-12)).first;
            const double above = bound_a4(Params(a, g + 1e-12)).first;
            t.record(std::abs(below - above), "a4 bound continuous across gamma_nu",
                     {{"alpha", a}, {"gamma", g}, {"below", below}, {"above", above}});
        }
    }
    return finish("continuity", "100-point alpha grid, both switch points", 1e-9, cfg.seed, t);
}

CheckReport check_specializations(const SuiteConfig& cfg) {
    Tracker t;

    // gamma = 1: real part condition, closed forms in alpha alone.
    for (double a : alpha_grid(cfg)) {
        const Params p(a, 1.0);
        const double k = a * a - 6.0 * a + 17.0;
        const double r2 = 2.0 / (1.0 - a);
        const double r3 = 2.0 * (3.0 - a) / ((1.0 - a) * (1.0 - a) * (2.0 - a));
        const double r4 = 2.0 / (3.0 - a) *
                          (1.0 / 3.0 + 2.0 / 3.0 * k / ((1.0 - a) * (1.0 - a) * (1.0 - a) * (2.0 - a)));
        t.record(std::abs(bound_a2(p) - r2) / std::max(1.0, r2) - 1e-12, "gamma=1 a2 form",
                 {{"alpha", a}});
        t.record(std::abs(bound_a3(p).first - r3) / std::max(1.0, r3) - 1e-12, "gamma=1 a3 form",
                 {{"alpha", a}});
        t.record(std::abs(bound_a4(p).first - r4) / std::max(1.0, r4) - 1e-12, "gamma=1 a4 form",
                 {{"alpha", a}});
    }

    // alpha -> 0+: strongly starlike case, evaluated at alpha = 1e-8.
    const double eps = 1e-8;
    for (int j = 0; j < cfg.gamma_steps; ++j) {
        const double g = double(j + 1) / double(cfg.gamma_steps);
        const Params p(eps, g);
        const double r2 = 2.0 * g;
        const double r3 = g <= 1.0 / 3.0 ? g : 3.0 * g * g;
        const double r4 = g <= kGammaNuCap ? 2.0 * g / 3.0 : 2.0 * g * (1.0 + 17.0 * g * g) / 9.0;
        t.record(std::abs(bound_a2(p) - r2) - 1e-6, "alpha->0 a2 form", {{"gamma", g}});
        t.record(std::abs(bound_a3(p).first - r3) - 1e-6, "alpha->0 a3 form", {{"gamma", g}});
        t.record(std::abs(bound_a4(p).first - r4) - 1e-6, "alpha->0 a4 form", {{"gamma", g}});
        t.record(r4 - 4.0 - 1e-12, "alpha->0 a4 form capped by 4", {{"gamma", g}});
    }
    t.record(std::abs(bound_a2(Params(eps, 1.0)) - 2.0) - 1e-6, "a2 -> 2", {});
    t.record(std::abs(bound_a4(Params(eps, 1.0)).first - 4.0) - 1e-6, "a4 -> 4", {});

    // Starlikeness threshold: gamma_star < 1 - alpha on (0, 2/pi), with the
    // minimum of the gap at alpha = 1/pi.
    const double hi = 2.0 / std::numbers::pi;
    for (double a : linspace(hi * 1e-4, hi * (1.0 - 1e-4), cfg.alpha_steps)) {
        t.record(gamma_star(a) - (1.0 - a), "gamma_star < 1 - alpha",
                 {{"alpha", a}, {"gamma_star", gamma_star(a)}});
    }
    const double ap = 1.0 / std::numbers::pi;
    t.record(std::abs(gamma_star(ap) - (1.0 - ap) + 0.5) - 1e-12, "min gap == -1/2 at 1/pi", {});
    t.record(std::abs(beta_star(ap) - 0.5) - 1e-12, "beta == 1/2 at 1/pi", {});
    t.record(std::abs(gamma_star(ap) - (0.5 - ap)) - 1e-12, "gamma_star(1/pi) == 1/2 - 1/pi", {});

    return finish("limits", "gamma=1 and alpha->0 closed forms; starlikeness threshold facts", 0.0,
                  cfg.seed, t);
}

CheckReport check_domination(const SuiteConfig& cfg, int grid_points) {
    Tracker t;
    const int n = grid_points;
    for (int i = 0; i < n; ++i) {
        const double a = (double(i) + 0.5) / double(n);
        for (int j = 0; j < n; ++j) {
            const double g = double(j + 1) / double(n);
            const Params p(a, g);
            const double b2 = bound_a2(p);
            const double b3 = bound_a3(p).first;
            const double b4 = bound_a4(p).first;
            std::mt19937_64 rng(cell_seed(cfg.seed, std::uint64_t(i), std::uint64_t(j)));
            double worst = -std::numeric_limits<double>::infinity();
            SchwarzTriple at{};
            int which = 0;
            for (int s = 0; s < cfg.samples; ++s) {
                const SchwarzTriple tr =
                    body_sample(random_unit_disk(rng), random_unit_disk(rng), random_unit_disk(rng));
                const InitialCoeffs c = coeffs_closed(p, tr);
                const double e2 = std::abs(c.a2) - b2;
                const double e3 = std::abs(c.a3) - b3;
                const double e4 = std::abs(c.a4) - b4;
                const double e = std::max({e2, e3, e4});
                if (e > worst) {
                    worst = e;
                    at = tr;
                    which = e == e2 ? 2 : (e == e3 ? 3 : 4);
                }
            }
            t.record(worst, "sampled |a_k| within bound",
                     {{"alpha", a},
                      {"gamma", g},
                      {"k", double(which)},
                      {"c1_re", at.c1.real()},
                      {"c1_im", at.c1.imag()},
                      {"c2_re", at.c2.real()},
                      {"c2_im", at.c2.imag()},
                      {"c3_re", at.c3.real()},
                      {"c3_im", at.c3.imag()}});
        }
    }
    char desc[128];
    std::snprintf(desc, sizeof desc, "%dx%d parameter grid, %d samples per cell", n, n, cfg.samples);
    return finish("domination", desc, 1e-9, cfg.seed, t);
}

CheckReport campaign_domination_sharpness(const Params& p, const SuiteConfig& cfg) {
    Tracker t;
    const double a = p.alpha, g = p.gamma;
    const double b2 = bound_a2(p);
    const double b3 = bound_a3(p).first;
    const double b4 = bound_a4(p).first;
    const MuNu mn = mu_nu(p);

    // (i) domination over random admissible triples.
    std::mt19937_64 rng(cell_seed(cfg.seed, std::uint64_t(a * 1e9), std::uint64_t(g * 1e9)));
    double worst = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < cfg.samples; ++s) {
        const SchwarzTriple tr =
            body_sample(random_unit_disk(rng), random_unit_disk(rng), random_unit_disk(rng));
        const InitialCoeffs c = coeffs_closed(p, tr);
        worst = std::max({worst, std::abs(c.a2) - b2, std::abs(c.a3) - b3, std::abs(c.a4) - b4});
    }
    t.record(worst - 1e-9, "domination", {{"alpha", a}, {"gamma", g}, {"excess", worst}});

    // (ii) chart optimization approaches each bound from below.
    const double c2scale = 2.0 * g / (1.0 - a);
    const double l3 = 2.0 * g / (2.0 - a);
    const double q3 = 2.0 * (3.0 - a) * g * g / ((1.0 - a) * (1.0 - a) * (2.0 - a));
    const double pre4 = 2.0 * g / (3.0 - a);
    const double best2 = maximize_over_body(
        [&](const SchwarzTriple& tr) { return c2scale * std::abs(tr.c1); }, cfg.budget, cfg.seed);
    const double best3 = maximize_over_body(
        [&](const SchwarzTriple& tr) { return std::abs(l3 * tr.c2 + q3 * tr.c1 * tr.c1); },
        cfg.budget, cfg.seed);
    const double best4 = maximize_over_body(
        [&](const SchwarzTriple& tr) {
            return pre4 * std::abs(tr.c3 + mn.mu * tr.c1 * tr.c2 + mn.nu * tr.c1 * tr.c1 * tr.c1);
        },
        cfg.budget, cfg.seed);
    t.record((b2 - best2) - 5e-3, "a2 sharpness", {{"alpha", a}, {"gamma", g}, {"best", best2}});
    t.record((b3 - best3) - 5e-3, "a3 sharpness", {{"alpha", a}, {"gamma", g}, {"best", best3}});
    t.record((b4 - best4) - 5e-3, "a4 sharpness", {{"alpha", a}, {"gamma", g}, {"best", best4}});
    t.record((best2 - b2) - 1e-9, "a2 optimum within bound", {{"alpha", a}, {"gamma", g}});
    t.record((best3 - b3) - 1e-9, "a3 optimum within bound", {{"alpha", a}, {"gamma", g}});
    t.record((best4 - b4) - 1e-9, "a4 optimum within bound", {{"alpha", a}, {"gamma", g}});

    // (iii) the designated extremal function attains each branch value.
    const CoeffVector f1 = extremal_function(p, 1);
    const CoeffVector f2 = extremal_function(p, 2);
    const CoeffVector f3 = extremal_function(p, 3);
    t.record(std::abs(std::abs(f1.coef(2)) - b2) - 1e-9, "f1 attains the a2 bound",
             {{"alpha", a}, {"gamma", g}, {"a2", std::abs(f1.coef(2))}});
    t.record(std::abs(std::abs(f1.coef(3)) - q3) - 1e-9, "f1 attains the Large a3 value",
             {{"alpha", a}, {"gamma", g}, {"a3", std::abs(f1.coef(3))}});
    t.record(std::abs(std::abs(f1.coef(4)) - pre4 * mn.nu) - 1e-9, "f1 attains the Case2 a4 value",
             {{"alpha", a}, {"gamma", g}, {"a4", std::abs(f1.coef(4))}});
    t.record(std::abs(std::abs(f2.coef(3)) - l3) - 1e-9, "f2 attains the Small a3 value",
             {{"alpha", a}, {"gamma", g}, {"a3", std::abs(f2.coef(3))}});
    t.record(std::abs(std::abs(f3.coef(4)) - pre4) - 1e-9, "f3 attains the Case1 a4 value",
             {{"alpha", a}, {"gamma", g}, {"a4", std::abs(f3.coef(4))}});

    char name[64];
    std::snprintf(name, sizeof name, "sharpness(alpha=%g, gamma=%g)", a, g);
    char desc[128];
    std::snprintf(desc, sizeof desc, "%d samples, %ld optimizer budget per functional", cfg.samples,
                  cfg.budget);
    return finish(name, desc, 0.0, cfg.seed, t);
}

CheckReport check_sharpness(const SuiteConfig& cfg) {
    Tracker t;
    std::vector<Params> points;
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9})
        for (double g : {0.1, 0.325, 0.55, 0.775, 1.0}) points.emplace_back(a, g);
    points.emplace_back(0.5, 1.0);
    points.emplace_back(0.5, 0.05);
    for (const Params& p : points) {
        const CheckReport r = campaign_domination_sharpness(p, cfg);
        const char* label = r.witnesses.empty() ? "campaign" : r.witnesses.front().label.c_str();
        t.record(r.worst_violation, label, {{"alpha", p.alpha}, {"gamma", p.gamma}});
    }
    return finish("sharpness", "5x5 parameter grid plus two spot points", 0.0, cfg.seed, t);
}

namespace {

MuNu sample_region(Region target, std::mt19937_64& rng) {
    auto uni = [&rng](double lo, double hi) { return lo + (hi - lo) * uniform01(rng); };
    auto sign = [&rng]() { return uniform01(rng) < 0.5 ? -1.0 : 1.0; };
    for (;;) {
        MuNu mn{};
        switch (target) {
            case Region::D1: mn = {uni(-0.5, 0.5), uni(-1.0, 1.0)}; break;
            case Region::D2: mn = {sign() * uni(0.5, 2.0), uni(-1.0, 1.0)}; break;
            case Region::D3: mn = {uni(-0.5, 0.5), uni(-6.0, -1.0)}; break;
            case Region::D4: mn = {sign() * uni(0.5, 6.0), uni(-6.0, -1.0)}; break;
            case Region::D5: mn = {uni(-2.0, 2.0), uni(1.0, 6.0)}; break;
            case Region::D6: mn = {sign() * uni(2.0, 4.0), uni(1.0, 6.0)}; break;
            case Region::D7: mn = {sign() * uni(4.0, 6.0), uni(1.0, 8.0)}; break;
            default: return {2.0, 1.0};
        }
        if (classify(mn) == target) return mn;
    }
}

} // namespace

CheckReport check_phi_regions(const SuiteConfig& cfg) {
    Tracker t;
    std::mt19937_64 rng(cfg.seed);
    const Region regions[] = {Region::D1, Region::D2, Region::D3, Region::D4,
                              Region::D5, Region::D6, Region::D7};
    auto probe = [&](MuNu mn, Region r) {
        const double expected = *phi(mn);
        const double found = phi_oracle(mn, cfg.budget, cfg.seed);
        t.record((expected - found) - 5e-3, "oracle reaches the bound",
                 {{"mu", mn.mu}, {"nu", mn.nu}, {"region", double(int(r))}, {"oracle", found}});
        t.record((found - expected) - 1e-6, "oracle never beats the bound",
                 {{"mu", mn.mu}, {"nu", mn.nu}, {"region", double(int(r))}, {"oracle", found}});
    };
    for (Region r : regions)
        for (int i = 0; i < 20; ++i) probe(sample_region(r, rng), r);
    probe(MuNu{2.0, 1.0}, Region::Point21);
    return finish("regions", "20 seeded points per covered region plus (2,1)", 0.0, cfg.seed, t);
}

std::vector<std::string> suite_names() {
    return {"case1",  "case2",    "equivalences", "coverage", "thresholds",
            "continuity", "limits", "domination",   "sharpness", "regions"};
}

std::vector<CheckReport> run_suite(std::string_view selector, const SuiteConfig& cfg) {
    std::vector<CheckReport> out;
    auto want = [&](std::string_view name) { return selector == "all" || selector == name; };
    if (want("case1")) out.push_back(check_case1(cfg));
    if (want("case2")) out.push_back(check_case2(cfg));
    if (want("equivalences")) out.push_back(check_equivalences(cfg));
    if (want("coverage")) out.push_back(check_region_coverage(cfg));
    if (want("thresholds")) out.push_back(check_threshold_curves(cfg));
    if (want("continuity")) out.push_back(check_branch_continuity(cfg));
    if (want("limits")) out.push_back(check_specializations(cfg));
    if (want("domination")) out.push_back(check_domination(cfg));
    if (want("sharpness")) out.push_back(check_sharpness(cfg));
    if (want("regions")) out.push_back(check_phi_regions(cfg));
    if (out.empty()) throw std::invalid_argument("unknown suite: " + std::string(selector));
    return out;
}

bool all_pass(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

std::string summary_line(const CheckReport& r) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-14s worst_violation=% .6e  tol=%g",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.worst_violation, r.tolerance);
    return line;
}

std::string suite_json(std::string_view selector, const SuiteConfig& cfg,
                       const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json doc;
    doc["suite"] = std::string(selector);
    doc["seed"] = cfg.seed;
    doc["budget"] = cfg.budget;
    doc["samples"] = cfg.samples;
    doc["alpha_steps"] = cfg.alpha_steps;
    doc["gamma_steps"] = cfg.gamma_steps;
    doc["all_pass"] = all_pass(reports);
    doc["checks"] = nlohmann::ordered_json::array();
    for (const CheckReport& r : reports) {
        nlohmann::ordered_json jr;
        jr["name"] = r.name;
        jr["description"] = r.description;
        jr["tolerance"] = r.tolerance;
        jr["worst_violation"] = r.worst_violation;
        jr["pass"] = r.pass;
        jr["seed"] = r.seed;
        jr["witnesses"] = nlohmann::ordered_json::array();
        for (const Witness& w : r.witnesses) {
            nlohmann::ordered_json jw;
            jw["label"] = w.label;
            jw["violation"] = w.violation;
            jw["inputs"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : w.inputs) jw["inputs"][k] = v;
            jr["witnesses"].push_back(std::move(jw));
        }
        doc["checks"].push_back(std::move(jr));
    }
    return doc.dump(2) + "\n";
}

} // namespace coeffbounds
