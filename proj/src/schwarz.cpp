#include "coeffbounds/schwarz.hpp"

#include "coeffbounds/rand.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace coeffbounds {

std::string_view region_name(Region r) {
    switch (r) {
        case Region::D1: return "D1";
        case Region::D2: return "D2";
        case Region::D3: return "D3";
        case Region::D4: return "D4";
        case Region::D5: return "D5";
        case Region::D6: return "D6";
        case Region::D7: return "D7";
        case Region::Point21: return "Point21";
        case Region::Uncovered: return "Uncovered";
    }
    return "Uncovered";
}

namespace {

// Lower nu-edge of D2 and (negated) of D4/D7, as a function of |mu|.
double cubic_edge(double x) { return 4.0 / 27.0 * (x + 1.0) * (x + 1.0) * (x + 1.0) - (x + 1.0); }

} // namespace

Region classify(MuNu mn) {
    const double x = std::abs(mn.mu);
    const double nu = mn.nu;
    if (mn.mu == 2.0 && nu == 1.0) return Region::Point21;
    if (x <= 0.5 && -1.0 <= nu && nu <= 1.0) return Region::D1;
    if (0.5 <= x && x <= 2.0 && cubic_edge(x) <= nu && nu <= 1.0) return Region::D2;
    if (x <= 0.5 && nu <= -1.0) return Region::D3;
    if (x >= 0.5 && nu <= -2.0 / 3.0 * (x + 1.0)) return Region::D4;
    if (x <= 2.0 && nu >= 1.0) return Region::D5;
    if (2.0 <= x && x <= 4.0 && nu >= (mn.mu * mn.mu + 8.0) / 12.0) return Region::D6;
    if (x >= 4.0 && nu >= 2.0 / 3.0 * (x - 1.0)) return Region::D7;
    return Region::Uncovered;
}

std::optional<double> phi(MuNu mn) {
    switch (classify(mn)) {
        case Region::D1:
        case Region::D2:
        case Region::Point21:
            return 1.0;
        case Region::D3:
        case Region::D4:
        case Region::D5:
        case Region::D6:
        case Region::D7:
            return std::abs(mn.nu);
        case Region::Uncovered:
            return std::nullopt;
    }
    return std::nullopt;
}

bool body_contains(const SchwarzTriple& t, double tol) {
    const double m1 = std::norm(t.c1); // |c1|^2
    if (m1 > 1.0 + tol) return false;
    const double r = 1.0 - m1;
    if (std::abs(t.c2) > r + tol) return false;
    const double lhs = std::abs(t.c3 * r + std::conj(t.c1) * t.c2 * t.c2);
    const double rhs = r * r - std::norm(t.c2);
    return lhs <= rhs + tol;
}

SchwarzTriple body_sample(cdouble z1, cdouble z2, cdouble z3) {
    for (cdouble z : {z1, z2, z3})
        if (std::abs(z) > 1.0 + 1e-12)
            throw std::invalid_argument("body_sample: chart parameters must lie in the closed unit disk");
    auto clamp_disk = [](cdouble z) {
        const double m = std::abs(z);
        return m > 1.0 ? z / m : z;
    };
    z1 = clamp_disk(z1);
    z2 = clamp_disk(z2);
    z3 = clamp_disk(z3);
    const double r1 = 1.0 - std::norm(z1);
    const double r2 = 1.0 - std::norm(z2);
    SchwarzTriple t;
    t.c1 = z1;
    t.c2 = r1 * z2;
    t.c3 = r1 * (r2 * z3 - std::conj(z1) * z2 * z2);
    return t;
}

double psi(MuNu mn, const SchwarzTriple& t) {
    if (!body_contains(t))
        throw std::invalid_argument("psi: coefficient triple is not admissible");
    return std::abs(t.c3 + mn.mu * t.c1 * t.c2 + mn.nu * t.c1 * t.c1 * t.c1);
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Chart point in modulus/phase coordinates: (m1, p1, m2, p2, m3, p3).
using ChartPoint = std::array<double, 6>;

SchwarzTriple chart_z(cdouble z1, cdouble z2, cdouble z3) {
    const double r1 = 1.0 - std::norm(z1);
    const double r2 = 1.0 - std::norm(z2);
    SchwarzTriple t;
    t.c1 = z1;
    t.c2 = r1 * z2;
    t.c3 = r1 * (r2 * z3 - std::conj(z1) * z2 * z2);
    return t;
}

SchwarzTriple chart(const ChartPoint& x) {
    return chart_z(std::polar(x[0], x[1]), std::polar(x[2], x[3]), std::polar(x[4], x[5]));
}

} // namespace

double maximize_over_body(const std::function<double(const SchwarzTriple&)>& f,
                          long budget, std::uint64_t seed) {
    if (budget < 10000)
        throw std::invalid_argument("maximize_over_body: budget must be at least 10^4");

    long used = 0;
    double best = -std::numeric_limits<double>::infinity();
    ChartPoint best_x{};

    // Stage 1: product grid over moduli {0..1} and phases {0, pi/2, pi, 3pi/2}.
    // Endpoint moduli and phases 0/pi put the chart corners in the grid, where
    // the extremals of the covered regions sit.
    const long grid_budget = budget * 3 / 5;
    const int np = 4;
    const int nm = std::max(2, int(std::cbrt(double(grid_budget)) / np));
    struct Node {
        cdouble z;
        double m, p;
    };
    std::vector<Node> nodes;
    nodes.reserve(std::size_t(nm) * np);
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < np; ++j) {
            const double m = double(i) / double(nm - 1);
            const double p = kTwoPi * double(j) / double(np);
            nodes.push_back({std::polar(m, p), m, p});
        }
    for (const Node& n1 : nodes)
        for (const Node& n2 : nodes)
            for (const Node& n3 : nodes) {
                const double v = f(chart_z(n1.z, n2.z, n3.z));
                ++used;
                if (v > best) {
                    best = v;
                    best_x = {n1.m, n1.p, n2.m, n2.p, n3.m, n3.p};
                }
            }

    // Stage 2: seeded random fill of the chart cube.
    std::mt19937_64 rng(seed);
    const long random_budget = budget / 5;
    for (long i = 0; i < random_budget; ++i) {
        const cdouble z1 = random_unit_disk(rng);
        const cdouble z2 = random_unit_disk(rng);
        const cdouble z3 = random_unit_disk(rng);
        const double v = f(chart_z(z1, z2, z3));
        ++used;
        if (v > best) {
            best = v;
            best_x = {std::abs(z1), std::arg(z1), std::abs(z2),
                      std::arg(z2), std::abs(z3), std::arg(z3)};
        }
    }

    // Stage 3: two rounds of coordinate refinement with halved step sizes.
    double step_m = 1.0 / double(nm - 1);
    double step_p = kTwoPi / double(np);
    for (int round = 0; round < 2; ++round) {
        step_m *= 0.5;
        step_p *= 0.5;
        bool improved = true;
        int sweeps = 0;
        while (improved && sweeps < 50 && used < budget) {
            improved = false;
            ++sweeps;
            for (int c = 0; c < 6 && used < budget; ++c) {
                const bool is_mod = (c % 2 == 0);
                const double step = is_mod ? step_m : step_p;
                for (double dir : {+1.0, -1.0}) {
                    ChartPoint x = best_x;
                    double v = x[c] + dir * step;
                    if (is_mod)
                        v = std::clamp(v, 0.0, 1.0);
                    else
                        v = std::fmod(v + kTwoPi, kTwoPi);
                    x[c] = v;
                    const double val = f(chart(x));
                    ++used;
                    if (val > best) {
                        best = val;
                        best_x = x;
                        improved = true;
                    }
                }
            }
        }
    }
    return best;
}

double phi_oracle(MuNu mn, long budget, std::uint64_t seed) {
    return maximize_over_body(
        [mn](const SchwarzTriple& t) {
            return std::abs(t.c3 + mn.mu * t.c1 * t.c2 + mn.nu * t.c1 * t.c1 * t.c1);
        },
        budget, seed);
}

} // namespace coeffbounds
