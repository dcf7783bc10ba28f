#include "coeffbounds/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace coeffbounds {

Params::Params(double alpha_, double gamma_) : alpha(alpha_), gamma(gamma_) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("alpha must lie in (0,1)");
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::domain_error("gamma must lie in (0,1]");
}

double bound_a2(const Params& p) { return 2.0 * p.gamma / (1.0 - p.alpha); }

std::pair<double, A3Branch> bound_a3(const Params& p) {
    const double a = p.alpha, g = p.gamma;
    const double gamma_a3 = (1.0 - a) * (1.0 - a) / (3.0 - a);
    if (g <= gamma_a3) return {2.0 * g / (2.0 - a), A3Branch::Small};
    return {2.0 * (3.0 - a) * g * g / ((1.0 - a) * (1.0 - a) * (2.0 - a)), A3Branch::Large};
}

std::pair<double, A4Branch> bound_a4(const Params& p) {
    const double prefactor = 2.0 * p.gamma / (3.0 - p.alpha);
    if (p.gamma <= thresholds(p.alpha).gamma_nu) return {prefactor, A4Branch::Case1};
    return {prefactor * mu_nu(p).nu, A4Branch::Case2};
}

MuNu mu_nu(const Params& p) {
    const double a = p.alpha, g = p.gamma;
    const double k = a * a - 6.0 * a + 17.0;
    MuNu mn;
    mn.mu = 2.0 * (5.0 - a) * g / ((1.0 - a) * (2.0 - a));
    mn.nu = 1.0 / 3.0 + 2.0 / 3.0 * k * g * g / ((1.0 - a) * (1.0 - a) * (1.0 - a) * (2.0 - a));
    return mn;
}

Thresholds thresholds(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("alpha must lie in (0,1)");
    const double a = alpha;
    const double k = a * a - 6.0 * a + 17.0;
    Thresholds t;
    t.gamma_half = (1.0 - a) * (2.0 - a) / (4.0 * (5.0 - a));
    t.gamma_2 = (1.0 - a) * (2.0 - a) / (5.0 - a);
    t.gamma_4 = 2.0 * (1.0 - a) * (2.0 - a) / (5.0 - a);
    t.gamma_nu = std::sqrt((1.0 - a) * (1.0 - a) * (1.0 - a) * (2.0 - a) / k);
    t.gamma_a3 = (1.0 - a) * (1.0 - a) / (3.0 - a);
    return t;
}

BoundReport bound_report(const Params& p) {
    BoundReport r;
    r.a2_bound = bound_a2(p);
    std::tie(r.a3_bound, r.a3_branch) = bound_a3(p);
    std::tie(r.a4_bound, r.a4_branch) = bound_a4(p);
    const MuNu mn = mu_nu(p);
    r.mu = mn.mu;
    r.nu = mn.nu;
    return r;
}

double alpha_nu() {
    auto poly = [](double a) { return ((5.0 * a - 56.0) * a + 177.0) * a - 122.0; };
    // poly(0) < 0 < poly(1) and poly is increasing on (0,1).
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (poly(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double gamma_star(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0 / std::numbers::pi))
        throw std::domain_error("alpha must lie in (0, 2/pi)");
    const double t = std::sqrt(2.0 / (std::numbers::pi * alpha) - 1.0);
    return 2.0 / std::numbers::pi * std::atan(t) - alpha * t;
}

double beta_star(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0 / std::numbers::pi))
        throw std::domain_error("alpha must lie in (0, 2/pi)");
    return 2.0 / std::numbers::pi * std::atan(std::sqrt(2.0 / (std::numbers::pi * alpha) - 1.0));
}

} // namespace coeffbounds
