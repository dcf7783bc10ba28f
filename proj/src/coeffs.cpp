#include "coeffbounds/coeffs.hpp"

#include <stdexcept>

namespace coeffbounds {

InitialCoeffs coeffs_closed(const Params& p, const SchwarzTriple& t) {
    if (!body_contains(t))
        throw std::invalid_argument("coeffs_closed: coefficient triple is not admissible");
    const double a = p.alpha, g = p.gamma;
    const MuNu mn = mu_nu(p);
    InitialCoeffs c;
    c.a2 = 2.0 * g / (1.0 - a) * t.c1;
    c.a3 = 2.0 * g / (2.0 - a) * t.c2 +
           2.0 * (3.0 - a) * g * g / ((1.0 - a) * (1.0 - a) * (2.0 - a)) * t.c1 * t.c1;
    c.a4 = 2.0 * g / (3.0 - a) * (t.c3 + mn.mu * t.c1 * t.c2 + mn.nu * t.c1 * t.c1 * t.c1);
    return c;
}

CoeffVector coeffs_series(const Params& p, const Series& omega, std::size_t order) {
    if (omega[0] != cdouble(0.0))
        throw std::invalid_argument("coeffs_series: omega must vanish at the origin");
    if (order < 4)
        throw std::invalid_argument("coeffs_series: order must be at least 4");

    const std::size_t n = order;
    const Series w = omega.resized(n);
    const Series one = Series::constant(1.0, n);
    // R = ((1+w)/(1-w))^gamma, assembled from two unit-constant powers.
    const Series right = mul(pow_real(add_scaled(one, w, 1.0), p.gamma),
                             pow_real(add_scaled(one, w, -1.0), -p.gamma));

    // g = f/z = 1 + b_1 z + ... solved from g + z g' = g^{1+alpha} R:
    // with b_k zeroed, the z^k coefficient of the right side is everything
    // except (1+alpha) b_k, so b_k = [g^{1+alpha} R]_k / (k - alpha).
    Series g = Series::constant(1.0, n);
    for (std::size_t k = 1; k <= n; ++k) {
        const Series rhs = mul(pow_real(g, 1.0 + p.alpha), right);
        g[k] = rhs[k] / (double(k) - p.alpha);
    }

    CoeffVector out;
    out.a.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out.a[k] = g[k]; // a_{k+1} = b_k
    return out;
}

CoeffVector extremal_function(const Params& p, int i, std::size_t order) {
    if (i < 1 || i > 3)
        throw std::invalid_argument("extremal_function: index must be 1, 2 or 3");
    return coeffs_series(p, Series::monomial(std::size_t(i), order), order);
}

} // namespace coeffbounds
