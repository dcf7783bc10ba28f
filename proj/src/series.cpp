#include "coeffbounds/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace coeffbounds {

namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": series order mismatch");
}

} // namespace

Series Series::constant(cdouble value, std::size_t order) {
    Series s(order);
    s[0] = value;
    return s;
}

Series Series::variable(std::size_t order) { return monomial(1, order); }

Series Series::monomial(std::size_t degree, std::size_t order) {
    Series s(order);
    if (degree <= order) s[degree] = 1.0;
    return s;
}

Series Series::resized(std::size_t new_order) const {
    Series s(new_order);
    const std::size_t n = std::min(new_order, order());
    for (std::size_t k = 0; k <= n; ++k) s[k] = coeffs_[k];
    return s;
}

Series mul(const Series& a, const Series& b) {
    require_same_order(a, b, "mul");
    const std::size_t n = a.order();
    Series c(n);
    for (std::size_t k = 0; k <= n; ++k) {
        cdouble acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) acc += a[j] * b[k - j];
        c[k] = acc;
    }
    return c;
}

Series add_scaled(const Series& a, const Series& b, cdouble scale) {
    require_same_order(a, b, "add_scaled");
    Series c(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) c[k] = a[k] + scale * b[k];
    return c;
}

Series pow_real(const Series& a, double exponent) {
    if (a[0] != cdouble(1.0))
        throw std::invalid_argument("pow_real: constant term must be 1 (normalize first)");
    const std::size_t n = a.order();
    Series p(n);
    p[0] = 1.0;
    // p[k] from (1+u) p' = e p u' with u = a - 1:
    //   k p[k] = sum_{j=1..k} ((e+1) j - k) u[j] p[k-j]
    for (std::size_t k = 1; k <= n; ++k) {
        cdouble acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j)
            acc += ((exponent + 1.0) * double(j) - double(k)) * a[j] * p[k - j];
        p[k] = acc / double(k);
    }
    return p;
}

Series compose(const Series& outer, const Series& inner) {
    require_same_order(outer, inner, "compose");
    if (inner[0] != cdouble(0.0))
        throw std::invalid_argument("compose: inner constant term must be 0");
    const std::size_t n = outer.order();
    Series r = Series::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        r = mul(r, inner);
        r[0] += outer[k];
    }
    return r;
}

double max_coeff_dist(const Series& a, const Series& b) {
    require_same_order(a, b, "max_coeff_dist");
    double worst = 0.0;
    for (std::size_t k = 0; k <= a.order(); ++k)
        worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

} // namespace coeffbounds
