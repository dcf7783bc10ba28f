#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace coeffbounds {

using cdouble = std::complex<double>;

/// Truncated power series with complex coefficients.
///
/// A Series of order N stores c[0..N] and represents sum c[k] z^k modulo
/// z^{N+1}. All arithmetic is exact in the quotient ring: operations never
/// read or write coefficients above the truncation order. Orders are carried
/// explicitly and mismatches are hard errors, never silent promotion.
class Series {
public:
    // All coefficients zero.
    explicit Series(std::size_t order) : coeffs_(order + 1) {}

    Series(std::initializer_list<cdouble> coeffs) : coeffs_(coeffs) {
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    static Series constant(cdouble value, std::size_t order);
    static Series variable(std::size_t order);                    // z
    static Series monomial(std::size_t degree, std::size_t order) // z^degree
        ;

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    cdouble operator[](std::size_t k) const { return coeffs_.at(k); }
    cdouble& operator[](std::size_t k) { return coeffs_.at(k); }
    std::span<const cdouble> coeffs() const noexcept { return coeffs_; }

    // Copy with a different truncation order (shrink or zero-pad).
    Series resized(std::size_t new_order) const;

private:
    std::vector<cdouble> coeffs_;
};

// Cauchy product modulo z^{N+1}. Orders must match.
Series mul(const Series& a, const Series& b);

// a + scale * b, coefficientwise. Orders must match.
Series add_scaled(const Series& a, const Series& b, cdouble scale);

// (1+u)^e for a = 1+u with unit constant term and any real exponent e.
// Solved coefficientwise from (1+u) * d/dz[(1+u)^e] = e * (1+u)^e * u',
// which keeps truncation exact at O(N^2) cost for non-integer e.
Series pow_real(const Series& a, double exponent);

// outer(inner(z)) modulo z^{N+1} by Horner evaluation in the series ring.
// inner must have zero constant term (otherwise truncation is not stable).
Series compose(const Series& outer, const Series& inner);

// Largest coefficientwise |a[k] - b[k]|. Orders must match.
double max_coeff_dist(const Series& a, const Series& b);

} // namespace coeffbounds
