#pragma once

#include "coeffbounds/bounds.hpp"
#include "coeffbounds/schwarz.hpp"
#include "coeffbounds/series.hpp"

#include <cstddef>
#include <vector>

namespace coeffbounds {

/// Taylor coefficients a_1..a_M of a normalized function
/// f(z) = z + a_2 z^2 + a_3 z^3 + ..., with a_1 == 1 exactly.
struct CoeffVector {
    std::vector<cdouble> a; // a[k-1] holds a_k

    std::size_t max_index() const noexcept { return a.size(); }
    cdouble coef(std::size_t k) const { return a.at(k - 1); }
};

struct InitialCoeffs {
    cdouble a2;
    cdouble a3;
    cdouble a4;
};

// Closed forms of the first coefficients of f in terms of the Schwarz
// coefficients (c1, c2, c3) of the defining identity
//   (f(z)/z)^{-(1+alpha)} f'(z) = ((1+w(z))/(1-w(z)))^gamma:
//   a2 = 2 g c1 / (1-a)
//   a3 = 2 g c2 / (2-a) + 2 (3-a) g^2 c1^2 / ((1-a)^2 (2-a))
//   a4 = 2 g / (3-a) * (c3 + mu c1 c2 + nu c1^3)
InitialCoeffs coeffs_closed(const Params& p, const SchwarzTriple& t);

// Independent route to the same coefficients: solve the defining identity
// order by order as g + z g' = g^{1+alpha} R with g = f/z and
// R = ((1+w)/(1-w))^gamma built in the series ring. At order n the unknown
// appears with factor (n - alpha) > 0, so the recurrence is well posed.
// w must have zero constant term; requested order must be >= 4. Returns
// a_1..a_{order+1}.
CoeffVector coeffs_series(const Params& p, const Series& omega, std::size_t order);

// Coefficients of the extremal function f_i defined by w(z) = z^i,
// i in {1,2,3}. f_1 attains the a2 bound and the Large/Case2 branch values;
// f_2 attains the Small a3 value; f_3 attains the Case1 a4 value.
CoeffVector extremal_function(const Params& p, int i, std::size_t order = 8);

} // namespace coeffbounds
