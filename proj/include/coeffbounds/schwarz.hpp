#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace coeffbounds {

using cdouble = std::complex<double>;

/// Parameter pair of the cubic coefficient functional
/// psi(c) = |c3 + mu c1 c2 + nu c1^3|.
struct MuNu {
    double mu;
    double nu;
};

/// Regions of the (mu, nu) plane on which the sharp bound of psi over all
/// Schwarz functions has a known closed form: 1 on D1, D2 and the isolated
/// point (2,1); |nu| on D3..D7. Everything else is Uncovered.
enum class Region { D1, D2, D3, D4, D5, D6, D7, Point21, Uncovered };

std::string_view region_name(Region r);

// Deterministic classification with all region boundaries inclusive. The
// isolated point (2,1) is matched first (it also satisfies the printed D2
// inequalities), then D1..D7 in order.
Region classify(MuNu mn);

// Sharp bound of psi over the full coefficient body: 1 on D1, D2, (2,1);
// |nu| on D3..D7; nullopt when (mu, nu) is uncovered.
std::optional<double> phi(MuNu mn);

/// First three Taylor coefficients of a Schwarz function
/// w(z) = c1 z + c2 z^2 + c3 z^3 + ... with |w| < 1 on the unit disk.
struct SchwarzTriple {
    cdouble c1;
    cdouble c2;
    cdouble c3;
};

// Exact admissibility of (c1, c2, c3):
//   |c1| <= 1
//   |c2| <= 1 - |c1|^2
//   |c3 (1 - |c1|^2) + conj(c1) c2^2| <= (1 - |c1|^2)^2 - |c2|^2
// Boundary tolerance keeps extremal triples (which sit exactly on the
// boundary) inside under roundoff.
bool body_contains(const SchwarzTriple& t, double tol = 1e-12);

// Chart of the coefficient body: for |z1|,|z2|,|z3| <= 1,
//   c1 = z1
//   c2 = (1 - |z1|^2) z2
//   c3 = (1 - |z1|^2) [ (1 - |z2|^2) z3 - conj(z1) z2^2 ]
// Every output is admissible, and every admissible triple arises this way.
SchwarzTriple body_sample(cdouble z1, cdouble z2, cdouble z3);

// |c3 + mu c1 c2 + nu c1^3|. The triple must be admissible.
double psi(MuNu mn, const SchwarzTriple& t);

// Maximum of f over the coefficient body, searched through the chart:
// a uniform modulus x phase grid (which contains the chart corners exactly),
// seeded random fill, then two rounds of coordinate refinement with halved
// steps. Returns a lower bound on the true maximum; deterministic for a
// fixed seed and budget. budget counts evaluations of f and must be >= 10^4.
double maximize_over_body(const std::function<double(const SchwarzTriple&)>& f,
                          long budget, std::uint64_t seed);

// maximize_over_body applied to psi(mn, .). Independent brute-force check of
// the phi values; works for uncovered (mu, nu) as well.
double phi_oracle(MuNu mn, long budget, std::uint64_t seed);

} // namespace coeffbounds
