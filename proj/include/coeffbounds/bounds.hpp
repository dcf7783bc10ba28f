#pragma once

#include "coeffbounds/schwarz.hpp"

#include <utility>

namespace coeffbounds {

/// Parameters (alpha, gamma) of the function class: f analytic on the unit
/// disk, f(0) = 0 = f'(0) - 1, with |arg[(z/f(z))^{1+alpha} f'(z)]| bounded
/// by gamma pi/2. Admissible range is 0 < alpha < 1 and 0 < gamma <= 1,
/// both hypotheses strict; callers wanting limits pass near-boundary values.
struct Params {
    double alpha;
    double gamma;
    Params(double alpha_, double gamma_); // throws std::domain_error
};

enum class A3Branch { Small, Large };
enum class A4Branch { Case1, Case2 };

/// Threshold curves in gamma, all strictly decreasing in alpha:
///   gamma_half = (1-a)(2-a)/(4(5-a))     mu <= 1/2  iff  gamma <= gamma_half
///   gamma_2    = (1-a)(2-a)/(5-a)        mu <= 2
///   gamma_4    = 2(1-a)(2-a)/(5-a)       mu <= 4
///   gamma_nu   = sqrt((1-a)^3(2-a)/(a^2-6a+17))   nu <= 1
///   gamma_a3   = (1-a)^2/(3-a)           switch point of the |a3| bound
struct Thresholds {
    double gamma_half;
    double gamma_2;
    double gamma_4;
    double gamma_nu;
    double gamma_a3;
};

struct BoundReport {
    double a2_bound;
    double a3_bound;
    A3Branch a3_branch;
    double a4_bound;
    A4Branch a4_branch;
    double mu;
    double nu;
};

// Sharp bound |a2| <= 2 gamma / (1 - alpha).
double bound_a2(const Params& p);

// Sharp bound on |a3|:
//   2 gamma / (2 - alpha)                          for gamma <= gamma_a3
//   2 (3-a) gamma^2 / ((1-a)^2 (2-a))              otherwise
// The two branches coincide at gamma == gamma_a3; the left branch is
// selected at the threshold so branch labels are reproducible.
std::pair<double, A3Branch> bound_a3(const Params& p);

// Sharp bound on |a4|:
//   2 gamma / (3 - alpha)                          for gamma <= gamma_nu
//   2 gamma / (3 - alpha) * nu(alpha, gamma)       otherwise
// Continuous at gamma_nu because nu(alpha, gamma_nu) = 1.
std::pair<double, A4Branch> bound_a4(const Params& p);

// Functional parameters entering the |a4| analysis:
//   mu = 2 (5-a) gamma / ((1-a)(2-a))
//   nu = 1/3 + (2/3) (a^2 - 6a + 17) gamma^2 / ((1-a)^3 (2-a))
MuNu mu_nu(const Params& p);

Thresholds thresholds(double alpha); // requires 0 < alpha < 1

BoundReport bound_report(const Params& p);

// The unique root of 5 a^3 - 56 a^2 + 177 a - 122 in (0,1), located by
// bracketing bisection; equals the crossover where gamma_half == gamma_nu.
double alpha_nu();

// Largest gamma for which the argument condition guarantees starlikeness,
// valid for 0 < alpha < 2/pi:
//   gamma_star = (2/pi) arctan(sqrt(2/(pi a) - 1)) - a sqrt(2/(pi a) - 1)
double gamma_star(double alpha);

// Order of strong starlikeness reached at gamma_star:
//   beta_star = (2/pi) arctan(sqrt(2/(pi a) - 1))
double beta_star(double alpha);

} // namespace coeffbounds
