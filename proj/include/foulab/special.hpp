#pragma once

#include <functional>
#include <vector>

namespace foulab {

/// Gamma function, Lanczos approximation (g = 7, 9 coefficients) with the
/// reflection formula for arguments below 1/2. Relative error < 1e-13 on the
/// range used by the asymptotic-constant formulas, which hit near-pole
/// arguments such as Gamma(2-4H) for H near 1/2.
double gamma_fn(double z);

/// log |Gamma(z)| for z > 0.
double log_gamma(double z);

/// Lower incomplete gamma integral_0^x e^{-t} t^{alpha-1} dt for alpha > 0,
/// x >= 0. Power series for x < alpha + 1, Lentz continued fraction
/// otherwise; both truncated at relative 1e-12. Converges to Gamma(alpha)
/// exponentially fast as x grows.
double lower_incomplete_gamma(double alpha, double x);

/// Standard normal CDF.
double normal_cdf(double x);

struct GaussHermiteRule {
    std::vector<double> nodes;    // roots of the physicists' Hermite polynomial
    std::vector<double> weights;  // sum of weights = sqrt(pi)
};

/// Gauss-Hermite rule of the given order (weight e^{-x^2} on the real line).
const GaussHermiteRule& gauss_hermite(int n);

/// Adaptive Gauss-Kronrod (7-15 pair) quadrature of f on [a, b].
double integrate_gk15(const std::function<double(double)>& f, double a, double b,
                      double rel_tol = 1e-10, double abs_tol = 1e-14, int max_depth = 48);

}  // namespace foulab
