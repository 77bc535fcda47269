#pragma once

#include <cstdint>
#include <vector>

#include "foulab/fracgauss.hpp"
#include "foulab/grid.hpp"

namespace foulab {

/// Deterministic volatility: a constant or a function of time tabulated on
/// the observation grid.
struct VolatilitySpec {
    enum class Kind { kConstant, kFunction };

    Kind kind = Kind::kConstant;
    double constant = 1.0;
    std::vector<double> samples;        // sigma(t_i), i = 0..n, when kind == kFunction
    double holder_exponent_hint = 1.0;  // documentation only

    static VolatilitySpec make_constant(double sigma);
    static VolatilitySpec tabulated(std::vector<double> samples, double holder_hint = 1.0);
};

/// Sampled fOU trajectory together with its generating parameters.
struct FouPath {
    double theta = 0.0;
    VolatilitySpec sigma;
    double hurst = 0.0;
    GridSpec grid;
    std::vector<double> values;  // length n+1, values[0] == x0
    double x0 = 0.0;
    std::uint64_t seed = 0;
};

/// Solve dX = -theta X dt + sigma dB^H from X(0) = 0 on the fBm's grid.
///
/// Constant sigma uses the exact-decay recursion
///   I(t_{i+1}) = e^{-theta h} I(t_i) + h/2 (B(t_{i+1}) + e^{-theta h} B(t_i)),
///   X = sigma (B - theta I),
/// trapezoid only on the slowly varying B factor. Time-varying sigma falls
/// back to a first-order Euler scheme. theta = 0 is accepted here (X becomes
/// sigma * B exactly); every estimator rejects it.
FouPath build_fou(const FbmPath& fbm, double theta, const VolatilitySpec& sigma);

/// ell(T) = sigma/2 T^{2H} - m(T) with
///   m(T) = sigma/2 g1 T^{2H} + sigma theta^{-2H} g_{2H+1} (H - 1/2)
///          - T H sigma theta^{1-2H} g_{2H},
/// where g_a abbreviates the lower incomplete gamma at (a, theta T).
/// T^{-1} ell(T) -> H sigma theta^{1-2H} Gamma(2H) as T grows.
double ell_T(double theta, double sigma, double hurst, double horizon);

/// Long-run value of (1/T) int_0^T X^2 dt: sigma^2 theta^{-2H} H Gamma(2H).
double stationary_variance(double theta, double sigma, double hurst);

}  // namespace foulab
