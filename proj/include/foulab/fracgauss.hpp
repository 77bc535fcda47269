#pragma once

#include <cstdint>
#include <vector>

#include "foulab/grid.hpp"

namespace foulab {

/// Covariance of fractional Brownian motion,
/// R_H(t,s) = (|t|^{2H} + |s|^{2H} - |t-s|^{2H}) / 2.
double fbm_covariance(double hurst, double t, double s);

/// Autocovariance rho_{k,H}(j) of the k-th order difference of fBm sampled at
/// unit steps:
///   rho_{k,H}(j) = 1/2 sum_{i=-k}^{k} (-1)^{1-i} C(2k, k-i) |j-i|^{2H},
/// with the convention 0^{2H} = 0. Large lags switch to the central-difference
/// derivative expansion of x^{2H}, where the alternating binomial sum would
/// cancel catastrophically.
double rho_k(double hurst, int k, std::int64_t j);

/// Alternating binomial filter of order k: coefficients (-1)^{k-j} C(k,j).
struct DifferenceKernel {
    int k = 0;
    std::vector<double> coefficients;  // size k+1, index j
};

DifferenceKernel difference_kernel(int k);

/// k-th forward difference of a sampled sequence; output length is
/// input length - k.
std::vector<double> apply_difference(const std::vector<double>& x, int k);

/// Sampled fBm path: values at t = 0, h, ..., n*h with B(0) = 0.
struct FbmPath {
    double hurst = 0.0;
    GridSpec grid;
    std::vector<double> values;  // length n+1
    std::uint64_t seed = 0;
};

/// Exact fractional Gaussian noise sampler via circulant embedding of the
/// increment autocovariance, diagonalized by FFT. The embedding eigenvalues
/// are computed once per (H, grid) and reused across paths; eigenvalues in
/// [-1e-9 * max, 0) are clipped to zero (counted), anything more negative
/// raises an error.
class FgnSampler {
  public:
    FgnSampler(double hurst, GridSpec grid);

    /// Path for the given seed; bit-identical for identical (H, grid, seed).
    FbmPath sample(std::uint64_t seed) const;

    /// Same, with an explicit (seed, stream) pair for Monte Carlo replications.
    FbmPath sample_stream(std::uint64_t seed, std::uint64_t stream) const;

    int clipped_eigenvalues() const { return clipped_; }
    double hurst() const { return hurst_; }
    const GridSpec& grid() const { return grid_; }

  private:
    std::vector<double> sample_increments(class GaussianStream& g) const;

    double hurst_;
    GridSpec grid_;
    std::vector<double> sqrt_eig_over_m_;  // sqrt(lambda_k / M)
    int clipped_ = 0;
};

/// One-shot convenience wrapper around FgnSampler.
FbmPath sample_fbm(double hurst, GridSpec grid, std::uint64_t seed);

}  // namespace foulab
