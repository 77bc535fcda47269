#pragma once

#include <vector>

#include "foulab/fou_model.hpp"

namespace foulab {

/// Parameters of the k-th order p-variation statistics. H is assumed known.
struct PowerVariationConfig {
    int k = 2;
    double p = 2.0;
    double hurst = 0.5;

    void validate() const;
    /// Central limit theory is available iff k >= 2, or k = 1 with H < 3/4.
    bool clt_available() const { return k >= 2 || hurst < 0.75; }
};

/// p-th absolute moment of the k-th order fBm difference at unit steps:
/// c_{k,p} = 2^{p/2} Gamma((p+1)/2) / Gamma(1/2) * rho_{k,H}(0)^{p/2}.
double c_kp(double hurst, int k, double p);

/// k-th order p-variation at time t of a path sampled at frequency n = 1/h:
/// sum_{i=1}^{[nt]-k+1} |Delta_k Z_{(i-1)/n}|^p, zero if [nt]-k+1 < 1.
double v_kp(const std::vector<double>& values, double h, int k, double p, double t);

/// Power-variation estimator of the integrated volatility int_0^t |sigma_s|^p ds:
/// PV_{k,p}(X)_t = n^{-1+pH} V^n_{k,p}(X)_t / c_{k,p}.
double integrated_volatility(const FouPath& path, const PowerVariationConfig& cfg, double t);

/// Volatility estimate (n^{-1+pH} V^n_{k,p}(X)_T / (c_{k,p} T))^{1/p} for the
/// constant-sigma regime; the sign of sigma is not identifiable, the positive
/// root is returned.
double sigma_hat(const FouPath& path, const PowerVariationConfig& cfg);

}  // namespace foulab
