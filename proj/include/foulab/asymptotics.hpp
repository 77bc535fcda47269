#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace foulab {

/// E[H_m(N) |N|^p] for a standard Gaussian N, under the normalization
/// H_m(x) = ((-1)^m / m!) e^{x^2/2} d^m/dx^m e^{-x^2/2}.
/// Gauss-Hermite quadrature with 256 nodes: exact (to rounding) for even
/// integer p, algebraically convergent otherwise because of the |x|^p cusp.
double hermite_abs_moment(int m, double p);

/// Truncation bookkeeping for the Hermite-chaos series.
struct SeriesTruncation {
    int hermite_orders = 0;      // series summed for m = 2..hermite_orders
    std::int64_t lag_cutoff = 0; // lag sums truncated at this j
    double tail_bound = 0.0;     // analytic bound on the omitted mass
};

struct SeriesValue {
    double value = 0.0;
    SeriesTruncation truncation;
};

/// v1^2 = sum_{m>=2} c_m^2/m! [1 + 2 sum_j (rho_{k,H}(j)/rho_{k,H}(0))^m],
/// c_m = m! rho_{k,H}(0)^{p/2} E[H_m(N)|N|^p]. Diverges (throws) for k = 1
/// with H >= 3/4. The returned tail bound covers Hermite orders above M and
/// lags above J.
SeriesValue v1_squared(double hurst, int k, double p, int hermite_orders = 60,
                       std::int64_t lag_cutoff = 100000);

/// Normalized asymptotic variance nu^2 T / sigma^{2p} of the volatility
/// estimator; equals v1_squared / c_{k,p}^2.
SeriesValue nu_squared_normalized(double hurst, int k, double p, int hermite_orders = 60,
                                  std::int64_t lag_cutoff = 100000);

/// Like the two above, but (M, J) are doubled (at most twice) until the tail
/// bound drops below 1e-7 of the partial sum.
SeriesValue v1_squared_auto(double hurst, int k, double p);
SeriesValue nu_squared_normalized_auto(double hurst, int k, double p);

/// Normalized asymptotic variance table over H in {0.1,0.3,0.5,0.6,0.7,0.8,0.9}
/// and k in 1..5. Entries for k = 1, H >= 0.75 are undefined (NaN). The lag
/// series is truncated at 10^4 terms, the reference evaluation horizon for
/// these four-decimal values.
struct VarianceTable {
    std::vector<double> hs;
    std::vector<int> ks;
    std::vector<std::vector<double>> values;  // values[row][col], NaN when undefined
};
VarianceTable table1(double p = 2.0);

/// sigma_H^2 of the sqrt(T)-rate drift CLTs, defined for H in (0, 3/4):
///   (4H-1) + 2 Gamma(2-4H) Gamma(4H) / (Gamma(2H) Gamma(1-2H)),  H < 1/2
///   (4H-1) [1 + Gamma(3-4H) Gamma(4H-1) / (Gamma(2-2H) Gamma(2H))], H in [1/2, 3/4)
/// Continuous across H = 1/2 where both branches give 2.
double sigma_H_squared(double hurst);

enum class DriftEstimator { kLse, kEte, kMle };

enum class LimitRegime {
    kGaussian,       // rate sqrt(T), normal limit
    kGaussianLog,    // H = 3/4: rate sqrt(T)/sqrt(log T) (LSE) or sqrt(T)/log T (ETE)
    kRosenblatt,     // H > 3/4: rate T^{2-2H}, Rosenblatt limit
};

struct DriftCltVariance {
    DriftEstimator estimator{};
    LimitRegime regime{};
    std::string rate;
    double variance = 0.0;               // limit variance of the rescaled error
    double rosenblatt_coefficient = 0.0; // multiplies R_1 when regime == kRosenblatt
};

/// Limit law of the rescaled estimation error for the three drift estimators.
/// The MLE entry is the asymptotic-variance benchmark 2*theta at rate sqrt(T).
DriftCltVariance drift_clt_variance(DriftEstimator estimator, double hurst, double theta);

/// Variance of the Rosenblatt random variable R_1:
/// E R_1^2 = 4 alpha_H^2 / ((4H-3)(4H-2)), alpha_H = H(2H-1), for H > 3/4.
double rosenblatt_r1_variance(double hurst);

/// lim E(F_T^2 / T) for H < 1/2:
/// 4 H^2 theta^{1-4H} Gamma(2H)^2 * sigma_H^2(H).
double ft_variance_limit(double hurst, double theta);

enum class LemmaAtKind { kA1, kA2 };

struct LemmaAtValues {
    double a1 = 0.0;
    double a2 = 0.0;
};

/// Numerical quadrature of
///   A_{1,H}(T) = T^{3-4H} int_0^T int_0^{T-t} s^n e^{-theta s} t^{2H-2} (s+t)^{2H-2} ds dt
/// and A_{2,H}(T) (inner integral over [0, T]) for H in [3/4, 1). The
/// t^{2H-2} endpoint singularity is removed by the substitution t = u^{1/(2H-1)}.
/// Both values are computed together and the ordering A1 <= A2 is asserted.
LemmaAtValues lemma_at_pair(int n, double hurst, double theta, double horizon);
double lemma_at_quadrature(int n, double hurst, double theta, double horizon, LemmaAtKind which);

/// Closed-form bundle for one (H, k, p, theta, sigma) configuration.
struct AsymptoticConstants {
    double hurst = 0.0;
    int k = 0;
    double p = 0.0;
    double theta = 0.0;
    double sigma = 0.0;
    double c_kp = 0.0;
    double rho0 = 0.0;
    bool has_clt = true;  // false for k = 1 with H >= 3/4 ("no CLT available")
    double v1_sq = 0.0;
    double nu_sq_normalized = 0.0;
    bool has_sigma_h_sq = false;  // present iff H < 3/4
    double sigma_h_sq = 0.0;
    DriftCltVariance lse;
    DriftCltVariance ete;
    DriftCltVariance mle;
    SeriesTruncation truncation;
};

AsymptoticConstants asymptotic_constants(double hurst, int k, double p, double theta, double sigma);

}  // namespace foulab
