#include "foulab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "foulab/fracgauss.hpp"
#include "foulab/power_variation.hpp"
#include "foulab/special.hpp"

namespace foulab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kSqrtPi = 1.772453850905516027298167483341;

void check_hurst_open(double hurst) {
    if (!(hurst > 0.0 && hurst < 1.0)) throw std::domain_error("H must lie strictly in (0,1)");
}

/// E[h_m(N) |N|^p] for the *orthonormal* probabilists' Hermite polynomial
/// h_m = He_m / sqrt(m!). This is the numerically natural quantity: the chaos
/// series needs m! E^2[H_m|N|^p] which is exactly its square.
double orthonormal_hermite_abs_moment(int m, double p) {
    if (m % 2 == 1) return 0.0;  // odd integrand
    const GaussHermiteRule& rule = gauss_hermite(256);
    const double sqrt2 = 1.4142135623730950488016887242097;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double y = sqrt2 * rule.nodes[i];
        // stable orthonormal recurrence h_{j+1} = (y h_j - sqrt(j) h_{j-1}) / sqrt(j+1)
        double hm1 = 0.0, h = 1.0;
        for (int j = 0; j < m; ++j) {
            const double next = (y * h - std::sqrt(static_cast<double>(j)) * hm1) /
                                std::sqrt(static_cast<double>(j + 1));
            hm1 = h;
            h = next;
        }
        acc += rule.weights[i] * h * std::pow(std::fabs(y), p);
    }
    return acc / kSqrtPi;
}

double abs_moment(double p) {  // E|N|^p
    return std::pow(2.0, 0.5 * p) * gamma_fn(0.5 * (p + 1.0)) / kSqrtPi;
}

struct ChaosCore {
    double sum = 0.0;   // sum_{m=2}^{M} a_m^2 (1 + 2 sum_{j<=J} r_j^m)
    double tail = 0.0;  // bound on everything omitted
};

// Shared series sum_{m>=2} m! E^2(H_m(N)|N|^p) [1 + 2 sum_j (rho(j)/rho(0))^m].
// v1^2 scales it by rho0^p, nu^2-normalized by Gamma(1/2)^2/(2^p Gamma((p+1)/2)^2).
ChaosCore chaos_series(double hurst, int k, double p, int M, std::int64_t J, bool with_tail) {
    check_hurst_open(hurst);
    if (k < 1) throw std::domain_error("chaos series: k must be >= 1");
    if (!(p > 0.0)) throw std::domain_error("chaos series: p must be > 0");
    if (M < 2 || J < 1) throw std::domain_error("chaos series: truncation orders too small");
    if (k == 1 && hurst >= 0.75)
        throw std::domain_error(
            "v1^2 diverges for k = 1 with H >= 3/4; use a higher difference order");

    const double rho0 = rho_k(hurst, k, 0);
    std::vector<double> ratio(static_cast<std::size_t>(J));
    for (std::int64_t j = 1; j <= J; ++j)
        ratio[static_cast<std::size_t>(j - 1)] = rho_k(hurst, k, j) / rho0;

    std::vector<double> a(M + 1, 0.0);
    for (int m = 2; m <= M; ++m) a[m] = orthonormal_hermite_abs_moment(m, p);

    ChaosCore core;
    std::vector<double> rpow(ratio);  // running r_j^m starting at m = 1
    double lag_sum_sq = 0.0;          // sum_j r_j^2, reused for the Hermite tail
    std::vector<double> lag_sums(M + 1, 0.0);
    for (int m = 2; m <= M; ++m) {
        double s = 0.0;
        for (std::size_t j = 0; j < rpow.size(); ++j) {
            rpow[j] *= ratio[j];
            s += rpow[j];
        }
        lag_sums[m] = s;
        if (m == 2) lag_sum_sq = s;
        core.sum += a[m] * a[m] * (1.0 + 2.0 * s);
    }

    if (!with_tail) return core;

    // Lag tail: fit |r_j| <= C j^{2H-2k} over the top half of the computed
    // range, then bound sum_{j>J} j^{(2H-2k)m} by the integral.
    double c_fit = 0.0;
    for (std::int64_t j = J / 2; j <= J; ++j) {
        const double r = std::fabs(ratio[static_cast<std::size_t>(j - 1)]);
        c_fit = std::max(c_fit, r * std::pow(static_cast<double>(j), 2.0 * k - 2.0 * hurst));
    }
    c_fit *= 1.05;  // headroom over the fitted window
    double lag_tail_total = 0.0;
    double lag_tail_sq = 0.0;
    for (int m = 2; m <= M; ++m) {
        const double beta = (2.0 * k - 2.0 * hurst) * m;
        if (beta <= 1.0) throw std::domain_error("chaos series: lag sum does not converge");
        const double cj = std::pow(c_fit, m) * std::pow(static_cast<double>(J), 1.0 - beta) /
                          (beta - 1.0);
        if (m == 2) lag_tail_sq = cj;
        lag_tail_total += 2.0 * a[m] * a[m] * cj;
    }

    // Hermite tail: sum_{m>M} a_m^2 = E|N|^{2p} - (E|N|^p)^2 - sum_{2<=m<=M} a_m^2
    // by Parseval; the bracket factor is bounded by 1 + 2 sum_j r_j^2 since
    // |r_j| < 1.
    double parseval = abs_moment(2.0 * p) - abs_moment(p) * abs_moment(p);
    for (int m = 2; m <= M; ++m) parseval -= a[m] * a[m];
    parseval = std::max(parseval, 0.0);
    const double bracket = 1.0 + 2.0 * (lag_sum_sq + lag_tail_sq);
    core.tail = lag_tail_total + parseval * bracket;
    return core;
}

SeriesValue scaled_series(double hurst, int k, double p, int M, std::int64_t J, double scale,
                          bool with_tail) {
    const ChaosCore core = chaos_series(hurst, k, p, M, J, with_tail);
    SeriesValue out;
    out.value = scale * core.sum;
    out.truncation.hermite_orders = M;
    out.truncation.lag_cutoff = J;
    out.truncation.tail_bound = scale * core.tail;
    return out;
}

SeriesValue auto_doubled(double hurst, int k, double p, double scale) {
    int M = 60;
    std::int64_t J = 100000;
    SeriesValue v = scaled_series(hurst, k, p, M, J, scale, true);
    for (int i = 0; i < 2 && v.truncation.tail_bound > 1e-7 * std::fabs(v.value); ++i) {
        M *= 2;
        J *= 2;
        v = scaled_series(hurst, k, p, M, J, scale, true);
    }
    return v;
}

double nu_prefactor(double p) {
    const double g = gamma_fn(0.5 * (p + 1.0));
    return kPi / (std::pow(2.0, p) * g * g);
}

}  // namespace

double hermite_abs_moment(int m, double p) {
    if (m < 0) throw std::domain_error("hermite_abs_moment: m must be >= 0");
    if (!(p > 0.0)) throw std::domain_error("hermite_abs_moment: p must be > 0");
    if (m % 2 == 1) return 0.0;
    // E[H_m|N|^p] = E[h_m|N|^p] / sqrt(m!)
    return orthonormal_hermite_abs_moment(m, p) * std::exp(-0.5 * log_gamma(m + 1.0));
}

SeriesValue v1_squared(double hurst, int k, double p, int M, std::int64_t J) {
    const double rho0 = rho_k(hurst, k, 0);
    return scaled_series(hurst, k, p, M, J, std::pow(rho0, p), true);
}

SeriesValue nu_squared_normalized(double hurst, int k, double p, int M, std::int64_t J) {
    return scaled_series(hurst, k, p, M, J, nu_prefactor(p), true);
}

SeriesValue v1_squared_auto(double hurst, int k, double p) {
    return auto_doubled(hurst, k, p, std::pow(rho_k(hurst, k, 0), p));
}

SeriesValue nu_squared_normalized_auto(double hurst, int k, double p) {
    return auto_doubled(hurst, k, p, nu_prefactor(p));
}

VarianceTable table1(double p) {
    VarianceTable t;
    t.hs = {0.1, 0.3, 0.5, 0.6, 0.7, 0.8, 0.9};
    t.ks = {1, 2, 3, 4, 5};
    for (double h : t.hs) {
        std::vector<double> row;
        for (int k : t.ks) {
            if (k == 1 && h >= 0.75) {
                row.push_back(std::numeric_limits<double>::quiet_NaN());
                continue;
            }
            row.push_back(scaled_series(h, k, p, 60, 10000, nu_prefactor(p), false).value);
        }
        t.values.push_back(std::move(row));
    }
    return t;
}

double sigma_H_squared(double hurst) {
    if (!(hurst > 0.0 && hurst < 0.75))
        throw std::domain_error("sigma_H_squared: defined for H in (0, 3/4)");
    if (hurst < 0.5) {
        return (4.0 * hurst - 1.0) + 2.0 * gamma_fn(2.0 - 4.0 * hurst) * gamma_fn(4.0 * hurst) /
                                         (gamma_fn(2.0 * hurst) * gamma_fn(1.0 - 2.0 * hurst));
    }
    return (4.0 * hurst - 1.0) *
           (1.0 + gamma_fn(3.0 - 4.0 * hurst) * gamma_fn(4.0 * hurst - 1.0) /
                      (gamma_fn(2.0 - 2.0 * hurst) * gamma_fn(2.0 * hurst)));
}

DriftCltVariance drift_clt_variance(DriftEstimator estimator, double hurst, double theta) {
    check_hurst_open(hurst);
    if (!(theta > 0.0)) throw std::domain_error("drift_clt_variance: theta must be > 0");

    DriftCltVariance out;
    out.estimator = estimator;

    if (estimator == DriftEstimator::kMle) {
        out.regime = LimitRegime::kGaussian;
        out.rate = "sqrt(T)";
        out.variance = 2.0 * theta;
        return out;
    }

    const bool lse = estimator == DriftEstimator::kLse;
    if (hurst < 0.75) {
        const double s2 = sigma_H_squared(hurst);
        out.regime = LimitRegime::kGaussian;
        out.rate = "sqrt(T)";
        out.variance = lse ? theta * s2 : theta * s2 / (4.0 * hurst * hurst);
        return out;
    }
    if (hurst == 0.75) {
        // the two estimators carry different log corrections
        out.regime = LimitRegime::kGaussianLog;
        out.rate = lse ? "sqrt(T)/sqrt(log T)" : "sqrt(T)/log T";
        out.variance = lse ? 4.0 * theta / kPi : 16.0 * theta / (9.0 * kPi);
        return out;
    }
    out.regime = LimitRegime::kRosenblatt;
    out.rate = "T^{2-2H}";
    const double denom = lse ? hurst * gamma_fn(2.0 * hurst)
                             : hurst * gamma_fn(2.0 * hurst + 1.0);
    out.rosenblatt_coefficient = -std::pow(theta, 2.0 * hurst - 1.0) / denom;
    out.variance = out.rosenblatt_coefficient * out.rosenblatt_coefficient *
                   rosenblatt_r1_variance(hurst);
    return out;
}

double rosenblatt_r1_variance(double hurst) {
    if (!(hurst > 0.75 && hurst < 1.0))
        throw std::domain_error("rosenblatt_r1_variance: defined for H in (3/4, 1)");
    const double alpha = hurst * (2.0 * hurst - 1.0);
    return 4.0 * alpha * alpha / ((4.0 * hurst - 3.0) * (4.0 * hurst - 2.0));
}

double ft_variance_limit(double hurst, double theta) {
    if (!(hurst > 0.0 && hurst < 0.5))
        throw std::domain_error("ft_variance_limit: defined for H in (0, 1/2)");
    if (!(theta > 0.0)) throw std::domain_error("ft_variance_limit: theta must be > 0");
    const double g = gamma_fn(2.0 * hurst);
    return 4.0 * hurst * hurst * std::pow(theta, 1.0 - 4.0 * hurst) * g * g *
           sigma_H_squared(hurst);
}

namespace {

// Inner integral int_0^{hi} s^n e^{-theta s} (s+t)^{2H-2} ds, with the
// (s+t)^{2H-2} factor flattened by v = (s+t)^{2H-1}.
double lemma_at_inner(int n, double hurst, double theta, double t, double hi) {
    if (hi <= 0.0) return 0.0;
    const double a = 2.0 * hurst - 1.0;
    // e^{-theta s} underflows long before this cap matters
    const double cap = (746.0 + 60.0 * (n + 1)) / theta;
    const double s_hi = std::min(hi, cap);
    const double v0 = std::pow(t, a);
    const double v1 = std::pow(s_hi + t, a);
    const double inv_a = 1.0 / a;
    auto f = [&](double v) {
        const double s = std::max(std::pow(v, inv_a) - t, 0.0);
        double w = std::exp(-theta * s);
        for (int i = 0; i < n; ++i) w *= s;
        return w;
    };
    return integrate_gk15(f, v0, v1, 1e-9, 1e-16) * inv_a;
}

}  // namespace

LemmaAtValues lemma_at_pair(int n, double hurst, double theta, double horizon) {
    if (n < 0) throw std::domain_error("lemma_at: n must be >= 0");
    if (!(hurst >= 0.75 && hurst < 1.0))
        throw std::domain_error("lemma_at: defined for H in [3/4, 1)");
    if (!(theta > 0.0) || !(horizon > 0.0))
        throw std::domain_error("lemma_at: theta and T must be > 0");

    const double a = 2.0 * hurst - 1.0;
    const double inv_a = 1.0 / a;
    const double scale = std::pow(horizon, 3.0 - 4.0 * hurst) * inv_a;

    auto outer = [&](bool full_inner) {
        auto g = [&](double u) {
            const double t = std::pow(u, inv_a);
            const double hi = full_inner ? horizon : horizon - t;
            return lemma_at_inner(n, hurst, theta, t, hi);
        };
        return scale * integrate_gk15(g, 0.0, std::pow(horizon, a), 1e-8, 1e-14);
    };

    LemmaAtValues v;
    v.a1 = outer(false);
    v.a2 = outer(true);
    if (!(v.a1 <= v.a2 * (1.0 + 1e-9) + 1e-12))
        throw std::runtime_error("lemma_at: sandwich A1 <= A2 violated by quadrature");
    return v;
}

double lemma_at_quadrature(int n, double hurst, double theta, double horizon, LemmaAtKind which) {
    const LemmaAtValues v = lemma_at_pair(n, hurst, theta, horizon);
    return which == LemmaAtKind::kA1 ? v.a1 : v.a2;
}

AsymptoticConstants asymptotic_constants(double hurst, int k, double p, double theta,
                                         double sigma) {
    check_hurst_open(hurst);
    AsymptoticConstants c;
    c.hurst = hurst;
    c.k = k;
    c.p = p;
    c.theta = theta;
    c.sigma = sigma;
    c.rho0 = rho_k(hurst, k, 0);
    c.c_kp = c_kp(hurst, k, p);
    c.has_clt = !(k == 1 && hurst >= 0.75);
    if (c.has_clt) {
        const SeriesValue v1 = v1_squared_auto(hurst, k, p);
        c.v1_sq = v1.value;
        c.truncation = v1.truncation;
        c.nu_sq_normalized = nu_squared_normalized(hurst, k, p, v1.truncation.hermite_orders,
                                                   v1.truncation.lag_cutoff).value;
    } else {
        c.v1_sq = std::numeric_limits<double>::quiet_NaN();
        c.nu_sq_normalized = std::numeric_limits<double>::quiet_NaN();
    }
    if (hurst < 0.75) {
        c.has_sigma_h_sq = true;
        c.sigma_h_sq = sigma_H_squared(hurst);
    }
    c.lse = drift_clt_variance(DriftEstimator::kLse, hurst, theta);
    c.ete = drift_clt_variance(DriftEstimator::kEte, hurst, theta);
    c.mle = drift_clt_variance(DriftEstimator::kMle, hurst, theta);
    return c;
}

}  // namespace foulab
