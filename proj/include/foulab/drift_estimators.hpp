#pragma once

#include <string>
#include <vector>

#include "foulab/asymptotics.hpp"
#include "foulab/fou_model.hpp"
#include "foulab/grid.hpp"

namespace foulab {

/// Admissibility report for the discrete-observation step-size conditions.
/// The consistency theory needs n h^p -> 0 for some exponent p in an
/// H-dependent open interval; at H = 3/4 the criterion is n h^p / log(nh) -> 0.
struct StepConditionReport {
    double hurst = 0.0;
    std::int64_t n = 0;
    double h = 0.0;
    double p = 0.0;
    double p_lower = 1.0;        // admissible interval (p_lower, p_upper)
    double p_upper = 0.0;
    bool p_admissible = false;
    bool log_criterion = false;  // true at H = 3/4
    double nh = 0.0;             // realized observation horizon
    double nh_pow_p = 0.0;       // realized n h^p (or n h^p / log(nh))
};

StepConditionReport check_step_conditions(double hurst, std::int64_t n, double h, double p);

enum class DriftEstimatorKind { kLseSim, kEte, kDiscrete };

struct DriftEstimate {
    DriftEstimatorKind estimator{};
    double value = 0.0;
    std::string rate;
    DriftCltVariance asymptotic;
    // diagnostics
    double horizon = 0.0;
    std::int64_t n = 0;
    double h = 0.0;
    double used_sigma = 0.0;
    double used_hurst = 0.0;
    bool nonphysical = false;  // estimate came out of range; returned unclamped
    StepConditionReport condition_report;  // populated for kDiscrete
};

/// Ergodic-type estimator from a continuously observed path (trapezoid rule
/// for the time integral):
///   theta~ = ( 1/(sigma^2 H Gamma(2H) T) int_0^T X^2 dt )^{-1/(2H)}.
DriftEstimate theta_tilde(const FouPath& path, double sigma, double hurst);

/// Discrete-observation plug-in estimator
///   theta_bar = ( 1/(n sigma^2 H Gamma(2H)) sum_{k=1}^n X_{kh}^2 )^{-1/(2H)};
/// the k = 0 observation is excluded. step_p is the exponent the caller wants
/// checked in the admissibility report.
DriftEstimate theta_bar(const std::vector<double>& observations, const GridSpec& grid,
                        double sigma, double hurst, double step_p = 1.5);

/// Least-squares estimator in simulation-study form,
///   theta^ = (sigma ell(T) - X_T^2 / 2) / int_0^T X^2 dt.
/// The Skorohod correction ell(T) depends on the true drift, so this is not a
/// data-driven estimator; it exists to verify the limit theorems.
DriftEstimate theta_hat_lse_sim(const FouPath& path, double sigma, double hurst,
                                double true_theta);

/// Trapezoid integral of X^2 over the grid (pairwise summation).
double integral_x_squared(const std::vector<double>& values, double h);

}  // namespace foulab
