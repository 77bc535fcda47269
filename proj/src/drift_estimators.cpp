#include "foulab/drift_estimators.hpp"

#include <cmath>
#include <stdexcept>

#include "foulab/errors.hpp"
#include "foulab/special.hpp"
#include "foulab/summation.hpp"

namespace foulab {

namespace {

void check_params(double sigma, double hurst) {
    if (!(sigma > 0.0)) throw std::domain_error("drift estimator: sigma must be > 0");
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::domain_error("drift estimator: H must lie in (0,1)");
}

double ergodic_inverse(double mean_sq, double sigma, double hurst) {
    // (mean of X^2 / (sigma^2 H Gamma(2H)))^{-1/(2H)}
    const double rho = sigma * sigma * hurst * gamma_fn(2.0 * hurst);
    return std::pow(mean_sq / rho, -1.0 / (2.0 * hurst));
}

}  // namespace

double integral_x_squared(const std::vector<double>& values, double h) {
    const std::size_t n = values.size();
    if (n < 2) throw std::invalid_argument("integral_x_squared: need at least two points");
    const double interior = pairwise_sum_indexed(
        1, n - 1, [&](std::size_t i) { return values[i] * values[i]; });
    return h * (interior + 0.5 * (values.front() * values.front() +
                                  values.back() * values.back()));
}

StepConditionReport check_step_conditions(double hurst, std::int64_t n, double h, double p) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::domain_error("check_step_conditions: H must lie in (0,1)");
    StepConditionReport r;
    r.hurst = hurst;
    r.n = n;
    r.h = h;
    r.p = p;
    if (hurst < 0.75) {
        r.p_upper = std::min((3.0 + 2.0 * hurst) / (1.0 + 2.0 * hurst), 1.0 + 2.0 * hurst);
    } else if (hurst == 0.75) {
        r.p_upper = 9.0 / 5.0;
        r.log_criterion = true;
    } else {
        r.p_upper = (3.0 - hurst) / (2.0 - hurst);
    }
    r.p_admissible = p > r.p_lower && p < r.p_upper;
    r.nh = static_cast<double>(n) * h;
    r.nh_pow_p = static_cast<double>(n) * std::pow(h, p);
    if (r.log_criterion && r.nh > 1.0) r.nh_pow_p /= std::log(r.nh);
    return r;
}

DriftEstimate theta_tilde(const FouPath& path, double sigma, double hurst) {
    check_params(sigma, hurst);
    path.grid.validate();
    const double horizon = path.grid.horizon();
    const double integral = integral_x_squared(path.values, path.grid.h);
    if (!(integral > 0.0)) throw estimation_error("theta_tilde: degenerate path, zero integral");

    DriftEstimate e;
    e.estimator = DriftEstimatorKind::kEte;
    e.value = ergodic_inverse(integral / horizon, sigma, hurst);
    e.horizon = horizon;
    e.n = path.grid.n;
    e.h = path.grid.h;
    e.used_sigma = sigma;
    e.used_hurst = hurst;
    e.nonphysical = !(e.value > 0.0) || !std::isfinite(e.value);
    e.asymptotic = drift_clt_variance(DriftEstimator::kEte, hurst,
                                      e.nonphysical ? 1.0 : e.value);
    e.rate = e.asymptotic.rate;
    return e;
}

DriftEstimate theta_bar(const std::vector<double>& observations, const GridSpec& grid,
                        double sigma, double hurst, double step_p) {
    check_params(sigma, hurst);
    grid.validate();
    if (observations.empty()) throw std::invalid_argument("theta_bar: no observations");
    if (observations.size() != static_cast<std::size_t>(grid.n) + 1)
        throw std::invalid_argument("theta_bar: observations must cover the grid (n+1 values)");

    // sum runs over k = 1..n, the starting point is excluded
    const double sum = pairwise_sum_indexed(1, observations.size(), [&](std::size_t i) {
        return observations[i] * observations[i];
    });
    if (!(sum > 0.0)) throw estimation_error("theta_bar: degenerate observations, zero sum");

    DriftEstimate e;
    e.estimator = DriftEstimatorKind::kDiscrete;
    e.value = ergodic_inverse(sum / static_cast<double>(grid.n), sigma, hurst);
    e.horizon = grid.horizon();
    e.n = grid.n;
    e.h = grid.h;
    e.used_sigma = sigma;
    e.used_hurst = hurst;
    e.nonphysical = !(e.value > 0.0) || !std::isfinite(e.value);
    e.condition_report = check_step_conditions(hurst, grid.n, grid.h, step_p);
    e.asymptotic = drift_clt_variance(DriftEstimator::kEte, hurst,
                                      e.nonphysical ? 1.0 : e.value);
    e.rate = hurst < 0.75 ? "sqrt(nh)" : e.asymptotic.rate;
    return e;
}

DriftEstimate theta_hat_lse_sim(const FouPath& path, double sigma, double hurst,
                                double true_theta) {
    check_params(sigma, hurst);
    if (!(true_theta > 0.0)) throw std::domain_error("theta_hat_lse_sim: true theta must be > 0");
    path.grid.validate();
    const double horizon = path.grid.horizon();
    const double integral = integral_x_squared(path.values, path.grid.h);
    if (!(integral > 0.0))
        throw estimation_error("theta_hat_lse_sim: degenerate path, zero integral");

    const double xt = path.values.back();
    const double ell = ell_T(true_theta, sigma, hurst, horizon);

    DriftEstimate e;
    e.estimator = DriftEstimatorKind::kLseSim;
    e.value = (sigma * ell - 0.5 * xt * xt) / integral;
    e.horizon = horizon;
    e.n = path.grid.n;
    e.h = path.grid.h;
    e.used_sigma = sigma;
    e.used_hurst = hurst;
    e.nonphysical = !(e.value > 0.0) || !std::isfinite(e.value);
    e.asymptotic = drift_clt_variance(DriftEstimator::kLse, hurst, true_theta);
    e.rate = e.asymptotic.rate;
    return e;
}

}  // namespace foulab
