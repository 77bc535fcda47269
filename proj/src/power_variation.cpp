#include "foulab/power_variation.hpp"

#include <cmath>
#include <stdexcept>

#include "foulab/errors.hpp"
#include "foulab/fracgauss.hpp"
#include "foulab/special.hpp"
#include "foulab/summation.hpp"

namespace foulab {

void PowerVariationConfig::validate() const {
    if (k < 1) throw std::domain_error("PowerVariationConfig: k must be >= 1");
    if (!(p > 0.0)) throw std::domain_error("PowerVariationConfig: p must be > 0");
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::domain_error("PowerVariationConfig: H must lie in (0,1)");
}

double c_kp(double hurst, int k, double p) {
    if (k < 1) throw std::domain_error("c_kp: k must be >= 1");
    if (!(p > 0.0)) throw std::domain_error("c_kp: p must be > 0");
    const double rho0 = rho_k(hurst, k, 0);
    return std::pow(2.0, 0.5 * p) * gamma_fn(0.5 * (p + 1.0)) / gamma_fn(0.5) *
           std::pow(rho0, 0.5 * p);
}

double v_kp(const std::vector<double>& values, double h, int k, double p, double t) {
    if (k < 1) throw std::domain_error("v_kp: k must be >= 1");
    if (!(p > 0.0)) throw std::domain_error("v_kp: p must be > 0");
    if (!(h > 0.0)) throw std::domain_error("v_kp: h must be > 0");
    if (values.size() < static_cast<std::size_t>(k) + 1) return 0.0;

    // [n t] at frequency n = 1/h; tolerate t = i*h landing one ulp short
    const double nt = t / h;
    const std::int64_t floor_nt = static_cast<std::int64_t>(std::floor(nt + 1e-9 * (1.0 + nt)));
    std::int64_t terms = floor_nt - k + 1;
    if (terms < 1) return 0.0;
    const std::int64_t max_terms = static_cast<std::int64_t>(values.size()) - k;
    if (terms > max_terms) terms = max_terms;

    const DifferenceKernel kern = difference_kernel(k);
    return pairwise_sum_indexed(0, static_cast<std::size_t>(terms), [&](std::size_t i) {
        double d = 0.0;
        for (int j = 0; j <= k; ++j) d += kern.coefficients[j] * values[i + j];
        return std::pow(std::fabs(d), p);
    });
}

double integrated_volatility(const FouPath& path, const PowerVariationConfig& cfg, double t) {
    cfg.validate();
    path.grid.validate();
    if (!(t >= 0.0)) throw std::domain_error("integrated_volatility: t must be >= 0");
    const double n_eff = 1.0 / path.grid.h;
    const double v = v_kp(path.values, path.grid.h, cfg.k, cfg.p, t);
    return std::pow(n_eff, -1.0 + cfg.p * cfg.hurst) * v / c_kp(cfg.hurst, cfg.k, cfg.p);
}

double sigma_hat(const FouPath& path, const PowerVariationConfig& cfg) {
    cfg.validate();
    const double horizon = path.grid.horizon();
    const double pv = integrated_volatility(path, cfg, horizon);
    if (!(pv > 0.0))
        throw estimation_error("sigma_hat: degenerate path, power variation is not positive");
    return std::pow(pv / horizon, 1.0 / cfg.p);
}

}  // namespace foulab
