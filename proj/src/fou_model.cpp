#include "foulab/fou_model.hpp"

#include <cmath>
#include <stdexcept>

#include "foulab/special.hpp"

namespace foulab {

VolatilitySpec VolatilitySpec::make_constant(double sigma) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw std::domain_error("VolatilitySpec: constant sigma must be finite and >= 0");
    VolatilitySpec v;
    v.kind = Kind::kConstant;
    v.constant = sigma;
    return v;
}

VolatilitySpec VolatilitySpec::tabulated(std::vector<double> samples, double holder_hint) {
    for (double s : samples)
        if (!std::isfinite(s)) throw std::domain_error("VolatilitySpec: non-finite sample");
    VolatilitySpec v;
    v.kind = Kind::kFunction;
    v.samples = std::move(samples);
    v.holder_exponent_hint = holder_hint;
    return v;
}

FouPath build_fou(const FbmPath& fbm, double theta, const VolatilitySpec& sigma) {
    if (!(theta >= 0.0) || !std::isfinite(theta))
        throw std::domain_error("build_fou: theta must be finite and >= 0");
    fbm.grid.validate();
    const std::size_t n = static_cast<std::size_t>(fbm.grid.n);
    if (fbm.values.size() != n + 1) throw std::invalid_argument("build_fou: fbm length mismatch");

    FouPath path;
    path.theta = theta;
    path.sigma = sigma;
    path.hurst = fbm.hurst;
    path.grid = fbm.grid;
    path.x0 = 0.0;
    path.seed = fbm.seed;
    path.values.assign(n + 1, 0.0);

    const double h = fbm.grid.h;
    const std::vector<double>& b = fbm.values;

    if (sigma.kind == VolatilitySpec::Kind::kConstant) {
        const double decay = std::exp(-theta * h);
        double integral = 0.0;  // int_0^{t_i} B_s e^{-theta(t_i - s)} ds
        for (std::size_t i = 1; i <= n; ++i) {
            integral = decay * integral + 0.5 * h * (b[i] + decay * b[i - 1]);
            path.values[i] = sigma.constant * (b[i] - theta * integral);
        }
        return path;
    }

    if (sigma.samples.size() != n + 1)
        throw std::invalid_argument("build_fou: tabulated sigma must have n+1 samples");
    for (std::size_t i = 0; i < n; ++i) {
        const double x = path.values[i];
        path.values[i + 1] = x - theta * x * h + sigma.samples[i] * (b[i + 1] - b[i]);
        if (!std::isfinite(path.values[i + 1]))
            throw std::runtime_error("build_fou: non-finite state in Euler update");
    }
    return path;
}

double ell_T(double theta, double sigma, double hurst, double horizon) {
    if (!(theta > 0.0)) throw std::domain_error("ell_T: theta must be > 0");
    if (!(horizon > 0.0)) throw std::domain_error("ell_T: T must be > 0");
    if (!(hurst > 0.0 && hurst < 1.0)) throw std::domain_error("ell_T: H must lie in (0,1)");
    const double th = 2.0 * hurst;
    const double x = theta * horizon;
    const double m = 0.5 * sigma * lower_incomplete_gamma(1.0, x) * std::pow(horizon, th) +
                     sigma * std::pow(theta, -th) * lower_incomplete_gamma(th + 1.0, x) *
                         (hurst - 0.5) -
                     horizon * hurst * sigma * std::pow(theta, 1.0 - th) *
                         lower_incomplete_gamma(th, x);
    return 0.5 * sigma * std::pow(horizon, th) - m;
}

double stationary_variance(double theta, double sigma, double hurst) {
    if (!(theta > 0.0)) throw std::domain_error("stationary_variance: theta must be > 0");
    if (!(sigma > 0.0)) throw std::domain_error("stationary_variance: sigma must be > 0");
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::domain_error("stationary_variance: H must lie in (0,1)");
    return sigma * sigma * std::pow(theta, -2.0 * hurst) * hurst * gamma_fn(2.0 * hurst);
}

}  // namespace foulab
