#include "foulab/fracgauss.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "foulab/fft.hpp"
#include "foulab/rng.hpp"

namespace foulab {

namespace {

void check_hurst(double hurst) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::domain_error("hurst parameter must lie strictly in (0, 1)");
}

double pow_abs(double x, double e) {
    const double a = std::fabs(x);
    return a == 0.0 ? 0.0 : std::pow(a, e);
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

// rho_{k,H}(j) equals (-1)^{k+1}/2 times the 2k-th central difference of
// x^{2H} at x = j. For large j evaluate that difference through the operator
// identity delta^{2k} = (2 sinh(D/2))^{2k} = D^{2k} (1 + D^2/24 + ...)^{2k},
// truncated after five derivative orders.
double rho_large_lag(double hurst, int k, double j) {
    // q[r]: coefficient of D^{2k+2r} in (2 sinh(D/2))^{2k}
    const double s[5] = {1.0, 1.0 / 24.0, 1.0 / 1920.0, 1.0 / 322560.0, 1.0 / 92897280.0};
    double q[5] = {1.0, 0.0, 0.0, 0.0, 0.0};
    for (int rep = 0; rep < 2 * k; ++rep) {
        double next[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
        for (int a = 0; a < 5; ++a)
            for (int b = 0; a + b < 5; ++b) next[a + b] += q[a] * s[b];
        for (int r = 0; r < 5; ++r) q[r] = next[r];
    }
    const double a = 2.0 * hurst;
    double deriv = 1.0;  // falling factorial (2H)(2H-1)...(2H-m+1)
    for (int i = 0; i < 2 * k; ++i) deriv *= a - i;
    double sum = 0.0;
    for (int r = 0; r < 5; ++r) {
        sum += q[r] * deriv * std::pow(j, a - 2.0 * k - 2.0 * r);
        deriv *= (a - 2.0 * k - 2.0 * r) * (a - 2.0 * k - 2.0 * r - 1.0);
    }
    // rho(j) = (-1)^{k+1}/2 * delta^{2k} x^{2H} |_{x=j}
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    return 0.5 * sign * sum;
}

}  // namespace

double fbm_covariance(double hurst, double t, double s) {
    check_hurst(hurst);
    const double e = 2.0 * hurst;
    return 0.5 * (pow_abs(t, e) + pow_abs(s, e) - pow_abs(t - s, e));
}

double rho_k(double hurst, int k, std::int64_t j) {
    check_hurst(hurst);
    if (k < 1) throw std::domain_error("rho_k: difference order k must be >= 1");
    if (j < 0) throw std::domain_error("rho_k: lag j must be >= 0");

    const double e = 2.0 * hurst;
    // Direct alternating sum while cancellation is harmless. The summands grow
    // like j^{2H} while the result decays like j^{2H-2k}; past j = 64 the
    // derivative expansion is accurate to ~1e-13 relative and the direct sum
    // is not.
    if (j <= 64) {
        double sum = 0.0;
        for (int i = -k; i <= k; ++i) {
            const double term = binomial(2 * k, k - i) * pow_abs(static_cast<double>(j - i), e);
            sum += ((1 - i) % 2 == 0) ? term : -term;
        }
        return 0.5 * sum;
    }
    return rho_large_lag(hurst, k, static_cast<double>(j));
}

DifferenceKernel difference_kernel(int k) {
    if (k < 1) throw std::domain_error("difference_kernel: k must be >= 1");
    DifferenceKernel d;
    d.k = k;
    d.coefficients.resize(k + 1);
    for (int j = 0; j <= k; ++j) {
        const double c = binomial(k, j);
        d.coefficients[j] = ((k - j) % 2 == 0) ? c : -c;
    }
    return d;
}

std::vector<double> apply_difference(const std::vector<double>& x, int k) {
    if (k < 1) throw std::domain_error("apply_difference: k must be >= 1");
    if (x.size() < static_cast<std::size_t>(k) + 1)
        throw std::invalid_argument("apply_difference: sequence shorter than k+1");
    // evaluated as k first differences, so the inductive identity
    // Delta_k = Delta_{k-1} o Delta_1 holds exactly in floating point
    std::vector<double> out(x);
    for (int pass = 0; pass < k; ++pass) {
        for (std::size_t i = 0; i + 1 < out.size(); ++i) out[i] = out[i + 1] - out[i];
        out.pop_back();
    }
    return out;
}

FgnSampler::FgnSampler(double hurst, GridSpec grid) : hurst_(hurst), grid_(grid) {
    check_hurst(hurst);
    grid.validate();

    const std::size_t n = static_cast<std::size_t>(grid.n);
    const std::size_t half = next_pow2(n);
    const std::size_t m = 2 * half;

    // fGn autocovariance at step h: gamma(j) = h^{2H} rho_{1,H}(j)
    const double scale = std::pow(grid.h, 2.0 * hurst);
    std::vector<std::complex<double>> row(m);
    for (std::size_t j = 0; j <= half; ++j) {
        const double g = scale * rho_k(hurst, 1, static_cast<std::int64_t>(j));
        row[j] = g;
        if (j != 0 && j != half) row[m - j] = g;
    }
    fft_inplace(row);

    double max_eig = 0.0;
    for (const auto& lam : row) max_eig = std::max(max_eig, lam.real());
    const double tol = 1e-9 * max_eig;

    sqrt_eig_over_m_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        double lam = row[i].real();
        if (lam < 0.0) {
            if (lam < -tol)
                throw std::runtime_error(
                    "FgnSampler: circulant embedding produced a significantly negative eigenvalue");
            lam = 0.0;
            ++clipped_;
        }
        sqrt_eig_over_m_[i] = std::sqrt(lam / static_cast<double>(m));
    }
}

std::vector<double> FgnSampler::sample_increments(GaussianStream& g) const {
    const std::size_t m = sqrt_eig_over_m_.size();
    std::vector<std::complex<double>> w(m);
    w[0] = sqrt_eig_over_m_[0] * g.next();
    const double inv_sqrt2 = 0.70710678118654752440084436210485;
    for (std::size_t k = 1; k < m / 2; ++k) {
        const double a = g.next();
        const double b = g.next();
        w[k] = sqrt_eig_over_m_[k] * std::complex<double>(a * inv_sqrt2, b * inv_sqrt2);
        w[m - k] = std::conj(w[k]);
    }
    w[m / 2] = sqrt_eig_over_m_[m / 2] * g.next();
    fft_inplace(w);

    std::vector<double> inc(static_cast<std::size_t>(grid_.n));
    for (std::size_t i = 0; i < inc.size(); ++i) inc[i] = w[i].real();
    return inc;
}

FbmPath FgnSampler::sample(std::uint64_t seed) const { return sample_stream(seed, 0); }

FbmPath FgnSampler::sample_stream(std::uint64_t seed, std::uint64_t stream) const {
    GaussianStream g(derive_stream(seed, stream));
    const std::vector<double> inc = sample_increments(g);

    FbmPath path;
    path.hurst = hurst_;
    path.grid = grid_;
    path.seed = seed;
    path.values.resize(inc.size() + 1);
    path.values[0] = 0.0;
    for (std::size_t i = 0; i < inc.size(); ++i) path.values[i + 1] = path.values[i] + inc[i];
    return path;
}

FbmPath sample_fbm(double hurst, GridSpec grid, std::uint64_t seed) {
    return FgnSampler(hurst, grid).sample(seed);
}

}  // namespace foulab
