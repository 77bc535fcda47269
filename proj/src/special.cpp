#include "foulab/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace foulab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kSqrtPiLocal = 1.772453850905516027298167483341;

// Lanczos g = 7, n = 9 (Godfrey coefficients).
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_core(double z) {
    // z >= 0.5 assumed; returns Gamma(z)
    z -= 1.0;
    double x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

double gamma_fn(double z) {
    if (!std::isfinite(z)) throw std::domain_error("gamma_fn: non-finite argument");
    if (z < 0.5) {
        // reflection keeps cancellation controlled near the poles
        const double s = std::sin(kPi * z);
        if (s == 0.0) throw std::domain_error("gamma_fn: pole at non-positive integer");
        return kPi / (s * lanczos_core(1.0 - z));
    }
    return lanczos_core(z);
}

double log_gamma(double z) {
    if (!(z > 0.0)) throw std::domain_error("log_gamma: requires z > 0");
    if (z < 0.5) return std::log(kPi / std::sin(kPi * z)) - log_gamma(1.0 - z);
    z -= 1.0;
    double x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double lower_incomplete_gamma(double alpha, double x) {
    if (!(alpha > 0.0)) throw std::domain_error("lower_incomplete_gamma: requires alpha > 0");
    if (!(x >= 0.0)) throw std::domain_error("lower_incomplete_gamma: requires x >= 0");
    if (x == 0.0) return 0.0;

    const double lg = log_gamma(alpha);
    // log of the prefactor x^alpha e^{-x}; underflows to 0 for huge x, in which
    // case the integral has already converged to Gamma(alpha).
    const double lpre = alpha * std::log(x) - x;

    if (x < alpha + 1.0) {
        // gamma(alpha, x) = x^alpha e^{-x} sum_{n>=0} x^n / (alpha (alpha+1)...(alpha+n))
        double term = 1.0 / alpha;
        double sum = term;
        for (int n = 1; n < 10000; ++n) {
            term *= x / (alpha + n);
            sum += term;
            if (std::fabs(term) < 1e-12 * std::fabs(sum)) break;
        }
        return std::exp(lpre) * sum;
    }

    // Upper tail by modified Lentz continued fraction, then gamma = Gamma - upper.
    const double tiny = 1e-300;
    double b = x + 1.0 - alpha;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - alpha);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-12) break;
    }
    const double upper = std::exp(lpre) * h;
    return std::exp(lg) - upper;
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.70710678118654752440084436210485);
}

namespace {

// Implicit-shift QL for a symmetric tridiagonal matrix, tracking only the
// first component of each eigenvector (all Golub-Welsch needs for weights).
// d = diagonal, e = subdiagonal (e[0..n-2]); on return d holds eigenvalues
// and z the first eigenvector components.
void tql_first_components(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw std::runtime_error("gauss_hermite: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

GaussHermiteRule build_gauss_hermite(int n) {
    // Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
    // physicists' Hermite recurrence (diagonal 0, subdiagonal sqrt(j/2)),
    // weights are sqrt(pi) times the squared first eigenvector components.
    std::vector<double> d(n, 0.0);
    std::vector<double> e(n - 1);
    std::vector<double> z(n, 0.0);
    z[0] = 1.0;
    for (int j = 1; j < n; ++j) e[j - 1] = std::sqrt(0.5 * j);
    tql_first_components(d, e, z);

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

    GaussHermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = d[idx[i]];
        rule.weights[i] = kSqrtPiLocal * z[idx[i]] * z[idx[i]];
    }
    return rule;
}

}  // namespace

const GaussHermiteRule& gauss_hermite(int n) {
    if (n < 1) throw std::domain_error("gauss_hermite: order must be positive");
    static std::mutex mu;
    static std::map<int, GaussHermiteRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_gauss_hermite(n)).first;
    return it->second;
}

namespace {

// Kronrod-15 nodes/weights on [-1, 1]; the embedded Gauss-7 rule uses the
// odd-indexed nodes.
constexpr double kXgk[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};
constexpr double kWgk[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
constexpr double kWg[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct GkEstimate {
    double value;
    double error;
};

GkEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double fv = f(c + hl * kXgk[i]);
        resk += kWgk[i] * fv;
        if (i % 2 == 1) resg += kWg[i / 2] * fv;
    }
    resk *= hl;
    resg *= hl;
    return {resk, std::fabs(resk - resg)};
}

double gk_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                   int depth) {
    const GkEstimate e = gk15(f, a, b);
    if (e.error <= tol || depth <= 0) return e.value;
    const double c = 0.5 * (a + b);
    return gk_adaptive(f, a, c, 0.5 * tol, depth - 1) + gk_adaptive(f, c, b, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_gk15(const std::function<double(double)>& f, double a, double b, double rel_tol,
                      double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    const GkEstimate whole = gk15(f, a, b);
    const double tol = std::max(abs_tol, rel_tol * std::fabs(whole.value));
    if (whole.error <= tol) return whole.value;
    const double c = 0.5 * (a + b);
    return gk_adaptive(f, a, c, 0.5 * tol, max_depth) + gk_adaptive(f, c, b, 0.5 * tol, max_depth);
}

}  // namespace foulab
