#include "foulab/mc_harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <nlohmann/json.hpp>

#include "foulab/asymptotics.hpp"
#include "foulab/drift_estimators.hpp"
#include "foulab/errors.hpp"
#include "foulab/fracgauss.hpp"
#include "foulab/fou_model.hpp"
#include "foulab/power_variation.hpp"
#include "foulab/special.hpp"
#include "foulab/summation.hpp"

namespace foulab {

namespace {

using nlohmann::json;

bool is_drift_target(McTarget t) {
    return t == McTarget::kEteClt || t == McTarget::kLseClt || t == McTarget::kRosenblatt ||
           t == McTarget::kThetaBar;
}

bool is_gaussian_clt_target(const McExperimentConfig& cfg) {
    switch (cfg.target) {
        case McTarget::kPvClt:
        case McTarget::kSigmaClt:
            return true;
        case McTarget::kEteClt:
        case McTarget::kLseClt:
        case McTarget::kThetaBar:
            return cfg.hurst < 0.75;
        default:
            return false;
    }
}

double theoretical_variance_for(const McExperimentConfig& cfg) {
    const double T = cfg.horizon();
    switch (cfg.target) {
        case McTarget::kPvLln:
            return 0.0;
        case McTarget::kPvClt: {
            const SeriesValue v1 = v1_squared_auto(cfg.hurst, cfg.k, cfg.p);
            const double c = c_kp(cfg.hurst, cfg.k, cfg.p);
            return v1.value * std::pow(cfg.sigma, 2.0 * cfg.p) * T / (c * c);
        }
        case McTarget::kSigmaClt: {
            const SeriesValue v1 = v1_squared_auto(cfg.hurst, cfg.k, cfg.p);
            const double c = c_kp(cfg.hurst, cfg.k, cfg.p);
            return v1.value * std::pow(cfg.sigma, 2.0 * cfg.p) / (c * c * T);
        }
        case McTarget::kEteClt:
        case McTarget::kThetaBar:
        case McTarget::kRosenblatt:
            return drift_clt_variance(DriftEstimator::kEte, cfg.hurst, cfg.theta).variance;
        case McTarget::kLseClt:
            return drift_clt_variance(DriftEstimator::kLse, cfg.hurst, cfg.theta).variance;
    }
    return 0.0;
}

}  // namespace

std::string to_string(McTarget t) {
    switch (t) {
        case McTarget::kPvLln: return "PV_LLN";
        case McTarget::kPvClt: return "PV_CLT";
        case McTarget::kSigmaClt: return "SIGMA_CLT";
        case McTarget::kEteClt: return "ETE_CLT";
        case McTarget::kLseClt: return "LSE_CLT";
        case McTarget::kRosenblatt: return "ROSENBLATT";
        case McTarget::kThetaBar: return "THETA_BAR";
    }
    return "?";
}

McTarget mc_target_from_string(const std::string& name) {
    if (name == "PV_LLN") return McTarget::kPvLln;
    if (name == "PV_CLT") return McTarget::kPvClt;
    if (name == "SIGMA_CLT") return McTarget::kSigmaClt;
    if (name == "ETE_CLT") return McTarget::kEteClt;
    if (name == "LSE_CLT") return McTarget::kLseClt;
    if (name == "ROSENBLATT") return McTarget::kRosenblatt;
    if (name == "THETA_BAR") return McTarget::kThetaBar;
    throw config_error("unknown Monte Carlo target: " + name);
}

void McExperimentConfig::validate() const {
    if (replications < 100) throw config_error("replications must be >= 100");
    if (!(hurst > 0.0 && hurst < 1.0)) throw config_error("H must lie in (0,1)");
    if (k < 1) throw config_error("k must be >= 1");
    if (!(p > 0.0)) throw config_error("p must be > 0");
    if (!(sigma > 0.0)) throw config_error("sigma must be > 0");
    GridSpec(n, h).validate();

    switch (target) {
        case McTarget::kPvLln:
        case McTarget::kPvClt:
        case McTarget::kSigmaClt:
            if (!(theta >= 0.0)) throw config_error("theta must be >= 0");
            if (k == 1 && hurst >= 0.75)
                throw config_error(
                    "power-variation CLT hypothesis violated: the series "
                    "sum rho_{k,H}(j)^2 is infinite when k = 1 and 3/4 <= H < 1; use k >= 2");
            if (target != McTarget::kPvLln && !(p > 0.5))
                throw config_error("volatility CLT requires p > 1/2");
            break;
        case McTarget::kEteClt:
        case McTarget::kLseClt:
            if (!(theta > 0.0)) throw config_error("theta must be > 0");
            if (hurst >= 0.75)
                throw config_error(
                    "Gaussian drift CLT requires H < 3/4; use the ROSENBLATT target "
                    "for H > 3/4");
            break;
        case McTarget::kRosenblatt:
            if (!(theta > 0.0)) throw config_error("theta must be > 0");
            if (!(hurst > 0.75))
                throw config_error("the Rosenblatt regime requires H > 3/4");
            break;
        case McTarget::kThetaBar: {
            if (!(theta > 0.0)) throw config_error("theta must be > 0");
            if (hurst >= 0.75)
                throw config_error("theta_bar verification target requires H < 3/4 here");
            const StepConditionReport r = check_step_conditions(hurst, n, h, step_p);
            if (!r.p_admissible)
                throw config_error(
                    "step-size condition violated: n h^p -> 0 requires p in (" +
                    std::to_string(r.p_lower) + ", " + std::to_string(r.p_upper) +
                    ") for H = " + std::to_string(hurst) + ", got p = " + std::to_string(step_p));
            break;
        }
    }
}

namespace {

double statistic_from_path(const McExperimentConfig& cfg, const FouPath& x) {
    const double T = cfg.horizon();
    switch (cfg.target) {
        case McTarget::kPvLln:
            return integrated_volatility(x, {cfg.k, cfg.p, cfg.hurst}, T);
        case McTarget::kPvClt: {
            const double pv = integrated_volatility(x, {cfg.k, cfg.p, cfg.hurst}, T);
            return std::sqrt(1.0 / cfg.h) * (pv - std::pow(cfg.sigma, cfg.p) * T);
        }
        case McTarget::kSigmaClt: {
            const double pv = integrated_volatility(x, {cfg.k, cfg.p, cfg.hurst}, T);
            return std::sqrt(1.0 / cfg.h) * (pv / T - std::pow(cfg.sigma, cfg.p));
        }
        case McTarget::kEteClt:
            return std::sqrt(T) * (theta_tilde(x, cfg.sigma, cfg.hurst).value - cfg.theta);
        case McTarget::kLseClt:
            return std::sqrt(T) *
                   (theta_hat_lse_sim(x, cfg.sigma, cfg.hurst, cfg.theta).value - cfg.theta);
        case McTarget::kRosenblatt:
            return std::pow(T, 2.0 - 2.0 * cfg.hurst) *
                   (theta_tilde(x, cfg.sigma, cfg.hurst).value - cfg.theta);
        case McTarget::kThetaBar:
            return std::sqrt(T) *
                   (theta_bar(x.values, x.grid, cfg.sigma, cfg.hurst, cfg.step_p).value -
                    cfg.theta);
    }
    return 0.0;
}

}  // namespace

double replication_statistic(const McExperimentConfig& cfg, int replication) {
    const FgnSampler sampler(cfg.hurst, GridSpec(cfg.n, cfg.h));
    const FbmPath fbm = sampler.sample_stream(cfg.seed, static_cast<std::uint64_t>(replication));
    const FouPath x = build_fou(fbm, cfg.theta, VolatilitySpec::make_constant(cfg.sigma));
    return statistic_from_path(cfg, x);
}

int resolve_threads(int requested) {
    int threads = requested;
    if (threads < 1) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads < 1) threads = 1;
    }
    if (const char* env = std::getenv("FOU_LAB_THREADS")) {
        const int env_cap = std::atoi(env);
        if (env_cap >= 1) threads = std::min(threads, env_cap);
    }
    return threads;
}

McReport run_experiment(const McExperimentConfig& cfg, int threads) {
    cfg.validate();
    const int nthreads = resolve_threads(threads);
    const int reps = cfg.replications;

    // shared, read-only across workers
    const FgnSampler sampler(cfg.hurst, GridSpec(cfg.n, cfg.h));
    const VolatilitySpec vol = VolatilitySpec::make_constant(cfg.sigma);
    const double T = cfg.horizon();

    auto one = [&](int r) -> double {
        const FbmPath fbm = sampler.sample_stream(cfg.seed, static_cast<std::uint64_t>(r));
        return statistic_from_path(cfg, build_fou(fbm, cfg.theta, vol));
    };

    McReport report;
    report.samples.assign(reps, 0.0);
    if (nthreads <= 1) {
        for (int r = 0; r < reps; ++r) report.samples[r] = one(r);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int w = 0; w < nthreads; ++w) {
            pool.emplace_back([&, w] {
                for (int r = w; r < reps; r += nthreads) report.samples[r] = one(r);
            });
        }
        for (auto& th : pool) th.join();
    }

    const double nreps = static_cast<double>(reps);
    report.empirical_mean = pairwise_sum(report.samples) / nreps;
    const double mean = report.empirical_mean;
    const double ss = pairwise_sum_indexed(0, report.samples.size(), [&](std::size_t i) {
        const double d = report.samples[i] - mean;
        return d * d;
    });
    report.empirical_variance = reps > 1 ? ss / (nreps - 1.0) : 0.0;
    const double sd = std::sqrt(report.empirical_variance);
    if (sd > 0.0) {
        const double s3 = pairwise_sum_indexed(0, report.samples.size(), [&](std::size_t i) {
            const double d = (report.samples[i] - mean) / sd;
            return d * d * d;
        });
        report.empirical_skewness = s3 / nreps;
    }
    report.theoretical_variance = theoretical_variance_for(cfg);

    if (cfg.target != McTarget::kPvLln && report.theoretical_variance > 0.0) {
        const KsResult ks = ks_test(report.samples, report.theoretical_variance);
        report.ks_statistic = ks.statistic;
        report.ks_pass = ks.pass_1pct;
    }

    // verdict
    auto fail = [&](const std::string& why) { report.verdict.reasons.push_back(why); };
    if (cfg.target == McTarget::kPvLln) {
        const double expected = std::pow(cfg.sigma, cfg.p) * T;
        const double rel = std::fabs(report.empirical_mean / expected - 1.0);
        if (rel > cfg.tolerance.lln_rel_tol)
            fail("LLN relative error " + std::to_string(rel) + " exceeds tolerance");
    } else {
        const double rel =
            std::fabs(report.empirical_variance / report.theoretical_variance - 1.0);
        if (rel > cfg.tolerance.variance_rel_tol)
            fail("variance ratio off by " + std::to_string(rel) + " relative");
        if (is_gaussian_clt_target(cfg)) {
            if (cfg.tolerance.require_ks && !report.ks_pass)
                fail("KS test rejected normality at the 1% level");
        } else if (cfg.target == McTarget::kRosenblatt) {
            if (std::fabs(report.empirical_skewness) < cfg.tolerance.skewness_min)
                fail("|skewness| below the non-Gaussianity floor");
        }
    }
    report.verdict.pass = report.verdict.reasons.empty();
    return report;
}

KsResult ks_test(const std::vector<double>& samples, double target_variance) {
    if (samples.size() < 100) throw config_error("ks_test: need at least 100 samples");
    if (!(target_variance > 0.0)) throw config_error("ks_test: target variance must be > 0");
    for (double s : samples)
        if (!std::isfinite(s)) throw config_error("ks_test: non-finite sample");

    const double inv_sd = 1.0 / std::sqrt(target_variance);
    std::vector<double> z(samples);
    for (double& v : z) v *= inv_sd;
    std::sort(z.begin(), z.end());

    const double n = static_cast<double>(z.size());
    double d = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double cdf = normal_cdf(z[i]);
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - cdf));
        d = std::max(d, std::fabs(cdf - static_cast<double>(i) / n));
    }
    KsResult r;
    r.statistic = d;
    r.pass_1pct = std::sqrt(n) * d < 1.628;
    return r;
}

double rate_fit(const std::vector<double>& horizons, const std::vector<double>& variances) {
    if (horizons.size() != variances.size() || horizons.size() < 3)
        throw std::invalid_argument("rate_fit: need >= 3 (T, variance) pairs");
    double tmin = horizons.front(), tmax = horizons.front();
    for (double t : horizons) {
        tmin = std::min(tmin, t);
        tmax = std::max(tmax, t);
    }
    if (!(tmax >= 4.0 * tmin)) throw std::invalid_argument("rate_fit: T grid must span a factor 4");
    for (double v : variances)
        if (!(v > 0.0)) throw std::invalid_argument("rate_fit: variances must be positive");

    const std::size_t n = horizons.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(horizons[i]);
        const double y = std::log(variances[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double dn = static_cast<double>(n);
    return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

namespace {

json tolerance_to_json(const McTolerance& t) {
    return json{{"variance_rel_tol", t.variance_rel_tol},
                {"lln_rel_tol", t.lln_rel_tol},
                {"skewness_min", t.skewness_min},
                {"require_ks", t.require_ks}};
}

}  // namespace

std::string mc_config_to_json(const McExperimentConfig& cfg) {
    json j{{"target", to_string(cfg.target)},
           {"hurst", cfg.hurst},
           {"k", cfg.k},
           {"p", cfg.p},
           {"theta", cfg.theta},
           {"sigma", cfg.sigma},
           {"n", cfg.n},
           {"h", cfg.h},
           {"replications", cfg.replications},
           {"seed", cfg.seed},
           {"step_p", cfg.step_p},
           {"tolerance", tolerance_to_json(cfg.tolerance)}};
    return j.dump(2) + "\n";
}

McExperimentConfig mc_config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw config_error(std::string("invalid experiment config JSON: ") + e.what());
    }
    McExperimentConfig cfg;
    try {
        cfg.target = mc_target_from_string(j.at("target").get<std::string>());
        cfg.hurst = j.at("hurst").get<double>();
        if (j.contains("k")) cfg.k = j["k"].get<int>();
        if (j.contains("p")) cfg.p = j["p"].get<double>();
        cfg.theta = j.at("theta").get<double>();
        cfg.sigma = j.at("sigma").get<double>();
        cfg.n = j.at("n").get<std::int64_t>();
        cfg.h = j.at("h").get<double>();
        cfg.replications = j.at("replications").get<int>();
        cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("step_p")) cfg.step_p = j["step_p"].get<double>();
        if (j.contains("tolerance")) {
            const json& t = j["tolerance"];
            if (t.contains("variance_rel_tol"))
                cfg.tolerance.variance_rel_tol = t["variance_rel_tol"].get<double>();
            if (t.contains("lln_rel_tol")) cfg.tolerance.lln_rel_tol = t["lln_rel_tol"].get<double>();
            if (t.contains("skewness_min"))
                cfg.tolerance.skewness_min = t["skewness_min"].get<double>();
            if (t.contains("require_ks")) cfg.tolerance.require_ks = t["require_ks"].get<bool>();
        }
    } catch (const json::exception& e) {
        throw config_error(std::string("experiment config missing field: ") + e.what());
    }
    return cfg;
}

std::string mc_report_to_json(const McReport& report) {
    json j{{"samples", report.samples},
           {"empirical_mean", report.empirical_mean},
           {"empirical_variance", report.empirical_variance},
           {"empirical_skewness", report.empirical_skewness},
           {"theoretical_variance", report.theoretical_variance},
           {"ks_statistic", report.ks_statistic},
           {"ks_pass", report.ks_pass},
           {"verdict", json{{"pass", report.verdict.pass}, {"reasons", report.verdict.reasons}}}};
    return j.dump(2) + "\n";
}

}  // namespace foulab
