#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foulab/grid.hpp"

namespace foulab {

enum class McTarget {
    kPvLln,      // PV_{k,p}(X)_T against sigma^p T
    kPvClt,      // sqrt(n) (PV_T - sigma^p T)
    kSigmaClt,   // sqrt(n) (sigma_hat^p - sigma^p)
    kEteClt,     // sqrt(T) (theta~ - theta)
    kLseClt,     // sqrt(T) (theta^ - theta), simulation-mode LSE
    kRosenblatt, // T^{2-2H} (theta~ - theta)
    kThetaBar,   // sqrt(nh) (theta_bar - theta)
};

std::string to_string(McTarget t);
McTarget mc_target_from_string(const std::string& name);

/// Per-target pass/fail thresholds. Only the fields relevant to the target
/// are consulted.
struct McTolerance {
    double variance_rel_tol = 0.15;  // |empirical/theoretical - 1| for CLT targets
    double lln_rel_tol = 0.05;       // relative error of the mean for PV_LLN
    double skewness_min = 0.3;       // |skewness| floor for the Rosenblatt regime
    bool require_ks = true;          // gate CLT verdicts on the KS test
};

struct McExperimentConfig {
    McTarget target = McTarget::kEteClt;
    double hurst = 0.5;
    int k = 2;
    double p = 2.0;
    double theta = 1.0;
    double sigma = 1.0;
    std::int64_t n = 1024;  // grid steps
    double h = 0.01;        // step size; horizon T = n h
    int replications = 1000;
    std::uint64_t seed = 1;
    double step_p = 1.5;    // admissibility exponent checked for THETA_BAR
    McTolerance tolerance;

    double horizon() const { return static_cast<double>(n) * h; }
    /// Throws config_error naming the violated theorem hypothesis.
    void validate() const;
};

struct McVerdict {
    bool pass = false;
    std::vector<std::string> reasons;  // empty when pass
};

struct McReport {
    std::vector<double> samples;  // one statistic per replication
    double empirical_mean = 0.0;
    double empirical_variance = 0.0;
    double empirical_skewness = 0.0;
    double theoretical_variance = 0.0;
    double ks_statistic = 0.0;
    bool ks_pass = false;
    McVerdict verdict;
};

/// Run the experiment. Replication r draws from the stream (seed, r), so the
/// report is a pure function of the config: independent of execution order
/// and of `threads` (0 = use all cores, capped by FOU_LAB_THREADS).
McReport run_experiment(const McExperimentConfig& cfg, int threads = 0);

/// One-sample Kolmogorov-Smirnov statistic of samples/sqrt(target_variance)
/// against the standard normal CDF; passes iff sqrt(N) D_N < 1.628, the
/// asymptotic 1% critical value.
struct KsResult {
    double statistic = 0.0;
    bool pass_1pct = false;
};
KsResult ks_test(const std::vector<double>& samples, double target_variance);

/// Least-squares slope of log(variance) against log(T). Requires at least
/// three grid points spanning a factor of four in T.
double rate_fit(const std::vector<double>& horizons, const std::vector<double>& variances);

/// Statistic of a single replication, recomputed from scratch. run_experiment
/// produces exactly these values in slots 0..replications-1.
double replication_statistic(const McExperimentConfig& cfg, int replication);

std::string mc_report_to_json(const McReport& report);
McExperimentConfig mc_config_from_json(const std::string& text);
std::string mc_config_to_json(const McExperimentConfig& cfg);

/// Thread count actually used for `requested` (0 = auto), honoring the
/// FOU_LAB_THREADS cap.
int resolve_threads(int requested);

}  // namespace foulab
