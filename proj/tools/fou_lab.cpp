// Command-line surface for the fractional Ornstein-Uhlenbeck estimation
// library: path simulation, estimation from CSV observations, closed-form
// asymptotic constants, reference table/figure emission, Monte Carlo
// experiments, and quadrature checks.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "foulab/asymptotics.hpp"
#include "foulab/drift_estimators.hpp"
#include "foulab/errors.hpp"
#include "foulab/fou_model.hpp"
#include "foulab/fracgauss.hpp"
#include "foulab/mc_harness.hpp"
#include "foulab/path_io.hpp"
#include "foulab/power_variation.hpp"
#include "foulab/special.hpp"
#include "foulab/svg.hpp"

namespace {

using foulab::DriftCltVariance;
using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

json clt_to_json(const DriftCltVariance& v) {
    json j{{"rate", v.rate}, {"variance", v.variance}};
    switch (v.regime) {
        case foulab::LimitRegime::kGaussian: j["regime"] = "gaussian"; break;
        case foulab::LimitRegime::kGaussianLog: j["regime"] = "log-rate"; break;
        case foulab::LimitRegime::kRosenblatt:
            j["regime"] = "rosenblatt";
            j["rosenblatt_coefficient"] = v.rosenblatt_coefficient;
            break;
    }
    return j;
}

struct SimulateArgs {
    double hurst = 0.5, theta = 1.0, sigma = 1.0, h = 0.01;
    std::int64_t n = 1000;
    std::uint64_t seed = 1;
    std::string out = "path.csv";
};

int cmd_simulate(const SimulateArgs& a) {
    const foulab::GridSpec grid(a.n, a.h);
    const foulab::FbmPath fbm = foulab::sample_fbm(a.hurst, grid, a.seed);
    const foulab::FouPath x =
        foulab::build_fou(fbm, a.theta, foulab::VolatilitySpec::make_constant(a.sigma));
    foulab::write_path_csv(a.out, x.values, grid);
    foulab::write_fou_sidecar(a.out + ".json", x);
    std::cout << "wrote " << a.out << " and " << a.out << ".json\n";
    return 0;
}

struct EstimateArgs {
    std::string input;
    double hurst = 0.5;
    int k = 2;
    double p = 2.0;
    std::optional<double> sigma;  // absent -> estimate it first
    double cond_p = 1.5;
    std::string out;  // empty -> stdout
};

int cmd_estimate(const EstimateArgs& a) {
    const foulab::LoadedPath loaded = foulab::read_path_csv(a.input);
    if (loaded.values.size() < static_cast<std::size_t>(a.k) + 2)
        throw std::invalid_argument("estimate: need at least k+2 observations");

    foulab::FouPath path;
    path.hurst = a.hurst;
    path.grid = loaded.grid;
    path.values = loaded.values;

    const foulab::PowerVariationConfig pv_cfg{a.k, a.p, a.hurst};
    const bool clt_ok = pv_cfg.clt_available();

    json report;
    double sigma_used = 0.0;
    if (a.sigma) {
        sigma_used = *a.sigma;
        if (!(sigma_used > 0.0)) throw std::domain_error("estimate: sigma must be > 0");
        report["sigma"] = {{"value", sigma_used}, {"estimated", false}};
    } else {
        sigma_used = foulab::sigma_hat(path, pv_cfg);
        json sj{{"value", sigma_used}, {"estimated", true}, {"k", a.k}, {"p", a.p}};
        if (clt_ok) {
            const double nu2 =
                foulab::nu_squared_normalized_auto(a.hurst, a.k, a.p).value *
                std::pow(sigma_used, 2.0 * a.p) / loaded.grid.horizon();
            // delta method through the p-th root
            const double se_pow = std::sqrt(nu2 * loaded.grid.h);
            sj["std_error"] = se_pow / (a.p * std::pow(sigma_used, a.p - 1.0));
        } else {
            sj["std_error"] = nullptr;
            sj["note"] = "no CLT available for k = 1 with H >= 3/4; point estimate only";
        }
        report["sigma"] = sj;
    }

    const foulab::DriftEstimate est =
        foulab::theta_bar(path.values, path.grid, sigma_used, a.hurst, a.cond_p);
    json tj{{"estimator", "DISCRETE"},
            {"value", est.value},
            {"rate", est.rate},
            {"nonphysical", est.nonphysical},
            {"asymptotic", clt_to_json(est.asymptotic)}};
    if (a.hurst < 0.75 && est.value > 0.0 && std::isfinite(est.value)) {
        const double var = foulab::drift_clt_variance(foulab::DriftEstimator::kEte, a.hurst,
                                                      est.value)
                               .variance;
        tj["std_error"] = std::sqrt(var / loaded.grid.horizon());
    } else {
        tj["std_error"] = nullptr;
    }
    const auto& cr = est.condition_report;
    tj["condition_report"] = json{{"p", cr.p},
                                  {"p_interval", {cr.p_lower, cr.p_upper}},
                                  {"p_admissible", cr.p_admissible},
                                  {"log_criterion", cr.log_criterion},
                                  {"nh", cr.nh},
                                  {"nh_pow_p", cr.nh_pow_p}};
    report["theta"] = tj;
    report["grid"] = {{"n", loaded.grid.n}, {"h", loaded.grid.h}, {"T", loaded.grid.horizon()}};

    const std::string text = report.dump(2) + "\n";
    if (a.out.empty())
        std::cout << text;
    else
        foulab::write_text_file(a.out, text);
    return 0;
}

struct ConstantsArgs {
    double hurst = 0.5, theta = 1.0, sigma = 1.0, p = 2.0;
    int k = 2;
    std::string out;
};

int cmd_constants(const ConstantsArgs& a) {
    const foulab::AsymptoticConstants c =
        foulab::asymptotic_constants(a.hurst, a.k, a.p, a.theta, a.sigma);
    json j{{"hurst", c.hurst},
           {"k", c.k},
           {"p", c.p},
           {"theta", c.theta},
           {"sigma", c.sigma},
           {"c_kp", c.c_kp},
           {"rho0", c.rho0},
           {"lse", clt_to_json(c.lse)},
           {"ete", clt_to_json(c.ete)},
           {"mle", clt_to_json(c.mle)}};
    if (c.has_clt) {
        j["v1_sq"] = c.v1_sq;
        j["nu_sq_normalized"] = c.nu_sq_normalized;
        j["truncation"] = {{"hermite_orders", c.truncation.hermite_orders},
                           {"lag_cutoff", c.truncation.lag_cutoff},
                           {"tail_bound", c.truncation.tail_bound}};
    } else {
        j["v1_sq"] = nullptr;
        j["nu_sq_normalized"] = nullptr;
        j["note"] = "no CLT available for k = 1 with H >= 3/4";
    }
    j["sigma_h_sq"] = c.has_sigma_h_sq ? json(c.sigma_h_sq) : json(nullptr);
    const std::string text = j.dump(2) + "\n";
    if (a.out.empty())
        std::cout << text;
    else
        foulab::write_text_file(a.out, text);
    return 0;
}

int cmd_table1(double p, const std::string& out) {
    const foulab::VarianceTable t = foulab::table1(p);
    std::ostringstream csv;
    csv << "H";
    for (int k : t.ks) csv << ",k=" << k;
    csv << '\n';
    for (std::size_t r = 0; r < t.hs.size(); ++r) {
        csv << fixed4(t.hs[r]).substr(0, 3);
        for (std::size_t c = 0; c < t.ks.size(); ++c) {
            const double v = t.values[r][c];
            csv << ',' << (std::isnan(v) ? std::string("-") : fixed4(v));
        }
        csv << '\n';
    }
    if (out.empty())
        std::cout << csv.str();
    else
        foulab::write_text_file(out, csv.str());
    return 0;
}

int cmd_figure1(const std::string& out_prefix, const std::string& format) {
    std::vector<double> hs, lse, ete, mle;
    for (int i = 1; i <= 74; ++i) {
        const double h = i / 100.0;
        hs.push_back(h);
        lse.push_back(foulab::drift_clt_variance(foulab::DriftEstimator::kLse, h, 1.0).variance);
        ete.push_back(foulab::drift_clt_variance(foulab::DriftEstimator::kEte, h, 1.0).variance);
        mle.push_back(foulab::drift_clt_variance(foulab::DriftEstimator::kMle, h, 1.0).variance);
    }
    if (format != "svg") {
        std::ostringstream csv;
        csv << "H,lse,ete,mle\n";
        for (std::size_t i = 0; i < hs.size(); ++i)
            csv << foulab::format_shortest(hs[i]) << ',' << foulab::format_shortest(lse[i]) << ','
                << foulab::format_shortest(ete[i]) << ',' << foulab::format_shortest(mle[i])
                << '\n';
        foulab::write_text_file(out_prefix + ".csv", csv.str());
    }
    if (format != "csv") {
        const std::string svg = foulab::render_line_chart(
            "Asymptotic Variance of the Three Estimators", "H", "asymptotic variance",
            {{"LSE", hs, lse}, {"ETE", hs, ete}, {"MLE", hs, mle}});
        foulab::write_text_file(out_prefix + ".svg", svg);
    }
    std::cout << "wrote " << out_prefix << (format == "svg" ? ".svg" : ".csv/.svg") << "\n";
    return 0;
}

struct McArgs {
    std::string config;
    std::string out;
    std::string samples_csv;
    std::string histogram;
    int threads = 0;
};

int cmd_mc(const McArgs& a) {
    const foulab::McExperimentConfig cfg =
        foulab::mc_config_from_json(foulab::read_text_file(a.config));
    const foulab::McReport report = foulab::run_experiment(cfg, a.threads);
    const std::string text = foulab::mc_report_to_json(report);
    if (a.out.empty())
        std::cout << text;
    else
        foulab::write_text_file(a.out, text);
    if (!a.samples_csv.empty()) {
        std::ostringstream csv;
        csv << "replication,statistic\n";
        for (std::size_t i = 0; i < report.samples.size(); ++i)
            csv << i << ',' << foulab::format_shortest(report.samples[i]) << '\n';
        foulab::write_text_file(a.samples_csv, csv.str());
    }
    if (!a.histogram.empty()) {
        foulab::write_text_file(
            a.histogram, foulab::render_histogram(foulab::to_string(cfg.target) + " statistic",
                                                  report.samples, report.theoretical_variance));
    }
    return report.verdict.pass ? 0 : 4;
}

struct LemmaArgs {
    int n = 0;
    double hurst = 0.8, theta = 1.0;
    std::vector<double> ladder{1e3, 1e4, 1e5};
    std::string out;
};

int cmd_lemma_check(const LemmaArgs& a) {
    json rows = json::array();
    for (double T : a.ladder) {
        const foulab::LemmaAtValues v = foulab::lemma_at_pair(a.n, a.hurst, a.theta, T);
        rows.push_back(json{{"T", T}, {"a1", v.a1}, {"a2", v.a2}});
    }
    json j{{"n", a.n}, {"hurst", a.hurst}, {"theta", a.theta}, {"values", rows}};
    if (a.hurst > 0.75) {
        j["limit"] = std::pow(a.theta, -(a.n + 1.0)) * foulab::gamma_fn(a.n + 1.0) /
                     (4.0 * a.hurst - 3.0);
        j["limit_of"] = "A";
    } else {
        j["limit"] = foulab::gamma_fn(a.n + 1.0) * std::pow(a.theta, -(a.n + 1.0));
        j["limit_of"] = "A/log(T)";
    }
    const std::string text = j.dump(2) + "\n";
    if (a.out.empty())
        std::cout << text;
    else
        foulab::write_text_file(a.out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional Ornstein-Uhlenbeck simulation and estimation toolkit"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "sample an fOU path to CSV + JSON sidecar");
    simulate->add_option("--hurst", sim.hurst, "Hurst parameter in (0,1)");
    simulate->add_option("--theta", sim.theta, "drift parameter (>= 0)");
    simulate->add_option("--sigma", sim.sigma, "constant volatility");
    simulate->add_option("-n,--steps", sim.n, "number of grid steps");
    simulate->add_option("--step", sim.h, "step size h");
    simulate->add_option("--seed", sim.seed, "RNG seed");
    simulate->add_option("--out", sim.out, "output CSV path");

    EstimateArgs est;
    auto* estimate = app.add_subcommand("estimate", "estimate sigma and theta from a path CSV");
    estimate->add_option("--input", est.input, "input CSV (t,value)")->required();
    estimate->add_option("--hurst", est.hurst, "Hurst parameter (assumed known)");
    estimate->add_option("-k", est.k, "difference order");
    estimate->add_option("-p", est.p, "variation power");
    double sigma_opt = 0.0;
    auto* sflag = estimate->add_option("--sigma", sigma_opt, "known sigma (omit to estimate)");
    estimate->add_option("--cond-p", est.cond_p, "step exponent for the admissibility report");
    estimate->add_option("--out", est.out, "output JSON (default stdout)");

    ConstantsArgs con;
    auto* constants = app.add_subcommand("constants", "closed-form asymptotic constants as JSON");
    constants->add_option("--hurst", con.hurst, "Hurst parameter");
    constants->add_option("-k", con.k, "difference order");
    constants->add_option("-p", con.p, "variation power");
    constants->add_option("--theta", con.theta, "drift parameter");
    constants->add_option("--sigma", con.sigma, "volatility");
    constants->add_option("--out", con.out, "output JSON (default stdout)");

    double table_p = 2.0;
    std::string table_out;
    auto* table = app.add_subcommand("table1", "normalized asymptotic variance table as CSV");
    table->add_option("-p", table_p, "variation power");
    table->add_option("--out", table_out, "output CSV (default stdout)");

    std::string fig_out = "figure1";
    std::string fig_format = "both";
    auto* figure = app.add_subcommand("figure1", "asymptotic variance curves (CSV + SVG)");
    figure->add_option("--out", fig_out, "output prefix");
    figure->add_option("--format", fig_format, "csv | svg | both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));

    McArgs mc;
    auto* mc_cmd = app.add_subcommand("mc", "run a Monte Carlo experiment from a JSON config");
    mc_cmd->add_option("--config", mc.config, "experiment config JSON")->required();
    mc_cmd->add_option("--out", mc.out, "report JSON (default stdout)");
    mc_cmd->add_option("--samples-csv", mc.samples_csv, "optional per-replication CSV dump");
    mc_cmd->add_option("--histogram", mc.histogram, "optional SVG histogram");
    mc_cmd->add_option("--threads", mc.threads, "worker threads (0 = auto)");

    LemmaArgs lem;
    auto* lemma = app.add_subcommand("lemma-check", "slow-decay quadrature vs analytic limits");
    lemma->add_option("--lemma-n", lem.n, "polynomial order n >= 0");
    lemma->add_option("--hurst", lem.hurst, "Hurst parameter in [3/4, 1)");
    lemma->add_option("--theta", lem.theta, "drift parameter");
    lemma->add_option("--ladder", lem.ladder, "T ladder");
    lemma->add_option("--out", lem.out, "output JSON (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(sim);
        if (estimate->parsed()) {
            if (sflag->count() > 0) est.sigma = sigma_opt;
            return cmd_estimate(est);
        }
        if (constants->parsed()) return cmd_constants(con);
        if (table->parsed()) return cmd_table1(table_p, table_out);
        if (figure->parsed()) return cmd_figure1(fig_out, fig_format);
        if (mc_cmd->parsed()) return cmd_mc(mc);
        if (lemma->parsed()) return cmd_lemma_check(lem);
    } catch (const foulab::io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
