#include "apsa/mc_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include "apsa/channel_model.hpp"

namespace apsa {

namespace {
constexpr double kRatioFloor = 1e-12; // -120 dB
constexpr double kRatioCeil = 1e10;   // +100 dB

enum Stream : std::uint64_t { kChannel = 0, kInput = 1, kNoise = 2 };
} // namespace

void validate(const ExperimentConfig& c) {
    if (c.n_runs < 1)
        throw std::invalid_argument("ExperimentConfig: n_runs must be >= 1");
    if (c.n_iterations < 1)
        throw std::invalid_argument(
            "ExperimentConfig: n_iterations must be >= 1");
    if (c.algorithms.empty())
        throw std::invalid_argument(
            "ExperimentConfig: at least one algorithm required");
    std::set<std::string> labels;
    for (const auto& a : c.algorithms) {
        if (!labels.insert(a.label).second)
            throw std::invalid_argument(
                "ExperimentConfig: duplicate algorithm label " + a.label);
        if (a.config.n_taps != c.n_taps)
            throw std::invalid_argument(
                "ExperimentConfig: filter n_taps mismatch for " + a.label);
        validate(a.config);
    }
    validate(c.noise);
    if (c.k_nonzero == 0 || c.k_nonzero > c.n_taps)
        throw std::invalid_argument(
            "ExperimentConfig: require 1 <= k_nonzero <= n_taps");
}

double signal_power_from_snr(const StableParams& noise, double snr_db) {
    validate(noise);
    return noise.gamma * std::pow(10.0, snr_db / 10.0);
}

std::vector<std::vector<double>> run_single(const ExperimentConfig& config,
                                            std::size_t run_index) {
    validate(config);
    if (run_index >= config.n_runs)
        throw std::invalid_argument("run_single: run_index out of range");

    Rng ch_rng(child_seed(config.master_seed, run_index, kChannel));
    Rng in_rng(child_seed(config.master_seed, run_index, kInput));
    Rng nz_rng(child_seed(config.master_seed, run_index, kNoise));

    const SparseChannel channel =
        generate_channel(config.n_taps, config.k_nonzero, ch_rng);
    const double power = signal_power_from_snr(config.noise, config.snr_db);
    const std::vector<double> input =
        generate_input(config.n_iterations, power, in_rng);
    const std::vector<double> noise =
        sample_vector(config.noise, config.n_iterations, nz_rng);

    const std::size_t n_algs = config.algorithms.size();
    std::vector<std::vector<double>> ratios(
        n_algs, std::vector<double>(config.n_iterations));

    // ||w||^2 = 1 by construction, but use the actual value
    double w_norm_sq = 0.0;
    for (double v : channel.taps) w_norm_sq += v * v;

    std::vector<double> x(config.n_taps);
    for (std::size_t a = 0; a < n_algs; ++a) {
        const AlgorithmSpec& alg = config.algorithms[a];
        FilterState state = init(alg.config);
        for (std::size_t n = 0; n < config.n_iterations; ++n) {
            double dev = 0.0;
            for (std::size_t i = 0; i < config.n_taps; ++i) {
                const double diff = state.w_hat[i] - channel.taps[i];
                dev += diff * diff;
            }
            double ratio = dev / w_norm_sq;
            if (!std::isfinite(ratio) || ratio > kRatioCeil)
                ratio = kRatioCeil;
            ratios[a][n] = ratio;

            regressor_into(input, n, x);
            const double d = observe(x, channel, noise[n]);
            if (alg.is_lms)
                lms_update_in_place(state, alg.config, x, d);
            else
                update_in_place(state, alg.config, x, d);
        }
    }
    return ratios;
}

MseCurve average_runs(
    const std::string& label,
    const std::vector<const std::vector<double>*>& run_ratios) {
    if (run_ratios.empty())
        throw std::invalid_argument("average_runs: no runs");
    const std::size_t n_iter = run_ratios.front()->size();
    MseCurve curve{label, std::vector<double>(n_iter)};
    const double inv_m = 1.0 / static_cast<double>(run_ratios.size());
    for (std::size_t n = 0; n < n_iter; ++n) {
        double acc = 0.0;
        for (const auto* r : run_ratios) acc += (*r)[n];
        double mean = acc * inv_m;
        if (mean < kRatioFloor) mean = kRatioFloor;
        if (mean > kRatioCeil) mean = kRatioCeil;
        curve.mse_db[n] = 10.0 * std::log10(mean);
    }
    return curve;
}

std::vector<MseCurve> run_experiment(const ExperimentConfig& config,
                                     unsigned n_threads) {
    validate(config);
    if (n_threads == 0) n_threads = 1;

    // all runs materialized, then reduced in run-index order
    std::vector<std::vector<std::vector<double>>> per_run(config.n_runs);
    if (n_threads == 1 || config.n_runs == 1) {
        for (std::size_t r = 0; r < config.n_runs; ++r)
            per_run[r] = run_single(config, r);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t r = next.fetch_add(1);
                if (r >= config.n_runs) return;
                per_run[r] = run_single(config, r);
            }
        };
        std::vector<std::thread> pool;
        const unsigned n =
            std::min<unsigned>(n_threads,
                               static_cast<unsigned>(config.n_runs));
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<MseCurve> curves;
    curves.reserve(config.algorithms.size());
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        std::vector<const std::vector<double>*> runs;
        runs.reserve(config.n_runs);
        for (std::size_t r = 0; r < config.n_runs; ++r)
            runs.push_back(&per_run[r][a]);
        curves.push_back(average_runs(config.algorithms[a].label, runs));
    }
    return curves;
}

double steady_state_mse(const MseCurve& curve, std::size_t window) {
    if (window == 0)
        throw std::invalid_argument("steady_state_mse: window must be >= 1");
    if (window > curve.mse_db.size())
        throw std::invalid_argument("steady_state_mse: window exceeds curve");
    double acc = 0.0;
    for (std::size_t i = curve.mse_db.size() - window; i < curve.mse_db.size();
         ++i)
        acc += curve.mse_db[i];
    return acc / static_cast<double>(window);
}

} // namespace apsa
