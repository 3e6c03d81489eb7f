#ifndef APSA_MC_HARNESS_HPP
#define APSA_MC_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apsa/adaptive_filters.hpp"
#include "apsa/stable_noise.hpp"

namespace apsa {

struct AlgorithmSpec {
    std::string label;
    FilterConfig config;
    bool is_lms = false; // LMS baseline instead of the sign update
};

struct ExperimentConfig {
    std::size_t n_taps = 128;
    std::size_t k_nonzero = 4;
    StableParams noise{1.2, 0.0, 0.6, 0.0};
    double snr_db = 5.0;
    std::size_t n_iterations = 3000;
    std::size_t n_runs = 100;
    std::uint64_t master_seed = 1;
    std::vector<AlgorithmSpec> algorithms;
};

void validate(const ExperimentConfig& c);

struct MseCurve {
    std::string label;
    std::vector<double> mse_db;
};

// Training-signal power from the generalized SNR, E_s = gamma * 10^(snr/10).
// The dispersion gamma stands in for the (possibly infinite) noise variance.
double signal_power_from_snr(const StableParams& noise, double snr_db);

// Squared-deviation trajectories ||w_hat(n) - w||^2 / ||w||^2, recorded
// before each update so entry 0 reflects the zero initial state. One
// trajectory per algorithm; all algorithms see the identical channel, input
// and noise realization. Deterministic in (config, run_index). Non-finite
// ratios (divergent baselines) are recorded as the +100 dB clip value.
std::vector<std::vector<double>> run_single(const ExperimentConfig& config,
                                            std::size_t run_index);

// 10*log10 of the across-run mean of the ratio trajectories (mean taken
// before the log). Ratios are clipped to [1e-12, 1e10], i.e. [-120, +100] dB.
MseCurve average_runs(
    const std::string& label,
    const std::vector<const std::vector<double>*>& run_ratios);

// Full experiment; runs may execute on n_threads workers, the aggregation
// order is fixed by run index so the output is identical serial vs parallel.
std::vector<MseCurve> run_experiment(const ExperimentConfig& config,
                                     unsigned n_threads = 1);

// Mean of the last `window` dB values.
double steady_state_mse(const MseCurve& curve, std::size_t window);

} // namespace apsa

#endif
