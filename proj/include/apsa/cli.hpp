#ifndef APSA_CLI_HPP
#define APSA_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "apsa/config.hpp"
#include "apsa/stable_noise.hpp"

namespace apsa {

// exit-code contract shared by all subcommands
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1; // noise-check threshold exceeded
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

struct SimulateOptions {
    std::optional<std::string> config_path;
    std::optional<std::string> preset;
    std::vector<std::string> overrides; // key=value
    std::string out_dir = ".";
    std::string name = "experiment"; // CSV/manifest base name
    unsigned n_threads = 1;
};

// Runs the experiment and writes <name>_mse.csv plus <name>_manifest.json
// into out_dir. Errors are reported on stderr.
int cmd_simulate(const SimulateOptions& opts);

struct NoiseCheckOptions {
    StableParams params{1.2, 0.0, 0.6, 0.0};
    std::size_t n_samples = 100000;
    std::vector<double> t_grid = {0.5, 1.0, 2.0};
    double threshold = 0.02; // max |empirical CF - analytic CF|
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    std::size_t hist_bins = 200;
};

// Writes noise_cf.csv (t, empirical and analytic CF, abs error) and
// noise_hist.csv (bin center, count) into out_dir; exit 0 iff the max CF
// error stays below the threshold.
int cmd_noise_check(const NoiseCheckOptions& opts);

// Penalty strength curves on a 1e-3 grid over [-1,1]:
// columns w, zeta_za, zeta_rza (eps=20), zeta_rl1 (delta=0.01).
int cmd_penalty_curve(const std::string& out_path);

// Full-precision decimal formatting used for every CSV number (%.17g),
// exposed for tests that freeze byte-level expectations.
std::string format_number(double v);

} // namespace apsa

#endif
