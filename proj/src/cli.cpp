#include "apsa/cli.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "apsa/adaptive_filters.hpp"
#include "apsa/mc_harness.hpp"

namespace apsa {

namespace fs = std::filesystem;

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path);
    for (const auto& l : lines) out << l << "\n";
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

} // namespace

int cmd_simulate(const SimulateOptions& opts) {
    KeyValueMap kv;
    ExperimentConfig cfg;
    KeyValueMap resolved;
    try {
        if (opts.config_path && opts.preset)
            throw std::invalid_argument(
                "config: --config and --preset are mutually exclusive");
        if (opts.config_path)
            kv = load_config_file(*opts.config_path);
        else if (opts.preset)
            kv = preset_config(*opts.preset);
        else
            kv = default_config();
        apply_overrides(kv, opts.overrides);
        cfg = build_experiment(kv, &resolved);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<MseCurve> curves = run_experiment(cfg, opts.n_threads);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    try {
        fs::create_directories(opts.out_dir);
        const std::string csv_path =
            (fs::path(opts.out_dir) / (opts.name + "_mse.csv")).string();
        const std::string manifest_path =
            (fs::path(opts.out_dir) / (opts.name + "_manifest.json")).string();

        std::vector<std::string> lines;
        std::string header = "iteration";
        for (const auto& c : curves) header += "," + c.label;
        lines.push_back(header);
        for (std::size_t n = 0; n < cfg.n_iterations; ++n) {
            std::string row = std::to_string(n);
            for (const auto& c : curves)
                row += "," + format_number(c.mse_db[n]);
            lines.push_back(std::move(row));
        }
        write_lines(csv_path, lines);

        nlohmann::json manifest;
        manifest["artifact_version"] = "1.0.0";
        manifest["master_seed"] = cfg.master_seed;
        manifest["config"] = resolved;
        manifest["outputs"] = {csv_path};
        manifest["duration_seconds"] = seconds;
        std::ofstream mout(manifest_path, std::ios::binary);
        if (!mout) throw std::ios_base::failure("cannot open " + manifest_path);
        mout << manifest.dump(2) << "\n";
        if (!mout) throw std::ios_base::failure("write failed");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_noise_check(const NoiseCheckOptions& opts) {
    std::vector<double> samples;
    try {
        validate(opts.params);
        Rng rng(opts.seed);
        samples = sample_vector(opts.params, opts.n_samples, rng);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    double max_err = 0.0;
    std::vector<std::string> cf_lines = {
        "t,ecf_real,ecf_imag,cf_real,cf_imag,abs_error"};
    for (double t : opts.t_grid) {
        std::complex<double> ecf(0.0, 0.0);
        for (double s : samples)
            ecf += std::complex<double>(std::cos(t * s), std::sin(t * s));
        ecf /= static_cast<double>(samples.size());
        const std::complex<double> cf = characteristic_fn(opts.params, t);
        const double err = std::abs(ecf - cf);
        max_err = std::max(max_err, err);
        cf_lines.push_back(format_number(t) + "," + format_number(ecf.real()) +
                           "," + format_number(ecf.imag()) + "," +
                           format_number(cf.real()) + "," +
                           format_number(cf.imag()) + "," +
                           format_number(err));
    }

    // histogram over the central region (heavy tails would swamp the bins)
    const double lo = -10.0, hi = 10.0;
    std::vector<std::size_t> counts(opts.hist_bins, 0);
    for (double s : samples) {
        if (s < lo || s >= hi) continue;
        const auto b = static_cast<std::size_t>((s - lo) / (hi - lo) *
                                                static_cast<double>(
                                                    opts.hist_bins));
        ++counts[std::min(b, opts.hist_bins - 1)];
    }
    std::vector<std::string> hist_lines = {"bin_center,count"};
    const double bin_w = (hi - lo) / static_cast<double>(opts.hist_bins);
    for (std::size_t b = 0; b < opts.hist_bins; ++b)
        hist_lines.push_back(
            format_number(lo + (static_cast<double>(b) + 0.5) * bin_w) + "," +
            std::to_string(counts[b]));

    try {
        fs::create_directories(opts.out_dir);
        write_lines((fs::path(opts.out_dir) / "noise_cf.csv").string(),
                    cf_lines);
        write_lines((fs::path(opts.out_dir) / "noise_hist.csv").string(),
                    hist_lines);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }

    std::cout << "max CF error " << format_number(max_err) << " (threshold "
              << format_number(opts.threshold) << ")\n";
    return max_err < opts.threshold ? kExitOk : kExitCheckFailed;
}

int cmd_penalty_curve(const std::string& out_path) {
    const Penalty za = Penalty::za(0.0);
    const Penalty rza = Penalty::rza(1.0, 20.0);
    const Penalty rl1 = Penalty::rl1(1.0, 0.01);

    std::vector<double> grid;
    for (int i = -1000; i <= 1000; ++i)
        grid.push_back(static_cast<double>(i) / 1000.0);

    const auto za_c = penalty_curve(za, grid);
    const auto rza_c = penalty_curve(rza, grid);
    const auto rl1_c = penalty_curve(rl1, grid);

    std::vector<std::string> lines = {"w,zeta_za,zeta_rza,zeta_rl1"};
    for (std::size_t i = 0; i < grid.size(); ++i)
        lines.push_back(format_number(grid[i]) + "," +
                        format_number(za_c[i]) + "," +
                        format_number(rza_c[i]) + "," +
                        format_number(rl1_c[i]));
    try {
        if (const auto parent = fs::path(out_path).parent_path();
            !parent.empty())
            fs::create_directories(parent);
        write_lines(out_path, lines);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

} // namespace apsa
