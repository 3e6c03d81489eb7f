// Command-line front end for the sparse-channel sign-algorithm simulator.

#include <CLI11.hpp>

#include "apsa/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Robust sparse adaptive channel estimation simulator "
                 "(VSS-APSA family under alpha-stable noise)"};
    app.require_subcommand(1);

    // simulate
    apsa::SimulateOptions sim;
    std::string sim_config, sim_preset;
    std::uint64_t sim_seed = 0;
    std::uint64_t sim_runs = 0, sim_iters = 0;
    auto* simulate =
        app.add_subcommand("simulate", "Run a Monte Carlo MSE experiment");
    simulate->add_option("--config", sim_config,
                         "key=value config file (see presets/)");
    simulate->add_option("--preset", sim_preset,
                         "built-in preset: fig3..fig8");
    auto* seed_opt = simulate->add_option("--seed", sim_seed, "master seed");
    auto* runs_opt =
        simulate->add_option("--runs", sim_runs, "Monte Carlo run count");
    auto* iters_opt = simulate->add_option("--iterations", sim_iters,
                                           "iterations per run");
    simulate->add_option("--threads", sim.n_threads,
                         "worker thread cap (output is thread-invariant)");
    simulate->add_option("--out-dir", sim.out_dir, "output directory");
    simulate->add_option("--name", sim.name, "output base name");
    simulate->add_option("--set", sim.overrides,
                         "key=value override, repeatable");

    // noise-check
    apsa::NoiseCheckOptions nc;
    auto* noise =
        app.add_subcommand("noise-check",
                           "Validate the alpha-stable sampler against its "
                           "characteristic function");
    noise->add_option("--alpha", nc.params.alpha, "tail exponent (0,2]");
    noise->add_option("--beta", nc.params.beta, "skewness [-1,1]");
    noise->add_option("--gamma", nc.params.gamma, "dispersion > 0");
    noise->add_option("--delta", nc.params.delta, "location");
    noise->add_option("--samples", nc.n_samples, "sample count");
    noise->add_option("--t-grid", nc.t_grid, "CF evaluation points");
    noise->add_option("--threshold", nc.threshold, "max CF error allowed");
    noise->add_option("--seed", nc.seed, "sampler seed");
    noise->add_option("--out-dir", nc.out_dir, "output directory");

    // penalty-curve
    std::string pc_out = "penalty_curve.csv";
    auto* pc = app.add_subcommand(
        "penalty-curve", "Write the sparse penalty strength curves");
    pc->add_option("--out", pc_out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : apsa::kExitConfig;
    }

    if (simulate->parsed()) {
        if (!sim_config.empty()) sim.config_path = sim_config;
        if (!sim_preset.empty()) sim.preset = sim_preset;
        if (*seed_opt)
            sim.overrides.push_back("seed=" + std::to_string(sim_seed));
        if (*runs_opt)
            sim.overrides.push_back("runs=" + std::to_string(sim_runs));
        if (*iters_opt)
            sim.overrides.push_back("iterations=" +
                                    std::to_string(sim_iters));
        return apsa::cmd_simulate(sim);
    }
    if (noise->parsed()) return apsa::cmd_noise_check(nc);
    if (pc->parsed()) return apsa::cmd_penalty_curve(pc_out);
    return apsa::kExitConfig;
}
