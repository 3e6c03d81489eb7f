#include "apsa/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace apsa {

SparseChannel generate_channel(std::size_t n_taps, std::size_t k_nonzero,
                               Rng& rng) {
    if (k_nonzero == 0 || k_nonzero > n_taps)
        throw std::invalid_argument(
            "generate_channel: require 1 <= k_nonzero <= n_taps");

    // partial Fisher-Yates for the support
    std::vector<std::size_t> idx(n_taps);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < k_nonzero; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(rng.uniform01() *
                                         static_cast<double>(n_taps - i));
        std::swap(idx[i], idx[std::min(j, n_taps - 1)]);
    }
    std::vector<std::size_t> support(idx.begin(),
                                     idx.begin() + static_cast<long>(k_nonzero));
    std::sort(support.begin(), support.end());

    SparseChannel ch;
    ch.support = std::move(support);
    for (;;) {
        ch.taps.assign(n_taps, 0.0);
        double norm_sq = 0.0;
        for (std::size_t i : ch.support) {
            const double g = rng.gaussian();
            ch.taps[i] = g;
            norm_sq += g * g;
        }
        if (norm_sq > 0.0) {
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (std::size_t i : ch.support) ch.taps[i] *= inv;
            return ch;
        }
        // all-zero draw: redraw amplitudes on the same support
    }
}

std::vector<double> generate_input(std::size_t n_samples, double power,
                                   Rng& rng) {
    if (!(power > 0.0))
        throw std::invalid_argument("generate_input: power must be > 0");
    const double sd = std::sqrt(power);
    std::vector<double> out(n_samples);
    for (auto& v : out) v = sd * rng.gaussian();
    return out;
}

void regressor_into(std::span<const double> signal, std::size_t n,
                    std::span<double> out) {
    if (n >= signal.size())
        throw std::out_of_range("regressor: sample index out of range");
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (n >= i) ? signal[n - i] : 0.0;
}

std::vector<double> regressor(std::span<const double> signal, std::size_t n,
                              std::size_t n_taps) {
    std::vector<double> out(n_taps);
    regressor_into(signal, n, out);
    return out;
}

double observe(std::span<const double> x, const SparseChannel& channel,
               double z) {
    if (x.size() != channel.taps.size())
        throw std::invalid_argument("observe: regressor/channel length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * channel.taps[i];
    return acc + z;
}

} // namespace apsa
