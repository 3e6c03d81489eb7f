#ifndef APSA_CHANNEL_MODEL_HPP
#define APSA_CHANNEL_MODEL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "apsa/rng.hpp"

namespace apsa {

// K-sparse FIR channel with unit l2 norm.
struct SparseChannel {
    std::vector<double> taps;
    std::vector<std::size_t> support; // indices of the nonzero taps, sorted

    std::size_t length() const { return taps.size(); }
};

// Support drawn uniformly without replacement, amplitudes i.i.d. standard
// Gaussian, then rescaled to ||taps||_2 = 1.
SparseChannel generate_channel(std::size_t n_taps, std::size_t k_nonzero,
                               Rng& rng);

// i.i.d. zero-mean Gaussian training samples with the given variance.
std::vector<double> generate_input(std::size_t n_samples, double power,
                                   Rng& rng);

// Tapped-delay-line regressor [x(n), x(n-1), ..., x(n-N+1)], zero before the
// start of the signal.
std::vector<double> regressor(std::span<const double> signal, std::size_t n,
                              std::size_t n_taps);

// Same, written into a caller-owned buffer of size n_taps.
void regressor_into(std::span<const double> signal, std::size_t n,
                    std::span<double> out);

// d = x' * taps + z
double observe(std::span<const double> x, const SparseChannel& channel,
               double z);

} // namespace apsa

#endif
