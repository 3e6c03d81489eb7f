#ifndef APSA_RNG_HPP
#define APSA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace apsa {

// splitmix64 finalizer; used for seed derivation only.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic child seed for (master, run, stream). Streams 0..2 are
// channel, input and noise within one Monte Carlo run.
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t run,
                                std::uint64_t stream) {
    return mix64(mix64(master ^ mix64(run + 1)) ^ mix64(stream + 0x100));
}

// Uniform/Gaussian source with a fixed draw count per call: uniform01()
// consumes exactly one engine output, gaussian() exactly two. This keeps
// streams reproducible across platforms (std::*_distribution does not
// guarantee a draw count).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // open interval (0,1)
    double uniform01() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller (no caching of the second value)
    double gaussian() {
        double u1 = uniform01();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

} // namespace apsa

#endif
