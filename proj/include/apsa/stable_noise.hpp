#ifndef APSA_STABLE_NOISE_HPP
#define APSA_STABLE_NOISE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "apsa/rng.hpp"

namespace apsa {

// Alpha-stable distribution parameters.
//   alpha in (0,2]  tail exponent (2 = Gaussian, 1 = Cauchy for beta=0)
//   beta  in [-1,1] skewness
//   gamma > 0       dispersion (plays the role of a noise-power scale)
//   delta           location
struct StableParams {
    double alpha;
    double beta;
    double gamma;
    double delta;
};

// Throws std::invalid_argument naming the offending field.
void validate(const StableParams& p);

// Characteristic function
//   phi(t) = exp{ j*delta*t - gamma*|t|^alpha * [1 + j*beta*sgn(t)*S(t,alpha)] }
// with S = tan(alpha*pi/2) for alpha != 1 and S = (2/pi)*log|t| for alpha == 1.
// The alpha==1 correction uses the (2/pi)*log|t| form so that phi is exactly
// the characteristic function of the sampler's output for every beta; the
// term vanishes for beta = 0 either way. phi(0) is defined as exactly 1.
std::complex<double> characteristic_fn(const StableParams& p, double t);

// One variate via the Chambers-Mallows-Stuck transformation. Consumes
// exactly two uniforms from rng per call. Scaling is
//   x = gamma^(1/alpha) * X + delta                         (alpha != 1)
//   x = gamma * X + (2/pi)*beta*gamma*log(gamma) + delta    (alpha == 1)
// where X is the standard variate, so the output distribution has
// characteristic function characteristic_fn(p, .).
double sample(const StableParams& p, Rng& rng);

// n independent draws, in stream order.
std::vector<double> sample_vector(const StableParams& p, std::size_t n,
                                  Rng& rng);

} // namespace apsa

#endif
