#include "apsa/stable_noise.hpp"

#include <cmath>
#include <stdexcept>

namespace apsa {

namespace {
constexpr double kPi = 3.14159265358979323846;

double sgn(double v) { return (v > 0.0) - (v < 0.0); }
} // namespace

void validate(const StableParams& p) {
    if (!(p.alpha > 0.0 && p.alpha <= 2.0))
        throw std::invalid_argument("StableParams: alpha must be in (0, 2]");
    if (!(p.beta >= -1.0 && p.beta <= 1.0))
        throw std::invalid_argument("StableParams: beta must be in [-1, 1]");
    if (!(p.gamma > 0.0))
        throw std::invalid_argument("StableParams: gamma must be > 0");
    if (!std::isfinite(p.delta))
        throw std::invalid_argument("StableParams: delta must be finite");
}

std::complex<double> characteristic_fn(const StableParams& p, double t) {
    validate(p);
    if (!std::isfinite(t))
        throw std::invalid_argument("characteristic_fn: t must be finite");
    if (t == 0.0) return {1.0, 0.0};

    const double at = std::abs(t);
    double s;
    if (p.alpha == 1.0)
        s = (2.0 / kPi) * std::log(at);
    else
        s = std::tan(p.alpha * kPi / 2.0);

    const double scale = p.gamma * std::pow(at, p.alpha);
    // exponent = j*delta*t - scale * (1 + j*beta*sgn(t)*s)
    const std::complex<double> expo(-scale,
                                    p.delta * t - scale * p.beta * sgn(t) * s);
    return std::exp(expo);
}

double sample(const StableParams& p, Rng& rng) {
    validate(p);

    // exactly two uniforms per variate
    const double v = kPi * (rng.uniform01() - 0.5); // U(-pi/2, pi/2)
    const double w = -std::log(rng.uniform01());    // Exp(1)

    if (p.alpha == 1.0) {
        const double b = p.beta;
        const double half_pi = kPi / 2.0;
        const double x = (2.0 / kPi) *
                         ((half_pi + b * v) * std::tan(v) -
                          b * std::log((half_pi * w * std::cos(v)) /
                                       (half_pi + b * v)));
        return p.gamma * x +
               (2.0 / kPi) * b * p.gamma * std::log(p.gamma) + p.delta;
    }

    // The textbook Chambers-Mallows-Stuck variate has characteristic
    // function exp{-|t|^alpha (1 - j*beta*sgn(t)*tan(alpha*pi/2))}; our
    // convention carries +j, so the skewness is negated here.
    const double b = -p.beta;
    const double a = p.alpha;
    const double ta = std::tan(a * kPi / 2.0);
    const double bb = std::atan(b * ta) / a;
    const double ss = std::pow(1.0 + b * b * ta * ta, 1.0 / (2.0 * a));
    const double x = ss * std::sin(a * (v + bb)) /
                     std::pow(std::cos(v), 1.0 / a) *
                     std::pow(std::cos(v - a * (v + bb)) / w, (1.0 - a) / a);
    return std::pow(p.gamma, 1.0 / a) * x + p.delta;
}

std::vector<double> sample_vector(const StableParams& p, std::size_t n,
                                  Rng& rng) {
    validate(p);
    std::vector<double> out(n);
    for (auto& v : out) v = sample(p, rng);
    return out;
}

} // namespace apsa
