#include "apsa/adaptive_filters.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace apsa {

void validate(const Penalty& p) {
    if (p.lambda < 0.0)
        throw std::invalid_argument("Penalty: lambda must be >= 0");
    if (p.kind == Penalty::Kind::RZA && !(p.eps > 0.0))
        throw std::invalid_argument("Penalty: eps must be > 0 for RZA");
    if (p.kind == Penalty::Kind::RL1 && !(p.delta > 0.0))
        throw std::invalid_argument("Penalty: delta must be > 0 for RL1");
}

void validate(const FilterConfig& c) {
    if (!(c.mu > 0.0))
        throw std::invalid_argument("FilterConfig: mu must be > 0");
    if (!(c.delta0 > 0.0))
        throw std::invalid_argument("FilterConfig: delta0 must be > 0");
    if (c.n_taps == 0)
        throw std::invalid_argument("FilterConfig: n_taps must be >= 1");
    validate(c.penalty);
}

FilterState init(const FilterConfig& config) {
    validate(config);
    return {std::vector<double>(config.n_taps, 0.0),
            std::vector<double>(config.n_taps, 0.0)};
}

double a_priori_error(const FilterState& state, std::span<const double> x,
                      double d) {
    if (x.size() != state.w_hat.size())
        throw std::invalid_argument("a_priori_error: dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * state.w_hat[i];
    return d - acc;
}

double variable_step(std::span<const double> x, double mu, double delta0) {
    double norm_sq = 0.0;
    for (double v : x) norm_sq += v * v;
    return mu / (std::sqrt(norm_sq) + delta0);
}

namespace {

double penalty_at(const Penalty& p, double w, double w_prev) {
    switch (p.kind) {
    case Penalty::Kind::None:
        return 0.0;
    case Penalty::Kind::ZA:
        return 0.5 * p.lambda * sgn(w);
    case Penalty::Kind::RZA:
        return 0.5 * p.lambda * sgn(w) / (1.0 + p.eps * std::abs(w));
    case Penalty::Kind::RL1:
        return 0.5 * p.lambda * sgn(w) / (p.delta + std::abs(w_prev));
    }
    return 0.0;
}

// strength without the lambda/2 scale, RL1 self-reweighted
double strength_at(const Penalty& p, double w) {
    switch (p.kind) {
    case Penalty::Kind::None:
        return 0.0;
    case Penalty::Kind::ZA:
        return sgn(w);
    case Penalty::Kind::RZA:
        return sgn(w) / (1.0 + p.eps * std::abs(w));
    case Penalty::Kind::RL1:
        return sgn(w) / (p.delta + std::abs(w));
    }
    return 0.0;
}

} // namespace

std::vector<double> penalty_term(const Penalty& kind,
                                 std::span<const double> w_hat,
                                 std::span<const double> w_prev) {
    validate(kind);
    if (w_hat.size() != w_prev.size())
        throw std::invalid_argument("penalty_term: dimension mismatch");
    std::vector<double> out(w_hat.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = penalty_at(kind, w_hat[i], w_prev[i]);
    return out;
}

void update_in_place(FilterState& state, const FilterConfig& config,
                     std::span<const double> x, double d) {
    if (x.size() != state.w_hat.size())
        throw std::invalid_argument("update: dimension mismatch");
    if (!std::isfinite(d))
        throw std::invalid_argument("update: non-finite observation");
    for (double v : x)
        if (!std::isfinite(v))
            throw std::invalid_argument("update: non-finite regressor");

    const double e = a_priori_error(state, x, d);
    double norm_sq = 0.0;
    for (double v : x) norm_sq += v * v;
    const double x_norm = std::sqrt(norm_sq);
    const double step = config.mu / (x_norm + config.delta0) * sgn(e);
    // data-term bound: mu(n)*||x|| <= mu since ||x||/(||x||+delta0) < 1
    assert(std::abs(step) * x_norm <= config.mu);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double w_old = state.w_hat[i];
        state.w_hat[i] =
            w_old + step * x[i] -
            penalty_at(config.penalty, w_old, state.w_prev[i]);
        state.w_prev[i] = w_old;
        if (!std::isfinite(state.w_hat[i]))
            throw std::runtime_error("update: state became non-finite");
    }
}

FilterState update(const FilterState& state, const FilterConfig& config,
                   std::span<const double> x, double d) {
    FilterState next = state;
    update_in_place(next, config, x, d);
    return next;
}

void lms_update_in_place(FilterState& state, const FilterConfig& config,
                         std::span<const double> x, double d) {
    if (x.size() != state.w_hat.size())
        throw std::invalid_argument("lms_update: dimension mismatch");
    const double e = a_priori_error(state, x, d);
    for (std::size_t i = 0; i < x.size(); ++i) {
        state.w_prev[i] = state.w_hat[i];
        state.w_hat[i] += config.mu * e * x[i];
    }
}

FilterState lms_update(const FilterState& state, const FilterConfig& config,
                       std::span<const double> x, double d) {
    FilterState next = state;
    lms_update_in_place(next, config, x, d);
    return next;
}

std::vector<double> penalty_curve(const Penalty& kind,
                                  std::span<const double> grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = strength_at(kind, grid[i]);
    return out;
}

} // namespace apsa
