#ifndef APSA_ADAPTIVE_FILTERS_HPP
#define APSA_ADAPTIVE_FILTERS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace apsa {

// Sparsity penalty attached to the sign-algorithm update. The per-component
// term subtracted from the weights is
//   None : 0
//   ZA   : (lambda/2) * sgn(w)
//   RZA  : (lambda/2) * sgn(w) / (1 + eps*|w|)
//   RL1  : (lambda/2) * sgn(w) / (delta + |w_prev|)
struct Penalty {
    enum class Kind { None, ZA, RZA, RL1 };

    Kind kind = Kind::None;
    double lambda = 0.0;
    double eps = 0.0;   // RZA reweighting factor
    double delta = 0.0; // RL1 denominator floor

    static Penalty none() { return {}; }
    static Penalty za(double lambda) { return {Kind::ZA, lambda, 0.0, 0.0}; }
    static Penalty rza(double lambda, double eps) {
        return {Kind::RZA, lambda, eps, 0.0};
    }
    static Penalty rl1(double lambda, double delta) {
        return {Kind::RL1, lambda, 0.0, delta};
    }
};

void validate(const Penalty& p);

struct FilterConfig {
    double mu = 0.1;      // initial step size
    double delta0 = 1e-6; // step-size regularizer
    Penalty penalty;
    std::size_t n_taps = 0;
};

void validate(const FilterConfig& c);

// Weight estimate plus the previous-iteration estimate (RL1 reweighting lag).
struct FilterState {
    std::vector<double> w_hat;
    std::vector<double> w_prev;
};

FilterState init(const FilterConfig& config);

inline double sgn(double v) { return (v > 0.0) - (v < 0.0); }

// e(n) = d - x' * w_hat
double a_priori_error(const FilterState& state, std::span<const double> x,
                      double d);

// mu(n) = mu / (||x||_2 + delta0); the norm is not squared.
double variable_step(std::span<const double> x, double mu, double delta0);

// The vector subtracted from w_hat by update(); see Penalty.
std::vector<double> penalty_term(const Penalty& kind,
                                 std::span<const double> w_hat,
                                 std::span<const double> w_prev);

// One sign-algorithm step:
//   w_hat += variable_step(x) * x * sgn(e) - penalty_term(...)
//   w_prev = old w_hat
// Uses the a priori error sign. Throws on non-finite x or d; the updated
// state is checked finite.
void update_in_place(FilterState& state, const FilterConfig& config,
                     std::span<const double> x, double d);
FilterState update(const FilterState& state, const FilterConfig& config,
                   std::span<const double> x, double d);

// Classical LMS baseline, w_hat += mu * e * x. No divergence guard; the
// harness clips its reported curve instead.
void lms_update_in_place(FilterState& state, const FilterConfig& config,
                         std::span<const double> x, double d);
FilterState lms_update(const FilterState& state, const FilterConfig& config,
                       std::span<const double> x, double d);

// Pure penalty strength (no lambda/2 scale) evaluated pointwise on a grid;
// RL1 uses w_prev = w (steady-state self-reweighting).
std::vector<double> penalty_curve(const Penalty& kind,
                                  std::span<const double> grid);

} // namespace apsa

#endif
