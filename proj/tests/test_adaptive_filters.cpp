#include <stdexcept>
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "apsa/adaptive_filters.hpp"
#include "apsa/channel_model.hpp"
#include "apsa/rng.hpp"
#include "apsa/stable_noise.hpp"

using apsa::FilterConfig;
using apsa::FilterState;
using apsa::Penalty;
using apsa::Rng;

TEST_CASE("init and validation") {
    FilterConfig cfg{0.1, 1e-6, Penalty::none(), 128};
    const auto st = apsa::init(cfg);
    CHECK(st.w_hat == std::vector<double>(128, 0.0));
    CHECK(st.w_prev == std::vector<double>(128, 0.0));

    cfg.n_taps = 1;
    CHECK(apsa::init(cfg).w_hat == std::vector<double>{0.0});

    CHECK_THROWS_AS(apsa::init({0.0, 1e-6, Penalty::none(), 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apsa::init({0.1, 0.0, Penalty::none(), 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apsa::validate(Penalty::rza(0.1, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(apsa::validate(Penalty::rl1(0.1, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(apsa::validate(Penalty::za(-1.0)), std::invalid_argument);
}

TEST_CASE("a priori error") {
    FilterState st{{0.0, 0.0}, {0.0, 0.0}};
    CHECK(apsa::a_priori_error(st, std::vector<double>{1, 2}, 3.0) == 3.0);
    st.w_hat = {0.5, -0.5};
    CHECK(apsa::a_priori_error(st, std::vector<double>{0, 0}, 3.0) == 3.0);
    CHECK(apsa::a_priori_error(st, std::vector<double>{1, 1}, 0.0) == 0.0);
    CHECK_THROWS_AS(apsa::a_priori_error(st, std::vector<double>{1}, 0.0),
                    std::invalid_argument);
}

TEST_CASE("variable step") {
    CHECK(apsa::variable_step(std::vector<double>{3, 4}, 0.1, 0.0) == 0.02);
    CHECK(apsa::variable_step(std::vector<double>{0, 0}, 0.1, 1e-6) ==
          doctest::Approx(1e5).epsilon(1e-12));
    CHECK(apsa::variable_step(std::vector<double>{1.0}, 0.1, 1e-6) ==
          doctest::Approx(0.1 / (1.0 + 1e-6)).epsilon(1e-15));
}

TEST_CASE("data term norm never exceeds mu") {
    Rng rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> x(16);
        for (auto& v : x) v = std::exp(10.0 * (rng.uniform01() - 0.3)) *
                              rng.gaussian();
        const double mu = 0.001 + rng.uniform01();
        double norm = 0.0;
        for (double v : x) norm += v * v;
        norm = std::sqrt(norm);
        CHECK(apsa::variable_step(x, mu, 1e-6) * norm <= mu);
    }
}

TEST_CASE("penalty term values") {
    const std::vector<double> w = {0.5};
    const std::vector<double> wp = {0.0};
    CHECK(apsa::penalty_term(Penalty::za(0.0004), w, wp)[0] ==
          doctest::Approx(0.0002).epsilon(1e-15));

    CHECK(apsa::penalty_term(Penalty::rza(0.004, 20.0),
                             std::vector<double>{0.05}, wp)[0] ==
          doctest::Approx(0.001).epsilon(1e-15));

    CHECK(apsa::penalty_term(Penalty::rl1(0.0001, 0.01),
                             std::vector<double>{-0.3},
                             std::vector<double>{-0.3})[0] ==
          doctest::Approx(-0.0001 / 2.0 / 0.31).epsilon(1e-12));

    // sgn(0) = 0 kills every penalty at the origin
    const std::vector<double> zero = {0.0};
    for (const auto& p : {Penalty::za(1.0), Penalty::rza(1.0, 20.0),
                          Penalty::rl1(1.0, 0.01)})
        CHECK(apsa::penalty_term(p, zero, zero)[0] == 0.0);
}

TEST_CASE("sign update hand examples") {
    FilterConfig cfg{0.1, 1e-300, Penalty::none(), 2};

    // e = 0 is a fixed point
    FilterState st{{0.25, -0.5}, {0.0, 0.0}};
    const std::vector<double> x = {2.0, 1.0};
    const double d = 2.0 * 0.25 - 0.5;
    auto next = apsa::update(st, cfg, x, d);
    CHECK(next.w_hat == st.w_hat);

    // single active tap
    st = apsa::init(cfg);
    next = apsa::update(st, cfg, std::vector<double>{1.0, 0.0}, 1.0);
    CHECK(next.w_hat[0] == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(next.w_hat[1] == 0.0);
    CHECK(next.w_prev == std::vector<double>{0.0, 0.0});

    // ZA penalty: inert at the zero state, shrink afterwards
    cfg.penalty = Penalty::za(0.0004);
    st = apsa::init(cfg);
    st = apsa::update(st, cfg, std::vector<double>{1.0, 0.0}, 1.0);
    CHECK(st.w_hat[0] == doctest::Approx(0.1).epsilon(1e-12));
    st = apsa::update(st, cfg, std::vector<double>{0.0, 0.0}, 0.0);
    CHECK(st.w_hat[0] == doctest::Approx(0.0998).epsilon(1e-12));
    CHECK(st.w_hat[1] == 0.0);
}

TEST_CASE("update rejects non-finite input") {
    FilterConfig cfg{0.1, 1e-6, Penalty::none(), 2};
    auto st = apsa::init(cfg);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(apsa::update(st, cfg, std::vector<double>{1.0, inf}, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(apsa::update(st, cfg, std::vector<double>{1.0, 0.0}, inf),
                    std::invalid_argument);
}

TEST_CASE("lambda=0 variants reduce exactly to the standard update") {
    const std::size_t n_taps = 8;
    FilterConfig base{0.1, 1e-6, Penalty::none(), n_taps};
    FilterConfig za = base, rza = base, rl1 = base;
    za.penalty = Penalty::za(0.0);
    rza.penalty = Penalty::rza(0.0, 20.0);
    rl1.penalty = Penalty::rl1(0.0, 0.01);

    Rng rng(99);
    auto s0 = apsa::init(base), s1 = apsa::init(za), s2 = apsa::init(rza),
         s3 = apsa::init(rl1);
    for (int n = 0; n < 200; ++n) {
        std::vector<double> x(n_taps);
        for (auto& v : x) v = rng.gaussian();
        const double d = rng.gaussian();
        apsa::update_in_place(s0, base, x, d);
        apsa::update_in_place(s1, za, x, d);
        apsa::update_in_place(s2, rza, x, d);
        apsa::update_in_place(s3, rl1, x, d);
        CHECK(s1.w_hat == s0.w_hat);
        CHECK(s2.w_hat == s0.w_hat);
        CHECK(s3.w_hat == s0.w_hat);
    }
}

TEST_CASE("RL1 penalty depends on the previous estimate only through the "
          "denominator") {
    const Penalty p = Penalty::rl1(0.0001, 0.01);
    const std::vector<double> w = {0.2};
    const double a = apsa::penalty_term(p, w, std::vector<double>{0.1})[0];
    const double b = apsa::penalty_term(p, w, std::vector<double>{0.4})[0];
    CHECK(a == doctest::Approx(0.00005 / 0.11).epsilon(1e-12));
    CHECK(b == doctest::Approx(0.00005 / 0.41).epsilon(1e-12));
    // sign comes from w_hat, not w_prev
    const double c = apsa::penalty_term(p, w, std::vector<double>{-0.4})[0];
    CHECK(c == b);
}

TEST_CASE("permutation equivariance of the update") {
    const std::size_t n = 6;
    FilterConfig cfg{0.1, 1e-6, Penalty::rl1(0.01, 0.01), n};
    Rng rng(17);
    FilterState st;
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        st.w_hat.push_back(rng.gaussian());
        st.w_prev.push_back(rng.gaussian());
        x[i] = rng.gaussian();
    }
    const double d = rng.gaussian();
    const auto plain = apsa::update(st, cfg, x, d);

    std::vector<std::size_t> perm = {3, 0, 5, 1, 4, 2};
    FilterState pst;
    std::vector<double> px(n);
    pst.w_hat.resize(n);
    pst.w_prev.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        pst.w_hat[i] = st.w_hat[perm[i]];
        pst.w_prev[i] = st.w_prev[perm[i]];
        px[i] = x[perm[i]];
    }
    const auto permuted = apsa::update(pst, cfg, px, d);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(permuted.w_hat[i] == plain.w_hat[perm[i]]);
}

TEST_CASE("LMS baseline") {
    FilterConfig cfg{0.05, 1e-6, Penalty::none(), 1};
    auto st = apsa::init(cfg);
    auto next = apsa::lms_update(st, cfg, std::vector<double>{1.0}, 1.0);
    CHECK(next.w_hat[0] == 0.05);

    // e = 0 leaves the state untouched
    next = apsa::lms_update(next, cfg, std::vector<double>{1.0}, 0.05);
    CHECK(next.w_hat[0] == 0.05);
}

TEST_CASE("LMS converges under Gaussian-only noise") {
    const std::size_t n_taps = 16;
    FilterConfig cfg{0.01, 1e-6, Penalty::none(), n_taps};
    Rng ch_rng(5), in_rng(6), nz_rng(7);
    const auto ch = apsa::generate_channel(n_taps, 4, ch_rng);
    const auto input = apsa::generate_input(10000, 1.0, in_rng);
    // alpha=2, gamma=5e-5 -> Gaussian with variance 1e-4
    const apsa::StableParams noise{2.0, 0, 5e-5, 0};
    auto st = apsa::init(cfg);
    std::vector<double> x(n_taps);
    for (std::size_t n = 0; n < input.size(); ++n) {
        apsa::regressor_into(input, n, x);
        const double d = apsa::observe(x, ch, apsa::sample(noise, nz_rng));
        apsa::lms_update_in_place(st, cfg, x, d);
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < n_taps; ++i) {
        const double diff = st.w_hat[i] - ch.taps[i];
        dev += diff * diff;
    }
    CHECK(10.0 * std::log10(dev) < -10.0);
}

TEST_CASE("penalty strength curves") {
    const std::vector<double> abc = {-0.5, 0.0, 0.5};
    CHECK(apsa::penalty_curve(Penalty::za(0.0), abc) ==
          std::vector<double>{-1.0, 0.0, 1.0});

    const std::vector<double> w05 = {0.05};
    CHECK(apsa::penalty_curve(Penalty::rza(1.0, 20.0), w05)[0] ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(apsa::penalty_curve(Penalty::rl1(1.0, 0.01), w05)[0] ==
          doctest::Approx(1.0 / 0.06).epsilon(1e-12));

    // odd symmetry and strength ordering on the full grid
    std::vector<double> grid;
    for (int i = -1000; i <= 1000; ++i)
        grid.push_back(static_cast<double>(i) / 1000.0);
    for (const auto& p : {Penalty::za(0.0), Penalty::rza(1.0, 20.0),
                          Penalty::rl1(1.0, 0.01)}) {
        const auto c = apsa::penalty_curve(p, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const std::size_t mirror = grid.size() - 1 - i;
            CHECK(std::abs(c[i] + c[mirror]) < 1e-12);
        }
    }
    const auto za = apsa::penalty_curve(Penalty::za(0.0), grid);
    const auto rza = apsa::penalty_curve(Penalty::rza(1.0, 20.0), grid);
    const auto rl1 = apsa::penalty_curve(Penalty::rl1(1.0, 0.01), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] == 0.0) continue;
        CHECK(std::abs(rl1[i]) > std::abs(rza[i]));
        CHECK((std::abs(rl1[i]) > std::abs(za[i])) ==
              (std::abs(grid[i]) < 0.99));
    }
}
