#include "doctest.h"

#include <cmath>

#include "wmorrey/weights.hpp"

using namespace wmorrey;

TEST_CASE("power weights and weighted measure") {
    const auto d = Domain::make(1, 4.0, 64);
    const auto one = power_weight(0.0, d);
    for (double v : one.samples().values()) CHECK(v == 1.0);
    CHECK(weighted_measure(one, Ball{{0, 0}, 1.0}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(weighted_measure(power_weight(1.0, d), Ball{{0, 0}, 1.0}) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(weighted_measure(power_weight(0.5, d), Ball{{0, 0}, 1.0}) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(power_weight(-1.0, d), ConfigError);
}

TEST_CASE("2D power weight measure of the unit disc") {
    const auto d = Domain::make(2, 2.0, 64);
    // int_{|x|<1} |x|^(1/2) dx = 2 pi / 2.5
    const double exact = 2.0 * std::acos(-1.0) / 2.5;
    CHECK(std::abs(weighted_measure(power_weight(0.5, d), Ball{{0, 0}, 1.0}) / exact - 1.0) < 0.01);
    // singular but integrable: |x|^(-1) has integral 2 pi over the disc
    const double sing = weighted_measure(power_weight(-1.0, d), Ball{{0, 0}, 1.0});
    CHECK(std::abs(sing / (2.0 * std::acos(-1.0)) - 1.0) < 0.01);
}

TEST_CASE("weighted measure is additive over disjoint regions") {
    const auto d = Domain::make(1, 4.0, 64);
    const auto w = power_weight(0.5, d);
    const double whole = w.measure(Ball{{0.5, 0}, 1.5});
    const double left = w.measure(Ball{{-0.25, 0}, 0.75});
    const double right = w.measure(Ball{{1.25, 0}, 0.75});
    CHECK(whole == doctest::Approx(left + right).epsilon(1e-13));
    CHECK(w.measure(Ball{{0.5, 0}, 1.0}) <= whole);
}

TEST_CASE("A_p products") {
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        const auto d = Domain::make(1, 4.0, 64);
        CHECK(ap_product(power_weight(0.0, d), p, Ball{{0.5, 0}, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
    }
    const auto d = Domain::make(1, 4.0, 256);
    CHECK(std::abs(ap_product(power_weight(0.5, d), 2.0, Ball{{0, 0}, 1.0}) / (4.0 / 3.0) - 1.0) < 0.02);
    CHECK_THROWS_AS(ap_product(power_weight(0.5, d), 0.5, Ball{{0, 0}, 1.0}), ConfigError);
}

TEST_CASE("A_2 product of |x| grows under refinement") {
    std::vector<double> levels;
    for (int N : {64, 128, 256}) {
        const auto d = Domain::make(1, 4.0, N);
        levels.push_back(ap_product(power_weight(1.0, d), 2.0, Ball{{0, 0}, 1.0}));
    }
    CHECK(levels[1] > levels[0]);
    CHECK(levels[2] > levels[1]);
}

TEST_CASE("Jensen and scale invariance") {
    const auto d = Domain::make(1, 4.0, 128);
    const auto w = Weight::sampled(sample([](const Point& x) { return 1.0 + x[0] * x[0]; }, d));
    for (double p : {1.0, 2.0, 3.0})
        for (double r : {0.1, 0.5, 2.0}) {
            const Ball b{{0.75, 0}, r};
            CHECK(ap_product(w, p, b) >= 1.0 - 1e-12);
            CHECK(ap_product(w.scaled(7.5), p, b) == doctest::Approx(ap_product(w, p, b)).epsilon(1e-13));
        }
}

TEST_CASE("A_(p,q) products and the q-th power identity") {
    const auto d = Domain::make(1, 4.0, 128);
    CHECK(apq_product(power_weight(0.0, d), 2.0, 4.0, Ball{{0, 0}, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
    const double a = apq_product(power_weight(0.125, d), 2.0, 4.0, Ball{{0, 0}, 1.0});
    const double b = apq_product(power_weight(0.125, Domain::make(1, 4.0, 256)), 2.0, 4.0, Ball{{0, 0}, 1.0});
    CHECK(std::isfinite(a));
    CHECK(std::abs(a / b - 1.0) < 0.05);
    for (double beta : {0.125, 0.25})
        for (auto [p, q] : {std::pair{2.0, 4.0}, std::pair{1.0, 2.0}}) {
            const auto w = power_weight(beta, d);
            const double pp = conjugate(p);
            const double r = p == 1.0 ? 1.0 : q / pp + 1.0;
            for (const Ball ball : {Ball{{0, 0}, 1.0}, Ball{{1.5, 0}, 0.3}, Ball{{-0.25, 0}, 2.0}})
                CHECK(std::pow(apq_product(w, p, q, ball), q) ==
                      doctest::Approx(ap_product(w.pow(q), r, ball)).epsilon(1e-10));
        }
    CHECK_THROWS_AS(apq_product(power_weight(0.1, d), 2.0, 2.0, Ball{{0, 0}, 1.0}), ConfigError);
}

TEST_CASE("A_p constants over families") {
    const auto d = Domain::make(1, 4.0, 128);
    const auto fam = ball_family(d, 8, d.cell_size(), 2.0, 6);
    const auto one = ap_constant(power_weight(0.0, d), 2.0, fam);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(one.samples == fam.size());

    const auto w = power_weight(0.5, d);
    const auto est = ap_constant(w, 2.0, fam);
    CHECK(est.value == doctest::Approx(ap_product(w, 2.0, est.witness)).epsilon(1e-12));
    const auto d2 = Domain::make(1, 4.0, 256);
    const auto fam2 = ball_family(d2, 16, d.cell_size(), 2.0, 6);
    const auto est2 = ap_constant(power_weight(0.5, d2), 2.0, fam2);
    CHECK(est2.value / est.value < 1.10);

    const auto lhs = apq_constant(power_weight(0.25, d), 2.0, 4.0, fam);
    const auto rhs = ap_constant(power_weight(0.25, d).pow(4.0), 4.0 / 2.0 + 1.0, fam);
    CHECK(std::pow(lhs.value, 4.0) == doctest::Approx(rhs.value).epsilon(1e-10));
    CHECK(lhs.witness == rhs.witness);
}

TEST_CASE("A_2 constant of |x|^3 diverges on a fixed family") {
    std::vector<double> levels;
    for (int N : {64, 128, 256}) {
        const auto d = Domain::make(1, 4.0, N);
        std::vector<Ball> balls;
        for (double r : {0.125, 0.25, 0.5, 1.0}) balls.push_back(Ball{{0, 0}, r});
        levels.push_back(ap_constant(power_weight(3.0, d), 2.0, family_from_balls(d, balls)).value);
    }
    CHECK(is_diverging(levels));
    CHECK(levels[2] >= 2.0 * levels[1]);
}

TEST_CASE("doubling ratio") {
    const auto d = Domain::make(1, 4.0, 128);
    CHECK(doubling_check(power_weight(0.0, d), 1.0, Ball{{0, 0}, 2.0}, Ball{{0, 0}, 1.0}) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(doubling_check(power_weight(0.5, d), 2.0, Ball{{0, 0}, 2.0}, Ball{{0, 0}, 1.0}) ==
          doctest::Approx(std::pow(2.0, 1.5) / 4.0).epsilon(1e-12));
    CHECK_THROWS_AS(doubling_check(power_weight(0.5, d), 2.0, Ball{{0, 0}, 1.0}, Ball{{0.5, 0}, 1.0}),
                    ConfigError);
}

TEST_CASE("divergence detection") {
    CHECK(is_diverging({1.0, 1.5, 2.5}));
    CHECK_FALSE(is_diverging({1.0, 1.5, 1.9}));
    CHECK_FALSE(is_diverging({1.0, 3.0, 2.5}));
}
