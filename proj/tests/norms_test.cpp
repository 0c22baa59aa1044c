#include "doctest.h"

#include <cmath>
#include <random>

#include "wmorrey/norms.hpp"

using namespace wmorrey;

namespace {

SampledFunction random_function(const Domain& d, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<double> v(d.cell_count());
    for (auto& x : v) x = g(rng);
    return {d, v};
}

}  // namespace

TEST_CASE("psi catalog") {
    CHECK(psi_catalog("power", {0.5})({0, 0}, 4.0) == doctest::Approx(0.5));
    const auto c1 = psi_catalog("counterexample-1", {});
    CHECK(c1({0, 0}, 1.0 / 3.0) == 3.0);
    CHECK(c1({0, 0}, 0.5) == 2.0);
    CHECK(c1({0, 0}, 0.4) == doctest::Approx(0.4 * std::exp(-0.4)));
    CHECK(c1.regular({0, 0}, 1.0 / 3.0) == doctest::Approx(std::exp(-1.0 / 3.0) / 3.0));
    CHECK(psi_catalog("counterexample-2", {})({0, 0}, 0.0) == 1.0);
    CHECK(psi_catalog("classical", {1, 2, 4})({0, 0}, 8.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(psi_catalog("phi", {}), ConfigError);
    CHECK_THROWS_AS(psi_catalog("power", {}), ConfigError);
    const auto custom = PsiFunction::custom("exp(-r) * (1 + a^2)", 1, true);
    CHECK(custom({2.0, 0}, 1.0) == doctest::Approx(5.0 * std::exp(-1.0)));
    CHECK(*PsiFunction::power(2.0).tail({0, 0}, 10.0) == doctest::Approx(0.005));
    CHECK(std::isinf(*PsiFunction::power(0.0).tail({0, 0}, 10.0)));
}

TEST_CASE("weighted Lebesgue norms") {
    const auto d = Domain::make(1, 4.0, 64);
    const auto one = sample(tags::Constant{1.0}, d);
    CHECK(weighted_lp_norm(one, power_weight(0.0, d), 2.0, Ball{{0, 0}, 1.0}) == doctest::Approx(std::sqrt(2.0)));
    const auto half = sample([](const Point& x) { return (x[0] >= 0 && x[0] <= 1) ? 1.0 : 0.0; }, d);
    CHECK(weighted_lp_norm(half, power_weight(0.0, d), 1.0, Ball{{0, 0}, 2.0}) == doctest::Approx(1.0));
    CHECK(weighted_lp_norm(one, power_weight(0.5, d), 2.0, Ball{{0, 0}, 1.0}) ==
          doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("weak norms") {
    const auto d = Domain::make(1, 4.0, 8);
    const auto w = power_weight(0.0, d);
    std::vector<double> v(8, 0.0);
    v[2] = v[3] = v[4] = 1.0;
    v[5] = 2.0;
    CHECK(weighted_weak_lp_norm(SampledFunction(d, v), w, 1.0, Ball{{0, 0}, 2.0}) == doctest::Approx(4.0));

    const auto dd = Domain::make(1, 4.0, 64);
    const auto ww = power_weight(0.5, dd);
    const auto chi = sample(tags::Indicator{1.0}, dd);
    const Ball b{{0.5, 0}, 1.5};
    CHECK(weighted_weak_lp_norm(chi, ww, 2.0, b) ==
          doctest::Approx(std::sqrt(ww.integral(chi.values(), b))).epsilon(1e-13));
    for (unsigned s = 0; s < 10; ++s) {
        const auto f = random_function(dd, s);
        for (double p : {1.0, 2.0, 3.5})
            CHECK(weighted_weak_lp_norm(f, ww, p, b) <= weighted_lp_norm(f, ww, p, b) * (1 + 1e-12));
    }
}

TEST_CASE("generalized weighted Morrey norms") {
    const auto d = Domain::make(1, 4.0, 128);
    const auto fam = ball_family(d, 4, d.cell_size(), 2.0, 6);
    const auto one = power_weight(0.0, d);
    const auto chi = sample(tags::Indicator{1.0}, d);
    const auto res = gw_morrey_norm(chi, one, 2.0, PsiFunction::classical(1, 2.0, 2.0), fam);
    // with q = p the classical Morrey norm is the L^p norm: sqrt(2) for chi_[-1,1]
    CHECK(res.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(d.max_radius(res.witness.center) >= res.witness.radius);

    const auto psi = PsiFunction::power(0.5);
    const auto c = sample(tags::Constant{-1.5}, d);
    double expect = 0.0;
    for (const auto& b : fam.balls) expect = std::max(expect, 1.0 / psi(b.center, b.radius));
    CHECK(gw_morrey_norm(c, power_weight(0.5, d), 2.0, psi, fam).value == doctest::Approx(1.5 * expect).epsilon(1e-12));
    CHECK(gw_weak_morrey_norm(c, power_weight(0.5, d), 2.0, psi, fam).value ==
          doctest::Approx(1.5 * expect).epsilon(1e-12));

    const auto w = power_weight(0.5, d);
    for (unsigned s = 0; s < 5; ++s) {
        const auto f = random_function(d, 100 + s);
        const auto g = random_function(d, 200 + s);
        const auto strong = gw_morrey_norm(f, w, 2.0, psi, fam);
        const auto weak = gw_weak_morrey_norm(f, w, 2.0, psi, fam);
        CHECK(weak.value <= strong.value * (1 + 1e-12));
        CHECK(gw_morrey_norm(f.scaled(-3.0), w, 2.0, psi, fam).value == doctest::Approx(3.0 * strong.value).epsilon(1e-13));
        const double sum = gw_morrey_norm(combine(1.0, f, 1.0, g), w, 2.0, psi, fam).value;
        CHECK(sum <= strong.value + gw_morrey_norm(g, w, 2.0, psi, fam).value + 1e-12);
        const double again = weighted_lp_norm(f, w, 2.0, strong.witness) /
                             std::sqrt(w.measure(strong.witness)) / psi(strong.witness.center, strong.witness.radius);
        CHECK(again == doctest::Approx(strong.value).epsilon(1e-12));
    }
}

TEST_CASE("Morrey norms are monotone in the family and antitone in psi") {
    const auto d = Domain::make(1, 4.0, 128);
    const auto fam = ball_family(d, 4, d.cell_size(), 2.0, 6);
    std::vector<Ball> part(fam.balls.begin(), fam.balls.begin() + static_cast<long>(fam.size() / 2));
    const auto sub = family_from_balls(d, part);
    const auto w = power_weight(0.5, d);
    const auto f = random_function(d, 42);
    const auto psi = PsiFunction::power(0.5);
    CHECK(gw_morrey_norm(f, w, 2.0, psi, sub).value <= gw_morrey_norm(f, w, 2.0, psi, fam).value);
    // on radii <= 1, r^-0.5 <= r^-0.75
    std::vector<Ball> small;
    for (const auto& b : fam.balls)
        if (b.radius <= 1.0) small.push_back(b);
    const auto fs = family_from_balls(d, small);
    CHECK(gw_morrey_norm(f, w, 2.0, PsiFunction::power(0.75), fs).value <=
          gw_morrey_norm(f, w, 2.0, PsiFunction::power(0.5), fs).value);
}
