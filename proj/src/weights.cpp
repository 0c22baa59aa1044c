#include "wmorrey/weights.hpp"

#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "wmorrey/quadrature.hpp"

namespace wmorrey {

namespace {

// Mean of scale*|x|^e over each cell. Cells touching the origin fall back to
// the midpoint value when the exponent is not locally integrable there.
std::vector<double> power_means(const Domain& d, double e, double scale) {
    std::vector<double> means(d.cell_count());
    const int N = d.points();
    const double h = d.cell_size();
    if (e == 0.0) {
        std::fill(means.begin(), means.end(), scale);
        return means;
    }
    if (d.dimension() == 1) {
        for (int i = 0; i < N; ++i) {
            const double x0 = d.edge(i), x1 = d.edge(i + 1);
            const bool touches = x0 <= 0.0 && x1 >= 0.0;
            if (touches && e <= -1.0)
                means[static_cast<std::size_t>(i)] = scale * std::pow(std::abs(d.center_coord(i)), e);
            else
                means[static_cast<std::size_t>(i)] = scale * quad::power_interval(x0, x1, e) / h;
        }
        return means;
    }
    for (int j = 0; j < N; ++j) {
        const double y0 = d.edge(j), y1 = d.edge(j + 1);
        for (int i = 0; i < N; ++i) {
            const double x0 = d.edge(i), x1 = d.edge(i + 1);
            const bool touches = x0 <= 0.0 && x1 >= 0.0 && y0 <= 0.0 && y1 >= 0.0;
            double m;
            if (touches && e <= -2.0) {
                const double cx = d.center_coord(i), cy = d.center_coord(j);
                m = std::pow(cx * cx + cy * cy, 0.5 * e);
            } else {
                m = quad::power_rect(x0, x1, y0, y1, e) / (h * h);
            }
            means[d.index(i, j)] = scale * m;
        }
    }
    return means;
}

SampledFunction power_samples(const Domain& d, double e, double scale) {
    const int n = d.dimension();
    return sample([=](const Point& x) { return scale * std::pow(norm(x, n), e); }, d,
                  tags::Power{e});
}

}  // namespace

Weight::Weight(SampledFunction samples, std::vector<double> means, std::optional<double> exponent,
               double scale)
    : samples_(std::move(samples)),
      means_(std::move(means)),
      exponent_(exponent),
      scale_(scale),
      integrator_(std::make_shared<BallIntegrator>(samples_.domain(), means_)) {
    for (std::size_t i = 0; i < means_.size(); ++i)
        if (!(samples_[i] > 0.0) || !(means_[i] > 0.0) || !std::isfinite(means_[i]))
            throw ConfigError(fmt::format("weight is not strictly positive and finite at cell {}", i));
}

Weight Weight::constant(const Domain& domain, double value) {
    if (!(value > 0.0)) throw ConfigError(fmt::format("constant weight must be positive, got {}", value));
    return Weight(sample(tags::Constant{value}, domain), std::vector<double>(domain.cell_count(), value),
                  0.0, value);
}

Weight Weight::power(const Domain& domain, double beta, double scale) {
    if (!(beta > -domain.dimension()))
        throw ConfigError(fmt::format(
            "power weight |x|^{} is not locally integrable in dimension {} (need beta > -n)", beta,
            domain.dimension()));
    if (!(scale > 0.0)) throw ConfigError("power weight scale must be positive");
    return Weight(power_samples(domain, beta, scale), power_means(domain, beta, scale), beta, scale);
}

Weight Weight::sampled(const SampledFunction& values) {
    return Weight(values, std::vector<double>(values.values().begin(), values.values().end()),
                  std::nullopt, 1.0);
}

Weight Weight::pow(double s) const {
    if (exponent_) {
        const double e = *exponent_ * s;
        const double c = std::pow(scale_, s);
        if (e == 0.0) return Weight(sample(tags::Constant{c}, domain()),
                                    std::vector<double>(domain().cell_count(), c), 0.0, c);
        return Weight(power_samples(domain(), e, c), power_means(domain(), e, c), e, c);
    }
    std::vector<double> v(samples_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::pow(samples_[i], s);
    return Weight::sampled(SampledFunction(domain(), std::move(v)));
}

Weight Weight::scaled(double c) const {
    if (!(c > 0.0)) throw ConfigError("weight scale factor must be positive");
    std::vector<double> m(means_);
    for (auto& x : m) x *= c;
    return Weight(samples_.scaled(c), std::move(m), exponent_, scale_ * c);
}

double Weight::measure(const Ball& ball) const { return integrator_->integral(ball); }

double Weight::integral(std::span<const double> g, const Ball& ball) const {
    if (g.size() != means_.size()) throw ConfigError("weighted integral: size mismatch");
    double s = 0.0;
    for (const auto& c : cover(domain(), ball)) s += g[c.index] * means_[c.index] * c.measure;
    return s;
}

double Weight::reciprocal_sup(const Ball& ball) const {
    double m = 0.0;
    for (const auto& c : cover(domain(), ball)) m = std::max(m, 1.0 / samples_[c.index]);
    return m;
}

Weight power_weight(double beta, const Domain& domain) { return Weight::power(domain, beta); }

double weighted_measure(const Weight& w, const Ball& ball) { return w.measure(ball); }

double weight_average(const Weight& w, const Ball& ball) {
    return w.measure(ball) / ball_measure(w.domain(), ball);
}

double conjugate(double p) {
    return p == 1.0 ? std::numeric_limits<double>::infinity() : p / (p - 1.0);
}

double ap_product(const Weight& w, double p, const Ball& ball) {
    if (!(p >= 1.0)) throw ConfigError(fmt::format("A_p requires p >= 1, got {}", p));
    const double avg = weight_average(w, ball);
    if (p == 1.0) return avg * w.reciprocal_sup(ball);
    const double dual = weight_average(w.pow(-1.0 / (p - 1.0)), ball);
    return avg * std::pow(dual, p - 1.0);
}

double apq_product(const Weight& w, double p, double q, const Ball& ball) {
    if (!(p >= 1.0)) throw ConfigError(fmt::format("A_(p,q) requires p >= 1, got {}", p));
    if (!(q > p)) throw ConfigError(fmt::format("A_(p,q) requires q > p, got p = {}, q = {}", p, q));
    const double first = std::pow(weight_average(w.pow(q), ball), 1.0 / q);
    if (p == 1.0) return first * w.reciprocal_sup(ball);
    const double pp = conjugate(p);
    return first * std::pow(weight_average(w.pow(-pp), ball), 1.0 / pp);
}

namespace {

template <class Product>
ConstantEstimate family_max(const Weight& w, const BallFamily& family, Product product) {
    if (family.balls.empty()) throw ConfigError("constant estimate over an empty family");
    ConstantEstimate est;
    est.grid_points = w.domain().points();
    est.family_size = family.size();
    for (const auto& b : family.balls) est.offer(product(b), b);
    return est;
}

}  // namespace

ConstantEstimate ap_constant(const Weight& w, double p, const BallFamily& family) {
    if (!(p >= 1.0)) throw ConfigError(fmt::format("A_p requires p >= 1, got {}", p));
    if (p == 1.0) return family_max(w, family, [&](const Ball& b) { return ap_product(w, 1.0, b); });
    const Weight dual = w.pow(-1.0 / (p - 1.0));
    return family_max(w, family, [&](const Ball& b) {
        const double m = ball_measure(w.domain(), b);
        return (w.measure(b) / m) * std::pow(dual.measure(b) / m, p - 1.0);
    });
}

ConstantEstimate apq_constant(const Weight& w, double p, double q, const BallFamily& family) {
    if (!(p >= 1.0)) throw ConfigError(fmt::format("A_(p,q) requires p >= 1, got {}", p));
    if (!(q > p)) throw ConfigError(fmt::format("A_(p,q) requires q > p, got p = {}, q = {}", p, q));
    const Weight wq = w.pow(q);
    if (p == 1.0)
        return family_max(w, family, [&](const Ball& b) {
            return std::pow(weight_average(wq, b), 1.0 / q) * w.reciprocal_sup(b);
        });
    const double pp = conjugate(p);
    const Weight dual = w.pow(-pp);
    return family_max(w, family, [&](const Ball& b) {
        const double m = ball_measure(w.domain(), b);
        return std::pow(wq.measure(b) / m, 1.0 / q) * std::pow(dual.measure(b) / m, 1.0 / pp);
    });
}

double doubling_check(const Weight& w, double p, const Ball& outer, const Ball& inner) {
    const int n = w.domain().dimension();
    if (distance(outer.center, inner.center, n) + inner.radius > outer.radius * (1.0 + 1e-12))
        throw ConfigError("doubling_check: E is not contained in B");
    // both measures summed cell by cell in the same order, so w = 1 gives exactly 1
    auto masses = [&](const Ball& b) {
        double lebesgue = 0.0, weighted = 0.0;
        for (const auto& c : cover(w.domain(), b)) {
            lebesgue += c.measure;
            weighted += w.cell_means()[c.index] * c.measure;
        }
        return std::pair{lebesgue, weighted};
    };
    const auto [mb, wb] = masses(outer);
    const auto [me, we] = masses(inner);
    return (wb / we) / std::pow(mb / me, p);
}

bool is_diverging(const std::vector<double>& levels, double factor) {
    if (levels.size() < 2) return false;
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (!(levels[i] > levels[i - 1])) return false;
    return levels.back() >= factor * levels.front();
}

}  // namespace wmorrey
