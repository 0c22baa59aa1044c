#include "wmorrey/hypotheses.hpp"

#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "wmorrey/quadrature.hpp"

namespace wmorrey {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double positive_psi2(const PsiFunction& psi2, const Ball& b) {
    const double v = psi2(b.center, b.radius);
    if (!(v > 0.0))
        throw ConfigError(fmt::format("psi2 ('{}') must be positive, got {} at r = {}", psi2.tag(), v,
                                      b.radius));
    return v;
}

void mark_diverging(ConditionReport& rep) {
    rep.estimate.diverging = true;
    rep.estimate.value = kInf;
    rep.corrected = kInf;
}

}  // namespace

double log_trapezoid(const std::function<double(double)>& g, double lo, double hi, int per_decade) {
    if (!(hi > lo)) return 0.0;
    const auto nodes = log_grid(lo, hi, per_decade);
    double sum = 0.0;
    double prev = g(nodes[0]);
    for (std::size_t k = 1; k < nodes.size(); ++k) {
        const double cur = g(nodes[k]);
        sum += 0.5 * (prev + cur) * std::log(nodes[k] / nodes[k - 1]);
        prev = cur;
    }
    return sum;
}

ConditionReport sup_condition_constant(const PsiFunction& psi1, const PsiFunction& psi2,
                                       const std::vector<Ball>& samples,
                                       const std::vector<double>& t_ladder) {
    ConditionReport rep;
    for (const auto& b : samples) {
        double best = -1.0;
        for (double t : t_ladder)
            if (t > b.radius) best = std::max(best, psi1(b.center, t));
        if (best < 0.0) {
            ++rep.estimate.skipped;
            continue;
        }
        rep.estimate.offer(best / positive_psi2(psi2, b), b);
    }
    rep.corrected = rep.estimate.value;
    return rep;
}

ConditionReport integral_condition_constant(const PsiFunction& psi1, const PsiFunction& psi2,
                                            const std::vector<Ball>& samples, double t_max) {
    ConditionReport rep;
    rep.certified = psi1.kind() != PsiFunction::Kind::Custom || psi1.certified();
    bool first = true;
    for (const auto& b : samples) {
        const double r = b.radius;
        if (!(r < t_max)) {
            ++rep.estimate.skipped;
            continue;
        }
        const auto tail = psi1.tail(b.center, t_max);
        if (tail && std::isinf(*tail)) {
            mark_diverging(rep);
            return rep;
        }
        auto g = [&](double u) { return psi1.regular(b.center, std::exp(u)); };
        const double integral = quad::adaptive(g, std::log(r), std::log(t_max), 1e-12);
        const double d = positive_psi2(psi2, b);
        rep.estimate.offer(integral / d, b);
        const double t = tail.value_or(0.0);
        const double corrected = (integral + t) / d;
        if (first || corrected > rep.corrected) rep.corrected = corrected;
        rep.tail_bound = std::max(rep.tail_bound, t / d);
        first = false;
    }
    return rep;
}

ConditionReport weighted_integral_condition_constant(const PsiFunction& psi1,
                                                     const PsiFunction& psi2, const Weight& w,
                                                     double p, double q,
                                                     const std::vector<Ball>& samples,
                                                     double t_max, int per_decade) {
    if (!(p >= 1.0) || !(q >= p))
        throw ConfigError(fmt::format("weighted integral condition needs 1 <= p <= q, got p = {}, q = {}", p, q));
    ConditionReport rep;
    rep.certified = psi1.kind() != PsiFunction::Kind::Custom || psi1.certified();
    const Weight wp = w.pow(p);
    const Weight wq = w.pow(q);
    const Domain& d = w.domain();
    for (const auto& b : samples) {
        const double top = std::min(t_max, d.max_radius(b.center));
        if (!(top > b.radius)) {
            ++rep.estimate.skipped;
            continue;
        }
        if (top < t_max) ++rep.truncated;
        auto g = [&](double t) {
            const Ball bt{b.center, t};
            return std::pow(wp.measure(bt), 1.0 / p) / std::pow(wq.measure(bt), 1.0 / q) *
                   psi1.regular(b.center, t);
        };
        const double integral = log_trapezoid(g, b.radius, top, per_decade);
        rep.estimate.offer(integral / positive_psi2(psi2, b), b);
    }
    rep.estimate.grid_points = d.points();
    rep.corrected = rep.estimate.value;
    return rep;
}

Lemma28Report lemma28_verify(const PsiFunction& phi, const Weight& w, double p,
                             const std::vector<Ball>& samples, const std::vector<double>& ladder,
                             int per_decade) {
    const Domain& d = w.domain();
    for (const auto& b : samples) {
        double prev = -kInf;
        for (double s : ladder) {
            const double v = phi(b.center, s);
            if (v < prev)
                throw ConfigError(fmt::format("phi ('{}') is not increasing on the ladder: phi({}) = {} after {}",
                                              phi.tag(), s, v, prev));
            prev = v;
        }
    }
    Lemma28Report rep;
    for (const auto& b : samples) {
        if (!d.contains(b)) {
            ++rep.sup_form.skipped;
            ++rep.integral_form.skipped;
            continue;
        }
        const double lead = std::pow(w.measure(b), 1.0 / p);
        const double num = phi(b.center, b.radius);
        double best = -1.0;
        for (double s : ladder) {
            const Ball bs{b.center, s};
            if (s > b.radius && d.contains(bs))
                best = std::max(best, std::pow(w.measure(bs), -1.0 / p) * phi(b.center, s));
        }
        if (best > 0.0)
            rep.sup_form.offer(num / (lead * best), b);
        else
            ++rep.sup_form.skipped;
        const double top = d.max_radius(b.center);
        const double integral = log_trapezoid(
            [&](double s) { return std::pow(w.measure(Ball{b.center, s}), -1.0 / p) * phi.regular(b.center, s); },
            b.radius, top, per_decade);
        if (integral > 0.0)
            rep.integral_form.offer(num / (lead * integral), b);
        else
            ++rep.integral_form.skipped;
    }
    return rep;
}

ConstantEstimate lemma29_verify(const SampledFunction& f, const Weight& w, double p,
                                const std::vector<Ball>& samples) {
    ConstantEstimate est;
    const auto g = f.abs();
    for (const auto& b : samples) {
        const double lhs = ball_integral(g, b) / ball_measure(f.domain(), b);
        const double rhs = std::pow(w.measure(b), -1.0 / p) * weighted_lp_norm(f, w, p, b);
        if (rhs == 0.0) {
            if (lhs == 0.0) {
                est.offer(0.0, b);
            } else {
                ++est.skipped;
            }
            continue;
        }
        est.offer(lhs / rhs, b);
    }
    est.grid_points = f.domain().points();
    return est;
}

ConstantEstimate tail_bound_verify(const SampledFunction& f, const Weight& w, double p,
                                   const std::vector<Ball>& samples, int per_decade) {
    const Domain& d = f.domain();
    const int n = d.dimension();
    const auto gp = f.abs_pow(p);
    std::vector<double> weighted(gp.size());
    const auto means = w.cell_means();
    for (std::size_t i = 0; i < weighted.size(); ++i) weighted[i] = gp[i] * means[i];
    const BallIntegrator lp(d, std::move(weighted));
    ConstantEstimate est;
    for (const auto& b : samples) {
        std::vector<double> inside(d.cell_count(), 0.0);
        for (const auto& c : cover(d, b)) inside[c.index] = c.measure;
        double lhs = 0.0;
        for (std::size_t i = 0; i < d.cell_count(); ++i) {
            if (f[i] == 0.0) continue;
            const double outside = d.cell_volume() - inside[i];
            if (outside <= 0.0) continue;
            lhs += std::abs(f[i]) * std::pow(distance(b.center, d.cell_center(i), n), -n) * outside;
        }
        const double rhs = log_trapezoid(
            [&](double s) {
                const Ball bs{b.center, s};
                return std::pow(w.measure(bs), -1.0 / p) * std::pow(lp.integral(bs), 1.0 / p);
            },
            b.radius, d.max_radius(b.center), per_decade);
        if (rhs == 0.0) {
            if (lhs == 0.0) {
                est.offer(0.0, b);
            } else {
                ++est.skipped;
            }
            continue;
        }
        est.offer(lhs / rhs, b);
    }
    est.grid_points = d.points();
    return est;
}

}  // namespace wmorrey
