#include "wmorrey/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/expint.hpp>
#include <fmt/core.h>

#include "wmorrey/expression.hpp"

namespace wmorrey {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

PsiFunction PsiFunction::power(double kappa) {
    PsiFunction f;
    f.kind_ = Kind::Power;
    f.tag_ = "power";
    f.k_ = kappa;
    return f;
}

PsiFunction PsiFunction::classical(int dimension, double p, double q) {
    if (dimension != 1 && dimension != 2) throw ConfigError("classical psi: dimension must be 1 or 2");
    if (!(p >= 1.0) || !(q >= p))
        throw ConfigError(fmt::format("classical psi needs 1 <= p <= q, got p = {}, q = {}", p, q));
    PsiFunction f;
    f.kind_ = Kind::Classical;
    f.tag_ = "classical";
    f.k_ = q;
    f.n_ = dimension;
    f.c_ = unit_ball_volume(dimension);
    return f;
}

PsiFunction PsiFunction::counterexample1() {
    PsiFunction f;
    f.kind_ = Kind::Counterexample1;
    f.tag_ = "counterexample-1";
    return f;
}

PsiFunction PsiFunction::counterexample2() {
    PsiFunction f;
    f.kind_ = Kind::Counterexample2;
    f.tag_ = "counterexample-2";
    return f;
}

PsiFunction PsiFunction::constant(double value) {
    if (!(value >= 0.0)) throw ConfigError("constant psi must be nonnegative");
    PsiFunction f;
    f.kind_ = Kind::Constant;
    f.tag_ = "constant";
    f.k_ = value;
    return f;
}

PsiFunction PsiFunction::custom(const std::string& expression, int dimension, bool certified) {
    PsiFunction f;
    f.kind_ = Kind::Custom;
    f.tag_ = "custom";
    f.n_ = dimension;
    f.certified_ = certified;
    if (dimension == 1) {
        auto e = std::make_shared<Expression>(Expression::parse(expression, {"a", "r", "t"}));
        f.custom_ = std::make_shared<std::function<double(const Point&, double)>>(
            [e](const Point& a, double r) { return (*e)({a[0], r, r}); });
    } else {
        auto e = std::make_shared<Expression>(Expression::parse(expression, {"a1", "a2", "r", "t"}));
        f.custom_ = std::make_shared<std::function<double(const Point&, double)>>(
            [e](const Point& a, double r) { return (*e)({a[0], a[1], r, r}); });
    }
    return f;
}

double PsiFunction::regular(const Point& a, double r) const {
    switch (kind_) {
        case Kind::Power: return std::pow(r, -k_);
        case Kind::Classical: return std::pow(c_ * std::pow(r, n_), -1.0 / k_);
        case Kind::Counterexample1: return r * std::exp(-r);
        case Kind::Counterexample2: return std::exp(-r);
        case Kind::Constant: return k_;
        case Kind::Custom: return (*custom_)(a, r);
    }
    return 0.0;
}

double PsiFunction::operator()(const Point& a, double r) const {
    if (kind_ == Kind::Counterexample1 && r > 0.0 && r <= 1.0 + 1e-12) {
        const double m = std::round(1.0 / r);
        if (m >= 1.0 && std::abs(m * r - 1.0) <= 1e-12) return m;
    }
    return regular(a, r);
}

std::optional<double> PsiFunction::tail(const Point&, double T) const {
    switch (kind_) {
        case Kind::Power: return k_ > 0.0 ? std::pow(T, -k_) / k_ : kInf;
        case Kind::Classical: {
            const double e = n_ / k_;
            return std::pow(c_, -1.0 / k_) * std::pow(T, -e) / e;
        }
        case Kind::Counterexample1: return std::exp(-T);
        case Kind::Counterexample2: return boost::math::expint(1, T);
        case Kind::Constant: return k_ == 0.0 ? 0.0 : kInf;
        case Kind::Custom: return std::nullopt;
    }
    return std::nullopt;
}

PsiFunction psi_catalog(const std::string& tag, const std::vector<double>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw ConfigError(fmt::format("psi '{}' takes {} parameter(s), got {}", tag, k, params.size()));
    };
    if (tag == "power") {
        need(1);
        return PsiFunction::power(params[0]);
    }
    if (tag == "classical") {
        need(3);
        return PsiFunction::classical(static_cast<int>(params[0]), params[1], params[2]);
    }
    if (tag == "counterexample-1") {
        need(0);
        return PsiFunction::counterexample1();
    }
    if (tag == "counterexample-2") {
        need(0);
        return PsiFunction::counterexample2();
    }
    if (tag == "constant") {
        need(1);
        return PsiFunction::constant(params[0]);
    }
    throw ConfigError(fmt::format(
        "unknown psi tag '{}' (known: power, classical, counterexample-1, counterexample-2, constant, custom)",
        tag));
}

double weighted_lp_norm(const SampledFunction& f, const Weight& w, double p, const Ball& ball) {
    if (!(p >= 1.0)) throw ConfigError(fmt::format("weighted L^p norm needs p >= 1, got {}", p));
    if (!(f.domain() == w.domain())) throw ConfigError("function and weight live on different grids");
    // scale by the local maximum so that |f|^p cannot underflow
    const auto cells = cover(f.domain(), ball);
    double top = 0.0;
    for (const auto& c : cells) top = std::max(top, std::abs(f[c.index]));
    if (top == 0.0) return 0.0;
    const auto means = w.cell_means();
    double s = 0.0;
    for (const auto& c : cells) s += std::pow(std::abs(f[c.index]) / top, p) * means[c.index] * c.measure;
    return top * std::pow(s, 1.0 / p);
}

double weighted_weak_lp_norm(const SampledFunction& f, const Weight& w, double p, const Ball& ball,
                             double* level) {
    if (!(p >= 1.0)) throw ConfigError(fmt::format("weak L^p norm needs p >= 1, got {}", p));
    if (!(f.domain() == w.domain())) throw ConfigError("function and weight live on different grids");
    struct Item {
        double value;
        double mass;
    };
    std::vector<Item> items;
    const auto means = w.cell_means();
    for (const auto& c : cover(f.domain(), ball)) {
        const double v = std::abs(f[c.index]);
        if (v > 0.0) items.push_back({v, means[c.index] * c.measure});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.value > b.value; });
    double best = 0.0, best_level = 0.0, mass = 0.0;
    for (std::size_t i = 0; i < items.size();) {
        const double v = items[i].value;
        while (i < items.size() && items[i].value == v) mass += items[i++].mass;
        const double cand = v * std::pow(mass, 1.0 / p);
        if (cand > best) {
            best = cand;
            best_level = v;
        }
    }
    if (level) *level = best_level;
    return best;
}

namespace {

double psi_checked(const PsiFunction& psi, const Ball& b) {
    const double v = psi(b.center, b.radius);
    if (!(v > 0.0) || !std::isfinite(v))
        throw ConfigError(fmt::format("psi '{}' is not positive at (a = {}, r = {})", psi.tag(),
                                      b.center[0], b.radius));
    return v;
}

}  // namespace

NormResult gw_morrey_norm(const SampledFunction& f, const Weight& w, double p, const PsiFunction& psi,
                          const BallFamily& family) {
    if (family.balls.empty()) throw ConfigError("Morrey norm over an empty family");
    if (!(p >= 1.0)) throw ConfigError(fmt::format("Morrey norm needs p >= 1, got {}", p));
    double top = 0.0;
    for (double v : f.values()) top = std::max(top, std::abs(v));
    if (top == 0.0) top = 1.0;
    std::vector<double> gw(f.size());
    const auto means = w.cell_means();
    for (std::size_t i = 0; i < gw.size(); ++i) gw[i] = std::pow(std::abs(f[i]) / top, p) * means[i];
    const BallIntegrator integ(f.domain(), std::move(gw));
    NormResult res;
    res.family_size = family.size();
    bool first = true;
    for (const auto& b : family.balls) {
        const double v = top * std::pow(integ.integral(b) / w.measure(b), 1.0 / p) / psi_checked(psi, b);
        if (first || v > res.value) {
            res.value = v;
            res.witness = b;
            first = false;
        }
    }
    return res;
}

NormResult gw_weak_morrey_norm(const SampledFunction& f, const Weight& w, double p,
                               const PsiFunction& psi, const BallFamily& family) {
    if (family.balls.empty()) throw ConfigError("weak Morrey norm over an empty family");
    NormResult res;
    res.family_size = family.size();
    bool first = true;
    for (const auto& b : family.balls) {
        double level = 0.0;
        const double weak = weighted_weak_lp_norm(f, w, p, b, &level);
        const double v = weak * std::pow(w.measure(b), -1.0 / p) / psi_checked(psi, b);
        if (first || v > res.value) {
            res.value = v;
            res.witness = b;
            res.level = level;
            first = false;
        }
    }
    return res;
}

}  // namespace wmorrey
