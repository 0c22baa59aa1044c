#include "wmorrey/operators.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include <fmt/core.h>

#include "wmorrey/expression.hpp"
#include "wmorrey/parallel.hpp"
#include "wmorrey/quadrature.hpp"

namespace wmorrey {

namespace {

void check_alpha(double alpha, int n, bool allow_zero) {
    const bool ok = allow_zero ? (alpha >= 0.0 && alpha < n) : (alpha > 0.0 && alpha < n);
    if (!ok)
        throw ConfigError(fmt::format("order alpha = {} outside {}0, {}) for dimension {}", alpha,
                                      allow_zero ? "[" : "(", n, n));
}

std::vector<double> abs_values(const SampledFunction& f) {
    std::vector<double> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::abs(f[i]);
    return v;
}

// Closure of cell `index` contains x (with a relative slack of 1e-12 cells).
bool cell_closure_contains(const Domain& d, std::size_t index, const Point& x) {
    const auto c = d.coords(index);
    const double tol = 1e-12 * d.cell_size();
    for (int k = 0; k < d.dimension(); ++k)
        if (x[k] < d.edge(c[k]) - tol || x[k] > d.edge(c[k] + 1) + tol) return false;
    return true;
}

// Exact integral of |x - y|^(alpha - n) over one cell.
double singular_cell_weight(const Domain& d, std::size_t index, const Point& x, double alpha) {
    const auto c = d.coords(index);
    if (d.dimension() == 1)
        return quad::power_interval(d.edge(c[0]) - x[0], d.edge(c[0] + 1) - x[0], alpha - 1.0);
    return quad::power_rect(d.edge(c[0]) - x[0], d.edge(c[0] + 1) - x[0], d.edge(c[1]) - x[1],
                            d.edge(c[1] + 1) - x[1], alpha - 2.0);
}

}  // namespace

std::size_t MaximalResult::undefined_count() const {
    return static_cast<std::size_t>(std::count(defined.begin(), defined.end(), 0));
}

MaximalResult fractional_maximal_detailed(const SampledFunction& f, double alpha,
                                          const std::vector<double>& radii) {
    const Domain& d = f.domain();
    const int n = d.dimension();
    check_alpha(alpha, n, true);
    if (radii.empty()) throw ConfigError("maximal operator: empty radius ladder");
    const double power = 1.0 - alpha / n;
    const std::size_t cells = d.cell_count();
    std::vector<double> out(cells, 0.0), witness(cells, 0.0);
    std::vector<char> defined(cells, 0);
    const auto g = abs_values(f);

    if (n == 1) {
        const BallIntegrator values(d, g);
        const BallIntegrator ones(d, std::vector<double>(cells, 1.0));
        parallel_for(cells, [&](std::size_t i) {
            const Point x = d.cell_center(i);
            for (double r : radii) {
                const Ball b{x, r};
                if (!d.contains(b)) continue;
                const double v = values.integral(b) / std::pow(ones.integral(b), power);
                if (!defined[i] || v > out[i]) {
                    out[i] = v;
                    witness[i] = r;
                }
                defined[i] = 1;
            }
        });
    } else {
        const int N = d.points();
        for (double r : radii) {
            const auto stencil = centered_stencil(d, r);
            double m = 0.0;
            for (const auto& s : stencil) m += s.measure;
            const double norm_m = std::pow(m, power);
            parallel_for(cells, [&](std::size_t idx) {
                const Point x = d.cell_center(idx);
                if (!d.contains(Ball{x, r})) return;
                const auto c = d.coords(idx);
                double sum = 0.0;
                for (const auto& s : stencil) {
                    const int i = c[0] + s.di, j = c[1] + s.dj;
                    if (i < 0 || j < 0 || i >= N || j >= N) continue;
                    sum += g[d.index(i, j)] * s.measure;
                }
                const double v = sum / norm_m;
                if (!defined[idx] || v > out[idx]) {
                    out[idx] = v;
                    witness[idx] = r;
                }
                defined[idx] = 1;
            });
        }
    }
    if (std::find(defined.begin(), defined.end(), 1) == defined.end())
        throw ConfigError("maximal operator: no grid point admits a contained ball from the ladder");
    return {SampledFunction(d, std::move(out)), std::move(witness), std::move(defined)};
}

SampledFunction fractional_maximal(const SampledFunction& f, double alpha,
                                   const std::vector<double>& radii) {
    return fractional_maximal_detailed(f, alpha, radii).values;
}

SampledFunction hl_maximal(const SampledFunction& f, const std::vector<double>& radii) {
    return fractional_maximal(f, 0.0, radii);
}

double fractional_maximal_at(const SampledFunction& f, double alpha,
                             const std::vector<double>& radii, const Point& x) {
    const Domain& d = f.domain();
    check_alpha(alpha, d.dimension(), true);
    const auto g = abs_values(f);
    const double power = 1.0 - alpha / d.dimension();
    double best = 0.0;
    bool any = false;
    for (double r : radii) {
        const Ball b{x, r};
        if (!d.contains(b)) continue;
        const double v = ball_integral(g, d, b) / std::pow(ball_measure(d, b), power);
        if (!any || v > best) best = v;
        any = true;
    }
    if (!any) throw ConfigError("maximal operator: no ladder radius gives a contained ball at x");
    return best;
}

SampledFunction riesz_potential(const SampledFunction& f, double alpha) {
    const Domain& d = f.domain();
    const int n = d.dimension();
    check_alpha(alpha, n, false);
    const int N = d.points();
    const double h = d.cell_size();
    const std::size_t cells = d.cell_count();
    std::vector<double> out(cells, 0.0);
    if (n == 1) {
        std::vector<double> table(static_cast<std::size_t>(N));
        table[0] = 2.0 * std::pow(0.5 * h, alpha) / alpha;
        for (int k = 1; k < N; ++k) table[static_cast<std::size_t>(k)] = std::pow(k * h, alpha - 1.0) * h;
        parallel_for(cells, [&](std::size_t i) {
            double s = 0.0;
            for (std::size_t j = 0; j < cells; ++j)
                s += f[j] * table[i > j ? i - j : j - i];
            out[i] = s;
        });
        return {d, std::move(out)};
    }
    std::vector<double> table(cells);
    for (int dj = 0; dj < N; ++dj)
        for (int di = 0; di < N; ++di) {
            const double rr = std::hypot(di * h, dj * h);
            table[d.index(di, dj)] = (di == 0 && dj == 0)
                                         ? 4.0 * quad::power_corner_rect(0.5 * h, 0.5 * h, alpha - 2.0)
                                         : std::pow(rr, alpha - 2.0) * h * h;
        }
    parallel_for(cells, [&](std::size_t idx) {
        const auto c = d.coords(idx);
        double s = 0.0;
        for (int j = 0; j < N; ++j)
            for (int i = 0; i < N; ++i) {
                const double v = f[d.index(i, j)];
                if (v == 0.0) continue;
                s += v * table[d.index(std::abs(i - c[0]), std::abs(j - c[1]))];
            }
        out[idx] = s;
    });
    return {d, std::move(out)};
}

double riesz_potential_at(const SampledFunction& f, double alpha, const Point& x) {
    const Domain& d = f.domain();
    const int n = d.dimension();
    check_alpha(alpha, n, false);
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0.0) continue;
        if (cell_closure_contains(d, i, x)) {
            s += f[i] * singular_cell_weight(d, i, x, alpha);
        } else {
            s += f[i] * std::pow(distance(x, d.cell_center(i), n), alpha - n) * d.cell_volume();
        }
    }
    return s;
}

KernelSpec kernel_from_name(const std::string& name) {
    if (name == "hilbert")
        return {"hilbert", 1, 4.5, 1.0, [](const Point& x, const Point& y) { return 1.0 / (x[0] - y[0]); }};
    for (int j = 1; j <= 2; ++j) {
        if (name == fmt::format("riesz-{}", j)) {
            const int k = j - 1;
            return {name, 2, 20.25, 1.0, [k](const Point& x, const Point& y) {
                        const double r = std::hypot(x[0] - y[0], x[1] - y[1]);
                        return (x[k] - y[k]) / (r * r * r);
                    }};
        }
    }
    throw ConfigError(fmt::format("unknown kernel '{}' (known: hilbert, riesz-1, riesz-2, or a custom expression)", name));
}

std::vector<std::string> kernel_names() { return {"hilbert", "riesz-1", "riesz-2"}; }

KernelSpec custom_kernel(const std::string& expression, int dimension, double size_constant,
                         double holder) {
    if (dimension != 1 && dimension != 2) throw ConfigError("custom kernel: dimension must be 1 or 2");
    if (!(size_constant > 0.0)) throw ConfigError("custom kernel: size constant A must be positive");
    if (!(holder > 0.0 && holder <= 1.0)) throw ConfigError("custom kernel: delta must lie in (0, 1]");
    KernelSpec k{"custom", dimension, size_constant, holder, {}};
    if (dimension == 1) {
        auto e = std::make_shared<Expression>(Expression::parse(expression, {"x", "y", "r"}));
        k.kernel = [e](const Point& x, const Point& y) {
            return (*e)({x[0], y[0], std::abs(x[0] - y[0])});
        };
    } else {
        auto e = std::make_shared<Expression>(
            Expression::parse(expression, {"x1", "x2", "y1", "y2", "r"}));
        k.kernel = [e](const Point& x, const Point& y) {
            return (*e)({x[0], x[1], y[0], y[1], std::hypot(x[0] - y[0], x[1] - y[1])});
        };
    }
    return k;
}

namespace {

void check_kernel_dimension(const KernelSpec& k, const Domain& d) {
    if (k.dimension != d.dimension())
        throw ConfigError(fmt::format("kernel '{}' is {}-dimensional but the domain is {}-dimensional",
                                      k.name, k.dimension, d.dimension()));
}

double kernel_value(const KernelSpec& k, const Point& x, const Point& y) {
    const double v = k.kernel(x, y);
    if (!std::isfinite(v))
        throw ConfigError(fmt::format("kernel '{}' is not finite at x = ({}, {}), y = ({}, {})", k.name,
                                      x[0], x[1], y[0], y[1]));
    return v;
}

}  // namespace

SampledFunction cz_apply(const KernelSpec& kernel, const SampledFunction& f) {
    const Domain& d = f.domain();
    check_kernel_dimension(kernel, d);
    const std::size_t cells = d.cell_count();
    const double vol = d.cell_volume();
    std::vector<double> out(cells, 0.0);
    parallel_for(cells, [&](std::size_t i) {
        const Point x = d.cell_center(i);
        double s = 0.0;
        for (std::size_t j = 0; j < cells; ++j) {
            if (j == i || f[j] == 0.0) continue;
            s += kernel_value(kernel, x, d.cell_center(j)) * f[j];
        }
        out[i] = s * vol;
    });
    return {d, std::move(out)};
}

double cz_apply_at(const KernelSpec& kernel, const SampledFunction& f, const Point& x) {
    const Domain& d = f.domain();
    check_kernel_dimension(kernel, d);
    double s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[j] == 0.0 || cell_closure_contains(d, j, x)) continue;
        s += kernel_value(kernel, x, d.cell_center(j)) * f[j];
    }
    return s * d.cell_volume();
}

KernelCheckReport standard_kernel_check(const KernelSpec& kernel,
                                        const std::vector<KernelTriple>& triples) {
    KernelCheckReport rep;
    const int n = kernel.dimension;
    const double delta = kernel.holder;
    for (const auto& t : triples) {
        const double dxy = distance(t.x, t.y, n);
        const double dx2y = distance(t.x2, t.y, n);
        const double step = distance(t.x, t.x2, n);
        if (dxy == 0.0 || dx2y == 0.0 || step == 0.0 || step > 0.5 * std::max(dxy, dx2y)) {
            ++rep.skipped;
            continue;
        }
        ++rep.evaluated;
        rep.size_ratio = std::max(rep.size_ratio, std::abs(kernel.kernel(t.x, t.y)) * std::pow(dxy, n));
        const double env = std::pow(dxy + dx2y, n + delta) / std::pow(step, delta);
        rep.smooth_x_ratio = std::max(
            rep.smooth_x_ratio, std::abs(kernel.kernel(t.x, t.y) - kernel.kernel(t.x2, t.y)) * env);
        rep.smooth_y_ratio = std::max(
            rep.smooth_y_ratio, std::abs(kernel.kernel(t.y, t.x) - kernel.kernel(t.y, t.x2)) * env);
    }
    const double A = kernel.size_constant;
    rep.pass = rep.evaluated > 0 && rep.size_ratio <= A && rep.smooth_x_ratio <= A &&
               rep.smooth_y_ratio <= A;
    return rep;
}

std::vector<KernelTriple> random_kernel_triples(int dimension, std::size_t count, double extent,
                                                unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-extent, extent);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<KernelTriple> out;
    out.reserve(count);
    while (out.size() < count) {
        KernelTriple t;
        t.x = {coord(rng), dimension == 2 ? coord(rng) : 0.0};
        t.y = {coord(rng), dimension == 2 ? coord(rng) : 0.0};
        const double d = distance(t.x, t.y, dimension);
        if (d == 0.0) continue;
        // |x - x'| <= |x - y| / 2 implies the gating condition.
        const double len = 0.5 * d * std::sqrt(unit(rng));
        if (dimension == 1) {
            t.x2 = {t.x[0] + (unit(rng) < 0.5 ? -len : len), 0.0};
        } else {
            const double th = 2.0 * std::numbers::pi * unit(rng);
            t.x2 = {t.x[0] + len * std::cos(th), t.x[1] + len * std::sin(th)};
        }
        out.push_back(t);
    }
    return out;
}

}  // namespace wmorrey
