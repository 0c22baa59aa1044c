#include "wmorrey/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

namespace wmorrey {

namespace {

constexpr double kContainSlack = 1e-12;
constexpr int kSubsample = 4;

// Overlap of a cell [x0,x1]x[y0,y1] with the disc of radius r centered at (cx, cy).
double cell_disc_overlap(double x0, double x1, double y0, double y1, double cx, double cy,
                         double r) {
    const double dx = std::max({x0 - cx, 0.0, cx - x1});
    const double dy = std::max({y0 - cy, 0.0, cy - y1});
    const double r2 = r * r;
    if (dx * dx + dy * dy >= r2) return 0.0;
    const double fx = std::max(std::abs(x0 - cx), std::abs(x1 - cx));
    const double fy = std::max(std::abs(y0 - cy), std::abs(y1 - cy));
    const double area = (x1 - x0) * (y1 - y0);
    if (fx * fx + fy * fy <= r2) return area;
    int inside = 0;
    const double sx = (x1 - x0) / kSubsample;
    const double sy = (y1 - y0) / kSubsample;
    for (int a = 0; a < kSubsample; ++a) {
        const double px = x0 + (a + 0.5) * sx - cx;
        for (int b = 0; b < kSubsample; ++b) {
            const double py = y0 + (b + 0.5) * sy - cy;
            if (px * px + py * py < r2) ++inside;
        }
    }
    return area * inside / (kSubsample * kSubsample);
}

double interval_overlap(double x0, double x1, double lo, double hi) {
    return std::max(0.0, std::min(x1, hi) - std::max(x0, lo));
}

}  // namespace

bool ball_less(const Ball& a, const Ball& b) {
    if (a.center[0] != b.center[0]) return a.center[0] < b.center[0];
    if (a.center[1] != b.center[1]) return a.center[1] < b.center[1];
    return a.radius < b.radius;
}

double distance(const Point& x, const Point& y, int dimension) {
    if (dimension == 1) return std::abs(x[0] - y[0]);
    return std::hypot(x[0] - y[0], x[1] - y[1]);
}

double norm(const Point& x, int dimension) { return distance(x, Point{0.0, 0.0}, dimension); }

double unit_ball_volume(int dimension) { return dimension == 1 ? 2.0 : std::numbers::pi; }

double ball_volume(int dimension, double radius) {
    return unit_ball_volume(dimension) * std::pow(radius, dimension);
}

Domain Domain::make(int dimension, double half_width, int points_per_axis) {
    if (dimension != 1 && dimension != 2)
        throw ConfigError(fmt::format("unsupported dimension {} (expected 1 or 2)", dimension));
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw ConfigError(fmt::format("half-width must be positive, got {}", half_width));
    if (points_per_axis < 8 || points_per_axis % 2 != 0)
        throw ConfigError(
            fmt::format("points per axis must be even and >= 8, got {}", points_per_axis));
    return Domain(dimension, half_width, points_per_axis);
}

std::array<int, 2> Domain::coords(std::size_t index) const {
    if (n_ == 1) return {static_cast<int>(index), 0};
    return {static_cast<int>(index % N_), static_cast<int>(index / N_)};
}

Point Domain::cell_center(std::size_t index) const {
    const auto c = coords(index);
    if (n_ == 1) return {center_coord(c[0]), 0.0};
    return {center_coord(c[0]), center_coord(c[1])};
}

int Domain::axis_cell(double x) const {
    const int i = static_cast<int>(std::floor((x + L_) / h_));
    return std::clamp(i, 0, N_ - 1);
}

bool Domain::contains(const Ball& ball) const {
    if (!(ball.radius > 0.0)) return false;
    const double limit = L_ * (1.0 + kContainSlack);
    for (int k = 0; k < n_; ++k)
        if (std::abs(ball.center[k]) + ball.radius > limit) return false;
    return true;
}

double Domain::max_radius(const Point& center) const {
    double m = L_ - std::abs(center[0]);
    if (n_ == 2) m = std::min(m, L_ - std::abs(center[1]));
    return m;
}

SampledFunction::SampledFunction(Domain domain, std::vector<double> values, FunctionTag tag)
    : domain_(domain), values_(std::move(values)), tag_(std::move(tag)) {
    if (values_.size() != domain_.cell_count())
        throw ConfigError(fmt::format("sampled function has {} values, domain has {} cells",
                                      values_.size(), domain_.cell_count()));
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!std::isfinite(values_[i]))
            throw ConfigError(fmt::format("non-finite sample at cell {}", i));
}

SampledFunction SampledFunction::abs() const {
    std::vector<double> v(values_.size());
    std::transform(values_.begin(), values_.end(), v.begin(), [](double x) { return std::abs(x); });
    return {domain_, std::move(v)};
}

SampledFunction SampledFunction::scaled(double c) const {
    std::vector<double> v(values_.size());
    std::transform(values_.begin(), values_.end(), v.begin(), [c](double x) { return c * x; });
    return {domain_, std::move(v)};
}

SampledFunction SampledFunction::abs_pow(double s) const {
    std::vector<double> v(values_.size());
    std::transform(values_.begin(), values_.end(), v.begin(),
                   [s](double x) { return s == 1.0 ? std::abs(x) : std::pow(std::abs(x), s); });
    return {domain_, std::move(v)};
}

bool SampledFunction::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](double x) { return x == 0.0; });
}

SampledFunction combine(double a, const SampledFunction& f, double b, const SampledFunction& g) {
    if (!(f.domain() == g.domain())) throw ConfigError("combine: domains differ");
    std::vector<double> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * f[i] + b * g[i];
    return {f.domain(), std::move(v)};
}

SampledFunction sample(const PointFunction& expr, const Domain& domain, FunctionTag tag) {
    std::vector<double> v(domain.cell_count());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = expr(domain.cell_center(i));
        if (!std::isfinite(v[i])) {
            const auto c = domain.cell_center(i);
            throw ConfigError(fmt::format("non-finite evaluation at cell center ({}, {})", c[0], c[1]));
        }
    }
    return {domain, std::move(v), std::move(tag)};
}

SampledFunction sample(const FunctionTag& tag, const Domain& domain) {
    const int n = domain.dimension();
    struct Visitor {
        int n;
        PointFunction operator()(std::monostate) const {
            throw ConfigError("cannot sample an untagged function");
        }
        PointFunction operator()(const tags::Constant& t) const {
            return [v = t.value](const Point&) { return v; };
        }
        PointFunction operator()(const tags::Indicator& t) const {
            return [n = n, r = t.radius](const Point& x) { return norm(x, n) < r ? 1.0 : 0.0; };
        }
        PointFunction operator()(const tags::Annulus& t) const {
            return [n = n, t](const Point& x) {
                const double d = norm(x, n);
                return (d >= t.inner && d <= t.outer) ? 1.0 : 0.0;
            };
        }
        PointFunction operator()(const tags::TruncatedPower& t) const {
            return [n = n, t](const Point& x) {
                const double d = norm(x, n);
                return d <= t.support ? std::pow(d, t.exponent) : 0.0;
            };
        }
        PointFunction operator()(const tags::Power& t) const {
            return [n = n, e = t.exponent](const Point& x) { return std::pow(norm(x, n), e); };
        }
        PointFunction operator()(const tags::Gaussian& t) const {
            return [n = n, w = t.width](const Point& x) {
                const double d = norm(x, n);
                return std::exp(-d * d / (w * w));
            };
        }
    };
    return sample(std::visit(Visitor{n}, tag), domain, tag);
}

std::vector<CellOverlap> cover(const Domain& domain, const Ball& ball) {
    if (!domain.contains(ball))
        throw ConfigError(fmt::format("ball B(({}, {}), {}) is not contained in the box [-{}, {}]^{}",
                                      ball.center[0], ball.center[1], ball.radius,
                                      domain.half_width(), domain.half_width(), domain.dimension()));
    std::vector<CellOverlap> out;
    const double r = ball.radius;
    const double ax = ball.center[0];
    const int i0 = domain.axis_cell(ax - r);
    const int i1 = domain.axis_cell(ax + r);
    if (domain.dimension() == 1) {
        out.reserve(static_cast<std::size_t>(i1 - i0 + 1));
        for (int i = i0; i <= i1; ++i) {
            const double m = interval_overlap(domain.edge(i), domain.edge(i + 1), ax - r, ax + r);
            if (m > 0.0) out.push_back({domain.index(i), m});
        }
        return out;
    }
    const double ay = ball.center[1];
    const int j0 = domain.axis_cell(ay - r);
    const int j1 = domain.axis_cell(ay + r);
    for (int j = j0; j <= j1; ++j) {
        for (int i = i0; i <= i1; ++i) {
            const double m = cell_disc_overlap(domain.edge(i), domain.edge(i + 1), domain.edge(j),
                                               domain.edge(j + 1), ax, ay, r);
            if (m > 0.0) out.push_back({domain.index(i, j), m});
        }
    }
    return out;
}

double ball_measure(const Domain& domain, const Ball& ball) {
    double s = 0.0;
    for (const auto& c : cover(domain, ball)) s += c.measure;
    return s;
}

double ball_integral(std::span<const double> cell_values, const Domain& domain, const Ball& ball) {
    if (cell_values.size() != domain.cell_count())
        throw ConfigError("ball_integral: value count does not match domain");
    double s = 0.0;
    for (const auto& c : cover(domain, ball)) s += cell_values[c.index] * c.measure;
    return s;
}

double ball_integral(const SampledFunction& f, const Ball& ball) {
    return ball_integral(f.values(), f.domain(), ball);
}

BallIntegrator::BallIntegrator(const Domain& domain, std::vector<double> cell_values)
    : domain_(domain), values_(std::move(cell_values)) {
    if (values_.size() != domain_.cell_count())
        throw ConfigError("BallIntegrator: value count does not match domain");
    if (domain_.dimension() == 1) {
        prefix_.resize(values_.size() + 1, 0.0);
        const double h = domain_.cell_size();
        for (std::size_t i = 0; i < values_.size(); ++i) prefix_[i + 1] = prefix_[i] + values_[i] * h;
    }
}

double BallIntegrator::primitive(double x) const {
    const int i = domain_.axis_cell(x);
    return prefix_[static_cast<std::size_t>(i)] + values_[static_cast<std::size_t>(i)] * (x - domain_.edge(i));
}

double BallIntegrator::integral(const Ball& ball) const {
    if (domain_.dimension() == 2) return ball_integral(values_, domain_, ball);
    if (!domain_.contains(ball))
        throw ConfigError(fmt::format("ball B({}, {}) is not contained in the box", ball.center[0],
                                      ball.radius));
    const double L = domain_.half_width();
    const double lo = std::max(-L, ball.center[0] - ball.radius);
    const double hi = std::min(L, ball.center[0] + ball.radius);
    return primitive(hi) - primitive(lo);
}

std::vector<StencilEntry> centered_stencil(const Domain& domain, double radius) {
    const double h = domain.cell_size();
    const int k = static_cast<int>(std::ceil(radius / h - 0.5)) + 1;
    std::vector<StencilEntry> out;
    if (domain.dimension() == 1) {
        for (int di = -k; di <= k; ++di) {
            const double m = interval_overlap((di - 0.5) * h, (di + 0.5) * h, -radius, radius);
            if (m > 0.0) out.push_back({di, 0, m});
        }
        return out;
    }
    for (int dj = -k; dj <= k; ++dj)
        for (int di = -k; di <= k; ++di) {
            const double m = cell_disc_overlap((di - 0.5) * h, (di + 0.5) * h, (dj - 0.5) * h,
                                               (dj + 0.5) * h, 0.0, 0.0, radius);
            if (m > 0.0) out.push_back({di, dj, m});
        }
    return out;
}

std::vector<double> geometric_ladder(double r_min, double ratio, int count) {
    if (!(r_min > 0.0)) throw ConfigError("ladder: r_min must be positive");
    if (!(ratio > 1.0)) throw ConfigError("ladder: ratio must exceed 1");
    if (count < 1) throw ConfigError("ladder: count must be at least 1");
    std::vector<double> r(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) r[static_cast<std::size_t>(k)] = r_min * std::pow(ratio, k);
    return r;
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
    if (!(lo > 0.0)) throw ConfigError("log_grid: lower end must be positive");
    if (hi <= lo) return {lo};
    const int m = std::max(1, static_cast<int>(std::ceil(per_decade * std::log10(hi / lo))));
    std::vector<double> t(static_cast<std::size_t>(m) + 1);
    const double step = std::log(hi / lo) / m;
    for (int k = 0; k <= m; ++k) t[static_cast<std::size_t>(k)] = lo * std::exp(step * k);
    t.front() = lo;
    t.back() = hi;
    return t;
}

BallFamily ball_family(const Domain& domain, int stride, double r_min, double ratio, int count) {
    if (stride < 1) throw ConfigError(fmt::format("center stride must be >= 1, got {}", stride));
    const double h = domain.cell_size();
    if (r_min < h * (1.0 - 1e-12))
        throw ConfigError(fmt::format("r_min = {} is below the cell size h = {}", r_min, h));
    BallFamily fam;
    fam.radii = geometric_ladder(r_min, ratio, count);
    const double spacing = stride * h;
    const int kmax = static_cast<int>(std::floor(domain.half_width() / spacing * (1.0 + 1e-12)));
    std::vector<Point> lattice;
    for (int kx = -kmax; kx <= kmax; ++kx) {
        if (domain.dimension() == 1) {
            lattice.push_back({kx * spacing, 0.0});
            continue;
        }
        for (int ky = -kmax; ky <= kmax; ++ky) lattice.push_back({kx * spacing, ky * spacing});
    }
    for (const auto& c : lattice) {
        bool any = false;
        for (double r : fam.radii) {
            Ball b{c, r};
            if (domain.contains(b)) {
                fam.balls.push_back(b);
                any = true;
            } else {
                ++fam.dropped;
            }
        }
        if (any) fam.centers.push_back(c);
    }
    if (fam.balls.empty())
        throw ConfigError("ball family is empty: every (center, radius) pair violates containment");
    return fam;
}

BallFamily family_from_balls(const Domain& domain, std::vector<Ball> balls) {
    BallFamily fam;
    for (const auto& b : balls)
        if (!domain.contains(b))
            throw ConfigError(fmt::format("family ball B(({}, {}), {}) is not contained in the box",
                                          b.center[0], b.center[1], b.radius));
    std::sort(balls.begin(), balls.end(), ball_less);
    for (const auto& b : balls) {
        if (std::find(fam.centers.begin(), fam.centers.end(), b.center) == fam.centers.end())
            fam.centers.push_back(b.center);
        if (std::find(fam.radii.begin(), fam.radii.end(), b.radius) == fam.radii.end())
            fam.radii.push_back(b.radius);
    }
    std::sort(fam.radii.begin(), fam.radii.end());
    fam.balls = std::move(balls);
    if (fam.balls.empty()) throw ConfigError("ball family is empty");
    return fam;
}

}  // namespace wmorrey
