#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wmorrey {

/// Raised for unsupported configurations and rejected inputs.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Point in R^n, n <= 2. The second coordinate is ignored (and kept at 0) in 1D.
using Point = std::array<double, 2>;

struct Ball {
    Point center{0.0, 0.0};
    double radius = 0.0;

    friend bool operator==(const Ball&, const Ball&) = default;
};

/// Lexicographic (center, radius) order used for deterministic tie-breaks.
bool ball_less(const Ball& a, const Ball& b);

double distance(const Point& x, const Point& y, int dimension);
double norm(const Point& x, int dimension);

/// Lebesgue measure of the unit ball: 2 in 1D, pi in 2D.
double unit_ball_volume(int dimension);
double ball_volume(int dimension, double radius);

/// Uniform cell-centered grid on the box [-L, L]^n.
///
/// Cell i along an axis spans [-L + i h, -L + (i+1) h] and is sampled at its
/// center -L + (i + 1/2) h, so no sample sits on the origin when N is even.
/// 2D cells are stored row-major: index = j * N + i.
class Domain {
public:
    static Domain make(int dimension, double half_width, int points_per_axis);

    int dimension() const { return n_; }
    double half_width() const { return L_; }
    int points() const { return N_; }
    double cell_size() const { return h_; }
    double cell_volume() const { return n_ == 1 ? h_ : h_ * h_; }
    std::size_t cell_count() const {
        return n_ == 1 ? static_cast<std::size_t>(N_) : static_cast<std::size_t>(N_) * N_;
    }

    double edge(int i) const { return -L_ + i * h_; }
    double center_coord(int i) const { return -L_ + (i + 0.5) * h_; }
    std::size_t index(int i, int j = 0) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(N_) + static_cast<std::size_t>(i);
    }
    std::array<int, 2> coords(std::size_t index) const;
    Point cell_center(std::size_t index) const;

    /// Axis cell whose half-open span [edge(i), edge(i+1)) contains x, clamped to [0, N).
    int axis_cell(double x) const;

    /// B(a, r) lies in the closed box (per-axis |a_i| + r <= L).
    bool contains(const Ball& ball) const;
    /// Largest radius for which B(a, r) stays inside the box.
    double max_radius(const Point& center) const;

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    Domain(int n, double L, int N) : n_(n), L_(L), N_(N), h_(2.0 * L / N) {}

    int n_ = 1;
    double L_ = 1.0;
    int N_ = 8;
    double h_ = 0.25;
};

/// Closed-form descriptions retained for oracle comparisons.
namespace tags {
struct Constant {
    double value = 1.0;
};
struct Indicator {  // chi of the ball B(0, radius)
    double radius = 1.0;
};
struct Annulus {  // chi of inner <= |x| <= outer
    double inner = 0.5;
    double outer = 1.0;
};
struct TruncatedPower {  // |x|^exponent on |x| <= support, 0 outside
    double exponent = 0.0;
    double support = 1.0;
};
struct Power {  // |x|^exponent on the whole box
    double exponent = 0.0;
};
struct Gaussian {  // exp(-|x|^2 / width^2)
    double width = 1.0;
};
}  // namespace tags

using FunctionTag = std::variant<std::monostate, tags::Constant, tags::Indicator, tags::Annulus,
                                 tags::TruncatedPower, tags::Power, tags::Gaussian>;

/// Real-valued function held as one value per grid cell.
class SampledFunction {
public:
    SampledFunction(Domain domain, std::vector<double> values, FunctionTag tag = {});

    const Domain& domain() const { return domain_; }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }
    const FunctionTag& tag() const { return tag_; }

    SampledFunction abs() const;
    SampledFunction scaled(double c) const;
    /// Pointwise |f|^s.
    SampledFunction abs_pow(double s) const;
    bool is_zero() const;

private:
    Domain domain_;
    std::vector<double> values_;
    FunctionTag tag_;
};

/// a f + b g, both on the same domain.
SampledFunction combine(double a, const SampledFunction& f, double b, const SampledFunction& g);

using PointFunction = std::function<double(const Point&)>;

/// Evaluates `expr` at every cell center; rejects non-finite values.
SampledFunction sample(const PointFunction& expr, const Domain& domain, FunctionTag tag = {});
/// Builds the sampled function for a catalog tag.
SampledFunction sample(const FunctionTag& tag, const Domain& domain);

struct CellOverlap {
    std::size_t index;
    double measure;  // |cell ∩ B|
};

/// Cells meeting B with their overlap measure. 1D overlaps are exact interval
/// lengths; 2D boundary cells use a fixed 4 x 4 midpoint subsample.
/// Throws ConfigError when B is not contained in the box.
std::vector<CellOverlap> cover(const Domain& domain, const Ball& ball);

/// Discrete |B|: the sum of overlap measures.
double ball_measure(const Domain& domain, const Ball& ball);

/// Sum over cells of f(cell) |cell ∩ B|.
double ball_integral(const SampledFunction& f, const Ball& ball);
double ball_integral(std::span<const double> cell_values, const Domain& domain, const Ball& ball);

/// Repeated ball integrals of one cell field. In 1D the integral is read off an
/// exact piecewise-linear primitive in O(1); in 2D it sums the cover.
class BallIntegrator {
public:
    BallIntegrator(const Domain& domain, std::vector<double> cell_values);

    double integral(const Ball& ball) const;
    const Domain& domain() const { return domain_; }
    std::span<const double> cell_values() const { return values_; }

private:
    double primitive(double x) const;

    Domain domain_;
    std::vector<double> values_;
    std::vector<double> prefix_;  // 1D only: prefix_[i] = sum_{k<i} v_k h
};

/// Translation-invariant cover pattern of a ball centered at a cell center.
struct StencilEntry {
    int di;
    int dj;
    double measure;
};
std::vector<StencilEntry> centered_stencil(const Domain& domain, double radius);

/// Sampled (center, radius) pairs used to approximate suprema over all balls.
struct BallFamily {
    std::vector<Point> centers;
    std::vector<double> radii;
    std::vector<Ball> balls;  // admissible pairs, lexicographic (center, radius) order
    std::size_t dropped = 0;
    std::size_t size() const { return balls.size(); }
};

/// r_k = r_min * ratio^k for k = 0..count-1.
std::vector<double> geometric_ladder(double r_min, double ratio, int count);

/// Geometric grid from lo to hi with at least `per_decade` nodes per decade,
/// endpoints included.
std::vector<double> log_grid(double lo, double hi, int per_decade);

/// Centers on the lattice of spacing stride*h through the origin, radii on a
/// geometric ladder; pairs violating containment are dropped and counted.
BallFamily ball_family(const Domain& domain, int stride, double r_min, double ratio, int count);

/// Family from an explicit list of balls (all must be admissible).
BallFamily family_from_balls(const Domain& domain, std::vector<Ball> balls);

}  // namespace wmorrey
