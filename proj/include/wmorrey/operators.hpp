#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wmorrey/grid.hpp"

namespace wmorrey {

/// Output of a maximal operator together with per-cell bookkeeping.
struct MaximalResult {
    SampledFunction values;
    std::vector<double> witness_radius;  // radius attaining the max; 0 where undefined
    std::vector<char> defined;           // 0 where no ladder radius gives a contained ball
    std::size_t undefined_count() const;
};

/// Fractional maximal operator at every cell center: the max over ladder radii
/// r with B(x, r) inside the box of |B|^(alpha/n - 1) * int_B |f|, where |B| is
/// the discrete ball measure. alpha = 0 gives the Hardy-Littlewood operator.
MaximalResult fractional_maximal_detailed(const SampledFunction& f, double alpha,
                                          const std::vector<double>& radii);
SampledFunction fractional_maximal(const SampledFunction& f, double alpha,
                                   const std::vector<double>& radii);
SampledFunction hl_maximal(const SampledFunction& f, const std::vector<double>& radii);

/// Same quantity at an arbitrary point x (for oracle comparisons).
double fractional_maximal_at(const SampledFunction& f, double alpha,
                             const std::vector<double>& radii, const Point& x);

/// I_alpha f at every cell center. The cell containing the evaluation point is
/// integrated in closed form; every other cell contributes its midpoint value.
SampledFunction riesz_potential(const SampledFunction& f, double alpha);
/// I_alpha f at an arbitrary point x; all cells whose closure contains x are
/// integrated in closed form.
double riesz_potential_at(const SampledFunction& f, double alpha, const Point& x);

using KernelFunction = std::function<double(const Point&, const Point&)>;

struct KernelSpec {
    std::string name;
    int dimension = 1;
    double size_constant = 1.0;  // A
    double holder = 1.0;         // delta
    KernelFunction kernel;
};

/// Registered kernels: "hilbert" (1D), "riesz-1" and "riesz-2" (2D).
KernelSpec kernel_from_name(const std::string& name);
std::vector<std::string> kernel_names();

/// Kernel from an expression in x, y (1D) or x1, x2, y1, y2 (2D); `r` is |x - y|.
KernelSpec custom_kernel(const std::string& expression, int dimension, double size_constant,
                         double holder);

/// Truncated singular integral: the sum over cells other than the one holding
/// each center of K(x, y_cell) f(cell) |cell|.
SampledFunction cz_apply(const KernelSpec& kernel, const SampledFunction& f);
/// Same at an arbitrary point; every cell whose closure contains x is omitted.
double cz_apply_at(const KernelSpec& kernel, const SampledFunction& f, const Point& x);

struct KernelTriple {
    Point x;
    Point x2;  // x' in the first smoothness bound, y' in the second
    Point y;
};

struct KernelCheckReport {
    double size_ratio = 0.0;     // max |K(x,y)| |x-y|^n
    double smooth_x_ratio = 0.0; // max |K(x,y)-K(x',y)| (|x-y|+|x'-y|)^(n+d) / |x-x'|^d
    double smooth_y_ratio = 0.0; // same with the second argument perturbed
    std::size_t evaluated = 0;
    std::size_t skipped = 0;     // triples failing the gating condition
    bool pass = false;           // all three ratios <= A
};

KernelCheckReport standard_kernel_check(const KernelSpec& kernel,
                                        const std::vector<KernelTriple>& triples);

/// Random gated triples in [-extent, extent]^n (deterministic in the seed).
std::vector<KernelTriple> random_kernel_triples(int dimension, std::size_t count, double extent,
                                                unsigned long long seed);

}  // namespace wmorrey
