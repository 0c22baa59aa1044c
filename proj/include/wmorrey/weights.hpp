#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "wmorrey/estimate.hpp"
#include "wmorrey/grid.hpp"

namespace wmorrey {

/// Positive weight on a grid.
///
/// Besides its point samples a weight keeps cell means (the integral of w over
/// each cell divided by the cell volume). For power weights scale * |x|^beta
/// the means come from closed-form cell integrals, so cells touching the
/// origin are integrated exactly; where the exponent is not locally integrable
/// (only reachable through pow with a negative power) the midpoint value is
/// used instead and the resulting means grow with refinement.
class Weight {
public:
    static Weight constant(const Domain& domain, double value = 1.0);
    static Weight power(const Domain& domain, double beta, double scale = 1.0);
    /// Untagged weight; values must be strictly positive. Cell means equal samples.
    static Weight sampled(const SampledFunction& values);

    const Domain& domain() const { return samples_.domain(); }
    const SampledFunction& samples() const { return samples_; }
    std::span<const double> cell_means() const { return means_; }
    std::optional<double> exponent() const { return exponent_; }
    double scale() const { return scale_; }

    /// Pointwise w^s, with exact cell means for power tags.
    Weight pow(double s) const;
    /// c * w.
    Weight scaled(double c) const;

    /// w(B) = sum of cell means times overlap measures.
    double measure(const Ball& ball) const;
    /// Sum over the cover of g(cell) * mean_w(cell) * overlap.
    double integral(std::span<const double> g, const Ball& ball) const;
    /// max over cells meeting B of 1 / w(cell center): the reciprocal ess-sup.
    double reciprocal_sup(const Ball& ball) const;

private:
    Weight(SampledFunction samples, std::vector<double> means, std::optional<double> exponent,
           double scale);

    SampledFunction samples_;
    std::vector<double> means_;
    std::optional<double> exponent_;
    double scale_ = 1.0;
    std::shared_ptr<const BallIntegrator> integrator_;
};

/// |x|^beta on the domain; requires beta > -n.
Weight power_weight(double beta, const Domain& domain);

double weighted_measure(const Weight& w, const Ball& ball);

/// Average of w over B with respect to the discrete ball measure.
double weight_average(const Weight& w, const Ball& ball);

/// (avg w)(avg w^(-1/(p-1)))^(p-1); for p = 1, (avg w) * max 1/w.
double ap_product(const Weight& w, double p, const Ball& ball);

/// (avg w^q)^(1/q) (avg w^(-p'))^(1/p'); for p = 1 the second factor is max 1/w.
double apq_product(const Weight& w, double p, double q, const Ball& ball);

ConstantEstimate ap_constant(const Weight& w, double p, const BallFamily& family);
ConstantEstimate apq_constant(const Weight& w, double p, double q, const BallFamily& family);

/// [w(B)/w(E)] / (|B|/|E|)^p for E inside B.
double doubling_check(const Weight& w, double p, const Ball& outer, const Ball& inner);

/// True when the sequence grows monotonically and its last entry is at least
/// `factor` times its first.
bool is_diverging(const std::vector<double>& levels, double factor = 2.0);

/// Conjugate exponent p/(p-1); infinity for p = 1.
double conjugate(double p);

}  // namespace wmorrey
