#pragma once

#include <functional>
#include <vector>

#include "wmorrey/estimate.hpp"
#include "wmorrey/norms.hpp"
#include "wmorrey/weights.hpp"

namespace wmorrey {

/// Result of a psi-condition check.
struct ConditionReport {
    /// Empirical constant of the truncated condition (integrals stop at T_max
    /// or at the largest admissible radius).
    ConstantEstimate estimate;
    /// Max over samples of (truncated integral + analytic tail) / psi2; equals
    /// the estimate when no tail is known.
    double corrected = 0.0;
    /// Max over samples of tail / psi2 (0 when no tail is known).
    double tail_bound = 0.0;
    /// False for custom psi without a tail certificate.
    bool certified = true;
    /// Samples whose integral had to stop before T_max (admissibility).
    std::size_t truncated = 0;
};

/// max over samples of [max over ladder t > r of psi1(a, t)] / psi2(a, r).
ConditionReport sup_condition_constant(const PsiFunction& psi1, const PsiFunction& psi2,
                                       const std::vector<Ball>& samples,
                                       const std::vector<double>& t_ladder);

/// max over samples of [int_r^T_max psi1(a, t) dt/t] / psi2(a, r), adaptive in log t.
ConditionReport integral_condition_constant(const PsiFunction& psi1, const PsiFunction& psi2,
                                            const std::vector<Ball>& samples, double t_max = 50.0);

/// int_r^T w^p(B(a,t))^(1/p) / w^q(B(a,t))^(1/q) psi1(a,t) dt/t over psi2(a,r), with
/// T the smaller of t_max and the largest admissible radius; trapezoid rule in
/// log t with at least `per_decade` nodes per decade.
ConditionReport weighted_integral_condition_constant(const PsiFunction& psi1,
                                                     const PsiFunction& psi2, const Weight& w,
                                                     double p, double q,
                                                     const std::vector<Ball>& samples,
                                                     double t_max = 50.0, int per_decade = 64);

/// int_lo^hi g(s) ds/s by the trapezoid rule in log s. Zero when hi <= lo.
double log_trapezoid(const std::function<double(double)>& g, double lo, double hi, int per_decade);

struct Lemma28Report {
    ConstantEstimate sup_form;       // phi(a,r) / [w(B)^(1/p) max_{s>r} w(B(a,s))^(-1/p) phi(a,s)]
    ConstantEstimate integral_form;  // phi(a,r) / [w(B)^(1/p) int_r^R w(B(a,s))^(-1/p) phi(a,s) ds/s]
};

/// Throws ConfigError when phi decreases along the ladder at some sample center.
Lemma28Report lemma28_verify(const PsiFunction& phi, const Weight& w, double p,
                             const std::vector<Ball>& samples, const std::vector<double>& ladder,
                             int per_decade = 64);

/// max over samples of avg_B |f| / [w(B)^(-1/p) ||f||_{L^{p,w}(B)}].
ConstantEstimate lemma29_verify(const SampledFunction& f, const Weight& w, double p,
                                const std::vector<Ball>& samples);

/// max over samples of [sum over the part of the box outside B(a,r) of
/// |f| |a-y|^(-n)] / [int_r^R w(B(a,s))^(-1/p) ||f||_{L^{p,w}(B(a,s))} ds/s].
ConstantEstimate tail_bound_verify(const SampledFunction& f, const Weight& w, double p,
                                   const std::vector<Ball>& samples, int per_decade = 64);

}  // namespace wmorrey
