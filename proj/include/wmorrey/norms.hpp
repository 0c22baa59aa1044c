#pragma once

#include <memory>
#include <optional>
#include <string>

#include "wmorrey/grid.hpp"
#include "wmorrey/weights.hpp"

namespace wmorrey {

/// Nonnegative function psi(a, r) of a center and a radius.
///
/// `counterexample-1` is t e^{-t} except at t = 1/m (m a positive integer),
/// where it takes the value m; the spikes are matched to relative 1e-12.
/// `regular` drops such isolated spikes, which is the representative used
/// by integrals in t.
class PsiFunction {
public:
    enum class Kind { Power, Classical, Counterexample1, Counterexample2, Constant, Custom };

    static PsiFunction power(double kappa);
    /// |B(a, r)|^(-1/q) with the analytic ball volume in dimension n.
    static PsiFunction classical(int dimension, double p, double q);
    static PsiFunction counterexample1();
    static PsiFunction counterexample2();
    static PsiFunction constant(double value);
    /// Expression in a (or a1, a2) and r. `certified` declares the tail beyond
    /// T_max negligible; uncertified functions mark integral checks as such.
    static PsiFunction custom(const std::string& expression, int dimension, bool certified);

    double operator()(const Point& a, double r) const;
    double regular(const Point& a, double r) const;

    /// Analytic int_T^inf psi(a, t) dt/t, when known. Infinity when divergent.
    std::optional<double> tail(const Point& a, double T) const;

    Kind kind() const { return kind_; }
    const std::string& tag() const { return tag_; }
    double parameter() const { return k_; }
    bool certified() const { return certified_; }

private:
    Kind kind_ = Kind::Constant;
    std::string tag_;
    double k_ = 0.0;      // kappa, q, or constant value
    double c_ = 1.0;      // classical: unit ball volume
    int n_ = 1;
    bool certified_ = true;
    std::shared_ptr<const std::function<double(const Point&, double)>> custom_;
};

/// Catalog lookup: "power" (kappa), "classical" (dimension, p, q),
/// "counterexample-1", "counterexample-2", "constant" (value).
PsiFunction psi_catalog(const std::string& tag, const std::vector<double>& params);

struct NormResult {
    double value = 0.0;
    Ball witness{};
    double level = 0.0;  // weak norms: the level gamma attaining the sup at the witness
    std::size_t family_size = 0;
};

/// (int_B |f|^p w)^(1/p).
double weighted_lp_norm(const SampledFunction& f, const Weight& w, double p, const Ball& ball);

/// sup over gamma of gamma w({x in B : |f| > gamma})^(1/p), enumerated exactly
/// over the distinct cell values.
double weighted_weak_lp_norm(const SampledFunction& f, const Weight& w, double p, const Ball& ball,
                             double* level = nullptr);

/// max over the family of psi^-1 w(B)^(-1/p) ||f||_{L^{p,w}(B)}.
NormResult gw_morrey_norm(const SampledFunction& f, const Weight& w, double p,
                          const PsiFunction& psi, const BallFamily& family);
/// Same with the ball-restricted weak norm.
NormResult gw_weak_morrey_norm(const SampledFunction& f, const Weight& w, double p,
                               const PsiFunction& psi, const BallFamily& family);

}  // namespace wmorrey
