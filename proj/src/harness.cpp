#include "wmorrey/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <fmt/core.h>

#include "wmorrey/run_spec.hpp"

namespace wmorrey {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool fractional(OperatorKind k) {
    return k == OperatorKind::FractionalMaximal || k == OperatorKind::RieszPotential;
}

PsiFunction make_psi(const PsiSpec& s, int n) {
    if (s.tag == "custom") return PsiFunction::custom(s.expression, n, s.certified);
    return psi_catalog(s.tag, s.params);
}

KernelSpec make_kernel(const KernelChoice& k, int n) {
    if (k.name == "custom") return custom_kernel(k.expression, n, k.size_constant, k.holder);
    auto spec = kernel_from_name(k.name);
    if (spec.dimension != n)
        throw ConfigError(fmt::format("kernel '{}' is {}-dimensional, the experiment is {}-dimensional",
                                      k.name, spec.dimension, n));
    return spec;
}

std::string function_name(const TestFunctionSpec& f) {
    std::string args;
    for (std::size_t i = 0; i < f.params.size(); ++i)
        args += (i ? ", " : "") + fmt::format("{}", f.params[i]);
    return fmt::format("{}({})", f.kind, args);
}

SampledFunction build_function(const TestFunctionSpec& f, const Domain& d, std::uint64_t seed) {
    auto need = [&](std::size_t k) {
        if (f.params.size() != k)
            throw ConfigError(fmt::format("test function '{}' takes {} parameter(s), got {}", f.kind, k,
                                          f.params.size()));
    };
    if (f.kind == "indicator") {
        need(1);
        return sample(tags::Indicator{f.params[0]}, d);
    }
    if (f.kind == "annulus") {
        need(2);
        return sample(tags::Annulus{f.params[0], f.params[1]}, d);
    }
    if (f.kind == "truncated-power") {
        need(2);
        return sample(tags::TruncatedPower{-f.params[0], f.params[1]}, d);
    }
    if (f.kind == "gaussian") {
        need(1);
        return sample(tags::Gaussian{f.params[0]}, d);
    }
    if (f.kind == "random") {
        need(2);
        const double spacing = f.params[0], support = f.params[1];
        if (!(spacing > 0.0) || !(support > 0.0)) throw ConfigError("random test function: spacing and support must be positive");
        const int per_axis = static_cast<int>(std::round(2.0 * support / spacing));
        const int n = d.dimension();
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<double> lattice(static_cast<std::size_t>(n == 1 ? per_axis : per_axis * per_axis));
        for (auto& v : lattice) v = u(rng);
        return sample(
            [=](const Point& x) {
                int k[2] = {0, 0};
                for (int a = 0; a < n; ++a) {
                    if (std::abs(x[a]) >= support) return 0.0;
                    k[a] = std::clamp(static_cast<int>(std::floor((x[a] + support) / spacing)), 0, per_axis - 1);
                }
                return lattice[static_cast<std::size_t>(k[1] * per_axis + k[0])];
            },
            d);
    }
    throw ConfigError(fmt::format(
        "unknown test function '{}' (known: indicator, annulus, truncated-power, gaussian, random)", f.kind));
}

struct Level {
    Domain domain;
    BallFamily family;
    std::vector<double> ladder;
};

Level make_level(const ExperimentConfig& cfg, int points) {
    const auto d = Domain::make(cfg.dimension, cfg.half_width, points);
    const double h = d.cell_size();
    const double stride_real = cfg.family.center_spacing / h;
    const int stride = static_cast<int>(std::round(stride_real));
    if (stride < 1 || std::abs(stride_real - stride) > 1e-9)
        throw ConfigError(fmt::format("family center spacing {} is not a multiple of the cell size {} at N = {}",
                                      cfg.family.center_spacing, h, points));
    auto fam = ball_family(d, stride, cfg.family.r_min, cfg.family.ratio, cfg.family.count);
    const double r0 = 0.5 * h;
    const int count = static_cast<int>(std::floor(std::log(cfg.half_width / r0) / std::log(cfg.ladder_ratio))) + 1;
    return {d, std::move(fam), geometric_ladder(r0, cfg.ladder_ratio, count)};
}

struct Applied {
    SampledFunction values;
    std::vector<char> defined;
};

Applied apply_operator(const ExperimentConfig& cfg, const SampledFunction& f, const Level& lv) {
    switch (cfg.op) {
        case OperatorKind::Maximal:
        case OperatorKind::FractionalMaximal: {
            auto r = fractional_maximal_detailed(f, cfg.op == OperatorKind::Maximal ? 0.0 : cfg.alpha, lv.ladder);
            return {std::move(r.values), std::move(r.defined)};
        }
        case OperatorKind::RieszPotential:
            return {riesz_potential(f, cfg.alpha), std::vector<char>(f.size(), 1)};
        case OperatorKind::CzKernel:
            return {cz_apply(make_kernel(cfg.kernel, cfg.dimension), f), std::vector<char>(f.size(), 1)};
    }
    throw ConfigError("unknown operator");
}

bool touches_undefined(const Domain& d, const Ball& b, const std::vector<char>& defined) {
    for (const auto& c : cover(d, b))
        if (!defined[c.index]) return true;
    return false;
}

struct Exponents {
    double p_src, p_tgt;
    Weight w_src, w_tgt;
};

Exponents exponents(const ExperimentConfig& cfg, const Domain& d) {
    const Weight w = Weight::power(d, cfg.weight.beta);
    if (fractional(cfg.op)) return {cfg.p, cfg.q, w.pow(cfg.p), w.pow(cfg.q)};
    return {cfg.p, cfg.p, w, w};
}

// Ball-restricted strong norms of one function under one weight.
class LocalNorm {
public:
    LocalNorm(const SampledFunction& f, const Weight& w, double p)
        : p_(p), top_(max_abs(f)), integ_(make(f, w, p, top_)) {}
    double operator()(const Ball& b) const { return top_ * std::pow(integ_.integral(b), 1.0 / p_); }

private:
    static double max_abs(const SampledFunction& f) {
        double t = 0.0;
        for (double v : f.values()) t = std::max(t, std::abs(v));
        return t > 0.0 ? t : 1.0;
    }
    static BallIntegrator make(const SampledFunction& f, const Weight& w, double p, double top) {
        std::vector<double> v(f.size());
        const auto m = w.cell_means();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::pow(std::abs(f[i]) / top, p) * m[i];
        return BallIntegrator(f.domain(), std::move(v));
    }
    double p_;
    double top_;
    BallIntegrator integ_;
};

std::vector<SampledFunction> build_functions(const ExperimentConfig& cfg, const Domain& d,
                                             std::vector<std::string>* names) {
    const auto specs = cfg.functions.empty() ? default_functions(cfg) : cfg.functions;
    std::vector<SampledFunction> out;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        out.push_back(build_function(specs[i], d, cfg.seed + i));
        if (names) names->push_back(function_name(specs[i]));
    }
    return out;
}

// Radius of the smallest origin-centered ball holding the numerical support of f.
double support_radius(const SampledFunction& f) {
    const Domain& d = f.domain();
    double top = 0.0;
    for (double v : f.values()) top = std::max(top, std::abs(v));
    double rho = 0.0;
    const double half_diag = 0.5 * d.cell_size() * std::sqrt(static_cast<double>(d.dimension()));
    for (std::size_t i = 0; i < f.size(); ++i)
        if (std::abs(f[i]) > 1e-12 * top) rho = std::max(rho, norm(d.cell_center(i), d.dimension()) + half_diag);
    return rho;
}

// Growth that does not slow down under refinement: either the increments keep
// their size (logarithmic divergence) or grow (power divergence).
bool class_grows(const std::vector<double>& v) {
    if (v.size() < 3) return false;
    for (std::size_t k = 1; k < v.size(); ++k)
        if (!(v[k] > v[k - 1] * (1.0 + 1e-9))) return false;
    for (std::size_t k = 2; k < v.size(); ++k)
        if (v[k] - v[k - 1] < 0.75 * (v[k - 1] - v[k - 2])) return false;
    return true;
}

double condition_constant(const ExperimentConfig& cfg, const PsiFunction& psi1, const PsiFunction& psi2,
                          const Weight& w, const std::vector<Ball>& samples, ConditionReport* out) {
    ConditionReport rep;
    switch (cfg.condition) {
        case ConditionKind::Sup: {
            double lo = samples.front().radius;
            for (const auto& b : samples) lo = std::min(lo, b.radius);
            auto ladder = log_grid(lo, cfg.t_max, cfg.per_decade);
            // a log grid never lands on the isolated spikes at t = 1/m; add them
            if (psi1.tag() == "counterexample-1")
                for (int m = 1; m <= static_cast<int>(std::ceil(1.0 / lo)); ++m) ladder.push_back(1.0 / m);
            std::sort(ladder.begin(), ladder.end());
            rep = sup_condition_constant(psi1, psi2, samples, ladder);
            break;
        }
        case ConditionKind::Integral:
            rep = integral_condition_constant(psi1, psi2, samples, cfg.t_max);
            break;
        case ConditionKind::WeightedIntegral:
            rep = weighted_integral_condition_constant(psi1, psi2, w, cfg.p, cfg.q, samples, cfg.t_max,
                                                       cfg.per_decade);
            break;
    }
    if (out) *out = rep;
    return rep.estimate.diverging ? kInf : rep.estimate.value;
}

}  // namespace

std::string to_string(OperatorKind k) {
    switch (k) {
        case OperatorKind::Maximal: return "maximal";
        case OperatorKind::FractionalMaximal: return "fractional-maximal";
        case OperatorKind::RieszPotential: return "riesz-potential";
        case OperatorKind::CzKernel: return "cz-kernel";
    }
    return "?";
}

std::string to_string(ConditionKind k) {
    switch (k) {
        case ConditionKind::Sup: return "sup";
        case ConditionKind::Integral: return "integral";
        case ConditionKind::WeightedIntegral: return "weighted-integral";
    }
    return "?";
}

std::string to_string(ExperimentMode m) { return m == ExperimentMode::Local ? "local" : "boundedness"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::NotApplicable: return "NOT-APPLICABLE";
        case Verdict::HypothesisUnmet: return "HYPOTHESIS-UNMET";
    }
    return "?";
}

OperatorKind parse_operator_kind(const std::string& s) {
    for (auto k : {OperatorKind::Maximal, OperatorKind::FractionalMaximal, OperatorKind::RieszPotential,
                   OperatorKind::CzKernel})
        if (to_string(k) == s) return k;
    throw ConfigError(fmt::format(
        "unknown operator '{}' (known: maximal, fractional-maximal, riesz-potential, cz-kernel)", s));
}

ConditionKind parse_condition_kind(const std::string& s) {
    for (auto k : {ConditionKind::Sup, ConditionKind::Integral, ConditionKind::WeightedIntegral})
        if (to_string(k) == s) return k;
    throw ConfigError(fmt::format("unknown condition '{}' (known: sup, integral, weighted-integral)", s));
}

ExperimentMode parse_mode(const std::string& s) {
    if (s == "local") return ExperimentMode::Local;
    if (s == "boundedness") return ExperimentMode::Boundedness;
    throw ConfigError(fmt::format("unknown experiment mode '{}' (known: local, boundedness)", s));
}

void validate(const ExperimentConfig& cfg) {
    const int n = cfg.dimension;
    if (n != 1 && n != 2) throw ConfigError(fmt::format("unsupported dimension {}", n));
    if (!(cfg.p >= 1.0)) throw ConfigError(fmt::format("p must be >= 1, got {}", cfg.p));
    if (cfg.levels < 1) throw ConfigError("levels must be at least 1");
    if (!(cfg.tolerance > 1.0)) throw ConfigError("tolerance must exceed 1");
    if (!(cfg.ladder_ratio > 1.0)) throw ConfigError("ladder ratio must exceed 1");
    if (!(cfg.t_max > 0.0)) throw ConfigError("t_max must be positive");
    if (cfg.per_decade < 1) throw ConfigError("per_decade must be positive");
    Domain::make(n, cfg.half_width, cfg.points);
    if (fractional(cfg.op)) {
        if (!(cfg.alpha > 0.0 && cfg.alpha < n))
            throw ConfigError(fmt::format("alpha = {} must lie in (0, {})", cfg.alpha, n));
        const double rhs = 1.0 / cfg.p - cfg.alpha / n;
        if (!(cfg.q > 0.0) || !(rhs > 0.0) || std::abs(1.0 / cfg.q - rhs) > 1e-12)
            throw ConfigError(fmt::format(
                "exponent relation 1/q = 1/p - alpha/n violated: p = {}, q = {}, alpha = {} (n = {}) requires 1/q = {}{}",
                cfg.p, cfg.q, cfg.alpha, n, rhs, rhs > 0.0 ? "" : ", which no finite q satisfies (need p < n/alpha)"));
        if (cfg.condition != ConditionKind::WeightedIntegral)
            throw ConfigError(fmt::format("operator '{}' requires condition 'weighted-integral'", to_string(cfg.op)));
    } else {
        if (cfg.alpha != 0.0) throw ConfigError(fmt::format("operator '{}' takes no alpha", to_string(cfg.op)));
        if (cfg.q != cfg.p)
            throw ConfigError(fmt::format("operator '{}' maps L^p to itself: q must equal p ({} != {})",
                                          to_string(cfg.op), cfg.q, cfg.p));
        if (cfg.condition == ConditionKind::WeightedIntegral)
            throw ConfigError(fmt::format("condition 'weighted-integral' applies to fractional operators only"));
        if (cfg.op == OperatorKind::CzKernel && cfg.condition != ConditionKind::Integral)
            throw ConfigError("operator 'cz-kernel' requires condition 'integral'");
        if (cfg.op == OperatorKind::CzKernel) make_kernel(cfg.kernel, n);
    }
    if (!(cfg.weight.beta > -n)) throw ConfigError(fmt::format("weight exponent {} must exceed -n", cfg.weight.beta));
    make_psi(cfg.psi1, n);
    make_psi(cfg.psi2, n);
    const auto& f = cfg.family;
    if (!(f.center_spacing > 0.0) || !(f.r_min > 0.0) || !(f.ratio > 1.0) || f.count < 1)
        throw ConfigError("family needs center_spacing > 0, r_min > 0, ratio > 1, count >= 1");
    make_level(cfg, cfg.points);
    const auto d = Domain::make(n, cfg.half_width, cfg.points);
    for (const auto& fn : cfg.functions) build_function(fn, d, cfg.seed);
}

SampledFunction make_test_function(const TestFunctionSpec& spec, const Domain& domain, std::uint64_t seed) {
    return build_function(spec, domain, seed);
}

std::vector<TestFunctionSpec> default_functions(const ExperimentConfig& cfg) {
    const double gamma = cfg.dimension / (2.0 * cfg.p);
    return {{"indicator", {1.0}},
            {"annulus", {0.5, 1.0}},
            {"truncated-power", {gamma, 1.0}},
            {"gaussian", {0.5}},
            {"random", {0.25, 2.0}}};
}

double weight_class_estimate(const ExperimentConfig& cfg, int points) {
    const auto lv = make_level(cfg, points);
    const Weight w = Weight::power(lv.domain, cfg.weight.beta);
    if (fractional(cfg.op)) return apq_constant(w, cfg.p, cfg.q, lv.family).value;
    return ap_constant(w, cfg.p, lv.family).value;
}

LevelResult local_estimate_level(const ExperimentConfig& cfg, int points) {
    const auto lv = make_level(cfg, points);
    const Domain& d = lv.domain;
    const auto ex = exponents(cfg, d);
    const auto funcs = build_functions(cfg, d, nullptr);
    LevelResult res;
    res.points = points;
    res.cell_size = d.cell_size();
    bool first = true;
    for (std::size_t fi = 0; fi < funcs.size(); ++fi) {
        const auto& f = funcs[fi];
        const auto out = apply_operator(cfg, f, lv);
        res.undefined_cells = std::max(res.undefined_cells,
                                       static_cast<std::size_t>(std::count(out.defined.begin(), out.defined.end(), 0)));
        const LocalNorm src(f, ex.w_src, ex.p_src);
        const LocalNorm tgt(out.values, ex.w_tgt, ex.p_tgt);
        const double rho = support_radius(f);
        std::size_t used = 0;
        for (const auto& b : lv.family.balls) {
            const double reach = d.max_radius(b.center);
            if (reach < 2.0 * b.radius * (1.0 - 1e-12)) continue;
            // the truncated integral must see all of f, or it misses the far mass
            // that the operator picks up
            if (reach < norm(b.center, d.dimension()) + rho) continue;
            if (touches_undefined(d, b, out.defined)) continue;
            ++used;
            LocalSample s{fi, b, 0.0, 0.0, 0.0, false};
            s.lhs = cfg.p == 1.0 ? weighted_weak_lp_norm(out.values, ex.w_tgt, ex.p_tgt, b) : tgt(b);
            const double lead = std::pow(ex.w_tgt.measure(b), 1.0 / ex.p_tgt);
            auto g = [&](double s_) {
                const Ball bs{b.center, s_};
                return std::pow(ex.w_tgt.measure(bs), -1.0 / ex.p_tgt) * src(bs);
            };
            const double top = d.max_radius(b.center);
            if (cfg.op == OperatorKind::Maximal && cfg.condition == ConditionKind::Sup) {
                double best = 0.0;
                for (double s_ : log_grid(b.radius, top, cfg.per_decade))
                    if (s_ > b.radius) best = std::max(best, g(s_));
                s.rhs = lead * best;
            } else {
                s.rhs = lead * log_trapezoid(g, b.radius, top, cfg.per_decade);
            }
            if (s.rhs > 0.0) {
                s.ratio = s.lhs / s.rhs;
            } else if (s.lhs > 0.0) {
                s.degenerate = true;
                ++res.degenerate;
            }
            if (!s.degenerate && (first || s.ratio > res.constant)) {
                res.constant = s.ratio;
                res.witness = b;
                res.witness_function = fi;
                first = false;
            }
            res.samples.push_back(s);
        }
        res.family_size = std::max(res.family_size, used);
    }
    return res;
}

LevelResult boundedness_level(const ExperimentConfig& cfg, int points) {
    const auto lv = make_level(cfg, points);
    const Domain& d = lv.domain;
    const auto ex = exponents(cfg, d);
    const auto psi1 = make_psi(cfg.psi1, cfg.dimension);
    const auto psi2 = make_psi(cfg.psi2, cfg.dimension);
    std::vector<std::string> names;
    const auto funcs = build_functions(cfg, d, &names);
    LevelResult res;
    res.points = points;
    res.cell_size = d.cell_size();
    res.family_size = lv.family.size();
    bool first = true;
    for (std::size_t fi = 0; fi < funcs.size(); ++fi) {
        const auto& f = funcs[fi];
        FunctionRatio fr;
        fr.function = fi;
        fr.name = names[fi];
        if (f.is_zero()) {
            fr.excluded = true;
            res.functions.push_back(fr);
            continue;
        }
        const auto out = apply_operator(cfg, f, lv);
        res.undefined_cells = std::max(res.undefined_cells,
                                       static_cast<std::size_t>(std::count(out.defined.begin(), out.defined.end(), 0)));
        std::vector<Ball> kept;
        for (const auto& b : lv.family.balls)
            if (!touches_undefined(d, b, out.defined)) kept.push_back(b);
        if (kept.empty()) throw ConfigError("every family ball touches a cell where the operator is undefined");
        const auto target_family = family_from_balls(d, kept);
        const auto src = gw_morrey_norm(f, ex.w_src, ex.p_src, psi1, lv.family);
        const auto strong = gw_morrey_norm(out.values, ex.w_tgt, ex.p_tgt, psi2, target_family);
        fr.source = src.value;
        fr.source_witness = src.witness;
        fr.target_strong = strong.value;
        if (cfg.p == 1.0) {
            const auto weak = gw_weak_morrey_norm(out.values, ex.w_tgt, ex.p_tgt, psi2, target_family);
            fr.target = weak.value;
            fr.target_witness = weak.witness;
        } else {
            fr.target = strong.value;
            fr.target_witness = strong.witness;
        }
        if (fr.source > 0.0) {
            fr.ratio = fr.target / fr.source;
        } else {
            fr.flagged = fr.target > 0.0;
            fr.excluded = !fr.flagged;
            if (fr.flagged) ++res.degenerate;
        }
        if (!fr.excluded && !fr.flagged && (first || fr.ratio > res.constant)) {
            res.constant = fr.ratio;
            res.witness_function = fi;
            res.witness = fr.target_witness;
            first = false;
        }
        res.functions.push_back(fr);
    }
    return res;
}

namespace {

void check_hypothesis(const ExperimentConfig& cfg, ExperimentReport& rep) {
    const auto lv = make_level(cfg, cfg.points);
    const auto psi1 = make_psi(cfg.psi1, cfg.dimension);
    const auto psi2 = make_psi(cfg.psi2, cfg.dimension);
    const Weight w = Weight::power(lv.domain, cfg.weight.beta);
    ConditionReport cr;
    std::vector<double> seq{condition_constant(cfg, psi1, psi2, w, lv.family.balls, &cr)};
    rep.hypothesis = cr;
    if (std::isinf(seq[0])) {
        rep.hypothesis_diverging = true;
        return;
    }
    // Extend the samples below the smallest family radius; a constant that keeps
    // doubling is read as a condition that fails near r = 0.
    for (double shrink : {0.5, 0.25}) {
        std::vector<Ball> samples = lv.family.balls;
        for (const auto& c : lv.family.centers) samples.push_back(Ball{c, cfg.family.r_min * shrink});
        seq.push_back(condition_constant(cfg, psi1, psi2, w, samples, nullptr));
    }
    rep.hypothesis_diverging = std::isinf(seq.back()) || is_diverging(seq, 2.0);
}

ExperimentReport run_levels(const ExperimentConfig& cfg, int levels) {
    validate(cfg);
    ExperimentReport rep;
    rep.name = cfg.name;
    rep.mode = cfg.mode;
    rep.seed = cfg.seed;
    rep.dimension = cfg.dimension;
    rep.config_hash = config_hash(cfg);
    const auto d0 = Domain::make(cfg.dimension, cfg.half_width, cfg.points);
    build_functions(cfg, d0, &rep.function_names);

    for (int k = 0; k < 3; ++k) rep.class_levels.push_back(weight_class_estimate(cfg, cfg.points << k));
    rep.class_diverging = is_diverging(rep.class_levels, 2.0) || class_grows(rep.class_levels);
    if (cfg.mode == ExperimentMode::Boundedness) check_hypothesis(cfg, rep);

    for (int k = 0; k < levels; ++k) {
        const int N = cfg.points << k;
        rep.levels.push_back(cfg.mode == ExperimentMode::Local ? local_estimate_level(cfg, N)
                                                               : boundedness_level(cfg, N));
    }
    for (std::size_t k = 1; k < rep.levels.size(); ++k)
        rep.deltas.push_back(rep.levels[k].constant / rep.levels[k - 1].constant);

    bool finite = true;
    std::size_t flagged = 0;
    for (const auto& lv : rep.levels) {
        finite = finite && std::isfinite(lv.constant) && lv.constant > 0.0;
        flagged += lv.degenerate;
    }
    bool stable = true;
    for (double r : rep.deltas) stable = stable && r >= 1.0 / cfg.tolerance && r <= cfg.tolerance;

    if (rep.class_diverging) {
        rep.verdict = Verdict::NotApplicable;
        rep.reason = fmt::format("weight |x|^{} is outside the required class: estimate grows {:.3g} -> {:.3g} -> {:.3g}",
                                 cfg.weight.beta, rep.class_levels[0], rep.class_levels[1], rep.class_levels[2]);
    } else if (rep.hypothesis_diverging) {
        rep.verdict = Verdict::HypothesisUnmet;
        rep.reason = fmt::format("{} condition on (psi1, psi2) diverges", to_string(cfg.condition));
    } else if (!finite) {
        rep.verdict = Verdict::Fail;
        rep.reason = "empirical constant is not finite and positive";
    } else if (flagged > 0 && cfg.mode == ExperimentMode::Boundedness) {
        rep.verdict = Verdict::Fail;
        rep.reason = fmt::format("{} function(s) with zero source norm and nonzero target norm", flagged);
    } else if (!stable) {
        rep.verdict = Verdict::Fail;
        rep.reason = fmt::format("successive constant ratios leave [1/{0}, {0}]", cfg.tolerance);
    } else {
        rep.verdict = Verdict::Pass;
        rep.reason = levels > 1 ? fmt::format("constants stable within factor {} per doubling", cfg.tolerance)
                                : "constant finite";
    }
    return rep;
}

}  // namespace

ExperimentReport local_estimate_experiment(const ExperimentConfig& cfg) {
    auto c = cfg;
    c.mode = ExperimentMode::Local;
    return run_levels(c, 1);
}

ExperimentReport boundedness_experiment(const ExperimentConfig& cfg) {
    auto c = cfg;
    c.mode = ExperimentMode::Boundedness;
    return run_levels(c, 1);
}

ExperimentReport refinement_study(const ExperimentConfig& cfg, int levels) {
    if (levels < 2) throw ConfigError(fmt::format("a refinement study needs at least 2 levels, got {}", levels));
    return run_levels(cfg, levels);
}

}  // namespace wmorrey
