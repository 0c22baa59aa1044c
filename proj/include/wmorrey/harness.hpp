#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wmorrey/hypotheses.hpp"
#include "wmorrey/norms.hpp"
#include "wmorrey/operators.hpp"
#include "wmorrey/weights.hpp"

namespace wmorrey {

enum class OperatorKind { Maximal, FractionalMaximal, RieszPotential, CzKernel };
enum class ConditionKind { Sup, Integral, WeightedIntegral };
enum class ExperimentMode { Local, Boundedness };
enum class Verdict { Pass, Fail, NotApplicable, HypothesisUnmet };

std::string to_string(OperatorKind k);
std::string to_string(ConditionKind k);
std::string to_string(ExperimentMode m);
std::string to_string(Verdict v);
OperatorKind parse_operator_kind(const std::string& s);
ConditionKind parse_condition_kind(const std::string& s);
ExperimentMode parse_mode(const std::string& s);

struct WeightSpec {
    double beta = 0.0;  // w(x) = |x|^beta; 0 is the constant weight
    friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

struct PsiSpec {
    std::string tag = "power";
    std::vector<double> params{0.5};
    std::string expression;  // custom only
    bool certified = false;  // custom only
    friend bool operator==(const PsiSpec&, const PsiSpec&) = default;
};

struct TestFunctionSpec {
    std::string kind;  // indicator, annulus, truncated-power, gaussian, random
    std::vector<double> params;
    friend bool operator==(const TestFunctionSpec&, const TestFunctionSpec&) = default;
};

struct KernelChoice {
    std::string name = "hilbert";  // registered name or "custom"
    std::string expression;
    double size_constant = 1.0;
    double holder = 1.0;
    friend bool operator==(const KernelChoice&, const KernelChoice&) = default;
};

/// Ball family in physical units, fixed across refinement levels.
struct FamilySpec {
    double center_spacing = 0.5;
    double r_min = 0.0625;
    double ratio = 2.0;
    int count = 8;
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct ExperimentConfig {
    std::string name = "experiment";
    ExperimentMode mode = ExperimentMode::Boundedness;
    OperatorKind op = OperatorKind::Maximal;
    ConditionKind condition = ConditionKind::Integral;
    double p = 2.0;
    double q = 2.0;
    double alpha = 0.0;
    WeightSpec weight;
    PsiSpec psi1;
    PsiSpec psi2;
    KernelChoice kernel;
    std::vector<TestFunctionSpec> functions;  // empty means the default family
    int dimension = 1;
    double half_width = 8.0;
    int points = 256;       // grid size at the first level
    int levels = 2;         // each level doubles the grid
    FamilySpec family;
    double ladder_ratio = 1.189207115002721;  // 2^(1/4): operator radius ladder
    double t_max = 50.0;
    int per_decade = 64;
    double tolerance = 1.25;
    std::uint64_t seed = 1;
    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Checks exponent relations and operator/condition compatibility.
void validate(const ExperimentConfig& cfg);

/// Default test functions: indicator of B(0,1), annulus 1/2..1, |x|^(-n/(2p))
/// on B(0,1), exp(-4|x|^2), and a seeded random step function.
std::vector<TestFunctionSpec> default_functions(const ExperimentConfig& cfg);

/// Samples one test function; `seed` drives the random kind only.
SampledFunction make_test_function(const TestFunctionSpec& spec, const Domain& domain, std::uint64_t seed);

struct LocalSample {
    std::size_t function = 0;
    Ball ball{};
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    bool degenerate = false;
};

struct FunctionRatio {
    std::size_t function = 0;
    std::string name;
    double source = 0.0;
    double target = 0.0;         // weak target norm for p = 1, strong otherwise
    double target_strong = 0.0;  // strong target norm, always computed
    double ratio = 0.0;
    Ball source_witness{};
    Ball target_witness{};
    bool excluded = false;  // zero input
    bool flagged = false;   // zero source norm with a nonzero target
};

struct LevelResult {
    int points = 0;
    double cell_size = 0.0;
    double constant = 0.0;
    std::size_t witness_function = 0;
    Ball witness{};
    std::size_t family_size = 0;
    std::size_t undefined_cells = 0;
    std::size_t degenerate = 0;
    std::vector<LocalSample> samples;     // local mode
    std::vector<FunctionRatio> functions; // boundedness mode
};

struct ExperimentReport {
    std::string name;
    ExperimentMode mode = ExperimentMode::Boundedness;
    int dimension = 1;
    std::vector<std::string> function_names;
    std::vector<LevelResult> levels;
    std::vector<double> deltas;        // successive constant ratios
    std::vector<double> class_levels;  // weight-class estimate at N, 2N, 4N
    bool class_diverging = false;
    std::optional<ConditionReport> hypothesis;
    bool hypothesis_diverging = false;
    Verdict verdict = Verdict::Fail;
    std::string reason;
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
};

/// Ball-wise local estimates at one grid level.
LevelResult local_estimate_level(const ExperimentConfig& cfg, int points);
/// Morrey-to-Morrey norm ratios at one grid level.
LevelResult boundedness_level(const ExperimentConfig& cfg, int points);

/// Single-level runs (cfg.levels is ignored).
ExperimentReport local_estimate_experiment(const ExperimentConfig& cfg);
ExperimentReport boundedness_experiment(const ExperimentConfig& cfg);

/// Runs cfg.mode at `levels` grid sizes (points, 2 points, ...) and grades the
/// successive ratios of the empirical constants against cfg.tolerance.
ExperimentReport refinement_study(const ExperimentConfig& cfg, int levels);

/// Weight-class estimate (A_p or A_(p,q)) over the physical family at the given grid.
double weight_class_estimate(const ExperimentConfig& cfg, int points);

}  // namespace wmorrey
