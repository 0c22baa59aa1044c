#include "doctest.h"

#include <filesystem>
#include <string>

#include "wmorrey/report.hpp"
#include "wmorrey/run_spec.hpp"

using namespace wmorrey;

namespace {

const char* kMinimal = R"(
version: 1
operator: {kind: maximal, p: 2}
psi:
  psi1: {tag: power, params: [0.5]}
  psi2: {tag: power, params: [0.5]}
)";

std::string error_of(const std::string& text) {
    try {
        parse_run_spec(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("minimal spec parses to one experiment") {
    const auto spec = parse_run_spec(kMinimal);
    REQUIRE(spec.experiments.size() == 1);
    CHECK(spec.experiments[0].op == OperatorKind::Maximal);
    CHECK(spec.experiments[0].p == 2.0);
    CHECK(spec.formats == std::vector<std::string>{"csv", "json"});
}

TEST_CASE("exponent relation is enforced with the three values") {
    const auto msg = error_of(R"(
operator: {kind: riesz-potential, p: 2, q: 3, alpha: 0.5}
experiment: {condition: weighted-integral}
)");
    CHECK(msg.find("1/q = 1/p - alpha/n") != std::string::npos);
    CHECK(msg.find("p = 2, q = 3, alpha = 0.5") != std::string::npos);
    CHECK(msg.find("line 2") != std::string::npos);
}

TEST_CASE("unknown keys are named with a suggestion") {
    const auto msg = error_of("phi:\n  psi1: power\n");
    CHECK(msg.find("'phi'") != std::string::npos);
    CHECK(msg.find("did you mean 'psi'") != std::string::npos);
    CHECK(error_of("experiments:\n  - operator: {kind: maximal, pp: 2}\n").find("section 'operator'") != std::string::npos);
    CHECK(error_of("version: 3\n").find("schema version") != std::string::npos);
    CHECK(error_of("seed: -4\n").find("seed") != std::string::npos);
    CHECK(error_of("experiments: []\n").find("non-empty") != std::string::npos);
    CHECK(suggest("familly", {"family", "psi"}) == "family");
    CHECK(suggest("zzzzzz", {"family", "psi"}).empty());
}

TEST_CASE("round trip through the emitter") {
    const auto spec = parse_run_spec(R"spec(
seed: 18446744073709551615
output: {directory: somewhere, formats: [json]}
experiments:
  - name: a
    domain: {dimension: 2, half_width: 4, points: 32}
    weight: {beta: 0.3}
    operator: {kind: fractional-maximal, p: 1.5, q: 6, alpha: 1}
    psi:
      psi1: {tag: custom, expression: "r^-0.7", certified: true}
      psi2: {tag: power, params: [0.1]}
    family: {center_spacing: 1, r_min: 0.25, ratio: 2, count: 3}
    experiment: {mode: local, condition: weighted-integral, levels: 3, tolerance: 1.1,
                 functions: [{kind: gaussian, params: [0.3]}, {kind: random, params: [0.5, 1]}]}
  - name: b
    operator: {kind: cz-kernel, p: 1.1, kernel: {name: custom, expression: "1/(x-y)", size_constant: 4.5, holder: 1}}
)spec");
    const auto again = parse_run_spec(emit_run_spec(spec));
    CHECK(again == spec);
    CHECK(emit_run_spec(again) == emit_run_spec(spec));
    CHECK(config_hash(spec.experiments[0]) == config_hash(again.experiments[0]));
    CHECK(config_hash(spec.experiments[0]) != config_hash(spec.experiments[1]));
}

TEST_CASE("reports are deterministic and fail loudly on bad paths") {
    auto spec = parse_run_spec(kMinimal);
    auto cfg = spec.experiments[0];
    cfg.points = 64;
    cfg.half_width = 4.0;
    cfg.family = {0.5, 0.25, 2.0, 3};
    const auto a = refinement_study(cfg, 2);
    const auto b = refinement_study(cfg, 2);
    CHECK(report_json({a}) == report_json({b}));
    CHECK(report_csv({a}) == report_csv({b}));
    const auto csv = report_csv({a});
    CHECK(csv.rfind("experiment,mode,level,points,function,center_x,center_y,radius,lhs,rhs,ratio,flag,witness\n", 0) == 0);
    CHECK(report_json({a}).find("\"config_hash\"") != std::string::npos);
    CHECK_THROWS(write_reports({a}, "/proc/wmorrey-no-such-dir", {"csv"}));
    const auto dir = std::filesystem::temp_directory_path() / "wmorrey-report-test";
    const auto files = write_reports({a}, dir.string(), {"csv", "json"});
    CHECK(files.size() == 2);
    for (const auto& f : files) CHECK(std::filesystem::exists(f));
    std::filesystem::remove_all(dir);
}
