// Command-line driver: run specs, the acceptance suite, and one-shot evaluations.

#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "wmorrey/acceptance.hpp"
#include "wmorrey/harness.hpp"
#include "wmorrey/parallel.hpp"
#include "wmorrey/report.hpp"
#include "wmorrey/run_spec.hpp"

using namespace wmorrey;

namespace {

constexpr int kOk = 0, kFail = 1, kConfig = 2;

// "kind:1,2.5" -> {kind, {1, 2.5}}
std::pair<std::string, std::vector<double>> split_spec(const std::string& text) {
    const auto colon = text.find(':');
    std::pair<std::string, std::vector<double>> out{text.substr(0, colon), {}};
    if (colon == std::string::npos) return out;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.second.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError(fmt::format("'{}' is not a number in '{}'", item, text));
        }
    }
    return out;
}

Point point_from(const std::vector<double>& v) {
    Point x{0.0, 0.0};
    for (std::size_t k = 0; k < v.size() && k < 2; ++k) x[k] = v[k];
    return x;
}

struct GridOptions {
    int dimension = 1;
    double half_width = 8.0;
    int points = 256;
    std::string function = "indicator:1";
    std::uint64_t seed = 1;
    void add(CLI::App* app) {
        app->add_option("--dimension", dimension, "1 or 2")->capture_default_str();
        app->add_option("--half-width", half_width, "box is [-L, L]^n")->capture_default_str();
        app->add_option("--points", points, "cells per axis (even)")->capture_default_str();
        app->add_option("--function", function, "test function kind:params, e.g. annulus:0.5,1")->capture_default_str();
        app->add_option("--seed", seed, "seed for the random test function")->capture_default_str();
    }
    Domain domain() const { return Domain::make(dimension, half_width, points); }
    SampledFunction sampled(const Domain& d) const {
        const auto [kind, params] = split_spec(function);
        return make_test_function({kind, params}, d, seed);
    }
};

int run_command(const std::string& config, const std::optional<std::string>& output,
                const std::optional<std::uint64_t>& seed, const std::vector<std::string>& formats) {
    RunSpec spec;
    try {
        spec = load_run_spec(config);
        if (seed) {
            spec.seed = *seed;
            for (auto& c : spec.experiments) c.seed = *seed;
        }
        if (output) spec.output_directory = *output;
        if (!formats.empty()) spec.formats = formats;
    } catch (const ConfigError& e) {
        fmt::print(stderr, "configuration error: {}\n", e.what());
        return kConfig;
    }
    std::vector<ExperimentReport> reports;
    bool failed = false;
    try {
        for (const auto& cfg : spec.experiments) {
            ExperimentReport rep;
            if (cfg.levels >= 2)
                rep = refinement_study(cfg, cfg.levels);
            else
                rep = cfg.mode == ExperimentMode::Local ? local_estimate_experiment(cfg) : boundedness_experiment(cfg);
            std::string constants;
            for (const auto& lv : rep.levels) constants += fmt::format(" {:.6g}", lv.constant);
            fmt::print("{:<16} {} [{} {}] constants:{} | {}\n", to_string(rep.verdict), rep.name, to_string(cfg.mode),
                       to_string(cfg.op), constants, rep.reason);
            failed = failed || rep.verdict == Verdict::Fail;
            reports.push_back(std::move(rep));
        }
    } catch (const ConfigError& e) {
        fmt::print(stderr, "configuration error: {}\n", e.what());
        return kConfig;
    }
    try {
        for (const auto& path : write_reports(reports, spec.output_directory, spec.formats))
            fmt::print("wrote {}\n", path);
    } catch (const std::exception& e) {
        fmt::print(stderr, "output error: {}\n", e.what());
        return kConfig;
    }
    return failed ? kFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Empirical checks of weighted Morrey-space operator estimates"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

    auto* run = app.add_subcommand("run", "execute a run specification");
    std::string config;
    std::optional<std::string> output;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> formats;
    run->add_option("-c,--config", config, "YAML run specification")->required()->check(CLI::ExistingFile);
    run->add_option("-o,--output", output, "output directory (overrides the spec)");
    run->add_option("--seed", seed, "seed override for every experiment");
    run->add_option("--format", formats, "report formats: csv, json")->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "run the built-in acceptance suite");

    auto* norms = app.add_subcommand("norms", "weighted Lebesgue and Morrey norms of one test function");
    GridOptions ng;
    ng.add(norms);
    double nbeta = 0.0, np = 2.0, nradius = 1.0;
    std::vector<double> ncenter{0.0};
    std::string npsi = "power:0.5";
    norms->add_option("--beta", nbeta, "weight exponent, w = |x|^beta")->capture_default_str();
    norms->add_option("--p", np, "exponent p >= 1")->capture_default_str();
    norms->add_option("--psi", npsi, "psi tag:params")->capture_default_str();
    norms->add_option("--center", ncenter, "ball center");
    norms->add_option("--radius", nradius, "ball radius")->capture_default_str();

    auto* weights = app.add_subcommand("weights", "Muckenhoupt constants of a power weight over the default family");
    int wdim = 1, wpoints = 256;
    double wbeta = 0.5, wp = 2.0, whalf = 8.0;
    std::optional<double> wq;
    weights->add_option("--dimension", wdim)->capture_default_str();
    weights->add_option("--points", wpoints)->capture_default_str();
    weights->add_option("--half-width", whalf)->capture_default_str();
    weights->add_option("--beta", wbeta, "weight exponent")->capture_default_str();
    weights->add_option("--p", wp)->capture_default_str();
    weights->add_option("--q", wq, "gives A_(p,q) instead of A_p");

    auto* ops = app.add_subcommand("operators", "evaluate one operator on one test function at a point");
    GridOptions og;
    og.add(ops);
    std::string okind = "maximal", okernel = "hilbert";
    double oalpha = 0.0;
    std::vector<double> oat{0.0};
    ops->add_option("--operator", okind, "maximal, fractional-maximal, riesz-potential, cz-kernel")->capture_default_str();
    ops->add_option("--alpha", oalpha, "order of the fractional operators")->capture_default_str();
    ops->add_option("--kernel", okernel, "registered kernel name")->capture_default_str();
    ops->add_option("--at", oat, "evaluation point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; every usage error is a configuration error
        return app.exit(e) == 0 ? kOk : kConfig;
    }
    set_thread_count(threads);

    try {
        if (*run) return run_command(config, output, seed, formats);
        if (*verify) {
            int failed = 0;
            run_acceptance([&](const CriterionResult& r) {
                fmt::print("{}\n", format_line(r));
                std::fflush(stdout);
                failed += r.pass ? 0 : 1;
            });
            fmt::print("{} of 12 criteria failed\n", failed);
            return failed == 0 ? kOk : kFail;
        }
        if (*norms) {
            const auto d = ng.domain();
            const auto f = ng.sampled(d);
            const auto w = power_weight(nbeta, d);
            const auto [tag, params] = split_spec(npsi);
            const auto psi = psi_catalog(tag, params);
            const Ball b{point_from(ncenter), nradius};
            const auto fam = ball_family(d, std::max(1, static_cast<int>(std::lround(0.5 / d.cell_size()))),
                                         std::max(0.0625, d.cell_size()), 2.0, 8);
            fmt::print("L^p,w(B)         {:.17g}\n", weighted_lp_norm(f, w, np, b));
            fmt::print("WL^p,w(B)        {:.17g}\n", weighted_weak_lp_norm(f, w, np, b));
            const auto strong = gw_morrey_norm(f, w, np, psi, fam);
            const auto weak = gw_weak_morrey_norm(f, w, np, psi, fam);
            fmt::print("Morrey           {:.17g}  witness a = ({}, {}), r = {}\n", strong.value, strong.witness.center[0],
                       strong.witness.center[1], strong.witness.radius);
            fmt::print("weak Morrey      {:.17g}  witness a = ({}, {}), r = {}\n", weak.value, weak.witness.center[0],
                       weak.witness.center[1], weak.witness.radius);
            return kOk;
        }
        if (*weights) {
            const auto d = Domain::make(wdim, whalf, wpoints);
            const auto w = power_weight(wbeta, d);
            const auto fam = ball_family(d, std::max(1, static_cast<int>(std::lround(0.5 / d.cell_size()))),
                                         std::max(0.0625, d.cell_size()), 2.0, 8);
            const auto est = wq ? apq_constant(w, wp, *wq, fam) : ap_constant(w, wp, fam);
            fmt::print("{} constant {:.17g} over {} balls; witness a = ({}, {}), r = {}\n",
                       wq ? fmt::format("A_({},{})", wp, *wq) : fmt::format("A_{}", wp), est.value, est.family_size,
                       est.witness.center[0], est.witness.center[1], est.witness.radius);
            return kOk;
        }
        if (*ops) {
            const auto d = og.domain();
            const auto f = og.sampled(d);
            const Point x = point_from(oat);
            const auto kind = parse_operator_kind(okind);
            double v = 0.0;
            if (kind == OperatorKind::Maximal || kind == OperatorKind::FractionalMaximal) {
                const double h = d.cell_size();
                const int count = static_cast<int>(std::floor(std::log(og.half_width / (0.5 * h)) / std::log(std::pow(2.0, 0.25)))) + 1;
                v = fractional_maximal_at(f, kind == OperatorKind::Maximal ? 0.0 : oalpha,
                                          geometric_ladder(0.5 * h, std::pow(2.0, 0.25), count), x);
            } else if (kind == OperatorKind::RieszPotential) {
                v = riesz_potential_at(f, oalpha, x);
            } else {
                v = cz_apply_at(kernel_from_name(okernel), f, x);
            }
            fmt::print("{:.17g}\n", v);
            return kOk;
        }
    } catch (const ConfigError& e) {
        fmt::print(stderr, "configuration error: {}\n", e.what());
        return kConfig;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kConfig;
    }
    return kOk;
}
