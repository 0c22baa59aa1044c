#include "wmorrey/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <fmt/core.h>
#include <json.hpp>

namespace wmorrey {

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

nlohmann::ordered_json ball_json(const Ball& b, int n) {
    nlohmann::ordered_json center = nlohmann::ordered_json::array();
    for (int k = 0; k < n; ++k) center.push_back(b.center[k]);
    return {{"center", center}, {"radius", b.radius}};
}

nlohmann::ordered_json finite_or_null(double v) {
    return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string report_csv(const std::vector<ExperimentReport>& reports) {
    std::string out = "experiment,mode,level,points,function,center_x,center_y,radius,lhs,rhs,ratio,flag,witness\n";
    for (const auto& rep : reports) {
        for (std::size_t k = 0; k < rep.levels.size(); ++k) {
            const auto& lv = rep.levels[k];
            auto row = [&](std::size_t fn, const Ball& b, double lhs, double rhs, double ratio, const char* flag) {
                const bool witness = fn == lv.witness_function && b == lv.witness;
                out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", quoted(rep.name), to_string(rep.mode), k,
                                   lv.points, quoted(rep.function_names.at(fn)), num(b.center[0]), num(b.center[1]),
                                   num(b.radius), num(lhs), num(rhs), num(ratio), flag, witness ? 1 : 0);
            };
            if (rep.mode == ExperimentMode::Local) {
                for (const auto& s : lv.samples)
                    row(s.function, s.ball, s.lhs, s.rhs, s.ratio, s.degenerate ? "degenerate" : "");
            } else {
                for (const auto& f : lv.functions)
                    row(f.function, f.target_witness, f.target, f.source, f.ratio,
                        f.flagged ? "flagged" : (f.excluded ? "excluded" : ""));
            }
        }
    }
    return out;
}

std::string report_json(const std::vector<ExperimentReport>& reports) {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        const int n = rep.dimension;
        nlohmann::ordered_json j;
        j["name"] = rep.name;
        j["mode"] = to_string(rep.mode);
        j["verdict"] = to_string(rep.verdict);
        j["reason"] = rep.reason;
        j["config_hash"] = fmt::format("{:016x}", rep.config_hash);
        j["seed"] = rep.seed;
        j["functions"] = rep.function_names;
        j["class_estimates"] = nlohmann::ordered_json::array();
        for (double v : rep.class_levels) j["class_estimates"].push_back(finite_or_null(v));
        j["class_diverging"] = rep.class_diverging;
        if (rep.hypothesis) {
            const auto& h = *rep.hypothesis;
            j["hypothesis"] = {{"estimate", finite_or_null(h.estimate.value)},
                               {"diverging", rep.hypothesis_diverging},
                               {"corrected", finite_or_null(h.corrected)},
                               {"tail_bound", finite_or_null(h.tail_bound)},
                               {"certified", h.certified},
                               {"truncated_samples", h.truncated},
                               {"witness", ball_json(h.estimate.witness, n)}};
        } else {
            j["hypothesis"] = nullptr;
        }
        j["deltas"] = nlohmann::ordered_json::array();
        for (double d : rep.deltas) j["deltas"].push_back(finite_or_null(d));
        j["levels"] = nlohmann::ordered_json::array();
        for (const auto& lv : rep.levels) {
            nlohmann::ordered_json l;
            l["points"] = lv.points;
            l["cell_size"] = lv.cell_size;
            l["constant"] = finite_or_null(lv.constant);
            l["witness_function"] = rep.function_names.empty() ? std::string() : rep.function_names.at(lv.witness_function);
            l["witness"] = ball_json(lv.witness, n);
            l["family_size"] = lv.family_size;
            l["undefined_cells"] = lv.undefined_cells;
            l["degenerate"] = lv.degenerate;
            if (rep.mode == ExperimentMode::Boundedness) {
                l["ratios"] = nlohmann::ordered_json::array();
                for (const auto& f : lv.functions)
                    l["ratios"].push_back({{"function", f.name},
                                           {"source", finite_or_null(f.source)},
                                           {"target", finite_or_null(f.target)},
                                           {"target_strong", finite_or_null(f.target_strong)},
                                           {"ratio", finite_or_null(f.ratio)},
                                           {"source_witness", ball_json(f.source_witness, n)},
                                           {"target_witness", ball_json(f.target_witness, n)},
                                           {"excluded", f.excluded},
                                           {"flagged", f.flagged}});
            } else {
                l["samples"] = lv.samples.size();
            }
            j["levels"].push_back(l);
        }
        all.push_back(j);
    }
    return all.dump(2) + "\n";
}

std::vector<std::string> write_reports(const std::vector<ExperimentReport>& reports, const std::string& directory,
                                       const std::vector<std::string>& formats, const std::string& stem) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(directory, ec);
    if (ec) throw std::runtime_error(fmt::format("cannot create output directory '{}': {}", directory, ec.message()));
    std::vector<std::string> written;
    for (const auto& f : formats) {
        const auto path = (fs::path(directory) / (stem + "." + f)).string();
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
        out << (f == "csv" ? report_csv(reports) : report_json(reports));
        if (!out) throw std::runtime_error(fmt::format("write failed for '{}'", path));
        written.push_back(path);
    }
    return written;
}

}  // namespace wmorrey
