#include "wmorrey/run_spec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/core.h>
#include <yaml-cpp/yaml.h>

namespace wmorrey {

namespace {

const std::vector<std::string> kTopKeys{"version", "seed", "output", "experiments"};
const std::vector<std::string> kSections{"name", "domain", "weight", "psi", "operator", "family", "experiment"};
const std::vector<std::string> kDomainKeys{"dimension", "half_width", "points"};
const std::vector<std::string> kWeightKeys{"beta"};
const std::vector<std::string> kPsiKeys{"psi1", "psi2"};
const std::vector<std::string> kPsiEntryKeys{"tag", "params", "expression", "certified"};
const std::vector<std::string> kOperatorKeys{"kind", "p", "q", "alpha", "ladder_ratio", "kernel"};
const std::vector<std::string> kKernelKeys{"name", "expression", "size_constant", "holder"};
const std::vector<std::string> kFamilyKeys{"center_spacing", "r_min", "ratio", "count"};
const std::vector<std::string> kExperimentKeys{"mode",  "condition",  "levels", "tolerance", "t_max",
                                               "per_decade", "functions", "seed"};
const std::vector<std::string> kFunctionKeys{"kind", "params"};
const std::vector<std::string> kOutputKeys{"directory", "formats"};

[[noreturn]] void fail_at(const YAML::Mark& m, const std::string& msg) {
    if (m.line >= 0) throw ConfigError(fmt::format("line {}, column {}: {}", m.line + 1, m.column + 1, msg));
    throw ConfigError(msg);
}

[[noreturn]] void fail_at(const YAML::Node& node, const std::string& msg) { fail_at(node.Mark(), msg); }

void check_keys(const YAML::Node& node, const std::vector<std::string>& known, const std::string& section) {
    if (!node.IsMap()) fail_at(node, fmt::format("section '{}' must be a mapping", section));
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (std::find(known.begin(), known.end(), key) != known.end()) continue;
        const auto hint = suggest(key, known);
        std::string list;
        for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
        fail_at(kv.first, fmt::format("unknown key '{}' in section '{}'{} (known: {})", key, section,
                                      hint.empty() ? "" : fmt::format("; did you mean '{}'?", hint), list));
    }
}

template <class T>
T get(const YAML::Node& node, const char* key, T fallback) {
    const auto v = node[key];
    if (!v) return fallback;
    try {
        return v.as<T>();
    } catch (const YAML::Exception&) {
        fail_at(v, fmt::format("key '{}' has the wrong type", key));
    }
}

PsiSpec parse_psi(const YAML::Node& node, const std::string& where) {
    PsiSpec s;
    if (node.IsScalar()) {
        s.tag = node.as<std::string>();
        s.params.clear();
        return s;
    }
    check_keys(node, kPsiEntryKeys, where);
    s.tag = get<std::string>(node, "tag", s.tag);
    s.params = get<std::vector<double>>(node, "params", node["tag"] ? std::vector<double>{} : s.params);
    s.expression = get<std::string>(node, "expression", "");
    s.certified = get<bool>(node, "certified", false);
    return s;
}

ExperimentConfig parse_experiment(const YAML::Node& node, std::size_t index, std::uint64_t seed,
                                  const std::vector<std::string>& allowed, const std::string& where) {
    check_keys(node, allowed, where);
    ExperimentConfig c;
    c.seed = seed;
    c.name = get<std::string>(node, "name", fmt::format("experiment-{}", index + 1));
    if (const auto d = node["domain"]) {
        check_keys(d, kDomainKeys, "domain");
        c.dimension = get(d, "dimension", c.dimension);
        c.half_width = get(d, "half_width", c.half_width);
        c.points = get(d, "points", c.points);
    }
    if (const auto w = node["weight"]) {
        check_keys(w, kWeightKeys, "weight");
        c.weight.beta = get(w, "beta", c.weight.beta);
    }
    if (const auto p = node["psi"]) {
        check_keys(p, kPsiKeys, "psi");
        if (p["psi1"]) c.psi1 = parse_psi(p["psi1"], "psi.psi1");
        if (p["psi2"]) c.psi2 = parse_psi(p["psi2"], "psi.psi2");
    }
    // yaml-cpp assignment copies into the aliased node, so keep a mark rather than a Node
    YAML::Mark anchor = node.Mark();
    if (const auto o = node["operator"]) {
        anchor = o.Mark();
        check_keys(o, kOperatorKeys, "operator");
        if (o["kind"]) {
            try {
                c.op = parse_operator_kind(o["kind"].as<std::string>());
            } catch (const ConfigError& e) {
                fail_at(o["kind"], e.what());
            }
        }
        c.p = get(o, "p", c.p);
        c.q = get(o, "q", o["p"] && !o["q"] ? c.p : c.q);
        c.alpha = get(o, "alpha", c.alpha);
        c.ladder_ratio = get(o, "ladder_ratio", c.ladder_ratio);
        if (const auto k = o["kernel"]) {
            if (k.IsScalar()) {
                c.kernel.name = k.as<std::string>();
            } else {
                check_keys(k, kKernelKeys, "operator.kernel");
                c.kernel.name = get(k, "name", c.kernel.name);
                c.kernel.expression = get<std::string>(k, "expression", "");
                c.kernel.size_constant = get(k, "size_constant", c.kernel.size_constant);
                c.kernel.holder = get(k, "holder", c.kernel.holder);
            }
        }
    }
    if (const auto f = node["family"]) {
        check_keys(f, kFamilyKeys, "family");
        c.family.center_spacing = get(f, "center_spacing", c.family.center_spacing);
        c.family.r_min = get(f, "r_min", c.family.r_min);
        c.family.ratio = get(f, "ratio", c.family.ratio);
        c.family.count = get(f, "count", c.family.count);
    }
    if (const auto e = node["experiment"]) {
        check_keys(e, kExperimentKeys, "experiment");
        try {
            if (e["mode"]) c.mode = parse_mode(e["mode"].as<std::string>());
            if (e["condition"]) c.condition = parse_condition_kind(e["condition"].as<std::string>());
        } catch (const ConfigError& err) {
            fail_at(e, err.what());
        }
        c.levels = get(e, "levels", c.levels);
        c.tolerance = get(e, "tolerance", c.tolerance);
        c.t_max = get(e, "t_max", c.t_max);
        c.per_decade = get(e, "per_decade", c.per_decade);
        c.seed = get<std::uint64_t>(e, "seed", c.seed);
        if (const auto fs = e["functions"]) {
            if (!fs.IsSequence()) fail_at(fs, "experiment.functions must be a list");
            for (const auto& fn : fs) {
                check_keys(fn, kFunctionKeys, "experiment.functions");
                c.functions.push_back({get<std::string>(fn, "kind", ""), get<std::vector<double>>(fn, "params", {})});
            }
        }
    }
    try {
        validate(c);
    } catch (const ConfigError& e) {
        fail_at(anchor, fmt::format("experiment '{}': {}", c.name, e.what()));
    }
    return c;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

void emit_psi(YAML::Emitter& out, const PsiSpec& s) {
    out << YAML::BeginMap << YAML::Key << "tag" << YAML::Value << s.tag;
    out << YAML::Key << "params" << YAML::Value << YAML::Flow << s.params;
    if (s.tag == "custom") {
        out << YAML::Key << "expression" << YAML::Value << s.expression;
        out << YAML::Key << "certified" << YAML::Value << s.certified;
    }
    out << YAML::EndMap;
}

void emit_experiment_map(YAML::Emitter& out, const ExperimentConfig& c) {
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << c.name;
    out << YAML::Key << "domain" << YAML::Value << YAML::BeginMap << YAML::Key << "dimension" << YAML::Value
        << c.dimension << YAML::Key << "half_width" << YAML::Value << c.half_width << YAML::Key << "points"
        << YAML::Value << c.points << YAML::EndMap;
    out << YAML::Key << "weight" << YAML::Value << YAML::BeginMap << YAML::Key << "beta" << YAML::Value
        << c.weight.beta << YAML::EndMap;
    out << YAML::Key << "psi" << YAML::Value << YAML::BeginMap << YAML::Key << "psi1" << YAML::Value;
    emit_psi(out, c.psi1);
    out << YAML::Key << "psi2" << YAML::Value;
    emit_psi(out, c.psi2);
    out << YAML::EndMap;
    out << YAML::Key << "operator" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << to_string(c.op);
    out << YAML::Key << "p" << YAML::Value << c.p << YAML::Key << "q" << YAML::Value << c.q;
    out << YAML::Key << "alpha" << YAML::Value << c.alpha;
    out << YAML::Key << "ladder_ratio" << YAML::Value << c.ladder_ratio;
    out << YAML::Key << "kernel" << YAML::Value << YAML::BeginMap << YAML::Key << "name" << YAML::Value
        << c.kernel.name << YAML::Key << "expression" << YAML::Value << c.kernel.expression << YAML::Key
        << "size_constant" << YAML::Value << c.kernel.size_constant << YAML::Key << "holder" << YAML::Value
        << c.kernel.holder << YAML::EndMap;
    out << YAML::EndMap;
    out << YAML::Key << "family" << YAML::Value << YAML::BeginMap << YAML::Key << "center_spacing" << YAML::Value
        << c.family.center_spacing << YAML::Key << "r_min" << YAML::Value << c.family.r_min << YAML::Key << "ratio"
        << YAML::Value << c.family.ratio << YAML::Key << "count" << YAML::Value << c.family.count << YAML::EndMap;
    out << YAML::Key << "experiment" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "mode" << YAML::Value << to_string(c.mode);
    out << YAML::Key << "condition" << YAML::Value << to_string(c.condition);
    out << YAML::Key << "levels" << YAML::Value << c.levels;
    out << YAML::Key << "tolerance" << YAML::Value << c.tolerance;
    out << YAML::Key << "t_max" << YAML::Value << c.t_max;
    out << YAML::Key << "per_decade" << YAML::Value << c.per_decade;
    out << YAML::Key << "seed" << YAML::Value << c.seed;
    if (!c.functions.empty()) {
        out << YAML::Key << "functions" << YAML::Value << YAML::BeginSeq;
        for (const auto& f : c.functions)
            out << YAML::Flow << YAML::BeginMap << YAML::Key << "kind" << YAML::Value << f.kind << YAML::Key
                << "params" << YAML::Value << YAML::Flow << f.params << YAML::EndMap;
        out << YAML::EndSeq;
    }
    out << YAML::EndMap;
    out << YAML::EndMap;
}

}  // namespace

std::string suggest(const std::string& key, const std::vector<std::string>& candidates) {
    std::string best;
    std::size_t best_d = 3;
    for (const auto& c : candidates) {
        const auto d = edit_distance(key, c);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

RunSpec parse_run_spec(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError(fmt::format("line {}, column {}: {}", e.mark.line + 1, e.mark.column + 1, e.msg));
    }
    if (!root.IsMap()) throw ConfigError("run specification must be a mapping");
    RunSpec spec;
    // a document without "experiments" is a single experiment written at top level
    const bool single = !root["experiments"];
    std::vector<std::string> top = kTopKeys;
    if (single) top.insert(top.end(), kSections.begin(), kSections.end());
    check_keys(root, top, "top level");
    spec.version = get(root, "version", spec.version);
    if (spec.version != 1) fail_at(root["version"], fmt::format("unsupported schema version {}", spec.version));
    if (const auto s = root["seed"]) {
        try {
            spec.seed = s.as<std::uint64_t>();
        } catch (const YAML::Exception&) {
            fail_at(s, "seed must be an unsigned 64-bit integer");
        }
    }
    if (const auto o = root["output"]) {
        check_keys(o, kOutputKeys, "output");
        spec.output_directory = get(o, "directory", spec.output_directory);
        spec.formats = get(o, "formats", spec.formats);
        for (const auto& f : spec.formats)
            if (f != "csv" && f != "json") fail_at(o["formats"], fmt::format("unknown report format '{}' (known: csv, json)", f));
    }
    if (single) {
        spec.experiments.push_back(parse_experiment(root, 0, spec.seed, top, "top level"));
    } else {
        const auto list = root["experiments"];
        if (!list.IsSequence() || list.size() == 0) fail_at(list, "'experiments' must be a non-empty list");
        for (std::size_t i = 0; i < list.size(); ++i)
            spec.experiments.push_back(parse_experiment(list[i], i, spec.seed, kSections, "experiment entry"));
    }
    return spec;
}

RunSpec load_run_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot read run specification '{}'", path));
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_run_spec(ss.str());
    } catch (const ConfigError& e) {
        throw ConfigError(fmt::format("{}: {}", path, e.what()));
    }
}

std::string emit_run_spec(const RunSpec& spec) {
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    out << YAML::BeginMap;
    out << YAML::Key << "version" << YAML::Value << spec.version;
    out << YAML::Key << "seed" << YAML::Value << spec.seed;
    out << YAML::Key << "output" << YAML::Value << YAML::BeginMap << YAML::Key << "directory" << YAML::Value
        << spec.output_directory << YAML::Key << "formats" << YAML::Value << YAML::Flow << spec.formats
        << YAML::EndMap;
    out << YAML::Key << "experiments" << YAML::Value << YAML::BeginSeq;
    for (const auto& c : spec.experiments) emit_experiment_map(out, c);
    out << YAML::EndSeq << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

std::string emit_experiment(const ExperimentConfig& cfg) {
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    emit_experiment_map(out, cfg);
    return out.c_str();
}

std::uint64_t config_hash(const ExperimentConfig& cfg) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : emit_experiment(cfg)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace wmorrey
