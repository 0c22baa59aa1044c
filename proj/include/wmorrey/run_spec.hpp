#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wmorrey/harness.hpp"

namespace wmorrey {

struct RunSpec {
    int version = 1;
    std::uint64_t seed = 1;
    std::string output_directory = "wmorrey-out";
    std::vector<std::string> formats{"csv", "json"};
    std::vector<ExperimentConfig> experiments;
    friend bool operator==(const RunSpec&, const RunSpec&) = default;
};

/// Parses a YAML run specification. Every experiment is validated; errors are
/// ConfigError with "line L, column C:" anchors.
RunSpec parse_run_spec(const std::string& text);
RunSpec load_run_spec(const std::string& path);

/// Serializes a spec so that parse_run_spec(emit_run_spec(s)) == s.
std::string emit_run_spec(const RunSpec& spec);

/// Canonical YAML of one experiment (used for hashing).
std::string emit_experiment(const ExperimentConfig& cfg);

/// FNV-1a 64-bit hash of the canonical experiment text.
std::uint64_t config_hash(const ExperimentConfig& cfg);

/// Closest candidate within edit distance 2, or "".
std::string suggest(const std::string& key, const std::vector<std::string>& candidates);

}  // namespace wmorrey
