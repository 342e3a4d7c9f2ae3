#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "clexrank/corpus_io.hpp"

namespace clexrank::cli {

/// Result of reading a `key = value` config file. Keys that were present are
/// recorded so that "unset" can be told apart from "set to the default".
struct LoadedConfig {
    RunConfig config;
    std::set<std::string> keys;
};

/// Accepted keys: lexrank_damping, lexrank_edge_threshold, divrank_lambda,
/// divrank_alpha, divrank_beta, graph_threshold, summary_budget_words,
/// random_seed, random_trials, kappa_chance_model, lowercase,
/// strip_punctuation, stopwords. `#` starts a comment; `[section]` lines are
/// ignored; string values may be quoted.
LoadedConfig parse_config(std::istream& in, const RunConfig& base = {});
LoadedConfig load_config(const std::filesystem::path& path, const RunConfig& base = {});

nlohmann::ordered_json config_to_json(const RunConfig& config);

}  // namespace clexrank::cli
