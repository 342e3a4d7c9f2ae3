#include "clexrank/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "clexrank/errors.hpp"

namespace clexrank::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::string unquote(std::string v) {
    if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
        return v.substr(1, v.size() - 2);
    }
    return v;
}

double to_double(const std::string& key, const std::string& v) {
    std::istringstream in(v);
    double x = 0.0;
    if (!(in >> x) || !(in >> std::ws).eof()) throw ValidationError("config: " + key + " expects a number, got '" + v + "'");
    return x;
}

std::uint64_t to_uint(const std::string& key, const std::string& v) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
        throw ValidationError("config: " + key + " expects a non-negative integer, got '" + v + "'");
    }
    return std::stoull(v);
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ValidationError("config: " + key + " expects true/false, got '" + v + "'");
}

}  // namespace

LoadedConfig parse_config(std::istream& in, const RunConfig& base) {
    LoadedConfig out{base, {}};
    auto& c = out.config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = unquote(trim(line.substr(eq + 1)));
        if (key == "lexrank_damping") c.lexrank_damping = to_double(key, value);
        else if (key == "lexrank_edge_threshold") c.lexrank_edge_threshold = to_double(key, value);
        else if (key == "divrank_lambda") c.divrank_lambda = to_double(key, value);
        else if (key == "divrank_alpha") c.divrank_alpha = to_double(key, value);
        else if (key == "divrank_beta") c.divrank_beta = to_double(key, value);
        else if (key == "graph_threshold") c.graph_threshold = to_double(key, value);
        else if (key == "summary_budget_words") c.summary_budget_words = to_uint(key, value);
        else if (key == "random_seed") c.random_seed = to_uint(key, value);
        else if (key == "random_trials") c.random_trials = to_uint(key, value);
        else if (key == "lowercase") c.tokenizer.lowercase = to_bool(key, value);
        else if (key == "strip_punctuation") c.tokenizer.strip_punctuation = to_bool(key, value);
        else if (key == "stopwords") c.stopwords_path = value;
        else if (key == "kappa_chance_model") {
            if (value == "cohen") c.kappa_chance_model = ChanceModel::cohen;
            else if (value == "scott") c.kappa_chance_model = ChanceModel::scott;
            else throw ValidationError("config: kappa_chance_model must be cohen or scott");
        } else {
            throw ValidationError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        out.keys.insert(key);
    }
    return out;
}

LoadedConfig load_config(const std::filesystem::path& path, const RunConfig& base) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config " + path.string());
    return parse_config(in, base);
}

nlohmann::ordered_json config_to_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["lexrank_damping"] = c.lexrank_damping;
    j["lexrank_edge_threshold"] = c.lexrank_edge_threshold;
    j["divrank_lambda"] = c.divrank_lambda;
    j["divrank_alpha"] = c.divrank_alpha;
    j["divrank_beta"] = c.divrank_beta;
    j["graph_threshold"] = c.graph_threshold;
    j["summary_budget_words"] = c.summary_budget_words;
    j["random_seed"] = c.random_seed;
    j["random_trials"] = c.random_trials;
    j["kappa_chance_model"] = c.kappa_chance_model == ChanceModel::cohen ? "cohen" : "scott";
    j["lowercase"] = c.tokenizer.lowercase;
    j["strip_punctuation"] = c.tokenizer.strip_punctuation;
    j["stopwords"] = c.stopwords_path ? c.stopwords_path->string() : std::string{};
    return j;
}

}  // namespace clexrank::cli
